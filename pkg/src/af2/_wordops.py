"""Pure-Python word-arithmetic kernel.

Words over the free group F2 = <a, b> are flat tuples of ints

    (base0, exp0, base1, exp1, ...)

with base in {0 (=a), 1 (=b)}, every exponent nonzero, and adjacent bases
distinct (run-length encoding by syllables, always freely reduced).

A compiled twin of this module lives in ``_speedups.pyx``; the two must
stay behaviourally identical (see tests/test_backends.py).  Letter codes
for the total order are ``2*base + (exp < 0)``: a=0, a^-1=1, b=2, b^-1=3.
"""

IMPL = "python"


def reduce_word(items):
    """Freely reduce a sequence of (base, exp) pairs into a flat tuple."""
    out = []
    for base, exp in items:
        if exp == 0:
            continue
        if out and out[-2] == base:
            merged = out[-1] + exp
            if merged == 0:
                del out[-2:]
            else:
                out[-1] = merged
        else:
            out.append(base)
            out.append(exp)
    return tuple(out)


def multiply(u, v):
    """Product of two reduced flat words, reduced."""
    i = len(u)
    j = 0
    nv = len(v)
    tail = ()
    while i > 0 and j < nv:
        if u[i - 2] != v[j]:
            break
        merged = u[i - 1] + v[j + 1]
        if merged == 0:
            i -= 2
            j += 2
        else:
            tail = (u[i - 2], merged)
            i -= 2
            j += 2
            break
    return u[:i] + tail + v[j:]


def invert(u):
    """Inverse word: reversed syllables with negated exponents."""
    out = []
    for i in range(len(u) - 2, -1, -2):
        out.append(u[i])
        out.append(-u[i + 1])
    return tuple(out)


def conjugate(u, g):
    """u^g = g^-1 u g."""
    return multiply(multiply(invert(g), u), g)


def letter_length(u):
    """Number of letters (sum of |exponent|)."""
    total = 0
    for i in range(1, len(u), 2):
        e = u[i]
        total += e if e > 0 else -e
    return total


def letter_codes(u):
    """Letters of u as codes 0..3 (a, a^-1, b, b^-1), one per letter."""
    out = []
    for i in range(0, len(u), 2):
        base = u[i]
        e = u[i + 1]
        code = 2 * base + (1 if e < 0 else 0)
        out.extend([code] * (e if e > 0 else -e))
    return tuple(out)


def word_key(u):
    """Sort key for the canonical order: shorter first, then letterwise."""
    return (letter_length(u), letter_codes(u))


def canonical(u):
    """The smaller of u and u^-1 in the canonical order."""
    v = invert(u)
    return v if word_key(v) < word_key(u) else u


def cyclic_reduce(u):
    """Split u = g^-1 * core * g with core cyclically reduced.

    Returns (core, g); conjugate(core, g) == u.
    """
    prefix = []
    lo = 0
    hi = len(u)
    while hi - lo > 2:
        b0, e0 = u[lo], u[lo + 1]
        b1, e1 = u[hi - 2], u[hi - 1]
        if b0 != b1 or (e0 > 0) == (e1 > 0):
            break
        c = min(abs(e0), abs(e1))
        s = 1 if e0 > 0 else -1
        prefix.append(b0)
        prefix.append(c * s)
        if abs(e0) == c and abs(e1) == c:
            lo += 2
            hi -= 2
        elif abs(e0) == c:
            lo += 2
            u = u[:hi - 1] + (e1 + c * s,)
        else:
            u = u[:lo + 1] + (e0 - c * s,) + u[lo + 2:]
            hi -= 2
            u = u[:hi]
            break
    core = tuple(u[lo:hi])
    g = invert(tuple(prefix))
    return core, g


def power(u, n):
    """u^n, reduced."""
    if n == 0 or not u:
        return ()
    if n < 0:
        return power(invert(u), -n)
    core, g = cyclic_reduce(u)
    if len(core) == 2:
        body = (core[0], core[1] * n)
    elif core[0] == core[-2]:
        # boundary syllables share a base; fold via repeated multiply
        body = core
        for _ in range(n - 1):
            body = multiply(body, core)
    else:
        body = core * n
    return multiply(multiply(invert(g), body), g)


def nielsen_basis(u, v):
    """Greedy Nielsen reduction verdict: does {u, v} form a basis of F2?

    Applies the first strictly length-reducing move in a fixed enumeration
    until none applies; a basis iff the terminal pair is two single letters
    with distinct bases.
    """
    lu = letter_length(u)
    lv = letter_length(v)
    if lu == 0 or lv == 0:
        return False
    while True:
        iu = invert(u)
        iv = invert(v)
        cands = (
            (0, multiply(u, v)),
            (0, multiply(u, iv)),
            (0, multiply(v, u)),
            (0, multiply(iv, u)),
            (1, multiply(v, u)),
            (1, multiply(v, iu)),
            (1, multiply(u, v)),
            (1, multiply(iu, v)),
        )
        moved = False
        for slot, w in cands:
            lw = letter_length(w)
            if (slot == 0 and lw < lu) or (slot == 1 and lw < lv):
                if slot == 0:
                    u, lu = w, lw
                else:
                    v, lv = w, lw
                moved = True
                break
        if not moved:
            break
        if lu == 0 or lv == 0:
            return False
    return lu == 1 and lv == 1 and u[0] != v[0]


def neighbor_words(x, y, window):
    """Canonical words <x^m y^d x^k> for |m|, |k| <= window, d in {1,-1}.

    These are exactly the E-neighbours of <x> enumerated through the basis
    completion y, windowed.  May contain duplicates; callers dedupe.
    """
    xp = {0: ()}
    xi = invert(x)
    for m in range(1, window + 1):
        xp[m] = multiply(xp[m - 1], x)
        xp[-m] = multiply(xp[-(m - 1)], xi)
    ys = (y, invert(y))
    out = []
    for m in range(-window, window + 1):
        for yy in ys:
            left = multiply(xp[m], yy)
            for k in range(-window, window + 1):
                out.append(canonical(multiply(left, xp[k])))
    return out
