# cython: language_level=3
"""Compiled word-arithmetic kernel; behavioural twin of _wordops.py.

Same flat-tuple word representation: (base0, exp0, base1, exp1, ...).
Keep the two modules in lockstep; tests/test_backends.py cross-checks.
"""

IMPL = "cython"


def reduce_word(items):
    cdef list out = []
    cdef long base, exp, merged
    for base, exp in items:
        if exp == 0:
            continue
        if out and <long>out[-2] == base:
            merged = <long>out[-1] + exp
            if merged == 0:
                del out[-2:]
            else:
                out[-1] = merged
        else:
            out.append(base)
            out.append(exp)
    return tuple(out)


def multiply(u, v):
    cdef Py_ssize_t i = len(u)
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t nv = len(v)
    cdef long merged
    cdef tuple tail = ()
    while i > 0 and j < nv:
        if u[i - 2] != v[j]:
            break
        merged = <long>u[i - 1] + <long>v[j + 1]
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
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(len(u) - 2, -1, -2):
        out.append(u[i])
        out.append(-<long>u[i + 1])
    return tuple(out)


def conjugate(u, g):
    return multiply(multiply(invert(g), u), g)


def letter_length(u):
    cdef long total = 0
    cdef long e
    cdef Py_ssize_t i
    for i in range(1, len(u), 2):
        e = <long>u[i]
        total += e if e > 0 else -e
    return total


def letter_codes(u):
    cdef list out = []
    cdef long base, e, code, n, k
    cdef Py_ssize_t i
    for i in range(0, len(u), 2):
        base = <long>u[i]
        e = <long>u[i + 1]
        code = 2 * base + (1 if e < 0 else 0)
        n = e if e > 0 else -e
        for k in range(n):
            out.append(code)
    return tuple(out)


def word_key(u):
    return (letter_length(u), letter_codes(u))


def canonical(u):
    cdef tuple v = invert(u)
    return v if word_key(v) < word_key(u) else u


def cyclic_reduce(u):
    cdef list prefix = []
    cdef Py_ssize_t lo = 0
    cdef Py_ssize_t hi = len(u)
    cdef long b0, e0, b1, e1, c, s
    while hi - lo > 2:
        b0 = <long>u[lo]
        e0 = <long>u[lo + 1]
        b1 = <long>u[hi - 2]
        e1 = <long>u[hi - 1]
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
    cdef tuple core = u[lo:hi]
    cdef tuple g = invert(tuple(prefix))
    return core, g


def power(u, long n):
    if n == 0 or len(u) == 0:
        return ()
    if n < 0:
        return power(invert(u), -n)
    core, g = cyclic_reduce(u)
    cdef tuple body
    cdef long i
    if len(core) == 2:
        body = (core[0], <long>core[1] * n)
    elif core[0] == core[len(core) - 2]:
        body = core
        for i in range(n - 1):
            body = multiply(body, core)
    else:
        body = core * n
    return multiply(multiply(invert(g), body), g)


def nielsen_basis(u, v):
    cdef long lu = letter_length(u)
    cdef long lv = letter_length(v)
    cdef long lw
    cdef tuple iu, iv, w
    cdef int slot, idx, moved
    if lu == 0 or lv == 0:
        return False
    while True:
        iu = invert(u)
        iv = invert(v)
        moved = 0
        for idx in range(8):
            if idx == 0:
                slot = 0; w = multiply(u, v)
            elif idx == 1:
                slot = 0; w = multiply(u, iv)
            elif idx == 2:
                slot = 0; w = multiply(v, u)
            elif idx == 3:
                slot = 0; w = multiply(iv, u)
            elif idx == 4:
                slot = 1; w = multiply(v, u)
            elif idx == 5:
                slot = 1; w = multiply(v, iu)
            elif idx == 6:
                slot = 1; w = multiply(u, v)
            else:
                slot = 1; w = multiply(iu, v)
            lw = letter_length(w)
            if slot == 0 and lw < lu:
                u = w; lu = lw; moved = 1
                break
            if slot == 1 and lw < lv:
                v = w; lv = lw; moved = 1
                break
        if not moved:
            break
        if lu == 0 or lv == 0:
            return False
    return lu == 1 and lv == 1 and u[0] != v[0]


def neighbor_words(x, y, long window):
    cdef dict xp = {0: ()}
    cdef tuple xi = invert(x)
    cdef long m, k
    for m in range(1, window + 1):
        xp[m] = multiply(<tuple>xp[m - 1], x)
        xp[-m] = multiply(<tuple>xp[-(m - 1)], xi)
    cdef tuple ys = (tuple(y), invert(y))
    cdef list out = []
    cdef tuple yy, left
    for m in range(-window, window + 1):
        for yy in ys:
            left = multiply(<tuple>xp[m], yy)
            for k in range(-window, window + 1):
                out.append(canonical(multiply(left, <tuple>xp[k])))
    return out
