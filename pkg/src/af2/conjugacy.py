"""Conjugacy geometry on vertices: C-edges, the conjugacy tree, lines,
parallel/orthogonal classification, neighbour lines and closures.

All decisions are exact, not windowed: a vertex v is transported to the
base vertex <b> through the automorphism determined by its canonical
basis completion, after which 1-conjugacy is a literal pattern match on
the conjugator shape b^{a^d b^k}.  Windows only enter where the ambient
object is infinite (line slices, closures, neighbour enumerations).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from af2 import kernel
from af2.automorphisms import Automorphism
from af2.errors import NotACEdge, NotACPath, NotConjugate, NotDistanceTwo
from af2.primitives import complete_to_basis, vertex_of
from af2.words import GEN_B, Word

A_BASE = 0
B_BASE = 1


@lru_cache(maxsize=None)
def completion(v: Word) -> Word:
    """Deterministic basis completion of a vertex representative."""
    return complete_to_basis(v)


@lru_cache(maxsize=None)
def transport(v: Word):
    """(to_base, from_base): automorphisms with to_base(v) == b.

    from_base is the inverse, used to pull coordinate computations back.
    """
    from_base = Automorphism(completion(v), v)
    return from_base.inverse(), from_base


def vertex_neighbors(v: Word, window: int) -> frozenset:
    """Windowed E-neighbourhood: all <x^m y^d x^k>, |m|, |k| <= window."""
    return _neighbors_cached(v, window)


@lru_cache(maxsize=None)
def _neighbors_cached(v: Word, window: int) -> frozenset:
    y = completion(v)
    return frozenset(Word(w) for w in kernel.neighbor_words(v, y, window))


def c_neighbors(v: Word, window: int) -> frozenset:
    """Windowed 1-conjugate enumeration of a vertex."""
    phi, psi = transport(v)
    out = set()
    for delta in (1, -1):
        for k in range(-window, window + 1):
            w = _bconj_word(delta, k)
            out.add(vertex_of(psi(w)))
    return frozenset(out)


def _bconj_word(delta: int, k: int) -> Word:
    """The word b^{a^d b^k} = b^-k a^-d b a^d b^k."""
    if k == 0:
        return Word((A_BASE, -delta, B_BASE, 1, A_BASE, delta))
    return Word((B_BASE, -k, A_BASE, -delta, B_BASE, 1, A_BASE, delta, B_BASE, k))


def _match_bconj(w) -> Optional[tuple]:
    """Match w against b^{a^d b^k} up to inversion; returns (d, k) or None."""
    n = len(w)
    if n == 6:
        if (
            w[0] == A_BASE
            and w[2] == B_BASE
            and w[4] == A_BASE
            and abs(w[3]) == 1
            and abs(w[5]) == 1
            and w[1] == -w[5]
        ):
            return (w[5], 0)
    elif n == 10:
        if (
            w[0] == B_BASE
            and w[2] == A_BASE
            and w[4] == B_BASE
            and w[6] == A_BASE
            and w[8] == B_BASE
            and abs(w[3]) == 1
            and abs(w[5]) == 1
            and w[3] == -w[7]
            and w[1] == -w[9]
        ):
            return (w[7], w[9])
    return None


def c_pattern(u: Word, v: Word) -> Optional[tuple]:
    """The (delta, k) with v = <b^{a^delta b^k}> in u's base coordinates."""
    phi, _ = transport(u)
    return _match_bconj(phi(v))


def is_c_edge(u: Word, v: Word) -> bool:
    """Whether v is a 1-conjugate of u (an exact decision)."""
    return c_pattern(u, v) is not None


def strip_leading_b(g):
    """Drop a leading b-power of a conjugator (it acts trivially on b)."""
    if len(g) >= 2 and g[0] == B_BASE:
        return tuple(g[2:])
    return tuple(g)


def _transported_conjugator(u: Word, v: Word):
    """Normalized conjugator g with v = <b^g> in u's base coordinates."""
    phi, _ = transport(u)
    w = phi(v)
    core, g = kernel.cyclic_reduce(w)
    if not (len(core) == 2 and core[0] == B_BASE and abs(core[1]) == 1):
        raise NotConjugate(f"{u!s} and {v!s} generate non-conjugate subgroups")
    return Word(strip_leading_b(g))


def c_distance(u: Word, v: Word) -> Optional[int]:
    """C-distance between conjugate vertices; None if not conjugate."""
    try:
        g = _transported_conjugator(u, v)
    except NotConjugate:
        return None
    return g.a_length


def conjugator_suffixes(g):
    """Suffixes of a normalized conjugator after peeling a-letters left to
    right, each stripped of its then-leading b-power.  g itself comes
    first, the trailing (empty) conjugator last."""
    out = [tuple(g)]
    cur = tuple(g)
    while cur and any(cur[i] == A_BASE for i in range(0, len(cur), 2)):
        e = cur[1]
        s = 1 if e > 0 else -1
        rest = cur[2:] if abs(e) == 1 else (A_BASE, e - s) + cur[2:]
        rest = strip_leading_b(rest)
        out.append(rest)
        cur = rest
    return out


def c_path(u: Word, v: Word):
    """The unique C-path from u to v (endpoints included)."""
    g = _transported_conjugator(u, v)
    _, psi = transport(u)
    path = []
    for suffix in reversed(conjugator_suffixes(g)):
        w = kernel.conjugate((B_BASE, 1), suffix)
        path.append(vertex_of(psi(Word(w))))
    return path


def line_points(u: Word, v: Word, window: int) -> frozenset:
    """Windowed slice of the line l(u, v) = D1(u) & D1(v)."""
    pat = c_pattern(u, v)
    if pat is None:
        raise NotACEdge(f"({u!s}, {v!s}) is not a C-edge")
    delta, m = pat
    _, psi = transport(u)
    out = set()
    for j in range(-window, window + 1):
        w = kernel.reduce_word(((B_BASE, j), (A_BASE, delta), (B_BASE, m)))
        out.add(vertex_of(psi(Word(w))))
    return frozenset(out)


def detect_c_edge_definably(u: Word, v: Word, window: int) -> bool:
    """First-order C-edge detection: >= 5 common windowed neighbours."""
    if u == v:
        return False
    common = vertex_neighbors(u, window) & vertex_neighbors(v, window)
    return len(common) >= 5


@dataclass(frozen=True)
class PairClass:
    verdict: str  # "parallel" | "orthogonal"
    witness: Optional[Word] = None

    @property
    def parallel(self) -> bool:
        return self.verdict == "parallel"

    @property
    def orthogonal(self) -> bool:
        return self.verdict == "orthogonal"


def classify_pair(v1: Word, v2: Word) -> PairClass:
    """Parallel/orthogonal classification of a C-distance-2 pair.

    Transported to the common C-neighbour: parallel iff both carry the
    same sign delta in b^{a^delta b^m}; otherwise orthogonal, with the
    unique common line point as witness.
    """
    path = c_path(v1, v2)
    if len(path) != 3:
        raise NotDistanceTwo(f"({v1!s}, {v2!s}) has C-distance {len(path) - 1}")
    z = path[1]
    d1, m1 = c_pattern(z, v1)
    d2, m2 = c_pattern(z, v2)
    if d1 == d2:
        return PairClass("parallel")
    _, psi = transport(z)
    w = kernel.reduce_word(((B_BASE, -m2), (A_BASE, d1), (B_BASE, m1)))
    return PairClass("orthogonal", vertex_of(psi(Word(w))))


@dataclass(frozen=True)
class Line:
    """A line stored by its canonical C-edge endpoint pair."""

    endpoints: tuple

    @classmethod
    def through(cls, u: Word, v: Word) -> "Line":
        if not is_c_edge(u, v):
            raise NotACEdge(f"({u!s}, {v!s}) is not a C-edge")
        return cls(tuple(sorted((u, v), key=kernel.word_key)))

    def points(self, window: int) -> frozenset:
        return line_points(*self.endpoints, window)

    def __str__(self):
        return f"l({self.endpoints[0]!s}, {self.endpoints[1]!s})"


def _neighbour_lines_at(anchor: Word, other: Word):
    """The two neighbour lines of l(anchor, other) sharing the anchor."""
    delta, m = c_pattern(anchor, other)
    _, psi = transport(anchor)
    out = []
    for shift in (1, -1):
        w = psi(_bconj_word(delta, m + shift))
        out.append((Line.through(anchor, vertex_of(w)), m + shift))
    return out


def line_neighbours(line: Line) -> frozenset:
    """The four neighbour lines: two at each endpoint."""
    u, v = line.endpoints
    out = [ln for ln, _ in _neighbour_lines_at(u, v)]
    out += [ln for ln, _ in _neighbour_lines_at(v, u)]
    return frozenset(out)


@dataclass(frozen=True)
class ClosureSet:
    """Windowed approximation of the neighbour closure cl(u, v)."""

    seed: tuple
    members: frozenset
    depth: int
    window: int


def neighbour_closure(u: Word, v: Word, depth: int, window: int) -> ClosureSet:
    """Iterated neighbour-line endpoint collection, depth- and window-bounded.

    The window caps the line parameter |m| at the shared endpoint beyond
    which neighbour lines are not expanded, keeping the result monotone in
    both depth and window.
    """
    seed = Line.through(u, v)
    members = {u, v}
    frontier = {seed}
    seen = {seed}
    for _ in range(depth):
        nxt = set()
        for line in frontier:
            for anchor, other in (line.endpoints, line.endpoints[::-1]):
                for nb, param in _neighbour_lines_at(anchor, other):
                    if abs(param) > window or nb in seen:
                        continue
                    seen.add(nb)
                    nxt.add(nb)
                    members.update(nb.endpoints)
        frontier = nxt
        if not frontier:
            break
    return ClosureSet((u, v), frozenset(members), depth, window)


def is_straight(path) -> bool:
    """Whether every gap-2 pair along the C-path classifies parallel."""
    for i in range(len(path) - 1):
        if not is_c_edge(path[i], path[i + 1]):
            raise NotACPath(f"({path[i]!s}, {path[i + 1]!s}) is not a C-edge")
    for i in range(len(path) - 2):
        if not classify_pair(path[i], path[i + 2]).parallel:
            return False
    return True


def families_orthogonal(c1: ClosureSet, c2: ClosureSet) -> bool:
    """Whether two closures meet in one vertex with an orthogonal cross pair."""
    common = c1.members & c2.members
    if len(common) != 1:
        return False
    (z,) = common
    for x1 in c1.members:
        if x1 == z or not is_c_edge(z, x1):
            continue
        for x2 in c2.members:
            if x2 == z or x2 == x1 or not is_c_edge(z, x2):
                continue
            if classify_pair(x1, x2).orthogonal:
                return True
    return False


# -- transported-coordinate helpers (class of <b>) -------------------------
#
# Within one conjugacy class the map g -> <b^g> is a bijection from
# normalized conjugators (no leading b-power), so breadth-first searches
# over a class can run on plain conjugator words.


def conj_c_neighbors(g, window: int):
    """Normalized conjugators of the C-neighbours of <b^g>, windowed."""
    out = []
    for delta in (1, -1):
        for k in range(-window, window + 1):
            w = kernel.reduce_word(((A_BASE, delta), (B_BASE, k)) + tuple(zip(g[::2], g[1::2])))
            out.append(strip_leading_b(w))
    return out
