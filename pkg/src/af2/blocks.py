"""E-edge geometry: neighbourhoods, sticks, block extensions Ext_k, and
bounded path searches.

A block is the induced L-structure on the vertex set grown from an edge:
level k+1 adds, for every edge whose four sticks are already present, the
sticks of all nine edges of its 1-extension.  Degrees in the ambient
complex are infinite, so every search operation takes an explicit window;
absence within a window means "not found within bounds", never "false".
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from af2 import kernel
from af2.conjugacy import (
    c_distance,
    classify_pair,
    is_c_edge,
    vertex_neighbors,
)
from af2.errors import LevelCapExceeded, NotAnEdge
from af2.primitives import is_basis, vertex_of
from af2.words import Word, cyclic_reduce

DEFAULT_LEVEL_CAP = int(os.environ.get("F2_LEVEL_CAP", "4"))


def sort_pair(u: Word, v: Word):
    return tuple(sorted((u, v), key=kernel.word_key))


def is_edge(u: Word, v: Word) -> bool:
    """Whether the two vertices generate F2 as a free product."""
    return u != v and is_basis(u, v)


def neighbors(v: Word, window: int) -> frozenset:
    """Windowed E-neighbourhood of a vertex (see conjugacy.vertex_neighbors)."""
    return vertex_neighbors(v, window)


def sticks(u: Word, v: Word) -> frozenset:
    """The four common neighbours of an edge: <xy>, <xy^-1>, <x^-1y>, <x^-1y^-1>."""
    if not is_edge(u, v):
        raise NotAnEdge(f"({u!s}, {v!s}) is not an edge")
    return _sticks_raw(u, v)


@lru_cache(maxsize=None)
def _sticks_raw(u: Word, v: Word) -> frozenset:
    iu = kernel.invert(u)
    iv = kernel.invert(v)
    return frozenset(
        Word(kernel.canonical(kernel.multiply(p, q))) for p in (u, iu) for q in (v, iv)
    )


def class_key(v: Word):
    """Conjugacy class of the vertex <v> (identifies v with v^-1)."""
    core, _ = kernel.cyclic_reduce(v)
    best = None
    for cand in (core, kernel.invert(core)):
        letters = []
        for i in range(0, len(cand), 2):
            sign = 1 if cand[i + 1] > 0 else -1
            letters.extend([(cand[i], sign)] * abs(cand[i + 1]))
        n = len(letters)
        for r in range(max(n, 1)):
            rot = kernel.reduce_word(letters[r:] + letters[:r])
            key = kernel.word_key(rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


@dataclass(frozen=True)
class AvoidanceSpec:
    """The ball C_m(center), or the whole conjugacy class when radius is None."""

    center: Word
    radius: Optional[int] = None

    def contains(self, v: Word) -> bool:
        if class_key(v) != class_key(self.center):
            return False
        if self.radius is None:
            return True
        return c_distance(self.center, v) <= self.radius


@dataclass(frozen=True)
class BlockGraph:
    """A finite block Ext_level(origin) with its full relational diagram."""

    origin: tuple
    level: int
    birth: dict
    e_edges: frozenset
    c_edges: frozenset = frozenset()
    par_pairs: frozenset = frozenset()
    orth_pairs: dict = field(default_factory=dict)
    annotated: bool = True

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.birth)

    def adjacency(self):
        adj = {v: set() for v in self.birth}
        for p, q in self.e_edges:
            adj[p].add(q)
            adj[q].add(p)
        return adj

    def restricted(self, max_level: int) -> "BlockGraph":
        """The sub-block of vertices born at or before max_level."""
        keep = {v for v, lvl in self.birth.items() if lvl <= max_level}
        inside = lambda pair: pair[0] in keep and pair[1] in keep
        return BlockGraph(
            self.origin,
            max_level,
            {v: l for v, l in self.birth.items() if v in keep},
            frozenset(p for p in self.e_edges if inside(p)),
            frozenset(p for p in self.c_edges if inside(p)),
            frozenset(p for p in self.par_pairs if inside(p)),
            {p: w for p, w in self.orth_pairs.items() if inside(p)},
            self.annotated,
        )


def _grow_vertices(u: Word, v: Word, level: int):
    """Vertex birth map and E-edge set of Ext_level((u, v))."""
    birth = {u: 0, v: 0}
    edge_known = {}

    def edge(p, q):
        key = sort_pair(p, q)
        got = edge_known.get(key)
        if got is None:
            got = is_basis(p, q)
            edge_known[key] = got
        return got

    def all_edges():
        verts = sorted(birth, key=kernel.word_key)
        out = []
        for i, p in enumerate(verts):
            for q in verts[i + 1 :]:
                if edge(p, q):
                    out.append((p, q))
        return out

    if level >= 1:
        for s in _sticks_raw(u, v):
            birth.setdefault(s, 1)
    for step in range(2, level + 1):
        current = all_edges()
        embedded = [e for e in current if all(s in birth for s in _sticks_raw(*e))]
        new = set()
        for p, q in embedded:
            sub_edges = [(p, q)] + [(x, s) for x in (p, q) for s in _sticks_raw(p, q)]
            for x, y in sub_edges:
                for s in _sticks_raw(x, y):
                    if s not in birth:
                        new.add(s)
        for s in new:
            birth[s] = step
    verts = sorted(birth, key=kernel.word_key)
    e_edges = set()
    for i, p in enumerate(verts):
        for q in verts[i + 1 :]:
            if edge(p, q):
                e_edges.add((p, q))
    return birth, frozenset(e_edges)


def _annotate(birth, e_edges):
    """C-edges and parallel/orthogonal classification of C-distance-2 pairs."""
    by_class = {}
    for v in birth:
        by_class.setdefault(class_key(v), []).append(v)
    c_edges = set()
    par = set()
    orth = {}
    for members in by_class.values():
        members.sort(key=kernel.word_key)
        for i, p in enumerate(members):
            for q in members[i + 1 :]:
                d = c_distance(p, q)
                if d == 1:
                    c_edges.add((p, q))
                elif d == 2:
                    cls = classify_pair(p, q)
                    if cls.parallel:
                        par.add((p, q))
                    else:
                        orth[(p, q)] = cls.witness
    return frozenset(c_edges), frozenset(par), orth


@lru_cache(maxsize=None)
def _build_ext_cached(u: Word, v: Word, level: int, annotate: bool) -> BlockGraph:
    birth, e_edges = _grow_vertices(u, v, level)
    if annotate:
        c_edges, par, orth = _annotate(birth, e_edges)
        return BlockGraph((u, v), level, birth, e_edges, c_edges, par, orth, True)
    return BlockGraph((u, v), level, birth, e_edges, annotated=False)


def build_ext(e, level: int, cap: Optional[int] = None, annotate: bool = True) -> BlockGraph:
    """The block Ext_level(e) with its relational diagram.

    Vertices carry birth levels; all relations are induced on the final
    vertex set.  Raises NotAnEdge / LevelCapExceeded.
    """
    u, v = e
    u = vertex_of(u)
    v = vertex_of(v)
    if not is_edge(u, v):
        raise NotAnEdge(f"({u!s}, {v!s}) is not an edge")
    if level > (DEFAULT_LEVEL_CAP if cap is None else cap):
        raise LevelCapExceeded(f"level {level} exceeds cap")
    u, v = sort_pair(u, v)
    return _build_ext_cached(u, v, level, annotate)


def standard_block(level: int, annotate: bool = True) -> BlockGraph:
    """Ext_level((<a>, <b>))."""
    return build_ext((Word((0, 1)), Word((1, 1))), level, annotate=annotate)


def _walk_back(parents, end):
    path = [end]
    while parents[path[-1]] is not None:
        path.append(parents[path[-1]])
    path.reverse()
    return path


def distance(u: Word, v: Word, bound: int, window: int):
    """Windowed BFS distance with a path certificate; None beyond bound."""
    u = vertex_of(u)
    v = vertex_of(v)
    if u == v:
        return 0, [u]
    parents = {u: None}
    frontier = [u]
    for depth in range(1, bound + 1):
        nxt = []
        for p in frontier:
            for q in neighbors(p, window):
                if q in parents:
                    continue
                parents[q] = p
                if q == v:
                    return depth, _walk_back(parents, v)
                nxt.append(q)
        frontier = nxt
        if not frontier:
            break
    return None


def find_path_avoiding(
    u: Word,
    v: Word,
    avoid: AvoidanceSpec,
    max_len: int,
    window: int = 2,
    within: Optional[BlockGraph] = None,
):
    """A u-v path none of whose interior vertices meets the avoidance ball.

    Searches the windowed neighbour expansion, or the block's own edges
    when ``within`` is given.  Returns the vertex list or None.
    """
    u = vertex_of(u)
    v = vertex_of(v)
    if avoid.radius is None and (avoid.contains(u) or avoid.contains(v)):
        raise ValueError("endpoints lie in the forbidden class")
    if u == v:
        return [u]
    adj = within.adjacency() if within is not None else None
    parents = {u: None}
    frontier = [u]
    for _ in range(max_len):
        nxt = []
        for p in frontier:
            nbrs = adj[p] if adj is not None else neighbors(p, window)
            for q in sorted(nbrs, key=kernel.word_key):
                if q in parents:
                    continue
                if q == v:
                    path = [v, p]
                    while parents[path[-1]] is not None:
                        path.append(parents[path[-1]])
                    path.reverse()
                    return path
                if avoid.contains(q):
                    continue
                parents[q] = p
                nxt.append(q)
        frontier = nxt
        if not frontier:
            break
    return None


def min_block_level(u: Word, v: Word, k_max: int, window: int = 1, ball_cap: int = 24):
    """Least k <= k_max with a witnessing edge e such that u, v in Ext_k(e).

    Candidate edges join vertices near u and v in the windowed expansion;
    absence means "not found within bounds".  Returns (level, edge) or None.
    """
    u = vertex_of(u)
    v = vertex_of(v)
    pool = {u, v}
    for center in (u, v):
        ring = {center}
        for _ in range(2):
            ring = set().union(*(neighbors(p, window) for p in ring)) | ring
        pool |= set(sorted(ring, key=kernel.word_key)[:ball_cap])
    pool = sorted(pool, key=kernel.word_key)
    candidates = []
    for i, p in enumerate(pool):
        for q in pool[i + 1 :]:
            if is_basis(p, q):
                candidates.append((p, q))
    for k in range(k_max + 1):
        for e in candidates:
            blk = build_ext(e, k, annotate=False)
            if u in blk.birth and v in blk.birth:
                return k, e
    return None


_g_table = {0: 0}


def estimate_g(k: int, trials: int = 0, rng=None, cap: Optional[int] = None) -> int:
    """Empirical g(k): least k' with e in Ext_{k'}(e') for every e' in Ext_k(e).

    Exhaustive over the standard block's edges; optional spot checks over
    random bases confirm base-independence.  Results are cached in a table
    consumed by the axiom battery.
    """
    if k in _g_table:
        return _g_table[k]
    limit = DEFAULT_LEVEL_CAP if cap is None else cap
    if k > limit:
        raise LevelCapExceeded(f"level {k} exceeds cap")
    blk = standard_block(k, annotate=False)
    a, b = blk.origin
    worst = 0
    for e in sorted(blk.e_edges):
        for kp in range(limit + 1):
            inner = build_ext(e, kp, annotate=False)
            if a in inner.birth and b in inner.birth:
                worst = max(worst, kp)
                break
        else:
            raise LevelCapExceeded(f"no k' <= {limit} recovers the origin from {e}")
    if trials and rng is not None:
        from af2.sampling import random_basis

        for _ in range(trials):
            p, q = random_basis(rng, max_aut_len=3)
            sub = build_ext((p, q), k, annotate=False)
            for e in sorted(sub.e_edges)[:6]:
                inner = build_ext(e, worst, annotate=False)
                if not (p in inner.birth and q in inner.birth):
                    raise RuntimeError("g-table spot check failed")
    _g_table[k] = worst
    return worst
