"""Automorphisms of F2 as image pairs, with Nielsen-move decomposition.

An automorphism is stored by the images of the generators.  Inversion
works by Nielsen-reducing the image pair while recording moves: each move
is right-composition with a fixed elementary automorphism, so once the
pair reaches single letters the inverse is the recorded word in the
elementary automorphisms times the inverse letter permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from af2 import kernel
from af2.words import EPSILON, GEN_A, GEN_B, Word


@dataclass(frozen=True)
class Automorphism:
    img_a: Word
    img_b: Word

    def __call__(self, w) -> Word:
        out = ()
        for i in range(0, len(w), 2):
            img = self.img_a if w[i] == 0 else self.img_b
            out = kernel.multiply(out, kernel.power(img, w[i + 1]))
        return Word(out)

    def after(self, other: "Automorphism") -> "Automorphism":
        """self composed after other: (self.after(other))(w) == self(other(w))."""
        return Automorphism(self(other.img_a), self(other.img_b))

    def is_valid(self) -> bool:
        return kernel.nielsen_basis(self.img_a, self.img_b)

    def inverse(self) -> "Automorphism":
        pair, moves = nielsen_reduce_with_moves(self.img_a, self.img_b)
        p, q = pair
        if not (len(p) == 2 and abs(p[1]) == 1 and len(q) == 2 and abs(q[1]) == 1 and p[0] != q[0]):
            raise ValueError(f"image pair {self.img_a!s}, {self.img_b!s} is not a basis")
        inv = _perm_inverse(p, q)
        for idx in reversed(moves):
            el = ELEMENTARY[idx]
            inv = Automorphism(el(inv.img_a), el(inv.img_b))
        return inv

    def __str__(self):
        return f"a->{self.img_a!s}, b->{self.img_b!s}"


IDENTITY = Automorphism(GEN_A, GEN_B)


def inner(g: Word) -> Automorphism:
    """Conjugation w -> w^g = g^-1 w g."""
    return Automorphism(GEN_A.conj(g), GEN_B.conj(g))


def _aut(a_text, b_text):
    return Automorphism(Word.parse(a_text), Word.parse(b_text))


# One per Nielsen move, in the move-enumeration order of kernel.nielsen_basis:
# replacing (u, v) by move i turns the represented map s into s . ELEMENTARY[i].
ELEMENTARY = (
    _aut("ab", "b"),   # u <- u v
    _aut("aB", "b"),   # u <- u v^-1
    _aut("ba", "b"),   # u <- v u
    _aut("Ba", "b"),   # u <- v^-1 u
    _aut("a", "ba"),   # v <- v u
    _aut("a", "bA"),   # v <- v u^-1
    _aut("a", "ab"),   # v <- u v
    _aut("a", "Ab"),   # v <- u^-1 v
)


def nielsen_reduce_with_moves(u, v):
    """Greedy Nielsen reduction of the pair, recording the move indices.

    Mirrors kernel.nielsen_basis exactly (same fixed enumeration, first
    strictly length-reducing move).  Returns ((u', v'), moves).
    """
    u = tuple(u)
    v = tuple(v)
    lu = kernel.letter_length(u)
    lv = kernel.letter_length(v)
    moves = []
    while lu and lv:
        iu = kernel.invert(u)
        iv = kernel.invert(v)
        cands = (
            (0, kernel.multiply(u, v)),
            (0, kernel.multiply(u, iv)),
            (0, kernel.multiply(v, u)),
            (0, kernel.multiply(iv, u)),
            (1, kernel.multiply(v, u)),
            (1, kernel.multiply(v, iu)),
            (1, kernel.multiply(u, v)),
            (1, kernel.multiply(iu, v)),
        )
        for idx, (slot, w) in enumerate(cands):
            lw = kernel.letter_length(w)
            if slot == 0 and lw < lu:
                u, lu = w, lw
                moves.append(idx)
                break
            if slot == 1 and lw < lv:
                v, lv = w, lw
                moves.append(idx)
                break
        else:
            break
    return (Word(u), Word(v)), moves


def _perm_inverse(p, q):
    """Inverse of the letter-permutation automorphism a -> p, b -> q."""
    if p[0] == 0:
        return Automorphism(Word((0, p[1])), Word((1, q[1])))
    return Automorphism(Word((1, q[1])), Word((0, p[1])))


# Whitehead automorphisms of the second kind for rank 2 (multiplier x,
# the other generator y mapped to one of yx, x^-1 y, x^-1 y x).
WHITEHEAD = (
    _aut("a", "ba"), _aut("a", "Ab"), _aut("a", "Aba"),
    _aut("a", "bA"), _aut("a", "ab"), _aut("a", "abA"),
    _aut("ab", "b"), _aut("Ba", "b"), _aut("Bab", "b"),
    _aut("aB", "b"), _aut("ba", "b"), _aut("baB", "b"),
)
