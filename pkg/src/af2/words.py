"""Freely reduced words over F2 = <a, b> and their syllable statistics.

The textual syntax is ``a``, ``A`` (= a^-1), ``b``, ``B`` (= b^-1)
concatenated, e.g. ``abAB``; ``a^-2`` style exponents are accepted on
input but never emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold

from af2 import kernel
from af2.errors import TileUndefined

A_BASE = 0
B_BASE = 1

_LETTER_OF = {"a": (0, 1), "A": (0, -1), "b": (1, 1), "B": (1, -1)}
_CHAR_OF = {(0, 1): "a", (0, -1): "A", (1, 1): "b", (1, -1): "B"}


class Word(tuple):
    """A freely reduced word, stored run-length encoded by syllables.

    The underlying tuple is flat: (base0, exp0, base1, exp1, ...) with
    bases 0 (=a) and 1 (=b).  Instances are immutable and hashable; all
    equality is on this canonical form.
    """

    __slots__ = ()

    def __new__(cls, flat=()):
        return super().__new__(cls, flat)

    @classmethod
    def from_pairs(cls, pairs):
        """Build from (base, exp) pairs, freely reducing."""
        return cls(kernel.reduce_word(pairs))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``abAB`` syntax, with optional ``^int`` after a letter."""
        pairs = []
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch not in _LETTER_OF:
                raise ValueError(f"bad letter {ch!r} in word {text!r}")
            base, sign = _LETTER_OF[ch]
            i += 1
            exp = 1
            if i < n and text[i] == "^":
                i += 1
                j = i
                if j < n and text[j] == "-":
                    j += 1
                while j < n and text[j].isdigit():
                    j += 1
                if j == i or text[i:j] == "-":
                    raise ValueError(f"bad exponent in word {text!r}")
                exp = int(text[i:j])
                i = j
            pairs.append((base, sign * exp))
        return cls(kernel.reduce_word(pairs))

    # -- arithmetic ------------------------------------------------------

    def __mul__(self, other):
        return Word(kernel.multiply(self, other))

    def __invert__(self):
        return Word(kernel.invert(self))

    def __pow__(self, n: int):
        return Word(kernel.power(self, n))

    def conj(self, g) -> "Word":
        """self^g = g^-1 * self * g."""
        return Word(kernel.conjugate(self, g))

    # -- views -----------------------------------------------------------

    @property
    def syllables(self):
        return tuple((self[i], self[i + 1]) for i in range(0, len(self), 2))

    @property
    def n_letters(self) -> int:
        return kernel.letter_length(self)

    @property
    def n_syllables(self) -> int:
        return len(self) // 2

    @property
    def is_identity(self) -> bool:
        return not self

    @property
    def a_length(self) -> int:
        """Sum of |k_i| over a-syllables."""
        return sum(abs(self[i + 1]) for i in range(0, len(self), 2) if self[i] == A_BASE)

    def letters(self):
        """The word as a sequence of (base, sign) letters."""
        out = []
        for i in range(0, len(self), 2):
            base, e = self[i], self[i + 1]
            sign = 1 if e > 0 else -1
            out.extend([(base, sign)] * abs(e))
        return out

    def __str__(self):
        if not self:
            return "1"
        return "".join(
            _CHAR_OF[(base, 1 if e > 0 else -1)] * abs(e) for base, e in self.syllables
        )

    def __repr__(self):
        return f"Word({str(self)!r})"


EPSILON = Word()
GEN_A = Word((0, 1))
GEN_B = Word((1, 1))


def reduce(raw) -> Word:
    """Freely reduce a sequence of (base, exp) pairs (or letters)."""
    return Word.from_pairs(raw)


def multiply(u: Word, v: Word) -> Word:
    return Word(kernel.multiply(u, v))


def invert(u: Word) -> Word:
    return Word(kernel.invert(u))


def conjugate(u: Word, g: Word) -> Word:
    """u^g = g^-1 u g (the convention used throughout)."""
    return Word(kernel.conjugate(u, g))


def cyclic_reduce(u: Word):
    """Return (core, g) with core cyclically reduced and conjugate(core, g) == u."""
    core, g = kernel.cyclic_reduce(u)
    return CyclicWord(core), Word(g)


def rotations(w: Word):
    """All letter rotations of a cyclically reduced word."""
    letters = w.letters()
    if not letters:
        return [EPSILON]
    seen = []
    for r in range(len(letters)):
        rotated = letters[r:] + letters[:r]
        seen.append(Word.from_pairs(rotated))
    return seen


class CyclicWord:
    """A cyclically reduced word up to rotation.

    Stored by its minimal rotation in the canonical order, so equality and
    hashing are rotation-equality.
    """

    __slots__ = ("word",)

    def __init__(self, flat):
        w = Word(flat)
        core, g = kernel.cyclic_reduce(w)
        if g:
            raise ValueError(f"{w!r} is not cyclically reduced")
        self.word = min(rotations(w), key=kernel.word_key)

    def __eq__(self, other):
        return isinstance(other, CyclicWord) and self.word == other.word

    def __hash__(self):
        return hash((CyclicWord, self.word))

    def __invert__(self):
        return CyclicWord(kernel.invert(self.word))

    @property
    def n_letters(self):
        return self.word.n_letters

    def __str__(self):
        return str(self.word)

    def __repr__(self):
        return f"CyclicWord({str(self)!r})"


def conjugacy_equal(u: Word, v: Word) -> bool:
    """True iff u and v are conjugate in F2 (rotation-equality of cores)."""
    cu, _ = kernel.cyclic_reduce(u)
    cv, _ = kernel.cyclic_reduce(v)
    if kernel.letter_length(cu) != kernel.letter_length(cv):
        return False
    return CyclicWord(cu) == CyclicWord(cv)


@dataclass(frozen=True)
class TileProfile:
    """b-exponents between a-occurrences, with leading/trailing tiles."""

    tiles: tuple
    a_length: int


def tile_profile(u: Word) -> TileProfile:
    """Left-to-right b-tiles of u, materialising empty boundary tiles.

    A word of a-length k has k+1 tiles; a pure b-power has one tile.
    """
    tiles = [0]
    for i in range(0, len(u), 2):
        base, e = u[i], u[i + 1]
        if base == B_BASE:
            tiles[-1] = e
        else:
            tiles.extend([0] * abs(e))
    return TileProfile(tuple(tiles), u.a_length)


def tile_b(u) -> int:
    """Tile length of a primitive cyclic word, read off the b-exponents.

    Accepts a CyclicWord or a Word (taken up to rotation).  Single letters
    a^{+-1} have tile length 0; b^{+-1} is rejected.
    """
    from af2.primitives import cohen_form  # deferred: avoids an import cycle
    from af2.errors import NotPrimitive

    w = u.word if isinstance(u, CyclicWord) else CyclicWord(u).word
    if w.n_letters == 1:
        if w[0] == B_BASE:
            raise TileUndefined("tile length is undefined for b^{+-1}")
        return 0
    form = cohen_form(w)
    if form is None:
        raise NotPrimitive(f"{w!r} does not match the primitive normal form")
    return form.k if form.axis == "a-uniform" else 1


def word_sort_key(u):
    """Canonical total order: shorter first, then a < a^-1 < b < b^-1."""
    return kernel.word_key(u)


def product(ws) -> Word:
    """Reduced product of a sequence of words."""
    return _fold(lambda p, q: Word(kernel.multiply(p, q)), ws, EPSILON)
