"""Seeded random generators for words, primitives, bases and conjugators.

Primitive vertices are sampled as images of a under random compositions of
elementary Nielsen automorphisms (guaranteed primitive); plain random
reduced words serve as negative-case samples.
"""

from __future__ import annotations

import random

from af2.automorphisms import ELEMENTARY, IDENTITY, Automorphism
from af2.primitives import vertex_of
from af2.words import Word

_PERMS = (
    Automorphism(Word.parse("a"), Word.parse("b")),
    Automorphism(Word.parse("A"), Word.parse("b")),
    Automorphism(Word.parse("a"), Word.parse("B")),
    Automorphism(Word.parse("b"), Word.parse("a")),
)


def random_automorphism(rng: random.Random, max_len: int) -> Automorphism:
    """Composition of <= max_len elementary Nielsen automorphisms."""
    aut = _PERMS[rng.randrange(len(_PERMS))]
    for _ in range(rng.randint(0, max_len)):
        aut = ELEMENTARY[rng.randrange(len(ELEMENTARY))].after(aut)
    return aut


def random_primitive(rng: random.Random, max_aut_len: int) -> Word:
    """Canonical vertex of the image of a under a random automorphism."""
    if max_aut_len == 0:
        return Word.parse("a")
    return vertex_of(random_automorphism(rng, max_aut_len).img_a)


def random_basis(rng: random.Random, max_aut_len: int):
    """A random basis pair (image of (a, b))."""
    aut = random_automorphism(rng, max_aut_len)
    return aut.img_a, aut.img_b


def random_reduced_word(rng: random.Random, n_letters: int) -> Word:
    """Uniform random freely reduced word with exactly n_letters letters."""
    if n_letters <= 0:
        return Word()
    letters = [(rng.randrange(2), rng.choice((1, -1)))]
    while len(letters) < n_letters:
        base, sign = rng.randrange(2), rng.choice((1, -1))
        if letters[-1] == (base, -sign):
            continue
        letters.append((base, sign))
    return Word.from_pairs(letters)


def random_conjugator(rng: random.Random, a_len: int, exp_window: int) -> Word:
    """Normalized conjugator with given a-length and |b-exponents| <= exp_window.

    Shape: a^{d_1} b^{m_1} ... a^{d_k} b^{m_k} with each d_i = +-1 letter
    peeled singly; no leading b-power, so it indexes a conjugate of <b>.
    """
    pairs = []
    for i in range(a_len):
        pairs.append((0, rng.choice((1, -1))))
        m = rng.randint(-exp_window, exp_window)
        if m:
            pairs.append((1, m))
    w = Word.from_pairs(pairs)
    if w.a_length != a_len:
        # adjacent a, a^-1 collapsed across an empty b-tile; resample
        return random_conjugator(rng, a_len, exp_window)
    return w
