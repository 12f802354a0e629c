"""Primitive elements, bases of F2, and canonical vertex representatives.

Primitivity is decided by an abelianization prefilter followed by
Whitehead length descent on the cyclic core, recording the moves as a
replayable certificate.  Basis detection runs greedy Nielsen reduction on
the pair; the commutator-conjugacy criterion is kept alongside as an
independent oracle and is cross-validated in the test battery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from af2 import kernel
from af2.automorphisms import WHITEHEAD, Automorphism, inner, nielsen_reduce_with_moves
from af2.errors import NotPrimitive
from af2.words import EPSILON, GEN_A, GEN_B, Word, conjugacy_equal, rotations

A_BASE = 0
B_BASE = 1


def abelianize(u: Word):
    """Exponent sums of a and b."""
    ea = 0
    eb = 0
    for i in range(0, len(u), 2):
        if u[i] == A_BASE:
            ea += u[i + 1]
        else:
            eb += u[i + 1]
    return ea, eb


@dataclass(frozen=True)
class PrimitivityCertificate:
    """Witness for a primitivity verdict.

    For a positive verdict, applying ``moves`` (indices into the Whitehead
    automorphism table) to the cyclic core of the input reduces it to the
    single letter ``final``; ``conjugator`` g satisfies
    input == core^g.  For a negative verdict, ``reason`` explains the
    refutation.
    """

    primitive: bool
    moves: tuple = ()
    final: Optional[Word] = None
    conjugator: Word = EPSILON
    reason: str = ""

    def replay(self, u: Word) -> Word:
        """Apply the recorded moves to the cyclic core of u."""
        core, _ = kernel.cyclic_reduce(u)
        w = Word(core)
        for idx in self.moves:
            img = WHITEHEAD[idx](w)
            c, _ = kernel.cyclic_reduce(img)
            w = Word(c)
        return w


def is_primitive(u: Word):
    """Whether u belongs to some basis of F2, with a certificate."""
    if not u:
        return False, PrimitivityCertificate(False, reason="identity")
    ea, eb = abelianize(u)
    if math.gcd(ea, eb) != 1:
        return False, PrimitivityCertificate(
            False, reason=f"abelianization ({ea}, {eb}) does not extend to a basis of Z^2"
        )
    core, g = kernel.cyclic_reduce(u)
    w = Word(core)
    moves = []
    while w.n_letters > 1:
        for idx, phi in enumerate(WHITEHEAD):
            image, _ = kernel.cyclic_reduce(phi(w))
            if kernel.letter_length(image) < w.n_letters:
                w = Word(image)
                moves.append(idx)
                break
        else:
            return False, PrimitivityCertificate(
                False, moves=tuple(moves), reason="length-irreducible above one letter"
            )
    return True, PrimitivityCertificate(True, moves=tuple(moves), final=w, conjugator=Word(g))


@dataclass(frozen=True)
class CohenForm:
    """First-level primitive normal form descriptor.

    ``axis`` is "a-uniform" when the a-exponents of the matched rotation
    are constant epsilon and the b-exponents lie in {k, k+1}, and
    "b-uniform" for the roles-interchanged match.  ``inverted`` says the
    match is on u^-1; ``rotation`` is the matched letter rotation of that
    word.
    """

    epsilon: int
    k: int
    axis: str
    inverted: bool
    rotation: Word


def _match_axis(w: Word, uniform_base: int):
    """Match rotations of w with constant +-1 exponents on uniform_base and
    {k, k+1}-valued positive exponents on the other base."""
    if len(w) < 4:
        return None
    for rot in rotations(w):
        # valid cyclic presentations start at a uniform-base syllable and
        # end at the other base (no syllable wraps the rotation boundary)
        if rot[0] != uniform_base or rot[-2] == uniform_base:
            continue
        eps = None
        others = set()
        ok = True
        for i in range(0, len(rot), 2):
            base, e = rot[i], rot[i + 1]
            if base == uniform_base:
                if e not in (1, -1) or (eps is not None and e != eps):
                    ok = False
                    break
                eps = e
            else:
                others.add(e)
        if not ok or not others:
            continue
        if min(others) < 1:
            continue
        if len(others) == 1:
            k = min(others)
        elif len(others) == 2 and max(others) - min(others) == 1:
            k = min(others)
        else:
            continue
        return eps, k, rot
    return None


def cohen_form(u) -> Optional[CohenForm]:
    """Normal-form descriptor of a cyclically reduced word, if it matches.

    Scans u and u^-1, both axes; absent iff no rotation matches.  The
    match is necessary for primitivity (single letters excluded).
    """
    w = u.word if hasattr(u, "word") else Word(u)
    for inverted, cand in ((False, w), (True, ~w)):
        m = _match_axis(cand, A_BASE)
        if m:
            eps, k, rot = m
            return CohenForm(eps, k, "a-uniform", inverted, rot)
        m = _match_axis(cand, B_BASE)
        if m:
            eps, k, rot = m
            return CohenForm(eps, k, "b-uniform", inverted, rot)
    return None


def is_basis(u: Word, v: Word) -> bool:
    """Whether {u, v} is a basis of F2, by greedy Nielsen reduction."""
    return kernel.nielsen_basis(u, v)


def basis_certificate(u: Word, v: Word):
    """Verdict plus the recorded Nielsen moves and terminal pair."""
    pair, moves = nielsen_reduce_with_moves(u, v)
    p, q = pair
    verdict = (
        p.n_letters == 1 and q.n_letters == 1 and p[0] != q[0]
    )
    return verdict, pair, tuple(moves)


_COMM_AB = Word.parse("ABab")


def commutator_basis_oracle(u: Word, v: Word) -> bool:
    """Independent basis test: [u, v] conjugate to [a, b]^{+-1}."""
    comm = (~u) * (~v) * u * v
    return conjugacy_equal(comm, _COMM_AB) or conjugacy_equal(comm, ~_COMM_AB)


def complete_to_basis(u: Word) -> Word:
    """A deterministic v with {u, v} a basis.

    Obtained by replaying the primitivity certificate: psi maps u to a
    single letter, and v is the psi-preimage of the complementary letter.
    """
    ok, cert = is_primitive(u)
    if not ok:
        raise NotPrimitive(f"{u!s} is not primitive: {cert.reason}")
    psi = Automorphism(GEN_A, GEN_B)
    core, g = kernel.cyclic_reduce(u)
    for idx in cert.moves:
        psi = WHITEHEAD[idx].after(psi)
    # psi(core of u) is conjugate to the final letter; fold in the exact
    # conjugators so that chi(u) is a single letter on the nose.
    chi = psi.after(inner(Word(kernel.invert(g))))
    w = chi(u)
    wcore, h = kernel.cyclic_reduce(w)
    chi = inner(Word(kernel.invert(h))).after(chi)
    final = chi(u)
    assert final.n_letters == 1, f"certificate replay failed for {u!s}"
    other = Word((1 - final[0], 1))
    return chi.inverse()(other)


def canonical_vertex(u: Word) -> Word:
    """Canonical generator of <u> = <u^-1> (primitive inputs only)."""
    ok, cert = is_primitive(u)
    if not ok:
        raise NotPrimitive(f"{u!s} is not primitive: {cert.reason}")
    return Word(kernel.canonical(u))


def vertex_of(w) -> Word:
    """Unchecked canonicalization for words already known primitive."""
    return Word(kernel.canonical(w))
