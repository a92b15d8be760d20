"""Braid monodromy of a wiring diagram and the Zariski-van Kampen presentation.

Braid letters are signed ints: ``i`` is the Artin generator sigma_i and
``-i`` its inverse (1-based).  Braids act on the right on the free group
``<x_1, ..., x_n>``, where ``x_p`` is the meridian of the strand at position
p (top first) in the base fibre.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import words
from .presentations import FinitePresentation
from .wiring import WiringDiagram


class RangeError(ValueError):
    pass


def reduce_braid(letters) -> tuple[int, ...]:
    return words.reduce(letters)


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        if any(not 1 <= abs(x) < self.n for x in self.letters):
            raise RangeError("braid letter out of range for %d strands" % self.n)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(reduce_braid(self.letters + other.letters), self.n)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-x for x in reversed(self.letters)), self.n)

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Position (0-based) reached by the strand starting at each position."""
        pos = list(range(self.n))
        where = list(range(self.n))  # where[p] = strand currently at p
        for x in self.letters:
            i = abs(x) - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        for p, s in enumerate(where):
            pos[s] = p
        return tuple(pos)

    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(self.n))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return "*".join("s%d" % x if x > 0 else "s%d^-1" % -x for x in self.letters)


def _act_letter(w: Sequence[int], b: int) -> words.Word:
    j = abs(b)
    xj, xk = j, j + 1  # word letters of x_j and x_{j+1}
    if b > 0:
        images = {xj: (xj, xk, -xj), xk: (xj,)}
    else:
        images = {xj: (xk,), xk: (-xk, xj, xk)}
    out = []
    for x in w:
        img = images.get(abs(x))
        if img is None:
            out.append(x)
        elif x > 0:
            out.extend(img)
        else:
            out.extend(words.inverse(img))
    return words.reduce(out)


def artin_action(b: BraidWord, w: Sequence[int]) -> words.Word:
    """Right action ``w^b`` of a braid on a free-group word."""
    if any(abs(x) > b.n for x in w):
        raise RangeError("word uses a generator beyond the strand count")
    w = words.reduce(w)
    for letter in b.letters:
        w = _act_letter(w, letter)
    return w


Automorphism = list  # images of x_1 .. x_n


def automorphism(b: BraidWord) -> Automorphism:
    return [artin_action(b, words.gen(i)) for i in range(b.n)]


def compose(first: Automorphism, then: Automorphism) -> Automorphism:
    """Automorphism of ``b1 * b2`` from those of b1 and b2 (right action)."""
    return [words.substitute(w, then) for w in first]


def acts_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality in B_n, decided through the faithful Artin action."""
    return automorphism(b1) == automorphism(b2)


def half_twist(start: int, r: int, n: int) -> BraidWord:
    """Positive half twist on strands ``start .. start+r-1``."""
    if start < 1 or start + r - 1 > n:
        raise RangeError("strands %d..%d outside 1..%d" % (start, start + r - 1, n))
    letters = []
    for top in range(r - 1, 0, -1):
        letters.extend(range(start, start + top))
    return BraidWord(tuple(letters), n)


def full_twist(start: int, r: int, n: int) -> BraidWord:
    if start < 1 or r < 1 or start + r - 1 > n:
        raise RangeError("strands %d..%d outside 1..%d" % (start, start + r - 1, n))
    return BraidWord(tuple(range(start, start + r - 1)) * r, n)


@dataclass(frozen=True)
class MonodromyEntry:
    """``alpha = conjugator^-1 * full_twist(start, mult) * conjugator``."""

    conjugator: BraidWord
    start: int
    mult: int

    @property
    def twist(self) -> BraidWord:
        return full_twist(self.start, self.mult, self.conjugator.n)

    @property
    def braid(self) -> BraidWord:
        b = self.conjugator
        return b.inverse() * self.twist * b

    def automorphism(self) -> Automorphism:
        # composing the three pieces keeps intermediate words short
        b = self.conjugator
        return compose(compose(automorphism(b.inverse()), automorphism(self.twist)),
                       automorphism(b))


@dataclass(frozen=True)
class MonodromyTuple:
    entries: tuple[MonodromyEntry, ...]
    n: int
    strand_labels: tuple[int, ...] = ()

    def braids(self) -> list[BraidWord]:
        return [e.braid for e in self.entries]

    def product(self, reverse: bool = False) -> BraidWord:
        out = BraidWord((), self.n)
        seq = self.braids()
        for b in (reversed(seq) if reverse else seq):
            out = out * b
        return out

    def product_automorphism(self, reverse: bool = False) -> Automorphism:
        acc = [words.gen(i) for i in range(self.n)]
        seq = list(self.entries)
        for e in (reversed(seq) if reverse else seq):
            acc = compose(acc, e.automorphism())
        return acc

    def product_is_full_twist(self, reverse: bool = False) -> bool:
        """Whether alpha_1 ... alpha_s (or alpha_s ... alpha_1) equals the
        full twist on all strands, as happens when no multiple point lies on
        the line at infinity."""
        return self.product_automorphism(reverse) == automorphism(full_twist(1, self.n, self.n))

    def __len__(self):
        return len(self.entries)


def braid_monodromy(diag: WiringDiagram) -> MonodromyTuple:
    """One entry per event, ordered by abscissa.

    The conjugator of event j is the product of the half twists of the
    earlier events, latest first: with the right action this sends each base
    meridian ``x_p`` to the word carried by position p just before event j.
    """
    n = len(diag.wires)
    beta = BraidWord((), n)
    entries = []
    for ev in diag.events:
        entries.append(MonodromyEntry(beta, ev.start + 1, ev.length))
        beta = half_twist(ev.start + 1, ev.length, n) * beta
    return MonodromyTuple(tuple(entries), n, tuple(diag.wires))


def local_meridians(mono: MonodromyTuple, j: int) -> list[words.Word]:
    """Images ``x_i^beta_j`` of the block meridians of entry j (0-based)."""
    e = mono.entries[j]
    return [artin_action(e.conjugator, words.gen(i - 1))
            for i in range(e.start, e.start + e.mult)]


def zvk_presentation(mono: MonodromyTuple, reduced: bool = True) -> FinitePresentation:
    """Zariski-van Kampen presentation on ``x_1 .. x_n``.

    ``reduced`` uses the relators ``(x_i^twist)^beta * (x_i^beta)^-1`` for the
    first r-1 strands of each block; otherwise ``x_i^alpha * x_i^-1`` for
    i = 1..n-1.
    """
    rels = []
    for e in mono.entries:
        if reduced:
            for i in range(e.start, e.start + e.mult - 1):
                x = words.gen(i - 1)
                lhs = artin_action(e.conjugator, artin_action(e.twist, x))
                rhs = artin_action(e.conjugator, x)
                rels.append(words.mul(lhs, words.inverse(rhs)))
        else:
            alpha = e.braid
            for i in range(1, mono.n):
                x = words.gen(i - 1)
                r = words.mul(artin_action(alpha, x), words.inverse(x))
                if r:
                    rels.append(r)
    names = tuple("x%d" % (i + 1) for i in range(mono.n))
    return FinitePresentation(names, tuple(rels))


def zvk_to_meridians(mono: MonodromyTuple, generators: Sequence[int]) -> list[words.Word]:
    """Word in meridian generators (sorted labels) for each ``x_p``."""
    index = {lab: i for i, lab in enumerate(generators)}
    return [words.gen(index[lab]) for lab in mono.strand_labels]


def hurwitz_move(mono: MonodromyTuple, k: int, direction: int = 1) -> MonodromyTuple:
    """Hurwitz move on positions k, k+1 (1-based).

    ``+1``: (a, b) -> (a b a^-1, a);  ``-1``: (a, b) -> (b, b^-1 a b).
    """
    if not 1 <= k < len(mono.entries):
        raise RangeError("Hurwitz move position %d outside 1..%d" % (k, len(mono) - 1))
    ents = list(mono.entries)
    a, b = ents[k - 1], ents[k]
    if direction > 0:
        moved = MonodromyEntry(b.conjugator * a.braid.inverse(), b.start, b.mult)
        ents[k - 1], ents[k] = moved, a
    else:
        moved = MonodromyEntry(a.conjugator * b.braid, a.start, a.mult)
        ents[k - 1], ents[k] = b, moved
    return MonodromyTuple(tuple(ents), mono.n, mono.strand_labels)
