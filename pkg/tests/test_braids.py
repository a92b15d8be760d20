from __future__ import annotations

import random

import pytest

from arrgroups import words
from arrgroups.arrangement import builtin
from arrgroups.braids import (BraidWord, RangeError, acts_equal, artin_action, automorphism,
                              braid_monodromy, full_twist, half_twist, hurwitz_move,
                              local_meridians, zvk_presentation, zvk_to_meridians)
from arrgroups.nilq.nq import nilpotent_quotient
from arrgroups.presentations import randell_presentation
from arrgroups.wiring import wiring_diagram


def B(n, *letters):
    return BraidWord(tuple(letters), n)


@pytest.mark.parametrize("n", range(2, 7))
def test_braid_relations(n):
    for i in range(1, n - 1):
        assert acts_equal(B(n, i, i + 1, i), B(n, i + 1, i, i + 1))
    for i in range(1, n):
        for j in range(i + 2, n):
            assert acts_equal(B(n, i, j), B(n, j, i))
        assert acts_equal(B(n, i, -i), B(n))
        assert not acts_equal(B(n, i), B(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_action_is_an_automorphism(n):
    rng = random.Random(n)
    for _ in range(20):
        b = B(n, *(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))))
        u = words.reduce(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(8))
        v = words.reduce(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(8))
        assert artin_action(b, words.mul(u, v)) == words.mul(artin_action(b, u), artin_action(b, v))
        assert artin_action(b.inverse(), artin_action(b, u)) == u
        # the product of all generators is fixed by every braid
        top = tuple(range(1, n + 1))
        assert artin_action(b, top) == top


def test_single_crossing_action():
    assert artin_action(B(2, 1), (1,)) == (1, 2, -1)
    assert artin_action(B(2, 1), (2,)) == (1,)
    assert artin_action(B(2, -1), (1,)) == (2,)
    assert artin_action(B(2, -1), (2,)) == (-2, 1, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_twists(n):
    full = full_twist(1, n, n)
    # the full twist is central and is the square of the half twist
    for i in range(1, n):
        assert acts_equal(full * B(n, i), B(n, i) * full)
    assert acts_equal(half_twist(1, n, n) * half_twist(1, n, n), full)
    assert full.exponent_sum() == n * (n - 1) and full.is_pure()
    # its action is conjugation by the product of all generators
    top = tuple(range(1, n + 1))
    assert automorphism(full) == [words.conj(top, words.gen(i)) for i in range(n)]


def test_range_errors():
    with pytest.raises(RangeError):
        full_twist(3, 3, 4)
    with pytest.raises(RangeError):
        B(3, 3)
    with pytest.raises(RangeError):
        artin_action(B(2, 1), (3,))


def test_two_strand_relator_is_a_commutator():
    mono_rel = zvk_presentation_from_twist(2)
    assert words.cyclic_reduce(mono_rel) in {
        words.cyclic_reduce(words.comm((1,), (2,))), words.cyclic_reduce(words.comm((2,), (1,)))}


def zvk_presentation_from_twist(n):
    from arrgroups.braids import MonodromyEntry, MonodromyTuple
    mono = MonodromyTuple((MonodromyEntry(B(n), 1, n),), n, tuple(range(1, n + 1)))
    (rel,) = zvk_presentation(mono).relators
    return rel


@pytest.mark.parametrize("name", ["A+", "A-", "triangle", "concurrent3"])
def test_local_meridians_are_the_sweep_words(name):
    d = wiring_diagram(builtin(name))
    mono = braid_monodromy(d)
    to_m = zvk_to_meridians(mono, d.generators)
    assert len(mono) == len(d.events)
    for j, ev in enumerate(d.events):
        got = [words.substitute(w, to_m) for w in local_meridians(mono, j)]
        assert tuple(got) == ev.input_words
        assert mono.entries[j].braid.is_pure()


def test_product_is_full_twist_for_generic_infinity():
    for name in ("triangle", "concurrent3"):
        assert braid_monodromy(wiring_diagram(builtin(name))).product_is_full_twist()
    # L4 passes through multiple points of A+, so the product is not the full twist
    assert not braid_monodromy(wiring_diagram(builtin("A+"))).product_is_full_twist()


def test_hurwitz_moves():
    mono = braid_monodromy(wiring_diagram(builtin("triangle")))
    for k in (1, 2):
        for sign in (1, -1):
            moved = hurwitz_move(mono, k, sign)
            assert moved.product_is_full_twist()
            back = hurwitz_move(moved, k, -sign)
            assert [e.braid.letters for e in back.entries] == [e.braid.letters for e in mono.entries]
    mono = braid_monodromy(wiring_diagram(builtin("A+")))
    before = mono.product_automorphism()
    for k in (1, 5, 17):
        moved = hurwitz_move(mono, k, 1)
        assert moved.product_automorphism() == before
    with pytest.raises(RangeError):
        hurwitz_move(mono, len(mono), 1)


def test_reduced_and_full_relators_agree():
    d = wiring_diagram(builtin("concurrent3"))
    mono = braid_monodromy(d)
    short = nilpotent_quotient(zvk_presentation(mono), 4).quotients
    full = nilpotent_quotient(zvk_presentation(mono, reduced=False), 4).quotients
    assert short == full


@pytest.mark.parametrize("name", ["triangle", "concurrent3"])
def test_small_zvk_matches_randell(name):
    d = wiring_diagram(builtin(name))
    z = nilpotent_quotient(zvk_presentation(braid_monodromy(d)), 4).quotients
    r = nilpotent_quotient(randell_presentation(d), 4).quotients
    assert z == r


def _cyclic_class(w):
    w = words.cyclic_reduce(w)
    rots = [w[i:] + w[:i] for i in range(len(w))] or [()]
    inv = words.inverse(w)
    rots += [inv[i:] + inv[:i] for i in range(len(inv))]
    return min(rots)


def test_double_point_relators_coincide_with_randell():
    d = wiring_diagram(builtin("A+"))
    mono = braid_monodromy(d)
    zvk = zvk_presentation(mono).relators
    rand = randell_presentation(d).relators
    to_m = zvk_to_meridians(mono, d.generators)
    zi = ri = 0
    for ev in d.events:
        k = ev.length - 1
        if ev.length == 2:
            assert _cyclic_class(words.substitute(zvk[zi], to_m)) == _cyclic_class(rand[ri])
        zi += k
        ri += k
    assert zi == len(zvk) and ri == len(rand)


def test_literal_base_range_is_not_the_arrangement_group():
    # x_i^alpha_j = x_i on the unconjugated strands n_j..n_j+r_j-2 gives a
    # different group: the range is only right for the conjugated meridians
    d = wiring_diagram(builtin("triangle"))
    mono = braid_monodromy(d)
    rels = []
    for e in mono.entries:
        aut = e.automorphism()
        for i in range(e.start, e.start + e.mult - 1):
            rels.append(words.mul(aut[i - 1], words.inverse(words.gen(i - 1))))
    from arrgroups.presentations import FinitePresentation
    literal = FinitePresentation(zvk_presentation(mono).generators, tuple(r for r in rels if r))
    assert str(nilpotent_quotient(literal, 2).quotients[1]) != "0"
    assert str(nilpotent_quotient(zvk_presentation(mono), 2).quotients[1]) == "0"
