from __future__ import annotations

import random

import pytest

from arrgroups import words
from arrgroups.nilq.lie import witt_ranks
from arrgroups.nilq.nq import extend, nilpotent_quotient, nq_step, trivial_presentation
from arrgroups.nilq.pc import check_consistency
from arrgroups.nilq.snf import AbelianInvariants
from arrgroups.presentations import FinitePresentation, free_group
from conftest import nq, randell


def P(n, *rels):
    return FinitePresentation(tuple("x%d" % (i + 1) for i in range(n)), tuple(map(tuple, rels)))


def test_collect_examples():
    pc1 = nilpotent_quotient(P(2, words.comm((1,), (2,))), 1).pc
    assert pc1.collect([]) == [0, 0]
    assert pc1.collect([(1, 1), (0, 1)]) == [1, 1]
    pc = nilpotent_quotient(free_group(2), 2).pc
    assert pc.weights == [1, 1, 2]
    c = pc.collect([(0, 1), (1, 1), (0, -1), (1, -1)])  # [a, b]
    assert c in ([0, 0, 1], [0, 0, -1])
    sign = c[2]
    assert pc.collect([(1, 1), (0, 1)]) == [1, 1, -sign]
    if sign == 1:
        assert pc.collect([(1, 1), (0, 1)]) == [1, 1, -1]


@pytest.mark.parametrize("n,c", [(2, 5), (3, 4), (1, 3), (4, 3)])
def test_free_groups_match_witt(n, c):
    res = nilpotent_quotient(free_group(n), c)
    assert res.quotients == [AbelianInvariants(r) for r in witt_ranks(n, c)]


def test_witt_oracle_values():
    assert witt_ranks(2, 6) == [2, 1, 2, 3, 6, 9]
    assert witt_ranks(3, 4) == [3, 3, 8, 18]


def test_abelian_input_has_trivial_higher_quotients():
    res = nilpotent_quotient(P(2, words.comm((1,), (2,))), 5)
    assert res.quotients == [AbelianInvariants(2)] + [AbelianInvariants(0)] * 4


@pytest.mark.parametrize("rels,expected", [
    # Z/2 * Z/2 = Z x| Z/2 with gamma_k = 2^(k-1) Z
    ([(1, 1), (2, 2)], ["Z_2 + Z_2", "Z_2", "Z_2", "Z_2"]),
    # quaternion group Q8, nilpotent of class 2
    ([(1, 1, 1, 1), (1, 1, -2, -2), (2, 1, -2, 1)], ["Z_2 + Z_2", "Z_2", "0", "0"]),
    # Heisenberg group: [[a,b],a], [[a,b],b]
    ([words.comm(words.comm((1,), (2,)), (1,)), words.comm(words.comm((1,), (2,)), (2,))],
     ["Z^2", "Z", "0", "0"]),
    # Z/3 * Z/3 in low degree: gr_2 is generated by [a, b] of order 3
    ([(1, 1, 1), (2, 2, 2)], ["Z_3 + Z_3", "Z_3"]),
])
def test_small_groups(rels, expected):
    res = nilpotent_quotient(P(2, *rels), len(expected))
    assert [str(q) for q in res.quotients] == expected


def _steps(pres, c):
    pc = trivial_presentation(pres.n_generators)
    for _ in range(c):
        variables, quotient = nq_step(pc, list(pres.relators), pres.n_generators)
        pc = extend(pc, variables, quotient)
        yield pc


@pytest.mark.parametrize("pres,c", [
    (free_group(2), 5), (free_group(3), 3), (P(2, (1, 1), (2, 2)), 5),
    (P(2, (1, 1, 1), (2, 2, 2)), 4), (P(3, (1, 1), (1, 2, -1, -2), (3, 3, 3, 3)), 4),
])
def test_consistency_after_every_step(pres, c):
    for pc in _steps(pres, c):
        assert check_consistency(pc) == []
        for r in pres.relators:
            assert pc.is_identity(pc.evaluate(r))


def test_reference_pc_is_consistent_and_kills_relators():
    pres = randell("A+")
    for k, pc in enumerate(_steps(pres, 4), start=1):
        assert check_consistency(pc, max_weight=k + 1 if k < 4 else 4) == []
        assert all(pc.is_identity(pc.evaluate(r)) for r in pres.relators)


def test_normal_form_group_laws():
    pc = nq("A+", 4).pc
    rng = random.Random(3)
    m = pc.n_gens

    def rand_elt():
        return pc.collect([(rng.randrange(m), rng.choice([-2, -1, 1, 2])) for _ in range(6)])

    for _ in range(25):
        u, v, w = rand_elt(), rand_elt(), rand_elt()
        assert pc.multiply(pc.multiply(u, v), w) == pc.multiply(u, pc.multiply(v, w))
        inv = pc.inverse(u)
        assert pc.is_identity(pc.multiply(u, inv))
        assert pc.is_identity(pc.multiply(inv, u))
        assert pc.multiply(u, [0] * m) == u


def test_torsion_entries_are_reduced():
    pc = nq("A+", 4).pc
    tors = [g for g, o in enumerate(pc.orders) if o]
    assert len(tors) == 1 and pc.orders[tors[0]] == 2 and pc.weights[tors[0]] == 4
    g = tors[0]
    assert pc.collect([(g, 3)])[g] == 1
    assert pc.collect([(g, -1)])[g] == 1


def test_invariants_do_not_depend_on_presentation_order():
    pres = randell("A+")
    rng = random.Random(11)
    base = nq("A+", 4).quotients
    n = pres.n_generators
    for _ in range(2):
        perm = list(range(n))
        rng.shuffle(perm)
        images = [words.gen(perm[g]) for g in range(n)]
        rels = [words.substitute(r, images) for r in pres.relators]
        rng.shuffle(rels)
        shuffled = FinitePresentation(pres.generators, tuple(rels))
        assert nilpotent_quotient(shuffled, 4).quotients == base


def test_class_must_be_positive():
    with pytest.raises(ValueError):
        nilpotent_quotient(free_group(2), 0)
