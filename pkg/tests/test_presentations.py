from __future__ import annotations

import pytest

from arrgroups import words
from arrgroups.arrangement import builtin
from arrgroups.nilq.snf import AbelianInvariants
from arrgroups.presentations import (FinitePresentation, abelianized_invariants, cyclic_relators,
                                     free_group, randell_presentation)
from arrgroups.wiring import wiring_diagram


def test_cyclic_relators_of_a_triple_point():
    a, b, c = (words.gen(i) for i in range(3))
    rels = cyclic_relators([a, b, c])
    assert len(rels) == 2
    assert rels[0] == words.mul(a, b, c, words.inverse(words.mul(b, c, a)))


@pytest.mark.parametrize("name", ["A+", "A-"])
def test_reference_presentations(name):
    pres = randell_presentation(wiring_diagram(builtin(name)))
    assert pres.n_generators == 12
    assert pres.generators[:4] == ("m1", "m2", "m3", "m5")
    assert len(pres.relators) == 23 + 2 * 10
    assert abelianized_invariants(pres) == AbelianInvariants(12)
    assert all(sum(words.exponent_sums(r, 12)) == 0 for r in pres.relators)


def test_triangle_is_abelian():
    pres = randell_presentation(wiring_diagram(builtin("triangle")))
    assert pres.n_generators == 3 and len(pres.relators) == 3


def test_text_round_trip():
    pres = randell_presentation(wiring_diagram(builtin("A+")))
    text = pres.dumps()
    back = FinitePresentation.loads(text)
    assert back == pres and back.dumps() == text


def test_validation():
    with pytest.raises(ValueError):
        FinitePresentation(("a",), ((2,),))
    with pytest.raises(ValueError):
        FinitePresentation.loads("generators: a\nrelations: a\n")
    assert free_group(3).generators == ("x1", "x2", "x3")
