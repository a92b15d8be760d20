"""Finite presentations of arrangement groups: Randell's presentation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import words
from .wiring import WiringDiagram


@dataclass(frozen=True)
class FinitePresentation:
    generators: tuple[str, ...]
    relators: tuple[words.Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            if any(abs(x) > n or x == 0 for x in r):
                raise ValueError("relator %r uses an unknown generator" % (r,))

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> words.Word:
        return words.parse_word(text, self.generators)

    def format(self, w: Sequence[int]) -> str:
        return words.format_word(w, self.generators)

    def dumps(self) -> str:
        lines = ["generators: " + ", ".join(self.generators)]
        lines += ["relator: " + self.format(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "FinitePresentation":
        gens: tuple[str, ...] = ()
        rels = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            key, _, value = line.partition(":")
            if key == "generators":
                gens = tuple(g.strip() for g in value.split(",") if g.strip())
            elif key == "relator":
                rels.append(words.parse_word(value, gens))
            else:
                raise ValueError("unknown field %r" % key)
        return cls(gens, tuple(rels))

    def abelianized_invariants(self):
        return abelianized_invariants(self)


def free_group(n: int, prefix: str = "x") -> FinitePresentation:
    return FinitePresentation(tuple("%s%d" % (prefix, i + 1) for i in range(n)), ())


def cyclic_relators(inputs: Sequence[words.Word]) -> list[words.Word]:
    """Randell's relators for one singular point with inputs w1..wl (top first)."""
    full = words.mul(*inputs)
    out = []
    for s in range(1, len(inputs)):
        shifted = words.mul(*inputs[s:], *inputs[:s])
        out.append(words.mul(full, words.inverse(shifted)))
    return out


def randell_presentation(diag: WiringDiagram) -> FinitePresentation:
    rels = []
    for ev in diag.events:
        if len(ev.input_words) != ev.length:
            raise ValueError("diagram has no meridian words; run local_words first")
        rels.extend(cyclic_relators(ev.input_words))
    return FinitePresentation(tuple(diag.generator_names()), tuple(rels))


def abelianized_invariants(pres: FinitePresentation):
    from .nilq.snf import abelian_invariants

    rows = [words.exponent_sums(r, pres.n_generators) for r in pres.relators]
    return abelian_invariants(rows, pres.n_generators)
