"""Line arrangements, their intersection lattices and the built-in 13-line pair."""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exactgeom import ProjLine, ProjPoint, collinear3, line_intersection


class UnknownName(KeyError):
    pass


class ArrangementFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[ProjLine, ...]
    labels: tuple[int, ...]
    infinity: int

    def __post_init__(self):
        if len(self.lines) != len(self.labels):
            raise ValueError("one label per line")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("lines must be pairwise non-proportional")
        if self.infinity not in self.labels:
            raise ValueError("infinity label %r is not a line label" % (self.infinity,))

    @classmethod
    def from_forms(cls, forms: Sequence, labels: Sequence[int] | None = None,
                   infinity: int | None = None) -> "Arrangement":
        lines = tuple(ProjLine(f) for f in forms)
        labels = tuple(labels) if labels is not None else tuple(range(1, len(lines) + 1))
        if infinity is None:
            infinity = labels[0]
        return cls(lines, labels, infinity)

    def line(self, label: int) -> ProjLine:
        return self.lines[self.labels.index(label)]

    def __len__(self):
        return len(self.lines)

    def with_infinity(self, label: int) -> "Arrangement":
        return Arrangement(self.lines, self.labels, label)


@dataclass(frozen=True)
class IncidenceLattice:
    points: tuple[tuple[ProjPoint, frozenset[int]], ...]
    labels: tuple[int, ...]

    def histogram(self) -> dict[int, int]:
        """Number of singular points of each multiplicity."""
        return dict(sorted(Counter(len(s) for _, s in self.points).items()))

    def high_points(self, min_mult: int = 3) -> list[frozenset[int]]:
        return [s for _, s in self.points if len(s) >= min_mult]

    def point(self, *labels: int) -> ProjPoint:
        """The singular point lying on all the given lines."""
        want = set(labels)
        for p, s in self.points:
            if want <= s:
                return p
        raise KeyError("lines %s are not concurrent" % sorted(want))

    def multiplicity(self, p: ProjPoint) -> int:
        for q, s in self.points:
            if q == p:
                return len(s)
        return 0


@dataclass(frozen=True)
class CombinatoricsSpec:
    n_lines: int
    high_points: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self):
        seen = set()
        for s in self.high_points:
            for pair in itertools.combinations(sorted(s), 2):
                if pair in seen:
                    raise ValueError("pair %s occurs in two multiple points" % (pair,))
                seen.add(pair)


def build_lattice(arr: Arrangement) -> IncidenceLattice:
    groups: dict[ProjPoint, set[int]] = {}
    for (i, li), (j, lj) in itertools.combinations(zip(arr.labels, arr.lines), 2):
        p = line_intersection(li, lj)
        groups.setdefault(p, set()).update((i, j))
    points = sorted(
        ((p, frozenset(s)) for p, s in groups.items()),
        key=lambda ps: (sorted(ps[1]), ps[0].coords),
    )
    return IncidenceLattice(tuple(points), tuple(arr.labels))


def check_combinatorics(lat: IncidenceLattice, spec: CombinatoricsSpec) -> bool:
    if len(lat.labels) != spec.n_lines:
        return False
    return set(lat.high_points(3)) == set(frozenset(s) for s in spec.high_points)


def betti_numbers(lat: IncidenceLattice) -> tuple[int, int, int]:
    b1 = len(lat.labels) - 1
    b2 = sum(len(s) - 1 for _, s in lat.points) - b1
    return 1, b1, b2


def poincare_polynomial(lat: IncidenceLattice) -> tuple[int, int, int]:
    return betti_numbers(lat)


def pair_coverage_holds(lat: IncidenceLattice) -> bool:
    return sum(comb(len(s), 2) for _, s in lat.points) == comb(len(lat.labels), 2)


def find_collinear_triples(lat: IncidenceLattice, min_mult: int = 3,
                           lines: Iterable[ProjLine] = ()) -> list[tuple[frozenset[int], ...]]:
    """Triples of multiple points that are aligned on a line not in the arrangement.

    Points are reported by their incidence sets.  A triple is excluded when
    some arrangement line passes through all three points, which is detected
    from the incidence sets alone.
    """
    if min_mult < 3:
        raise ValueError("min_mult must be at least 3")
    pts = [(p, s) for p, s in lat.points if len(s) >= min_mult]
    out = []
    for (p, s), (q, t), (r, u) in itertools.combinations(pts, 3):
        if s & t & u:
            continue
        if collinear3(p, q, r):
            out.append((s, t, u))
    return out


# ---------------------------------------------------------------------------
# built-in arrangements

def _reference_forms(sign: int) -> list[tuple]:
    h = Fraction(1, 2)
    return [
        (1, 0, 0),
        (0, 1, 0),
        (1, 1, -1),
        (0, 0, 1),
        (3, 3, 1),
        (3, 0, 1),
        (0, 3, 1),
        (2, -1, 2),
        (1, 0, 1),
        (0, 1, -2),
        (-1 + sign * h, -1 + sign * 2, 1),
        (0, -1 + sign * 2, 1),
        (-2 + sign, 0, 2),
    ]


REFERENCE_COMBINATORICS = CombinatoricsSpec(
    13,
    tuple(frozenset(s) for s in [
        {1, 4, 6, 9, 13}, {1, 5, 7}, {1, 8, 10}, {1, 11, 12},
        {2, 4, 7, 10, 12}, {2, 5, 6}, {2, 8, 9}, {2, 11, 13},
        {3, 4, 5}, {3, 6, 8}, {3, 7, 11}, {3, 9, 10}, {3, 12, 13},
    ]),
)

#: certificate data distinguishing the two components of the moduli space
ALIGNED_TRIPLE = ((1, 11, 12), (2, 8, 9), (3, 4, 5))
CONIC_POINTS = ((1, 8, 10), (1, 11, 12), (2, 8, 9), (2, 11, 13), (3, 9, 10), (3, 12, 13))
TANGENT_LINES = (6, 7, 8, 10, 11, 13)


def builtin(name: str) -> Arrangement:
    """``"A+"`` or ``"A-"``: the 13-line pair with L4 as the line at infinity."""
    if name in ("A+", "Aplus", "A_plus"):
        sign = 1
    elif name in ("A-", "Aminus", "A_minus"):
        sign = -1
    elif name in _SMALL:
        return _SMALL[name]()
    else:
        raise UnknownName(name)
    return Arrangement.from_forms(_reference_forms(sign), infinity=4)


def _triangle() -> Arrangement:
    # three generic affine lines plus the line at infinity
    return Arrangement.from_forms([(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, -1)], infinity=1)


def _concurrent3() -> Arrangement:
    return Arrangement.from_forms([(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, -1, 0)], infinity=1)


def _two_lines() -> Arrangement:
    return Arrangement.from_forms([(0, 0, 1), (1, 0, 0), (0, 1, 0)], infinity=1)


_SMALL = {"triangle": _triangle, "concurrent3": _concurrent3, "two-lines": _two_lines}

BUILTIN_NAMES = ("A+", "A-") + tuple(_SMALL)


# ---------------------------------------------------------------------------
# file format

def _fmt_rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else "%d/%d" % (f.numerator, f.denominator)


def dumps(arr: Arrangement) -> str:
    doc = {
        "lines": [[_fmt_rational(c) for c in l.coeffs] for l in arr.lines],
        "labels": list(arr.labels),
        "infinity": arr.infinity,
    }
    return json.dumps(doc, indent=1) + "\n"


def loads(text: str) -> Arrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFormatError("not a JSON document: %s" % exc) from None
    if not isinstance(doc, dict) or "lines" not in doc:
        raise ArrangementFormatError("missing field 'lines'")
    try:
        forms = []
        for triple in doc["lines"]:
            if len(triple) != 3:
                raise ArrangementFormatError("line %r is not a triple" % (triple,))
            forms.append(tuple(Fraction(str(c)) for c in triple))
        labels = doc.get("labels")
        infinity = doc.get("infinity")
        return Arrangement.from_forms(forms, labels, infinity)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ArrangementFormatError):
            raise
        raise ArrangementFormatError(str(exc)) from None


def load(name_or_path: str) -> Arrangement:
    """A built-in name or the path of an arrangement file."""
    try:
        return builtin(name_or_path)
    except UnknownName:
        pass
    with open(name_or_path) as fh:
        return loads(fh.read())
