"""Real picture of an arrangement: generic coordinates and the wiring diagram."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Sequence

from . import words
from .arrangement import Arrangement
from .exactgeom import ProjLine, ProjPoint, apply_to_line, det3


class GenericityViolation(ValueError):
    pass


@dataclass(frozen=True)
class AffineLine:
    """``y = slope * x + intercept`` in the sheared chart."""

    label: int
    slope: Fraction
    intercept: Fraction

    def y(self, x) -> Fraction:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class Genericization:
    lines: tuple[AffineLine, ...]
    shear: Fraction
    transform: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Event:
    x: Fraction
    point: ProjPoint
    start: int
    length: int
    lines: tuple[int, ...]
    input_words: tuple[words.Word, ...] = ()

    @property
    def block(self) -> tuple[int, int]:
        return self.start, self.length


@dataclass(frozen=True)
class WiringDiagram:
    wires: tuple[int, ...]
    events: tuple[Event, ...]
    base_x: Fraction
    shear: Fraction = Fraction(0)
    generators: tuple[int, ...] = field(default=())

    def orders(self) -> Iterator[tuple[int, ...]]:
        """Wire orders (top to bottom) before each event, then the final one."""
        order = list(self.wires)
        for ev in self.events:
            yield tuple(order)
            order[ev.start:ev.start + ev.length] = order[ev.start:ev.start + ev.length][::-1]
        yield tuple(order)

    def generator_names(self) -> list[str]:
        return ["m%d" % g for g in self.generators]


def shear_sequence() -> Iterator[Fraction]:
    """0, 1, -1, 1/2, -1/2, 1/3, -1/3, ..."""
    yield Fraction(0)
    for q in itertools.count(1):
        yield Fraction(1, q)
        yield Fraction(-1, q)


def infinity_transform(line: ProjLine) -> tuple[tuple[int, ...], ...]:
    """Integer matrix whose point map sends ``line`` to z = 0."""
    if line.coeffs == (0, 0, 1):
        return ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for r1, r2 in itertools.combinations(basis, 2):
        m = (r1, r2, line.coeffs)
        if det3(m) != 0:
            return m
    raise AssertionError("unreachable")


def _affine_forms(arr: Arrangement):
    m = infinity_transform(arr.line(arr.infinity))
    forms = []
    for label, line in zip(arr.labels, arr.lines):
        if label == arr.infinity:
            continue
        forms.append((label, apply_to_line(m, line).coeffs))
    return m, forms


def _crossings(forms, t):
    """Sheared x-abscissae of affine singular points, grouped by point."""
    pts: dict[tuple, set[int]] = {}
    for (la, (a1, b1, c1)), (lb, (a2, b2, c2)) in itertools.combinations(forms, 2):
        d = a1 * b2 - a2 * b1
        if d == 0:
            continue
        x = Fraction(b1 * c2 - b2 * c1, d)
        y = Fraction(c1 * a2 - c2 * a1, d)
        pts.setdefault((x, y), set()).update((la, lb))
    return pts


def genericize(arr: Arrangement) -> Genericization:
    m, forms = _affine_forms(arr)
    points = _crossings(forms, 0)
    for t in shear_sequence():
        if any(b - a * t == 0 for _, (a, b, c) in forms):
            continue
        xs = [x + t * y for (x, y) in points]
        if len(set(xs)) != len(xs):
            continue
        lines = tuple(
            AffineLine(label, Fraction(-a) / (b - a * t), Fraction(-c) / (b - a * t))
            for label, (a, b, c) in forms
        )
        return Genericization(lines, t, m)
    raise AssertionError("unreachable")


def build_wiring(affine: Sequence[AffineLine] | Genericization) -> WiringDiagram:
    shear = Fraction(0)
    if isinstance(affine, Genericization):
        shear = affine.shear
        affine = affine.lines
    pts: dict[tuple[Fraction, Fraction], set[int]] = {}
    for la, lb in itertools.combinations(affine, 2):
        if la.slope == lb.slope:
            continue
        x = (lb.intercept - la.intercept) / (la.slope - lb.slope)
        pts.setdefault((x, la.y(x)), set()).update((la.label, lb.label))
    xs = sorted(pts)
    if len({x for x, _ in xs}) != len(xs):
        raise GenericityViolation("two singular points share an abscissa")
    base = (xs[0][0] - 1) if xs else Fraction(0)
    by_label = {l.label: l for l in affine}
    order = sorted(by_label, key=lambda lab: (-by_label[lab].y(base), lab))
    wires = tuple(order)
    events = []
    for x, y in xs:
        labs = pts[(x, y)]
        pos = sorted(order.index(lab) for lab in labs)
        if pos != list(range(pos[0], pos[0] + len(pos))):
            raise GenericityViolation("wires of the point at x=%s are not adjacent" % x)
        start, length = pos[0], len(pos)
        events.append(Event(x, ProjPoint(x, y, 1),
                            start, length, tuple(order[start:start + length])))
        order[start:start + length] = order[start:start + length][::-1]
    return WiringDiagram(wires, tuple(events), base, shear, tuple(sorted(by_label)))


def local_words(diag: WiringDiagram) -> WiringDiagram:
    """Fill each event's input words by the left-to-right meridian sweep."""
    gindex = {lab: i for i, lab in enumerate(diag.generators)}
    carried = [words.gen(gindex[lab]) for lab in diag.wires]
    events = []
    for ev in diag.events:
        inputs = tuple(carried[ev.start:ev.start + ev.length])
        ell = ev.length
        prefix: words.Word = ()
        outputs = [None] * ell
        for k, w in enumerate(inputs):
            outputs[ell - 1 - k] = words.conj(prefix, w)
            prefix = words.mul(prefix, w)
        carried[ev.start:ev.start + ell] = outputs
        events.append(replace(ev, input_words=inputs))
    return replace(diag, events=tuple(events))


def wiring_diagram(arr: Arrangement) -> WiringDiagram:
    """Genericize, sweep and assign meridian words."""
    return local_words(build_wiring(genericize(arr)))
