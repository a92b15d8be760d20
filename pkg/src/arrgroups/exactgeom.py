"""Exact projective geometry over the rationals.

Points and lines of the projective plane are stored as integer-primitive
coordinate triples whose first nonzero entry is positive, so equality of
projective objects is plain tuple equality.  Conics are symmetric 3x3
matrices of :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IdenticalLines(ValueError):
    """Two proportional line forms were given where distinct lines are needed."""


class DuplicatePoints(ValueError):
    pass


class DuplicateLines(ValueError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def primitive(coords: Iterable) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with first nonzero entry > 0."""
    fr = [_as_fraction(c) for c in coords]
    if not any(fr):
        raise ValueError("zero vector has no projective class")
    den = math.lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    lead = next(i for i in ints if i)
    if lead < 0:
        ints = [-i for i in ints]
    return tuple(ints)


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: tuple[int, int, int]

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise ValueError("a projective point needs three coordinates")
        object.__setattr__(self, "coords", primitive(coords))

    def __iter__(self):
        return iter(self.coords)

    def affine(self) -> tuple[Fraction, Fraction] | None:
        """Affine chart z = 1; ``None`` for points at infinity."""
        x, y, z = self.coords
        if z == 0:
            return None
        return Fraction(x, z), Fraction(y, z)

    def __repr__(self):
        return "[%d:%d:%d]" % self.coords


@dataclass(frozen=True, order=True)
class ProjLine:
    """The line ``a*x + b*y + c*z = 0``."""

    coeffs: tuple[int, int, int]

    def __init__(self, *coeffs):
        if len(coeffs) == 1:
            coeffs = tuple(coeffs[0])
        if len(coeffs) != 3:
            raise ValueError("a projective line needs three coefficients")
        object.__setattr__(self, "coeffs", primitive(coeffs))

    def __iter__(self):
        return iter(self.coeffs)

    def contains(self, p: ProjPoint) -> bool:
        return dot(self.coeffs, p.coords) == 0

    def dual(self) -> ProjPoint:
        return ProjPoint(self.coeffs)

    def __repr__(self):
        a, b, c = self.coeffs
        return "ProjLine(%d, %d, %d)" % (a, b, c)


def dual_point(p: ProjPoint) -> ProjLine:
    return ProjLine(p.coords)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(m: Sequence[Sequence]):
    return dot(m[0], cross(m[1], m[2]))


def line_intersection(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    p = cross(l1.coeffs, l2.coeffs)
    if not any(p):
        raise IdenticalLines("lines %r and %r coincide" % (l1, l2))
    return ProjPoint(p)


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    l = cross(p.coords, q.coords)
    if not any(l):
        raise DuplicatePoints("points %r and %r coincide" % (p, q))
    return ProjLine(l)


def collinear3(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> bool:
    return det3([p1.coords, p2.coords, p3.coords]) == 0


# ---------------------------------------------------------------------------
# exact linear algebra (Bareiss elimination)

def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def integer_kernel(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix (reduced echelon)."""
    m = [[_as_fraction(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# conics

@dataclass(frozen=True)
class Conic:
    """Symmetric matrix ``sym``; a point p lies on the conic iff p^T sym p = 0."""

    sym: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_coefficients(cls, a, b, c, d, e, f) -> "Conic":
        """``a x^2 + b xy + c y^2 + d xz + e yz + f z^2``."""
        a, b, c, d, e, f = map(_as_fraction, (a, b, c, d, e, f))
        h = Fraction(1, 2)
        return cls(((a, b * h, d * h), (b * h, c, e * h), (d * h, e * h, f)))

    def contains(self, p: ProjPoint) -> bool:
        v = p.coords
        return sum(v[i] * self.sym[i][j] * v[j] for i in range(3) for j in range(3)) == 0

    def tangent_to(self, line: ProjLine) -> bool:
        """A line is tangent to a smooth conic iff it lies on the dual conic."""
        adj = adjugate(self.sym)
        v = line.coeffs
        return sum(v[i] * adj[i][j] * v[j] for i in range(3) for j in range(3)) == 0

    def det(self) -> Fraction:
        return det3(self.sym)

    def is_smooth(self) -> bool:
        return self.det() != 0

    def dual(self) -> "Conic":
        return Conic(adjugate(self.sym))


def adjugate(m) -> tuple[tuple[Fraction, ...], ...]:
    def minor(i, j):
        rs = [r for r in range(3) if r != i]
        cs = [c for c in range(3) if c != j]
        return m[rs[0]][cs[0]] * m[rs[1]][cs[1]] - m[rs[0]][cs[1]] * m[rs[1]][cs[0]]

    return tuple(
        tuple(Fraction((-1) ** (i + j) * minor(j, i)) for j in range(3)) for i in range(3)
    )


def veronese_row(p: ProjPoint) -> list[int]:
    x, y, z = p.coords
    return [x * x, x * y, y * y, x * z, y * z, z * z]


def _conic_from_kernel_vector(v) -> Conic:
    return Conic.from_coefficients(*v)


def conic_through(points: Sequence[ProjPoint]) -> Conic | None:
    """A smooth conic through all given points, or ``None`` if there is none.

    The conics through the points form the projectivised kernel of the
    Veronese matrix.  When the kernel has dimension d >= 2, the determinant
    of a kernel combination is a cubic form in d variables; it vanishes
    identically iff it vanishes on the grid {0,1,2,3}^d, so that grid is
    searched for a smooth member.
    """
    if len(set(points)) != len(points):
        raise DuplicatePoints("points must be pairwise distinct")
    kernel = integer_kernel([veronese_row(p) for p in points])
    if not kernel:
        return None
    if len(kernel) == 1:
        conic = _conic_from_kernel_vector(kernel[0])
        return conic if conic.is_smooth() else None
    for coeffs in itertools.product(range(4), repeat=len(kernel)):
        if not any(coeffs):
            continue
        v = [sum(c * k[i] for c, k in zip(coeffs, kernel)) for i in range(6)]
        conic = _conic_from_kernel_vector(v)
        if conic.is_smooth():
            return conic
    return None


def six_points_on_common_conic(
    pts: Sequence[ProjPoint], witness: bool = False
):
    """Whether six distinct points lie on a common smooth conic."""
    if len(pts) != 6:
        raise ValueError("expected six points")
    conic = conic_through(pts)
    if witness:
        return conic is not None, conic
    return conic is not None


def lines_tangent_common_conic(lines: Sequence[ProjLine], witness: bool = False):
    """Whether six distinct lines are tangent to a common smooth conic.

    The lines are dualised to points, a smooth dual conic through them is
    sought, and the primal conic is its adjugate.
    """
    if len(lines) != 6:
        raise ValueError("expected six lines")
    if len(set(lines)) != len(lines):
        raise DuplicateLines("lines must be pairwise distinct")
    dual = conic_through([l.dual() for l in lines])
    conic = dual.dual() if dual is not None else None
    if witness:
        return conic is not None, conic
    return conic is not None


# ---------------------------------------------------------------------------
# projective transformations

def apply_to_point(mat, p: ProjPoint) -> ProjPoint:
    return ProjPoint([dot(row, p.coords) for row in mat])


def apply_to_line(mat, l: ProjLine) -> ProjLine:
    """Image of a line under the point map ``p -> mat p`` (i.e. ``l mat^{-1}``)."""
    adj = adjugate([[_as_fraction(x) for x in row] for row in mat])
    return ProjLine([sum(l.coeffs[i] * adj[i][j] for i in range(3)) for j in range(3)])
