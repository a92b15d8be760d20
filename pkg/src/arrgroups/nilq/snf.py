"""Integer Smith normal form and abelian group invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from sympy import factorint


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^rank`` plus cyclic factors ``torsion`` in divisibility-chain form."""

    rank: int
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self):
        t = self.torsion
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError("torsion %r is not a divisibility chain" % (t,))

    def primary(self) -> tuple[int, ...]:
        """Prime-power cyclic factors, sorted."""
        out = []
        for d in self.torsion:
            out.extend(p ** e for p, e in factorint(d).items())
        return tuple(sorted(out))

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z^%d" % self.rank if self.rank > 1 else "Z")
        parts += ["Z_%d" % q for q in self.primary()]
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "primary": list(self.primary())}


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U * M * V = D`` diagonal, d1 | d2 | ..."""
    a = [list(map(int, r)) for r in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    u, v = _identity(nr), _identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row dst += f * row src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    for t in range(min(nr, nc)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean &= a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean &= a[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if not any(a[i][j] for i in range(t, nr) for j in range(t, nc)):
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def diagonal(d) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def abelian_invariants(rows: Sequence[Sequence[int]], ncols: int) -> AbelianInvariants:
    """Invariants of ``Z^ncols / rowspace(rows)``."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return AbelianInvariants(ncols)
    d = invariant_factors(rows)
    nonzero = [x for x in d if x]
    return AbelianInvariants(ncols - len(nonzero), tuple(x for x in nonzero if x > 1))


def invariant_factors(rows: Sequence[Sequence[int]]) -> list[int]:
    d, _, _ = smith_normal_form(rows)
    return diagonal(d)


def element_order(rows: Sequence[Sequence[int]], ncols: int, vec: Sequence[int]) -> int:
    """Order of ``vec`` in ``Z^ncols / rowspace(rows)``; 0 means infinite."""
    rows = [list(r) for r in rows if any(r)] or [[0] * ncols]
    d, _, v = smith_normal_form(rows)
    diag = diagonal(d) + [0] * (ncols - min(len(rows), ncols))
    y = [sum(vec[i] * v[i][j] for i in range(ncols)) for j in range(ncols)]
    order = 1
    for dj, yj in zip(diag, y):
        if dj == 0:
            if yj:
                return 0
        elif yj % dj:
            order = math.lcm(order, dj // math.gcd(dj, yj))
    return order
