"""Sparse integer relation systems: unit-pivot elimination plus dense echelon form.

The relation module of the tails in a nilpotent quotient step is large and
sparse, with mostly unit coefficients; eliminating with +-1 pivots first
keeps everything integral, and only a small residual block needs a genuine
integer echelon form.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Sequence

from .snf import AbelianInvariants, abelian_invariants

log = logging.getLogger(__name__)


@dataclass
class Quotient:
    """Structure of ``Z^ncols / <rows>`` with a basis of surviving columns.

    ``survivors`` are column ids in generator order; ``orders[s]`` is the
    relative order (0 for infinite); ``power[s]`` gives ``orders[s] * s`` as a
    combination of later survivors; ``expr[c]`` writes every column in
    survivors (missing columns are survivors themselves).
    """

    survivors: list[int]
    orders: dict[int, int]
    power: dict[int, dict[int, int]]
    expr: dict[int, dict[int, int]]
    invariants: AbelianInvariants


def _axpy(dst: dict, src: dict, f: int, col_rows=None, rid=None) -> None:
    for k, val in src.items():
        x = dst.get(k, 0) - f * val
        if x:
            if col_rows is not None and k not in dst:
                col_rows[k].add(rid)
            dst[k] = x
        else:
            del dst[k]
            if col_rows is not None:
                col_rows[k].discard(rid)


def solve(rows: Sequence[dict], ncols: int, preference: Callable[[int], object] = lambda c: c,
          need_expressions: bool = True) -> Quotient:
    """Eliminate ``rows`` over columns ``0..ncols-1``.

    Columns with a larger ``preference`` key are kept as survivors when
    there is a choice.
    """
    rows = [dict(r) for r in rows if r]
    col_rows: dict[int, set] = defaultdict(set)
    for rid, row in enumerate(rows):
        for c in row:
            col_rows[c].add(rid)
    active = set(range(len(rows)))
    pivots: list[tuple[int, dict]] = []
    progress = True
    while progress:
        progress = False
        for rid in sorted(active, key=lambda r: len(rows[r])):
            if rid not in active:
                continue
            row = rows[rid]
            if not row:
                active.discard(rid)
                continue
            units = [c for c, x in row.items() if x == 1 or x == -1]
            if not units:
                continue
            c = min(units, key=lambda c: (len(col_rows[c]), preference(c)))
            pc = row[c]
            for other in list(col_rows[c]):
                if other == rid:
                    continue
                orow = rows[other]
                _axpy(orow, row, orow[c] * pc, col_rows, other)
                if not orow:
                    active.discard(other)
            for k in row:
                col_rows[k].discard(rid)
            active.discard(rid)
            pivots.append((c, row))
            progress = True
    residual = [rows[r] for r in sorted(active) if rows[r]]
    eliminated = {c for c, _ in pivots}
    log.debug("unit elimination: %d pivots, residual %d rows", len(pivots), len(residual))

    rest_cols = sorted({c for r in residual for c in r}, key=lambda c: (preference(c), c))
    echelon = _echelon(residual, rest_cols)
    orders: dict[int, int] = {}
    power: dict[int, dict[int, int]] = {}
    hnf_elim: list[tuple[int, dict]] = []
    for c, row in echelon:
        d = row[c]
        if d == 1:
            hnf_elim.append((c, row))
            eliminated.add(c)
        else:
            orders[c] = d
            power[c] = {k: -x for k, x in row.items() if k != c}
    all_cols = sorted(range(ncols), key=lambda c: (preference(c), c))
    survivors = [c for c in all_cols if c not in eliminated]

    expr: dict[int, dict[int, int]] = {}
    if need_expressions:
        def value(k):
            return expr.get(k, {k: 1})

        for c, row in reversed(hnf_elim):
            acc: dict[int, int] = {}
            for k, x in row.items():
                if k != c:
                    _axpy(acc, value(k), x)
            expr[c] = acc
        for c, row in reversed(pivots):
            pc = row[c]
            acc = {}
            for k, x in row.items():
                if k != c:
                    _axpy(acc, value(k), x * pc)
            expr[c] = acc

    pos = {c: i for i, c in enumerate(rest_cols)}
    dense = [[0] * len(rest_cols) for _ in echelon]
    for n, (_, row) in enumerate(echelon):
        for k, x in row.items():
            dense[n][pos[k]] = x
    inv = abelian_invariants(dense, len(rest_cols))
    invariants = AbelianInvariants(inv.rank + (ncols - len(eliminated) - len(orders)
                                               - (len(rest_cols) - len(echelon))),
                                   inv.torsion)
    return Quotient(survivors, orders, power, expr, invariants)


def _echelon(rows: Sequence[dict], cols: Sequence[int]) -> list[tuple[int, dict]]:
    """Integer row echelon form (pivot entries positive) of sparse rows."""
    work = [dict(r) for r in rows if r]
    out: list[tuple[int, dict]] = []
    for c in cols:
        cand = [r for r in work if r.get(c)]
        if not cand:
            continue
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[c]))
            p = cand[0]
            for r in cand[1:]:
                _axpy(r, p, r[c] // p[c])
            cand = [r for r in cand if r.get(c)]
        p = cand[0]
        if p[c] < 0:
            for k in p:
                p[k] = -p[k]
        work = [r for r in work if r is not p and r]
        # reduce later rows cannot contain c any more
        out.append((c, p))
    for i in range(len(out) - 1, -1, -1):
        c, p = out[i]
        for j in range(i):
            _, q = out[j]
            x = q.get(c)
            if x:
                f = x // p[c]
                if f:
                    _axpy(q, p, f)
    return out


def _add_tail_expr(acc: dict, src: dict, f: int) -> None:
    for k, x in src.items():
        y = acc.get(k, 0) + f * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
