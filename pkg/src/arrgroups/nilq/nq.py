"""Nilpotent quotient algorithm.

Starting from the trivial group, each step takes a consistent weighted pc
presentation of ``G / gamma_{c+1}`` and produces one for ``G / gamma_{c+2}``:

1. every non-defining relation of weight <= c+1 (conjugate relations, power
   relations and the images of the free generators) receives a new central
   tail of weight c+1;
2. the overlap tests and the relators of G, evaluated in this extension,
   give integer relations among the tails;
3. the relations are eliminated; surviving tails become the generators of
   the new layer ``gamma_{c+1} / gamma_{c+2}``.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Sequence

from .. import words
from .linsys import Quotient, _add_tail_expr, solve
from .pc import (Collector, PcPresentation, _add_tail, consistency_words,
                 inverse_syllables, run_consistency_test)
from .snf import AbelianInvariants

log = logging.getLogger(__name__)


class DepthError(ValueError):
    """The word is not syntactically an iterated commutator of the required depth."""


@dataclass
class NQResult:
    pc: PcPresentation
    quotients: list[AbelianInvariants]
    timings: list[float] = field(default_factory=list)

    @property
    def ranks(self) -> list[int]:
        return [q.rank for q in self.quotients]


def trivial_presentation(n_free: int) -> PcPresentation:
    return PcPresentation([], [], [], {}, [() for _ in range(n_free)], [], 0)


def _variables(pc: PcPresentation, n_free: int):
    c = pc.nclass
    defs = set(pc.definitions)
    out = []
    for x in range(n_free):
        if ("image", x) not in defs:
            out.append(("image", x))
    for i, o in enumerate(pc.orders):
        if o and ("power", i) not in defs:
            out.append(("power", i))
    w = pc.weights
    for i in range(pc.n_gens):
        for j in range(i + 1, pc.n_gens):
            if w[i] + w[j] > c + 1:
                break
            if ("comm", j, i) not in defs:
                out.append(("comm", j, i))
    return out


def _preference(var) -> tuple:
    # survivors are taken from the largest keys: prefer commutators with a
    # weight-one generator, then the remaining commutators, then the rest
    kind = var[0]
    if kind == "comm":
        return (2, -var[2], -var[1])
    if kind == "image":
        return (3, -var[1])
    return (0, -var[1])


def tail_system(pc: PcPresentation, relators: Sequence[words.Word], n_free: int):
    """Extended collector and the relations among the new tails."""
    variables = _variables(pc, n_free)
    index = {v: n for n, v in enumerate(variables)}
    m, c = pc.n_gens, pc.nclass
    w = pc.weights
    conj = [dict() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if w[i] + w[j] > c + 1:
                break
            word = pc.conj[i].get(j, ())
            var = index.get(("comm", j, i))
            tail = {var: 1} if var is not None else None
            if word or tail:
                conj[i][j] = (word, tail)
    powers = {}
    for i, o in enumerate(pc.orders):
        if o:
            var = index.get(("power", i))
            powers[i] = (pc.powers.get(i, ()), {var: 1} if var is not None else None)
    images = []
    for x in range(n_free):
        var = index.get(("image", x))
        images.append((pc.images[x], {var: 1} if var is not None else None))
    col = Collector(w, pc.orders, conj, powers)

    rows = []
    tests = 0
    for test in consistency_words(w, pc.orders, c + 1):
        lhs, rhs, diff = run_consistency_test(col, test, True)
        if lhs != rhs:
            raise AssertionError("presentation of class %d is inconsistent at %r" % (c, test))
        tests += 1
        if diff:
            rows.append(diff)
    for rel in relators:
        v = [0] * m
        t: dict = {}
        for letter in rel:
            img, tail = images[abs(letter) - 1]
            s = 1 if letter > 0 else -1
            col.collect(v, img if s > 0 else inverse_syllables(img), t)
            if tail:
                _add_tail(t, tail, s)
        if any(v):
            raise AssertionError("relator does not vanish in the class-%d quotient" % c)
        if t:
            rows.append(t)
    log.debug("class %d: %d tails, %d tests, %d relations", c + 1, len(variables), tests, len(rows))
    return variables, rows


def _layer_normal(vec: dict, pos: dict, orders: list, power_rows: dict) -> dict:
    """Reduce torsion exponents of a layer element (central, so additive)."""
    vec = {k: x for k, x in vec.items() if x}
    for s in sorted(vec):
        pass
    changed = True
    while changed:
        changed = False
        for k in sorted(vec):
            o = orders[k]
            x = vec.get(k, 0)
            if o and not 0 <= x < o:
                q, r = divmod(x, o)
                if r:
                    vec[k] = r
                else:
                    del vec[k]
                for h, y in power_rows[k].items():
                    z = vec.get(h, 0) + q * y
                    if z:
                        vec[h] = z
                    else:
                        vec.pop(h, None)
                changed = True
                break
    return vec


def extend(pc: PcPresentation, variables, quotient: Quotient) -> PcPresentation:
    """Presentation of class c+1 from the solved tail system."""
    m, c = pc.n_gens, pc.nclass
    new_ids = {col: m + n for n, col in enumerate(quotient.survivors)}
    weights = pc.weights + [c + 1] * len(quotient.survivors)
    orders = pc.orders + [quotient.orders.get(col, 0) for col in quotient.survivors]

    def in_layer(col_vec: dict) -> dict:
        return {new_ids[k]: x for k, x in col_vec.items() if x}

    power_rows: dict[int, dict] = {}
    for col, d in quotient.orders.items():
        acc: dict = {}
        for k, x in quotient.power[col].items():
            _add_tail_expr(acc, quotient.expr.get(k, {k: 1}), x)
        power_rows[new_ids[col]] = in_layer(acc)
    # reduce the power right-hand sides themselves
    for g in sorted(power_rows, reverse=True):
        power_rows[g] = _layer_normal(power_rows[g], None, orders, power_rows)

    def tail_word(var) -> tuple:
        col = variables.index(var) if isinstance(var, tuple) else var
        vec = in_layer(quotient.expr.get(col, {col: 1}))
        vec = _layer_normal(vec, None, orders, power_rows)
        return tuple(sorted(vec.items()))

    var_col = {v: n for n, v in enumerate(variables)}
    conj = [dict(d) for d in pc.conj] + [dict() for _ in quotient.survivors]
    powers = dict(pc.powers)
    images = list(pc.images)
    for var, col in var_col.items():
        vec = in_layer(quotient.expr.get(col, {col: 1}) if col not in new_ids else {col: 1})
        vec = _layer_normal(vec, None, orders, power_rows)
        tw = tuple(sorted(vec.items()))
        if not tw:
            continue
        kind = var[0]
        if kind == "comm":
            _, j, i = var
            conj[i][j] = tuple(pc.conj[i].get(j, ())) + tw
        elif kind == "power":
            powers[var[1]] = tuple(pc.powers.get(var[1], ())) + tw
        else:
            images[var[1]] = tuple(pc.images[var[1]]) + tw
    for g, row in power_rows.items():
        powers[g] = tuple(sorted(row.items()))
    definitions = list(pc.definitions) + [variables[col] for col in quotient.survivors]
    return PcPresentation(weights, orders, conj, powers, images, definitions, c + 1)


def nq_step(pc: PcPresentation, relators, n_free: int, need_expressions: bool = True):
    variables, rows = tail_system(pc, relators, n_free)
    pref = [_preference(v) for v in variables]
    quotient = solve(rows, len(variables), preference=lambda col: pref[col],
                     need_expressions=need_expressions)
    return variables, quotient


def nilpotent_quotient(pres, c: int, progress=None) -> NQResult:
    """Consistent pc presentation of ``G / gamma_{c+1}(G)`` and the invariants of gr_1..gr_c."""
    if c < 1:
        raise ValueError("class must be at least 1")
    n_free = pres.n_generators
    relators = [r for r in pres.relators if r]
    pc = trivial_presentation(n_free)
    quotients = []
    timings = []
    for k in range(1, c + 1):
        t0 = time.perf_counter()
        variables, quotient = nq_step(pc, relators, n_free)
        pc = extend(pc, variables, quotient)
        quotients.append(quotient.invariants)
        timings.append(time.perf_counter() - t0)
        log.info("gr_%d = %s (%.1fs)", k, quotient.invariants, timings[-1])
        if progress is not None:
            progress(k, quotient.invariants, timings[-1])
        if quotient.invariants.rank == 0 and not quotient.invariants.torsion:
            # lower central series has stabilised
            for _ in range(k + 1, c + 1):
                quotients.append(AbelianInvariants(0))
                timings.append(0.0)
            pc.nclass = c
            break
    return NQResult(pc, quotients, timings)
