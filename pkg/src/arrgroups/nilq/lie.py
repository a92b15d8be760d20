"""Queries on the graded quotients gr_k = gamma_k / gamma_{k+1}."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Sequence

from sympy import mobius

from .. import words
from .nq import DepthError, NQResult, nilpotent_quotient
from .pc import PcPresentation
from .snf import element_order


@dataclass(frozen=True)
class GrClass:
    is_identity: bool
    order: int  # 0 means infinite
    coordinates: tuple[int, ...]  # on the weight-k pc generators


def gr_class(pc: PcPresentation, w, k: int) -> GrClass:
    """Image in gr_k of a bracket (or word) of depth >= k, using a pc of class >= k."""
    if words.bracket_depth(w) < k:
        raise DepthError("expected an iterated commutator of depth >= %d" % k)
    if pc.nclass < k:
        raise ValueError("pc presentation has class %d < %d" % (pc.nclass, k))
    v = pc.evaluate(words.bracket_word(w))
    low = [g for g, e in enumerate(v) if e and pc.weights[g] < k]
    assert not low, "commutator of depth %d has weight < %d components" % (k, k)
    gens, rows = pc.layer_relations(k)
    vec = [v[g] for g in gens]
    order = element_order(rows, len(gens), vec) if gens else 1
    return GrClass(order == 1, order, tuple(vec))


def element_class_in_gr(pres, w, k: int, pc: PcPresentation | None = None) -> tuple[bool, int]:
    """``(is_identity, order)`` of w in gr_k(G); ``w`` is a Bracket, or text
    such as ``"[[[m1,m5],m2],m3]"`` in the generator names of ``pres``."""
    if isinstance(w, str):
        w = words.parse_bracket(w, pres.generators)
    if words.bracket_depth(w) < k:
        raise DepthError("expected an iterated commutator of depth >= %d" % k)
    if pc is None:
        pc = nilpotent_quotient(pres, k).pc
    r = gr_class(pc, w, k)
    return r.is_identity, r.order


def witt_ranks(n: int, c: int) -> list[int]:
    """Ranks of gr_k of the free group of rank n, k = 1..c."""
    out = []
    for k in range(1, c + 1):
        s = sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
        out.append(s // k)
    return out


def _series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def lcs_product(phis: Sequence[int], order: int) -> list[int]:
    """Coefficients of prod_{k<=order} (1 - t^k)^phi_k up to t^order."""
    acc = [1] + [0] * order
    for k, phi in enumerate(phis[:order], start=1):
        # (1 - t^k)^phi = sum_i binom(phi, i) (-1)^i t^{ki}
        factor = [0] * (order + 1)
        binom = 1
        for i in range(0, order // k + 1):
            factor[k * i] = (-1) ** i * binom
            binom = binom * (phi - i) // (i + 1)
        acc = _series_mul(acc, factor, order)
    return acc


def lcs_formula_check(phis: Sequence[int], betti: Sequence[int], order: int):
    """Compare the LCS product with ``P(-t)`` to degree ``order``.

    Returns ``(holds, first_failing_degree)``; the degree is None when it holds.
    """
    if len(phis) < order:
        raise ValueError("need phi_k for k <= %d" % order)
    lhs = lcs_product(phis, order)
    rhs = [(-1) ** i * b for i, b in enumerate(betti)][: order + 1]
    rhs += [0] * (order + 1 - len(rhs))
    for d in range(order + 1):
        if lhs[d] != rhs[d]:
            return False, d
    return True, None


def input_hash(pres) -> str:
    return hashlib.sha256(pres.dumps().encode()).hexdigest()


def result_document(pres, result: NQResult, timing: bool = True) -> dict:
    """Machine-readable summary of a run; field order is fixed."""
    doc = {
        "input_sha256": input_hash(pres),
        "generators": pres.n_generators,
        "relators": len(pres.relators),
        "class": len(result.quotients),
        "quotients": [],
    }
    for k, q in enumerate(result.quotients, start=1):
        entry = {"k": k, "rank": q.rank, "torsion": list(q.torsion),
                 "primary": list(q.primary()), "text": str(q)}
        if timing and k <= len(result.timings):
            entry["seconds"] = round(result.timings[k - 1], 3)
        doc["quotients"].append(entry)
    return doc


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2)
