"""Reproduction pipeline: lattice, certificates, presentations and nilpotent
quotients for a pair of arrangements, with a deterministic report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import arrangement as arr_mod
from .arrangement import (ALIGNED_TRIPLE, CONIC_POINTS, REFERENCE_COMBINATORICS, TANGENT_LINES,
                          Arrangement, betti_numbers, build_lattice, check_combinatorics)
from .braids import braid_monodromy, zvk_presentation
from .exactgeom import collinear3, lines_tangent_common_conic, six_points_on_common_conic
from .nilq.lie import element_class_in_gr, lcs_formula_check
from .nilq.nq import nilpotent_quotient
from .presentations import FinitePresentation, randell_presentation
from .wiring import wiring_diagram

WITNESS = "[[[m1,m5],m2],m3]"

EXPECTED_LOW_RANKS = (12, 23, 76)
EXPECTED = {4: ("Z^211 + Z_2", "Z^211"), 5: ("Z^660 + Z_2", "Z^660")}


def histogram_text(hist: dict[int, int]) -> str:
    return ", ".join("%d×%d" % (count, mult) for mult, count in sorted(hist.items()))


def presentation_for(arr: Arrangement, method: str) -> tuple[FinitePresentation, object]:
    diag = wiring_diagram(arr)
    if method == "randell":
        return randell_presentation(diag), diag
    if method == "zvk":
        return zvk_presentation(braid_monodromy(diag)), diag
    raise ValueError("unknown method %r" % method)


def lattice_section(arr: Arrangement) -> dict:
    lat = build_lattice(arr)
    return {
        "lines": len(arr),
        "histogram": {str(k): v for k, v in lat.histogram().items()},
        "histogram_text": histogram_text(lat.histogram()),
        "betti": list(betti_numbers(lat)),
        "matches_reference_combinatorics": check_combinatorics(lat, REFERENCE_COMBINATORICS),
    }


def certificates(arr: Arrangement) -> dict:
    lat = build_lattice(arr)
    aligned = collinear3(*(lat.point(*t) for t in ALIGNED_TRIPLE))
    conic = six_points_on_common_conic([lat.point(*t) for t in CONIC_POINTS])
    tangent = lines_tangent_common_conic([arr.line(k) for k in TANGENT_LINES])
    return {"alignment": aligned, "points_on_conic": conic, "lines_tangent_to_conic": tangent}


@dataclass
class Side:
    name: str
    arr: Arrangement
    section: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)


def analyse(name: str, nclass: int, method: str = "randell") -> Side:
    arr = arr_mod.load(name)
    side = Side(name, arr)
    sec = side.section
    sec["id"] = name
    sec["lattice"] = lattice_section(arr)
    sec["certificates"] = certificates(arr)
    t0 = time.perf_counter()
    pres, diag = presentation_for(arr, method)
    sec["sweep"] = {"shear": str(diag.shear), "base_abscissa": str(diag.base_x),
                    "events": len(diag.events), "infinity": arr.infinity}
    sec["presentation"] = {"method": method, "generators": pres.n_generators,
                           "relators": len(pres.relators)}
    side.timings["presentation"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    res = nilpotent_quotient(pres, nclass)
    side.timings["nq"] = time.perf_counter() - t0
    sec["quotients"] = [str(q) for q in res.quotients]
    sec["ranks"] = res.ranks
    if nclass >= 4:
        trivial, order = element_class_in_gr(pres, WITNESS, 4, pc=res.pc)
        sec["witness"] = {"word": WITNESS, "k": 4, "is_identity": trivial, "order": order}
    holds, degree = lcs_formula_check(res.ranks, sec["lattice"]["betti"], nclass)
    sec["lcs_formula"] = {"order": nclass, "holds": holds, "first_failing_degree": degree}
    return side


def verify(plus: str = "A+", minus: str = "A-", nclass: int = 4) -> dict:
    """Run both pipelines and evaluate the claims in a fixed order."""
    if nclass < 4:
        raise ValueError("verification needs class at least 4")
    p = analyse(plus, nclass)
    m = analyse(minus, nclass)
    P, M = p.section, m.section
    claims = []

    def claim(name, ok, detail=""):
        claims.append({"claim": name, "verdict": "PASS" if ok else "FAIL", "detail": detail})

    claim("combinatorics match",
          P["lattice"]["matches_reference_combinatorics"]
          and M["lattice"]["matches_reference_combinatorics"],
          "%s / %s" % (P["lattice"]["histogram_text"], M["lattice"]["histogram_text"]))
    low = [P["quotients"][:3], M["quotients"][:3]]
    want_low = ["Z^%d" % r for r in EXPECTED_LOW_RANKS]
    claim("gr_1..gr_3 free of ranks 12, 23, 76", low == [want_low, want_low])
    claim("quotients differ", P["quotients"][nclass - 1] != M["quotients"][nclass - 1],
          "gr_%d: %s vs %s" % (nclass, P["quotients"][nclass - 1], M["quotients"][nclass - 1]))
    for k in sorted(EXPECTED):
        if k <= nclass:
            got = (P["quotients"][k - 1], M["quotients"][k - 1])
            claim("gr_%d invariants" % k, got == EXPECTED[k], "%s vs %s" % got)
    claim("torsion witness order 2 / trivial",
          P["witness"]["order"] == 2 and M["witness"]["is_identity"],
          "orders %d / %d" % (P["witness"]["order"], M["witness"]["order"]))
    claim("certificates split",
          all(P["certificates"].values()) and not any(M["certificates"].values()),
          "%s / %s" % (P["certificates"], M["certificates"]))
    claim("LCS formula fails",
          not P["lcs_formula"]["holds"] and not M["lcs_formula"]["holds"],
          "first failing degrees %s / %s" % (P["lcs_formula"]["first_failing_degree"],
                                            M["lcs_formula"]["first_failing_degree"]))
    failed = [c["claim"] for c in claims if c["verdict"] == "FAIL"]
    return {
        "class": nclass,
        "arrangements": [P, M],
        "claims": claims,
        "verdict": "FAIL" if failed else "PASS",
        "first_failure": failed[0] if failed else None,
        "timings": {plus: p.timings, minus: m.timings},
    }


def dumps_report(report: dict, timings: bool = False) -> str:
    if not timings:
        report = {k: v for k, v in report.items() if k != "timings"}
    return json.dumps(report, indent=2, default=_jsonable) + "\n"


def _jsonable(x):
    return round(x, 3) if isinstance(x, float) else str(x)
