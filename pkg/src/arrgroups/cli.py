"""Command-line interface: ``arrgroups lattice|present|nq|verify-paper|render``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import arrangement as arr_mod
from .harness import dumps_report, lattice_section, presentation_for, verify
from .nilq.lie import dumps_document, result_document
from .nilq.nq import nilpotent_quotient
from .render import render_svg

OK, FAILED, USAGE, IO = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(name: str):
    try:
        return arr_mod.load(name)
    except OSError as exc:
        raise CliError(IO, "cannot read %s: %s" % (name, exc.strerror or exc))
    except (arr_mod.ArrangementFormatError, ValueError) as exc:
        raise CliError(USAGE, "cannot parse %s: %s" % (name, exc))


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(IO, "cannot write %s: %s" % (path, exc.strerror or exc))


def _positive_class(text: str) -> int:
    try:
        c = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("class must be an integer")
    if c < 1:
        raise argparse.ArgumentTypeError("class must be at least 1")
    return c


def cmd_lattice(args) -> int:
    arr = _load(args.input)
    sec = lattice_section(arr)
    print("lines: %d" % sec["lines"])
    print("histogram: %s" % sec["histogram_text"])
    print("betti: %s" % ", ".join(map(str, sec["betti"])))
    print("reference combinatorics: %s" % ("match" if sec["matches_reference_combinatorics"]
                                          else "no match"))
    if args.report:
        _write(args.report, json.dumps({"input": args.input, "lattice": sec}, indent=2) + "\n")
    return OK


def cmd_present(args) -> int:
    arr = _load(args.input)
    pres, diag = presentation_for(arr, args.method)
    text = pres.dumps()
    if args.output:
        _write(args.output, text)
        print("%d generators, %d relators (shear %s, base abscissa %s)"
              % (pres.n_generators, len(pres.relators), diag.shear, diag.base_x))
    else:
        sys.stdout.write(text)
    return OK


def cmd_nq(args) -> int:
    arr = _load(args.input)
    pres, diag = presentation_for(arr, args.method)
    res = nilpotent_quotient(pres, args.nclass)
    for k, q in enumerate(res.quotients, start=1):
        print("gr_%d = %s" % (k, q))
    if args.report:
        doc = {"input": args.input, "method": args.method,
               "shear": str(diag.shear), "base_abscissa": str(diag.base_x)}
        doc.update(result_document(pres, res, timing=args.timings))
        _write(args.report, dumps_document(doc) + "\n")
    return OK


def cmd_verify(args) -> int:
    for name in (args.plus, args.minus):
        _load(name)
    report = verify(args.plus, args.minus, args.nclass)
    for c in report["claims"]:
        print("%s  %s  %s" % (c["verdict"], c["claim"], c["detail"]))
    if report["verdict"] == "PASS":
        print("PASS")
    else:
        print("FAIL at %r" % report["first_failure"])
    if args.report:
        _write(args.report, dumps_report(report, timings=args.timings))
    return OK if report["verdict"] == "PASS" else FAILED


def cmd_render(args) -> int:
    arr = _load(args.input)
    _write(args.output, render_svg(arr, title=args.input))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arrgroups", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="log NQ progress")
    sub = ap.add_subparsers(dest="command", required=True)

    names = "builtin name (%s) or arrangement file" % ", ".join(arr_mod.BUILTIN_NAMES)
    p = sub.add_parser("lattice", help="multiplicity census of the intersection lattice")
    p.add_argument("input", help=names)
    p.add_argument("--report")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("present", help="finite presentation of the complement group")
    p.add_argument("input", help=names)
    p.add_argument("--method", choices=("randell", "zvk"), default="randell")
    p.add_argument("--output")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("nq", help="lower central series quotients gr_1..gr_c")
    p.add_argument("input", help=names)
    p.add_argument("--class", dest="nclass", type=_positive_class, default=3)
    p.add_argument("--method", choices=("randell", "zvk"), default="randell")
    p.add_argument("--report")
    p.add_argument("--timings", action="store_true", help="include timings in the report")
    p.set_defaults(func=cmd_nq)

    p = sub.add_parser("verify-paper", help="reproduce the separation of the A+/A- pair")
    p.add_argument("--class", dest="nclass", type=int, choices=(4, 5), default=4)
    p.add_argument("--plus", default="A+")
    p.add_argument("--minus", default="A-")
    p.add_argument("--report")
    p.add_argument("--timings", action="store_true", help="include timings in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="SVG picture of the real arrangement")
    p.add_argument("input", help=names)
    p.add_argument("output")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
