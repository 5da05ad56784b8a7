"""Command-line interface: enumeration, catalog checks, modular scans,
Groebner certificates and form queries, with text or JSON reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import catalog as catalog_mod
from . import forms, groebner, modular
from .enumeration import enumerate_minimal_coverings, raw_solutions
from .mat2 import parse_mat2

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _workers(args) -> int:
    env = os.environ.get("LATTICE_COVER_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, args.threads)


def _emit(args, payload: dict, lines) -> None:
    if args.format == "json":
        payload = {"timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"), **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_enumerate(args) -> int:
    workers = _workers(args)
    lines = []
    payload: dict = {"command": "enumerate", "slots": args.slots}
    if args.slots != 6:
        print("only the six-slot search is supported", file=sys.stderr)
        return 2
    if args.raw_count:
        raw = len(raw_solutions(workers=workers))
        payload["raw_count"] = raw
        lines.append(f"raw solutions: {raw}")
    cat = catalog_mod.generate_catalog(workers=workers)
    payload["minimal_count"] = len(cat.entries)
    payload["counts_by_length"] = {
        str(k): len(cat.by_length(k)) for k in (3, 4, 5, 6)
    }
    lines.append(f"minimal coverings: {len(cat.entries)}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(catalog_mod.serialize(cat))
        payload["out"] = args.out
        lines.append(f"catalog written to {args.out}")
    _emit(args, payload, lines)
    return 0


def _cmd_verify_catalog(args) -> int:
    if args.infile:
        with open(args.infile) as fh:
            cat = catalog_mod.parse(fh.read())
    else:
        cat = catalog_mod.generate_catalog(workers=_workers(args))
    results = catalog_mod.verify_catalog(cat)
    payload = {
        "command": "verify-catalog",
        "checks": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
        "ok": all(r.ok for r in results),
    }
    lines = [
        f"{'PASS' if r.ok else 'FAIL'} {r.name}" + (f"  ({r.detail})" if r.detail else "")
        for r in results
    ]
    _emit(args, payload, lines)
    return 0 if payload["ok"] else 1


def _modular_reports(modulus):
    if modulus is None:
        return modular.run_all_scans()
    if modulus in (3, 4, 5):
        reports = [modular.scan_pair_classes(modulus)]
        if modulus == 3:
            reports.append(modular.scan_first_coefficient_vanishing())
        return reports
    if modulus == 9:
        return [
            *(modular.scan_lifted_classes(r) for r in modular.BAD_TUPLE_REPS),
            modular.scan_quadratic_forms_mod9(),
        ]
    raise ValueError("modulus must be one of 3, 4, 5, 9")


def _cmd_verify_modular(args) -> int:
    try:
        reports = _modular_reports(args.modulus)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    payload = {
        "command": "verify-modular",
        "reports": [r.to_dict() for r in reports],
        "ok": all(r.ok for r in reports),
    }
    lines = []
    for r in reports:
        tag = "PASS" if r.ok else "FAIL"
        ctx = f" {r.context}" if r.context else ""
        lines.append(f"{tag} {r.name} mod {r.modulus}{ctx}")
        for clause, ok in r.clauses.items():
            lines.append(f"     {'ok  ' if ok else 'FAIL'} {clause}")
    _emit(args, payload, lines)
    return 0 if payload["ok"] else 1


def _cmd_verify_groebner(args) -> int:
    verdicts = groebner.verify_all()
    payload = {
        "command": "verify-groebner",
        "verdicts": [v.to_dict() for v in verdicts],
        "ok": all(v.ok for v in verdicts),
    }
    lines = [
        f"{'PASS' if v.ok else 'FAIL'} {{{', '.join(v.elements)}}}: "
        f"3 in ideal = {v.contains_3}"
        + (f" extra={v.extra}" if v.extra else "")
        for v in verdicts
    ]
    _emit(args, payload, lines)
    return 0 if payload["ok"] else 1


def _parse_form(text: str) -> forms.BinaryForm:
    return forms.BinaryForm.of(*(p.strip() for p in text.split(",")))


def _cmd_form(args) -> int:
    if args.action == "check":
        f = _parse_form(args.coeffs)
        t = parse_mat2(args.conj)
        verdict = forms.extraordinary_by_C3(f, t, args.variant)
        payload = {
            "command": "form-check",
            "form": str(f),
            "extraordinary": verdict,
        }
        lines = [f"form: {f}", f"extraordinary: {verdict}"]
        _emit(args, payload, lines)
        return 0
    f = _parse_form(args.f)
    g = _parse_form(args.g)
    report = forms.cross_value_check(f, g, args.n, args.m)
    payload = {"command": "form-compare", **report.to_dict()}
    lines = [
        f"boxes: |x|,|y| <= {report.n} vs {report.m}",
        f"unmatched first-form values: {len(report.unmatched_f)}",
        f"unmatched second-form values: {len(report.unmatched_g)}",
        f"{'PASS' if report.ok else 'MISMATCH'}",
    ]
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def _cmd_verify_all(args) -> int:
    failures = []

    cat = catalog_mod.generate_catalog(workers=_workers(args))
    for r in catalog_mod.verify_catalog(cat):
        print(f"{'PASS' if r.ok else 'FAIL'} catalog/{r.name}")
        if not r.ok:
            failures.append(f"catalog/{r.name}")

    for r in modular.run_all_scans():
        print(f"{'PASS' if r.ok else 'FAIL'} modular/{r.name}-mod-{r.modulus}")
        if not r.ok:
            failures.append(f"modular/{r.name}")

    for v in groebner.verify_all():
        name = "groebner/" + "-".join(v.elements)
        print(f"{'PASS' if v.ok else 'FAIL'} {name}")
        if not v.ok:
            failures.append(name)

    form_checks = [
        ("F0", forms.extraordinary_by_C3(
            forms.F0, parse_mat2("1,0;0,1"), "d3"), True),
        ("sextic-1-0", forms.extraordinary_by_C3(
            forms.sextic(1, 0), forms.SEXTIC_CONJUGATOR, "d6"), True),
        ("XY(X+3Y)", forms.extraordinary_by_C3(
            forms.BinaryForm.of(0, 1, 3, 0), parse_mat2("1/3,0;0,1"), "d3"),
         False),
    ]
    for name, got, want in form_checks:
        ok = got == want
        print(f"{'PASS' if ok else 'FAIL'} form/{name}")
        if not ok:
            failures.append(f"form/{name}")

    rep = forms.cross_value_check(forms.F0, forms.dagger(forms.F0), 10, 60)
    print(f"{'PASS' if rep.ok else 'FAIL'} form/value-sets-F0-vs-companion")
    if not rep.ok:
        failures.append("form/value-sets")

    if failures:
        print(f"{len(failures)} failure(s): {', '.join(failures)}")
        return 1
    print("all checks passed")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="latcover")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--threads", type=int, default=1, metavar="N",
        help="worker processes (env LATTICE_COVER_THREADS overrides)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate the minimal coverings")
    p.add_argument("--slots", type=int, default=6)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--raw-count", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-catalog", help="run the catalog checks")
    p.add_argument("--in", dest="infile", metavar="FILE")
    p.set_defaults(func=_cmd_verify_catalog)

    p = sub.add_parser("verify-modular", help="run the residue scans")
    p.add_argument("--modulus", type=int, choices=(3, 4, 5, 9))
    p.set_defaults(func=_cmd_verify_modular)

    p = sub.add_parser(
        "verify-groebner", help="run the ideal-membership certificates"
    )
    p.set_defaults(func=_cmd_verify_groebner)

    p = sub.add_parser("form", help="binary form queries")
    formsub = p.add_subparsers(dest="action", required=True)
    pc = formsub.add_parser("check")
    pc.add_argument("--coeffs", required=True)
    pc.add_argument("--conj", default="1,0;0,1")
    pc.add_argument("--variant", choices=("d3", "d6"), default="d3")
    pc.set_defaults(func=_cmd_form)
    pp = formsub.add_parser("compare")
    pp.add_argument("--f", required=True)
    pp.add_argument("--g", required=True)
    pp.add_argument("--n", type=int, default=10)
    pp.add_argument("--m", type=int, default=None)
    pp.set_defaults(func=_cmd_form)

    p = sub.add_parser("verify-all", help="run every verification")
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
