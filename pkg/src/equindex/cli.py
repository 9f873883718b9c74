"""Command-line interface: ``equindex {stiefel,scan,tower,sq}``.

Exit codes: 0 success, 1 internal invariant violation, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import survey
from .errors import InternalConsistencyError, ParameterError
from .steenrod import TruncatedPolyRing, format_class, sq
from .stiefel import StiefelParams, nontidy_certificate
from .tower import build_tower, tower_cindex

FORMATS = ("human", "json", "csv")


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("EQUINDEX_NO_COLOR") or not stream.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _human_stiefel(cert) -> str:
    l, k = cert.params.l, cert.params.k
    fam = cert.family
    label = _color(cert.certification, "1;32" if cert.non_tidy else "2", sys.stdout)
    lines = [
        f"V({l},{k}) with the antipodal C_2-action",
        f"  N                 {cert.N}",
        f"  index ideal       <u^{cert.N}>",
        f"  cindex            {cert.cindex}",
        f"  coind bounds      [{cert.coind_lower}, {cert.coind_upper}]",
        f"  family            s={fam.s} alpha={fam.alpha if fam.in_family else 'none'} in_family={str(fam.in_family).lower()}",
        f"  case              {cert.case_flag}",
    ]
    if cert.sq_degree is not None:
        top, d, parity = cert.binom_witness
        lines.append(f"  obstruction       Sq^{d}(u^{top}) = u^{top + d} in RP^{l - 1}")
        lines.append(f"  binomial witness  C({top},{d}) = {parity} mod 2; {top + d} <= {cert.range_witness[1]}")
    else:
        lines.append("  obstruction       none found")
    lines.append(f"  certification     {label}")
    lines.append(f"  ind > {cert.cindex}: provenance {cert.ind_provenance}")
    return "\n".join(lines) + "\n"


def _human_tower(report) -> str:
    k, p = report.k, report.p
    fields = [
        (f"ht(z{k})", report.ht_z),
        (f"ht(e{k} z{k})", report.ht_ez),
        ("index ideal", report.index_ideal),
        ("cindex (exact)", report.cindex_exact),
        ("paper lower bound", report.paper_lower),
        ("paper alternatives", " or ".join(map(str, report.paper_alternatives))),
        ("coind", f"{report.coind} ({report.coind_provenance})"),
        ("bockstein", f"e{k} -> z{k} (annotation only)"),
    ]
    lines = [f"X({k}) with free C_{p}-action"]
    lines += [f"  {label:<19} {value}" for label, value in fields]
    return "\n".join(lines) + "\n"


def _tower_elements(k: int, p: int) -> dict[str, str]:
    level = build_tower(k, p)
    out = {}
    for n in range(1, k + 4):
        out[f"z{k}^{n}"] = (level.z ** n).to_text()
    for n in range(0, k + 4):
        out[f"e{k}*z{k}^{n}"] = (level.e * level.z ** n).to_text()
    return out


def cmd_stiefel(args) -> int:
    cert = nontidy_certificate(StiefelParams(args.l, args.k))
    row = survey.certificate_row(cert)
    if args.format == "json":
        _emit(json.dumps(survey.json_object(row), indent=2) + "\n")
    elif args.format == "csv":
        _emit(survey.to_csv([row], survey.STIEFEL))
    else:
        _emit(_human_stiefel(cert))
    return 0


def cmd_scan(args) -> int:
    rows = survey.scan(args.l_max, args.k_max, args.filter, jobs=args.jobs)
    if args.format == "json":
        text = survey.to_json(rows)
    elif args.format == "csv":
        text = survey.to_csv(rows, survey.STIEFEL)
    else:
        text = survey.to_table(rows, survey.STIEFEL)
    if args.out is None:
        _emit(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParameterError(f"cannot write {args.out}: {exc.strerror}") from exc
    _emit(f"{len(rows)} rows written to {args.out}\n")
    return 0


def cmd_tower(args) -> int:
    report = tower_cindex(args.k, args.p)
    fmt = "json" if args.json else args.format
    if fmt == "json":
        obj = survey.json_object(survey.tower_row(report))
        if args.show_element:
            obj["elements"] = _tower_elements(args.k, args.p)
        _emit(json.dumps(obj, indent=2) + "\n")
    elif fmt == "csv":
        _emit(survey.to_csv([survey.tower_row(report)], survey.TOWER))
    else:
        _emit(_human_tower(report))
        if args.show_element:
            for name, text in _tower_elements(args.k, args.p).items():
                _emit(f"  {name} = {text}\n")
    return 0


def cmd_sq(args) -> int:
    for name in ("k", "m"):
        if getattr(args, name) < 0:
            raise ParameterError(f"--{name} must be non-negative")
    _emit(format_class(sq(args.k, args.m, TruncatedPolyRing(args.trunc))) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stiefel", help="indices and non-tidiness certificate for V(l,k)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="human")
    p.set_defaults(func=cmd_stiefel)

    p = sub.add_parser("scan", help="certificates over a parameter range")
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--filter", choices=survey.FILTERS, default="all")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=FORMATS, default="human")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("tower", help="heights and cohomological index of X(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="human")
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.add_argument("--show-element", action="store_true", help="print normal forms of z_k^n and e_k z_k^n")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("sq", help="Sq^k(u^m) in F_2[u]/(u^trunc)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.set_defaults(func=cmd_sq)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"equindex: error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"equindex: internal error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - exit-code contract
        print(f"equindex: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
