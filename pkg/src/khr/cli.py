"""Command-line interface.

Subcommands: ``homfly`` (normalized invariant and raw trace of a braid
closure), ``rouquier`` (minimized Rouquier complex, per-degree object lists),
``hhh`` (triply graded homology table with the Euler-characteristic
cross-check), ``verify`` (the built-in verification suites).

The internal-degree truncation is taken from ``--max-degree`` if given, else
the ``KHR_MAX_DEGREE`` environment variable, else 12.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from typing import Optional

from khr import hecke
from khr.braids import BraidWord, parse_braid_word
from khr.complexes import minimize, rouquier_complex
from khr.hochschild import euler_bridge_check, hhh, max_degree_default
from khr.verify import SUITES, verify_all


def _rank_string(degrees) -> str:
    ctr = Counter(degrees)
    bits = []
    for d in sorted(ctr):
        c = ctr[d]
        if d == 0:
            bits.append(str(c))
        else:
            power = "v" if d == 1 else f"v^{d}"
            bits.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(bits) if bits else "0"


def _emit(payload, fmt: str, csv_rows=None, text: str = ""):
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        for row in csv_rows or []:
            writer.writerow(row)
        sys.stdout.write(out.getvalue())
    else:
        print(text)


def _parse(args) -> BraidWord:
    return parse_braid_word(args.braid, args.n)


def cmd_homfly(args) -> int:
    b = _parse(args)
    tr = hecke.ocneanu_trace(hecke.braid_to_hecke(b))
    normalized = hecke.homfly(b)
    trace_dict = {
        f"a^{k}": str(tr.a_coefficient(k))
        for k in tr.a_support()
        if not tr.a_coefficient(k).is_zero()
    }
    norm_dict = {
        f"a^{k}": str(normalized.a_coefficient(k))
        for k in normalized.a_support()
        if not normalized.a_coefficient(k).is_zero()
    }
    payload = {"trace": trace_dict, "normalized": norm_dict}
    rows = [("kind", "a_power", "coefficient")]
    rows += [("trace", k, v) for k, v in trace_dict.items()]
    rows += [("normalized", k, v) for k, v in norm_dict.items()]
    _emit(
        payload,
        args.format,
        rows,
        f"trace      = {tr}\nnormalized = {normalized}",
    )
    return 0


def cmd_rouquier(args) -> int:
    b = _parse(args)
    cx = rouquier_complex(b)
    if args.minimize:
        cx = minimize(cx)
    degrees = []
    for i in sorted(cx.levels):
        degrees.append(
            {
                "degree": i,
                "objects": [
                    {
                        "label": m.label,
                        "shift": m.shift,
                        "rank": _rank_string(m.degrees),
                    }
                    for m in cx.levels[i]
                ],
            }
        )
    rows = [("degree", "label", "shift", "rank")]
    lines = []
    for entry in degrees:
        for obj in entry["objects"]:
            rows.append((entry["degree"], obj["label"], obj["shift"], obj["rank"]))
        objs = " + ".join(
            f"{o['label']}({o['shift']})" for o in entry["objects"]
        )
        lines.append(f"[{entry['degree']}] {objs}")
    _emit(degrees, args.format, rows, "\n".join(lines))
    return 0


def cmd_hhh(args) -> int:
    b = _parse(args)
    d = args.max_degree if args.max_degree is not None else max_degree_default()
    table = hhh(b, d)
    match = euler_bridge_check(b, d)
    payload = {
        "truncation": d,
        "entries": [
            {"k": k, "i": i, "j": j, "dim": dim}
            for (k, i, j), dim in table.nonzero()
        ],
        "euler_check": {"match": match, "order": d},
    }
    rows = [("k", "i", "j", "dim")]
    rows += [(k, i, j, dim) for (k, i, j), dim in table.nonzero()]
    _emit(payload, args.format, rows, f"{table}\neuler check: {match}")
    return 0


def cmd_verify(args) -> int:
    suites = None if args.suite in (None, "all") else (args.suite,)
    report = verify_all(
        max_degree=args.max_degree, skip=tuple(args.skip), suites=suites
    )
    rows = [("name", "passed", "seconds", "detail")]
    rows += [
        (c["name"], c["passed"], f"{c['seconds']:.2f}", c["detail"])
        for c in report["checks"]
    ]
    lines = [
        f"{c['name']:32s} {'PASS' if c['passed'] else 'FAIL'}"
        + (f"  ({c['detail']})" if c["detail"] else "")
        for c in report["checks"]
    ]
    lines.append("all passed" if report["passed"] else "FAILURES")
    _emit(report, args.format, rows, "\n".join(lines))
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khr",
        description="Triply graded link homology of braid closures, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, braid=True):
        if braid:
            p.add_argument("--n", type=int, required=True, help="strand count")
            p.add_argument(
                "--braid",
                required=True,
                help="braid word: signed generator indices, e.g. '1 1 1'",
            )
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text"
        )

    p = sub.add_parser("homfly", help="normalized invariant and raw trace")
    common(p)
    p.set_defaults(func=cmd_homfly)

    p = sub.add_parser("rouquier", help="minimized Rouquier complex")
    common(p)
    p.add_argument(
        "--minimize",
        action="store_true",
        help="strip contractible summands before printing",
    )
    p.set_defaults(func=cmd_rouquier)

    p = sub.add_parser("hhh", help="triply graded homology table")
    common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_hhh)

    p = sub.add_parser("verify", help="run the verification suites")
    common(p, braid=False)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument(
        "--skip", action="append", default=[], choices=list(SUITES)
    )
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
