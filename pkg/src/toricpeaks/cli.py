"""Command-line surface: statistics, expansions, extensions, enumerations,
order polynomials, series and the verification suites.

All output is deterministic; structured data is JSON, tables are TSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dag as dagmod
from . import enriched, orderpoly, permstat, qsym, verify
from .setcomp import phi, psi


def parse_word(text: str) -> tuple[int, ...]:
    """A word given either as digits ("3124") or comma-separated ("3,1,2,4")."""
    try:
        if "," in text:
            word = tuple(int(x) for x in text.split(","))
        else:
            word = tuple(int(c) for c in text)
        return permstat.check_word(word)
    except ValueError as exc:
        raise SystemExit(f"cannot parse word {text!r}: {exc}")


def parse_subset(text: str) -> frozenset[int]:
    """A subset given comma-separated; "-" or "" denote the empty set."""
    if text in ("-", ""):
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SystemExit(f"cannot parse subset {text!r}: {exc}")


def load_dag(args) -> dagmod.Dag:
    if getattr(args, "dag", None):
        path = Path(args.dag)
        payload = path.read_text() if path.exists() else args.dag
        try:
            return dagmod.Dag.from_json(payload)
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            raise SystemExit(f"cannot read DAG from {args.dag!r}: {exc}")
    if getattr(args, "word", None):
        return dagmod.Dag.from_word(parse_word(args.word))
    raise SystemExit("provide a word or --dag")


def emit(data) -> None:
    print(json.dumps(data, sort_keys=True))


def cmd_stats(args) -> int:
    w = parse_word(args.word)
    data = {
        "word": list(w),
        "des": sorted(permstat.des_set(w)),
        "peak": sorted(permstat.peak_set(w)),
        "cdes": sorted(permstat.cdes_set(w)),
        "cpeak": sorted(permstat.cpeak_set(w)),
        "composition_des": list(phi(permstat.des_set(w), len(w))),
        "canonical_rotation": list(permstat.canonical_rotation(w)),
    }
    if len(w) >= 1:
        for stat in ("cdes", "cpeak"):
            multiset = permstat.cyclic_stat_multiset(w, stat)
            data[f"{stat}_multiset"] = [
                {"set": sorted(S), "mult": c}
                for S, c in sorted(multiset.items(), key=lambda kv: sorted(kv[0]))
            ]
    if permstat.cdes_set(w):
        data["composition_cdes"] = list(psi(permstat.cdes_set(w), len(w)))
    emit(data)
    return 0


def cmd_expand(args) -> int:
    kind = args.kind
    try:
        if kind in ("M", "F"):
            n, E = args.n, parse_subset(args.set)
            elem = qsym.monomial(n, E) if kind == "M" else qsym.fundamental(n, E)
            print(elem.to_json(basis=args.basis))
        elif kind == "Mcyc":
            print(qsym.cyclic_monomial(args.n, parse_subset(args.set)).to_json())
        elif kind == "Fcyc":
            elem = qsym.cyclic_fundamental(args.n, parse_subset(args.set))
            if args.basis == "M":
                print(elem.as_qsym().to_json(basis="M"))
            else:
                print(elem.to_json())
        elif kind == "K":
            elem = enriched.k_peak(parse_subset(args.set), args.n)
            print(elem.to_json(basis=args.basis))
        elif kind == "Kcyc":
            print(enriched.kcyc(parse_subset(args.set), args.n).to_json())
        elif kind == "delta":
            elem = enriched.delta_dag(load_dag(args))
            print(elem.to_json(basis=args.basis))
        elif kind == "delta-cyc":
            tc = dagmod.toric_class(load_dag(args))
            print(enriched.delta_toric(tc).to_json())
        else:
            raise SystemExit(f"unknown expansion kind {kind!r}")
    except ValueError as exc:
        raise SystemExit(str(exc))
    return 0


def cmd_extensions(args) -> int:
    d = load_dag(args)
    if args.kind == "linear":
        words = dagmod.linear_extensions(d)
    else:
        words = dagmod.toric_extensions(d)
    emit({"kind": args.kind, "extensions": [list(w) for w in words]})
    return 0


def cmd_enumerate(args) -> int:
    if args.what == "enriched":
        d = load_dag(args)
        if args.toric:
            frozen = sorted(
                enriched.enumerate_enriched_toric(dagmod.toric_class(d), args.m),
                key=sorted,
            )
            rows = [dict(sorted(f)) for f in frozen]
        else:
            rows = [f for f in enriched.enumerate_enriched(d, args.m)]
        if args.ndjson:
            for f in rows:
                print(enriched.assignment_to_json(f))
        else:
            emit({"count": len(rows), "assignments": [
                {str(k): v for k, v in sorted(f.items())} for f in rows
            ]})
    else:
        w = parse_word(args.word)
        marks = orderpoly.enumerate_markings(w, args.m)
        rows = [
            {"bars": list(mk.bars), "marked": sorted(mk.marked)} for mk in marks
        ]
        if args.ndjson:
            for row in rows:
                print(json.dumps(row, sort_keys=True))
        else:
            emit({"count": len(rows), "markings": rows})
    return 0


def cmd_order_poly(args) -> int:
    w = parse_word(args.word)
    print("m\tomega\tomega_cyc")
    for m in range(0, args.m + 1):
        print(f"{m}\t{orderpoly.omega(w, m)}\t{orderpoly.omega_cyc(w, m)}")
    return 0


def cmd_series(args) -> int:
    w = parse_word(args.word)
    emit(
        {
            "word": list(w),
            "order": args.order,
            "omega": orderpoly.gf_omega(w, args.order),
            "omega_cyc": orderpoly.gf_omega_cyc(w, args.order),
        }
    )
    return 0


def cmd_table(args) -> int:
    rows = []
    for key in sorted(verify.TABLE1, key=lambda S: (len(S), sorted(S))):
        rows.append(
            {
                "class": sorted(key),
                "composition": list(psi(key, 4)),
                "expansion": json.loads(qsym.cyclic_monomial_as_qsym(4, key).to_json()),
            }
        )
    emit({"degree": 4, "rows": rows})
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.n is not None:
        kwargs["max_n"] = args.n
    if args.m is not None:
        kwargs["max_m"] = args.m
    try:
        report = verify.run_suite(args.suite, **kwargs)
    except KeyError as exc:
        raise SystemExit(str(exc))
    reports = report.get("reports", [report])
    for rep in reports:
        for check in rep["checks"]:
            status = "PASS" if check["pass"] else "FAIL"
            detail = f"  [{check['detail']}]" if check["detail"] and not check["pass"] else ""
            print(f"{status}  {rep['suite']}: {check['name']}{detail}")
    print("OK" if report["pass"] else "FAILED")
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="toricpeaks",
        description="Exact combinatorics of enriched partitions on DAGs and toric classes.",
    )
    p.add_argument("--parallel", type=int, default=1, help="accepted for compatibility; output is identical")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stats", help="descent and peak statistics of a word")
    sp.add_argument("word")
    sp.set_defaults(fn=cmd_stats)

    sp = sub.add_parser("expand", help="expand an element in a chosen basis")
    sp.add_argument("kind", choices=["M", "F", "Mcyc", "Fcyc", "K", "Kcyc", "delta", "delta-cyc"])
    sp.add_argument("n", nargs="?", type=int)
    sp.add_argument("set", nargs="?", default="")
    sp.add_argument("--basis", choices=["M", "F", "Mcyc"], default="M")
    sp.add_argument("--dag", help="DAG as a JSON file path or inline JSON")
    sp.add_argument("--word", help="total order given as a word")
    sp.set_defaults(fn=cmd_expand)

    sp = sub.add_parser("extensions", help="linear or toric extensions of a DAG")
    sp.add_argument("kind", choices=["linear", "toric"])
    sp.add_argument("--dag")
    sp.add_argument("--word")
    sp.set_defaults(fn=cmd_extensions)

    sp = sub.add_parser("enumerate", help="enriched partitions or markings")
    sp.add_argument("what", choices=["enriched", "markings"])
    sp.add_argument("--dag")
    sp.add_argument("--word")
    sp.add_argument("--m", type=int, required=True, help="bound on absolute values")
    sp.add_argument("--toric", action="store_true", help="enumerate over the toric class")
    sp.add_argument("--ndjson", action="store_true", help="stream one JSON object per line")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("order-poly", help="order polynomial table as TSV")
    sp.add_argument("word")
    sp.add_argument("--m", type=int, default=6)
    sp.set_defaults(fn=cmd_order_poly)

    sp = sub.add_parser("series", help="generating function coefficients as JSON")
    sp.add_argument("word")
    sp.add_argument("--order", type=int, default=10)
    sp.set_defaults(fn=cmd_series)

    sp = sub.add_parser("table", help="degree-4 cyclic monomial expansions")
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help="suite name or 'all'")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
