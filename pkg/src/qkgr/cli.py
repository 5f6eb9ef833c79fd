"""Command-line front end: products, verification sweeps, reduction traces.

Exit codes: 0 success, 1 verification failure or internal inconsistency,
2 usage errors (malformed flags or partitions).  The QKGR_TRUNC environment
variable overrides the default q-truncation when --trunc is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from .partitions import context, format_partition, parse_partition
from .qk_engine import product_basis, structure_constant
from .seidel import reduction_trace
from .verify import SUITE_NAMES, run_suite

USAGE_ERROR = 2
CHECK_ERROR = 1


def _trunc_from(args) -> int | None:
    if args.trunc is not None:
        return args.trunc
    env = os.environ.get("QKGR_TRUNC")
    return int(env) if env else None


def _parse_partition_arg(text: str, ctx):
    text = text.strip()
    if text.startswith("["):
        from .partitions import normalize

        return normalize(json.loads(text), ctx)
    return parse_partition(text, ctx)


def cmd_product(args) -> int:
    ctx = context(args.k, args.n, _trunc_from(args))
    lhs = _parse_partition_arg(args.lhs, ctx)
    rhs = _parse_partition_arg(args.rhs, ctx)
    result = product_basis(lhs, rhs, ctx)
    if args.json:
        print(result.to_json())
    elif args.csv:
        print("q,partition,coeff")
        for lam, d, c in result.sorted_terms():
            print(f"{d},{format_partition(lam)},{c}")
    else:
        print(f"O({format_partition(lhs)}) * O({format_partition(rhs)}) = {result}")
    return 0


def cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        args.k,
        args.n,
        trunc=_trunc_from(args),
        jobs=args.jobs,
        sample=args.sample,
        seed=args.seed,
    )
    if args.json:
        print(json.dumps(report, separators=(",", ":")))
    elif args.csv:
        print("suite,k,n,items,checks,failures,ok")
        print(
            "%s,%d,%d,%d,%d,%d,%s"
            % (
                report["suite"],
                report["k"],
                report["n"],
                report["items"],
                report["checks"],
                report["failures"],
                report["ok"],
            )
        )
    else:
        status = "pass" if report["ok"] else "FAIL"
        print(
            f"{report['suite']} on Gr({report['k']},{report['n']}): {status} "
            f"({report['checks']} checks over {report['items']} items)"
        )
        if report["first_failure"]:
            print(f"first failure: {report['first_failure']}")
    return 0 if report["ok"] else CHECK_ERROR


def cmd_reduce(args) -> int:
    ctx = context(args.k, args.n, _trunc_from(args))
    lam = _parse_partition_arg(args.lhs, ctx)
    mu = _parse_partition_arg(args.rhs, ctx)
    nu = _parse_partition_arg(args.nu, ctx)
    d = args.deg
    if not 0 <= d <= ctx.trunc:
        print(f"degree {d} outside 0..{ctx.trunc}", file=sys.stderr)
        return USAGE_ERROR
    steps = reduction_trace(lam, mu, nu, d, ctx)
    final = steps[-1] if steps else {"lhs": lam, "rhs": mu, "nu": nu, "deg": d}
    value = None
    if comb(args.n, args.k) <= 800:
        value = structure_constant(final["lhs"], final["rhs"], final["nu"], final["deg"], ctx)
    if args.json:
        out = {
            "steps": [
                {
                    "rule": s["rule"],
                    "lhs": list(s["lhs"]),
                    "rhs": list(s["rhs"]),
                    "nu": list(s["nu"]),
                    "deg": s["deg"],
                }
                for s in steps
            ],
            "final": {
                "lhs": list(final["lhs"]),
                "rhs": list(final["rhs"]),
                "nu": list(final["nu"]),
                "deg": final["deg"],
            },
            "value": value,
        }
        print(json.dumps(out, separators=(",", ":")))
        return 0
    if args.csv:
        print("rule,lhs,rhs,nu,deg")
        for s in steps:
            print(
                f"{s['rule']},{format_partition(s['lhs'])},{format_partition(s['rhs'])},"
                f"{format_partition(s['nu'])},{s['deg']}"
            )
        return 0
    if not steps:
        label = "already degree 0" if d == 0 else "no rule applies"
        print(label)
    for s in steps:
        print(
            f"{s['rule']}: N[{format_partition(s['lhs'])} ; {format_partition(s['rhs'])} -> "
            f"{format_partition(s['nu'])}, q^{s['deg']}]"
        )
    if value is not None:
        kind = "classical" if final["deg"] == 0 else f"degree-{final['deg']}"
        print(f"{kind} value: {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkgr",
        description="Exact quantum K-theory of Grassmannians: products, "
        "verification sweeps, and quantum-to-classical reduction traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-k", type=int, default=3, help="number of rows (default 3)")
        p.add_argument("-n", type=int, required=True, help="ambient dimension")
        p.add_argument("--trunc", type=int, default=None, help="q-truncation degree")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--csv", action="store_true", help="CSV output")

    p = sub.add_parser("product", help="multiply two Schubert classes")
    common(p)
    p.add_argument("--lhs", required=True, help='partition, e.g. "2,1" or [2,1]')
    p.add_argument("--rhs", required=True, help="partition")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("suite", choices=SUITE_NAMES)
    common(p)
    p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p.add_argument("--sample", type=int, default=None, help="cap on swept tuples")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="trace quantum-to-classical reductions")
    common(p)
    p.add_argument("--lhs", required=True, help="partition")
    p.add_argument("--rhs", required=True, help="partition")
    p.add_argument("--nu", required=True, help="target partition")
    p.add_argument("--deg", type=int, required=True, help="q-degree")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ArithmeticError, OverflowError, AssertionError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return CHECK_ERROR


if __name__ == "__main__":
    sys.exit(main())
