"""Command-line interface.

Subcommands:

    realizable --dim D C1 ... CD     decompose a Chern vector, or reject it
    acs --dim D --m M --n N [--q Q]  decide/enumerate almost complex structures
    verify SUITE [--seed S]          run a named verification suite
    table NAME [--csv]               emit a built-in table (mod31,
                                     pontrjagin-omega, divisor-targets)

Output is deterministic pretty-printed JSON on stdout (integers beyond the
53-bit safe range are serialized as decimal strings); timing goes to stderr.
Exit codes: 0 ok, 1 failed internal checks, 2 constraint violations, 64
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .chernvec import NotRealizable, realizable
from .homotopy import (ConstraintViolated, NoCompletion, ZeroFirstChern,
                       acs_search_cp4, acs_search_cp6, cp5_structure,
                       cp6_exists, divisor_target_cp4, mod31_table,
                       validate_params)
from .ktheory import KOClass, UnsupportedDimension, pontrjagin_total
from .suites import SUITES, run_suite

USAGE_ERROR = 64
_SAFE = 1 << 53


@dataclass(frozen=True)
class CommandResult:
    status: str          # ok | violation | error
    payload: dict
    elapsed_ms: int

    @property
    def exit_code(self):
        return {"ok": 0, "violation": 2, "error": 1}[self.status]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _jsonable(value):
    """Recursively convert a payload; big integers become decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _SAFE else value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _emit(result, csv_text=None):
    if csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        doc = {"status": result.status, "payload": _jsonable(result.payload)}
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    sys.stderr.write(f"elapsed_ms={result.elapsed_ms}\n")
    return result.exit_code


def _cmd_realizable(args):
    if not 1 <= args.dim <= 8:
        raise _UsageError("--dim must be between 1 and 8")
    if len(args.chern) != args.dim:
        raise _UsageError(f"expected {args.dim} Chern coefficients, got {len(args.chern)}")
    payload = {"dim": args.dim, "chern": list(args.chern)}
    try:
        decomposition = realizable(tuple(args.chern))
        payload.update(realizable=True, decomposition=list(decomposition))
    except NotRealizable as exc:
        payload.update(realizable=False, decomposition=None,
                       reason=str(exc))
    return "ok", payload


def _solution_dict(sol):
    out = {"a": sol.a, "chern": list(sol.full_chern),
           "decomposition": list(sol.decomposition)}
    if sol.c is not None:
        out["c"] = sol.c
    return out


def _cmd_acs(args):
    X = validate_params(args.dim, args.m, args.n, args.q)
    payload = {"dim": args.dim, "params": {"m": X.m, "n": X.n}}
    if X.q is not None:
        payload["params"]["q"] = X.q
    if args.dim == 4:
        sols = acs_search_cp4(X, cross_check_window=args.a_max)
        payload["divisor_target"] = divisor_target_cp4(X.m)
        payload["a_values"] = [s.a for s in sols]
        payload["solutions"] = [_solution_dict(s) for s in sols]
    elif args.dim == 6:
        sols = acs_search_cp6(X, a_max=args.a_max, c_max=args.c_max)
        payload["exists"] = cp6_exists(X)
        payload["window"] = {"a_max": args.a_max, "c_max": args.c_max}
        payload["solutions"] = [_solution_dict(s) for s in sols]
    else:
        rep = cp5_structure(X)
        payload["e_coefficients"] = list(rep.e.coeffs[1:])
        payload["reduction"] = list(rep.reduction.coeffs)
        payload["tangent"] = list(rep.tangent.coeffs)
        payload["euler_coefficient"] = rep.euler_coefficient
        payload["checks"] = {"reduction_matches_tangent": rep.reduction_matches,
                             "euler_is_6": rep.euler_matches}
        if not rep.ok:
            return "error", payload
    return "ok", payload


def _cmd_verify(args):
    checks = run_suite(args.suite, seed=args.seed)
    payload = {
        "suite": args.suite,
        "checks": [{"name": c.name, "pass": c.passed}
                   | ({"detail": c.detail} if not c.passed else {})
                   for c in checks],
        "all_pass": all(c.passed for c in checks),
    }
    return ("ok" if payload["all_pass"] else "error"), payload


def _table_rows(args):
    if args.table == "mod31":
        return ["m", "n"], [list(r) for r in mod31_table()]
    if args.table == "pontrjagin-omega":
        if args.dim not in (4, 6):
            raise _UsageError("pontrjagin-omega needs --dim 4 or 6")
        rows = []
        for k in range(1, args.dim // 2 + 1):
            p = pontrjagin_total(KOClass.omega(args.dim, k))
            for i in range(1, args.dim // 2 + 1):
                rows.append([k, i, int(p.coeff(2 * i))])
        return ["power", "index", "coefficient"], rows
    if args.table == "divisor-targets":
        if args.dim != 4:
            raise _UsageError("divisor targets are defined for --dim 4")
        rows = [[m, divisor_target_cp4(m)]
                for m in range(-args.m_max, args.m_max + 1)
                if m % 14 in (0, 6)]
        return ["m", "target"], rows
    raise _UsageError(f"unknown table {args.table!r}")


def _cmd_table(args):
    header, rows = _table_rows(args)
    if args.csv:
        lines = [",".join(header)] + [",".join(str(x) for x in row) for row in rows]
        return "ok", None, "\n".join(lines) + "\n"
    return "ok", {"table": args.table, "columns": header, "rows": rows}, None


class _UsageError(Exception):
    pass


def _build_parser():
    parser = _Parser(prog="acscp",
                     description="Almost complex structures on homotopy CP^4, CP^5, CP^6.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realizable", help="test whether a tuple is a Chern vector")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("chern", type=int, nargs="+", metavar="C")

    p = sub.add_parser("acs", help="decide and enumerate almost complex structures")
    p.add_argument("--dim", type=int, required=True, choices=(4, 5, 6))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--a-max", type=int, default=200)
    p.add_argument("--c-max", type=int, default=200)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("table", help="emit a built-in table")
    p.add_argument("table", metavar="name")
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--m-max", type=int, default=34)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--csv", action="store_true")
    group.add_argument("--json", action="store_true")
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    started = time.perf_counter()
    csv_text = None
    try:
        if args.command == "realizable":
            status, payload = _cmd_realizable(args)
        elif args.command == "acs":
            status, payload = _cmd_acs(args)
        elif args.command == "verify":
            status, payload = _cmd_verify(args)
        else:
            status, payload, csv_text = _cmd_table(args)
    except _UsageError as exc:
        sys.stderr.write(f"acscp: error: {exc}\n")
        return USAGE_ERROR
    except (ConstraintViolated, ZeroFirstChern) as exc:
        status, payload = "violation", {"violation": str(exc)}
    except (NoCompletion, NotRealizable, UnsupportedDimension, ValueError,
            ArithmeticError) as exc:
        status, payload = "error", {"error": str(exc)}
    elapsed = int((time.perf_counter() - started) * 1000)
    return _emit(CommandResult(status, payload, elapsed), csv_text)


if __name__ == "__main__":
    sys.exit(main())
