"""``stratquant`` command line.

Exit codes: 0 when every reported property holds, 1 when one fails, 2 for
usage or configuration errors (including requests beyond the size guard).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__, checks, fock, poisson, reduction, repcount
from .exactalg import Scalar, is_positive_definite
from .exactalg.scalar import format_rational
from .lierinehart import LieRinehartAlgebra, PrequantumModule

SCHEMA = "stratquant/1"
DEFAULT_SEED = 20240607
GUARD = {"s": 3, "l": 3, "k": 4, "count": 10_000}
SUITE_NAMES = ("poisson", "lierinehart", "reduction", "fock", "repcount")


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    """What a subcommand produced: a JSON payload, a CSV table and text lines."""

    payload: dict
    header: list[str]
    rows: list[list]
    lines: list[str]
    ok: bool = True


def _q(x) -> str:
    """Exact text for a rational or Gaussian rational."""
    if isinstance(x, Scalar):
        return x.to_text()
    return format_rational(x)


def _guard(args, **values) -> None:
    if args.unsafe_bounds:
        return
    for name, v in values.items():
        if v > GUARD[name]:
            raise UsageError(f"{name}={v} exceeds the guard limit {GUARD[name]} (use --unsafe-bounds)")


def _positive(**values) -> None:
    for name, v in values.items():
        if v < 1:
            raise UsageError(f"{name} must be at least 1")


# --- subcommands ----------------------------------------------------------------------

def cmd_check(args) -> Outcome:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = checks.run_suites(names, seed=args.seed, mutation=args.mutate)
    results = [r for rep in reports for r in rep.results]
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] {r.suite}: {r.name} ({r.instances} instances)")
        if not r.passed:
            lines.append(f"       counterexample: {r.counterexample}")
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} properties passed")
    payload = {"suite": args.suite, "seed": args.seed, "passed": ok,
               "properties": [r.to_json_obj() for r in results]}
    if args.mutate:
        payload["mutation"] = args.mutate
    header = ["suite", "property", "instances", "passed", "counterexample"]
    rows = [[r.suite, r.name, r.instances, r.passed, r.counterexample or ""] for r in results]
    return Outcome(payload, header, rows, lines, ok)


def cmd_dims(args) -> Outcome:
    _positive(lmax=args.lmax)
    if args.kmax < 0:
        raise UsageError("kmax must be nonnegative")
    _guard(args, l=args.lmax, k=args.kmax)
    rng = random.Random(args.seed)
    seeds = (rng.randrange(2**32), rng.randrange(2**32))
    header = ["s", "l", "k", "section_dim", "oracle_dim", "oracle_dim_alt", "kernel_dim", "match"]
    rows = []
    for l in range(1, args.lmax + 1):
        for s in range(1, l + 1):
            for k in range(args.kmax + 1):
                sd = repcount.section_dim(s, l, k)
                o1, o2 = (repcount.oracle_dim(s, l, k, sd_) for sd_ in seeds)
                kd = repcount.kernel_dim(s, l, k) if s >= 2 else None
                rows.append([s, l, k, sd, o1, o2, kd, sd == o1 == o2])
    ok = all(r[-1] for r in rows)
    payload = {"lmax": args.lmax, "kmax": args.kmax, "seed": args.seed, "all_match": ok,
               "rows": [dict(zip(header, r)) for r in rows]}
    lines = [" ".join(f"{h:>14}" for h in header)]
    lines += [" ".join(f"{'-' if v is None else str(v).lower():>14}" for v in r) for r in rows]
    lines.append("all cells match" if ok else "MISMATCH between section_dim and the oracle")
    return Outcome(payload, header, rows, lines, ok)


def cmd_gram(args) -> Outcome:
    _positive(s=args.s, l=args.l)
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    if args.s > args.l:
        raise UsageError("gram needs s <= l")
    _guard(args, s=args.s, l=args.l, k=args.k)
    B = fock.invariant_basis(args.s, args.l, args.k, bounds=False)
    G = fock.gram(B)
    pd = is_positive_definite(G)
    expected = repcount.section_dim(args.s, args.l, args.k)
    ok = pd and len(B) == expected
    payload = {
        "s": args.s, "l": args.l, "k": args.k,
        "dimension": len(B), "section_dim": expected, "positive_definite": pd,
        "basis": [{"w": w.to_text(), "poly": f.poly.to_json_obj()} for f, w in zip(B, B.w_reps)],
        "gram": [[_q(x) for x in row] for row in G],
    }
    header = ["row"] + [str(j) for j in range(len(B))]
    rows = [[i] + [_q(x) for x in row] for i, row in enumerate(G)]
    lines = [f"basis of degree {args.k} in w ({len(B)} elements, section_dim {expected}):"]
    lines += [f"  [{i}] {w.to_text()}" for i, w in enumerate(B.w_reps)]
    lines.append("Gram matrix:")
    lines += ["  " + " ".join(_q(x) for x in row) for row in G]
    lines.append(f"positive definite: {str(pd).lower()}")
    return Outcome(payload, header, rows, lines, ok)


def cmd_reduce_sample(args) -> Outcome:
    _positive(s=args.s, l=args.l, count=args.count)
    _guard(args, s=args.s, l=args.l, count=args.count)
    pts = reduction.sample_zero_level(args.s, args.l, args.count, args.seed)
    rep = checks.zero_level_report(args.s, args.l, args.count, args.seed)
    c = args.count
    hard_ok = rep["mu_O_zero"] == c and rep["rank_ok"] == c and rep["mu_Sp_ok"] == c
    hard_ok = hard_ok and rep["semicone_ok"] in (None, c)
    samples, rows = [], []
    for i, pt in enumerate(pts):
        W = reduction.orbit_image(pt)
        entry = {**pt.to_json_obj(), "W": [[_q(x) for x in row] for row in W.entries], "rank": W.rank}
        samples.append(entry)
        rows.append([i, json.dumps(entry["q"]), json.dumps(entry["p"]), json.dumps(entry["W"]), W.rank])
    payload = {"s": args.s, "l": args.l, "count": c, "seed": args.seed, "summary": rep,
               "generic_rank_fraction": f"{rep['rank_max']}/{c}", "passed": hard_ok, "samples": samples}
    lines = [
        f"{c} zero-level samples for s={args.s}, l={args.l}",
        f"mu_O = 0: {rep['mu_O_zero']}/{c}",
        f"rank W <= {min(args.s, args.l)}: {rep['rank_ok']}/{c}, with equality: {rep['rank_max']}/{c}",
        f"mu_Sp in sp and nilpotent: {rep['mu_Sp_ok']}/{c}",
    ]
    if rep["semicone_ok"] is not None:
        lines.append(f"x^2 + y^2 = r^2 with r >= 0: {rep['semicone_ok']}/{c}")
    return Outcome(payload, ["index", "q", "p", "W", "rank"], rows, lines, hard_ok)


def _adjoint_entry(z: Scalar) -> dict:
    P = reduction.adjoint_point(z)
    return {"z": _q(z), "X": _q(P.X), "Y": _q(P.Y), "tau": _q(P.tau), "steinberg": _q(P.steinberg),
            "residual": _q(P.relation_residual())}


def cmd_adjoint(args) -> Outcome:
    _positive(count=args.count)
    _guard(args, count=args.count)
    try:
        forced = [Scalar.from_text(t) for t in args.z]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse --z: {exc}") from None
    if any(not z for z in forced):
        raise UsageError("z must be nonzero")
    rng = random.Random(args.seed)
    zs = forced[: args.count]
    while len(zs) < args.count:
        z = Scalar(checks.random_rational(rng, 6, 4), checks.random_rational(rng, 6, 4))
        if z:
            zs.append(z)
    residual_failures = weyl_failures = 0
    for z in zs:
        P, Q = reduction.adjoint_point(z), reduction.adjoint_point(z.inverse())
        residual_failures += P.relation_residual() != 0
        weyl_failures += P.coordinates() != Q.coordinates()
    A = poisson.adjoint_quotient(check=False)
    ideal = A.is_poisson_ideal()
    jac = A.jacobi_witness()
    vertices = [_adjoint_entry(Scalar(1)), _adjoint_entry(Scalar(-1))]
    ok = residual_failures == 0 and weyl_failures == 0 and ideal.passed and jac is None
    payload = {
        "count": len(zs), "seed": args.seed,
        "max_relation_residual": "0" if residual_failures == 0 else "nonzero",
        "relation_failures": residual_failures, "weyl_symmetry_failures": weyl_failures,
        "poisson_ideal": ideal.passed, "jacobi": jac is None,
        "brackets": {f"{a},{b}": str(p) for (a, b), p in sorted(A.table_dict().items())},
        "vertices": vertices,
        "points": [_adjoint_entry(z) for z in forced[: args.count]],
        "passed": ok,
    }
    lines = [
        f"relation Y^2 = (X^2+Y^2+4(tau-1))tau on {len(zs)} points: residual 0, {residual_failures} failures",
        f"Weyl symmetry z <-> 1/z: {weyl_failures} failures",
        f"Poisson ideal: {'pass' if ideal.passed else 'FAIL ' + str(ideal.witness)}",
        f"Jacobi: {'pass' if jac is None else 'FAIL ' + str(jac)}",
    ]
    for v in vertices:
        lines.append(f"vertex z={v['z']}: (X,Y,tau)=({v['X']},{v['Y']},{v['tau']}), z+1/z={v['steinberg']}")
    for p in payload["points"]:
        lines.append(f"point z={p['z']}: (X,Y,tau)=({p['X']},{p['Y']},{p['tau']})")
    header = ["z", "X", "Y", "tau", "steinberg", "residual"]
    rows = [[e[h] for h in header] for e in vertices + payload["points"]]
    return Outcome(payload, header, rows, lines, ok)


def cmd_dirac(args) -> Outcome:
    if args.n not in (1, 2):
        raise UsageError("dirac supports n = 1 or 2 (R^2 or R^4)")
    if not 0 <= args.max_degree <= 3:
        raise UsageError("max-degree must be between 0 and 3")
    ctx = checks.Context(args.seed, args.mutate)
    results = []
    for n in range(1, args.n + 1):
        lr = LieRinehartAlgebra(poisson.flat_algebra(n))
        M = ctx.prequantum(lr)
        count, bad = checks.dirac_sweep(M, args.max_degree)
        stripped = PrequantumModule.without_potential(lr)
        q, p = lr.A.gens()[0], lr.A.gens()[n]
        mutant = str(stripped.dirac_residual(q, p, lr.A.const(1)))
        results.append({"space": f"R^{2 * n}", "sign": M.sign, "checks": count, "passed": bad is None,
                        "counterexample": bad, "stripped_residual_on_1": mutant})
    ok = all(r["passed"] for r in results) and all(r["stripped_residual_on_1"] != "0" for r in results)
    payload = {"max_degree": args.max_degree, "results": results, "passed": ok}
    if args.mutate:
        payload["mutation"] = args.mutate
    lines = []
    for r in results:
        lines.append(f"{r['space']}: sign {r['sign']:+d}, {r['checks']} residuals, "
                     f"{'all zero' if r['passed'] else 'FAIL ' + str(r['counterexample'])}")
        lines.append(f"{r['space']}: without the potential, residual of (q, p) on 1 is {r['stripped_residual_on_1']}")
    header = ["space", "sign", "checks", "passed", "counterexample", "stripped_residual_on_1"]
    rows = [[r[h] if r[h] is not None else "" for h in header] for r in results]
    return Outcome(payload, header, rows, lines, ok)


# --- parser -------------------------------------------------------------------------------------

def _seed(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # shared by the top-level parser and every subparser; subparsers use
    # SUPPRESS so a flag given before the subcommand is not overwritten
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", default=d("text"),
                     help="emit JSON")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv", default=d("text"), help="emit CSV")
    p.add_argument("--seed", type=_seed, default=d(DEFAULT_SEED), help=f"random seed (default {DEFAULT_SEED})")
    p.add_argument("--out", default=d(None), metavar="PATH", help="write output to PATH instead of stdout")
    p.add_argument("--unsafe-bounds", action="store_true", default=d(False),
                   help="lift the size guard (s, l <= 3, k <= 4, count <= 10^4)")
    return p


def build_parser() -> argparse.ArgumentParser:
    sub_flags = _global_flags(True)
    parser = argparse.ArgumentParser(prog="stratquant", parents=[_global_flags(False)],
                                     description="Exact checks for singular reduction and costratified quantization.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("check", parents=[sub_flags], help="run property suites")
    p.add_argument("suite", nargs="?", default="all", choices=SUITE_NAMES + ("all",))
    p.add_argument("--mutate", choices=checks.MUTATIONS, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dims", parents=[sub_flags], help="dimension table against the rank oracle")
    p.add_argument("--lmax", type=int, default=2)
    p.add_argument("--kmax", type=int, default=2)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("gram", parents=[sub_flags], help="invariant basis and exact Gram matrix")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("reduce-sample", parents=[sub_flags], help="zero-level samples and their orbit images")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_reduce_sample)

    p = sub.add_parser("adjoint", parents=[sub_flags], help="verify the SL(2,C) adjoint quotient")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--z", action="append", default=[], metavar="Z",
                   help="force a sample point, e.g. 1, -2/3 or 1+2i (repeatable)")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("dirac", parents=[sub_flags], help="Dirac condition for the flat prequantum module")
    p.add_argument("--n", type=int, default=2, help="check R^2 and, if 2, also R^4")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--mutate", choices=("theta-sign",), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_dirac)
    return parser


def render(outcome: Outcome, fmt: str, command: str) -> str:
    if fmt == "json":
        body = {"schema": SCHEMA, "command": command, **outcome.payload}
        return json.dumps(body, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(outcome.header)
        for row in outcome.rows:
            w.writerow(["" if v is None else str(v).lower() if isinstance(v, bool) else v for v in row])
        return buf.getvalue()
    return "\n".join(outcome.lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args)
    except (UsageError, fock.BoundsExceeded) as exc:
        parser.print_usage(sys.stderr)
        print(f"stratquant: error: {exc}", file=sys.stderr)
        return 2
    text = render(outcome, args.format, args.command)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"stratquant: error: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if outcome.ok else 1


if __name__ == "__main__":
    sys.exit(main())
