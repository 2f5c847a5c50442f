"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

The lines are collected in ``REPORT`` and printed in the terminal summary
(see conftest.py).  Running this file as a script prints them directly.
"""

import io
import json
import random
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from math import comb

from stratquant import fock, poisson, reduction, repcount
from stratquant.checks import dirac_sweep, random_poly, zero_level_passes, zero_level_report
from stratquant.cli import main as cli_main
from stratquant.exactalg import Poly, Scalar, is_positive_definite
from stratquant.exactalg.linalg import matmul, trace, transpose
from stratquant.liealg import so_algebra, sp_algebra
from stratquant.lierinehart import LieRinehartAlgebra, PrequantumModule

from test_oracles import gmo

REPORT: list[str] = []


def record(number: int, title: str, ok: bool, elapsed: float, limit: float | None, detail: str = "") -> None:
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    bound = f" < {limit:g}s" if limit is not None else ""
    line = f"criterion {number} [{status}] {title} ({elapsed:.1f}s{bound})"
    if detail:
        line += f": {detail}"
    REPORT.append(line)
    print(line)
    assert ok, line
    assert in_time, f"{line}: over the runtime bound"


# --- 1 ---------------------------------------------------------------------------------------

def test_criterion_1_symbolic_identities():
    t0 = time.perf_counter()
    sc = poisson.semicone()
    aq = poisson.adjoint_quotient()
    X, Y, tau = aq.gen("X"), aq.gen("Y"), aq.gen("tau")
    one = Poly.const(1, aq.variables)
    table_ok = (aq.table("X", "tau") == 2 * (one - tau) * Y and aq.table("Y", "tau") == 2 * X * tau)
    rng = random.Random(1)
    residual_ok = True
    for _ in range(200):
        z = reduction.adjoint_point(Scalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                                           Fraction(rng.randint(1, 9), rng.randint(1, 9))))
        residual_ok &= z.relation_residual() == 0
    rel = aq.relations.relations[0]
    ok = (sc.jacobi_witness() is None and sc.is_poisson_ideal().passed
          and aq.jacobi_witness() is None and aq.is_poisson_ideal().passed
          and table_ok and residual_ok
          and not aq.reduce(rel) and not sc.reduce(sc.relations.relations[0]))
    record(1, "semicone and adjoint-quotient identities are exactly zero", ok,
           time.perf_counter() - t0, 5)


# --- 2 ---------------------------------------------------------------------------------------

def test_criterion_2_lie_rinehart_and_dirac():
    t0 = time.perf_counter()
    spaces = [LieRinehartAlgebra(poisson.flat_algebra(1)), LieRinehartAlgebra(poisson.flat_algebra(2)),
              LieRinehartAlgebra(poisson.semicone())]
    rng = random.Random(2024)
    axioms = jacobi = 0
    bad = []
    for i in range(200):
        lr = spaces[i % 3]
        gens, A = lr.generators, lr.A
        al = lr.element({g: random_poly(rng, gens, 1, 2) for g in gens})
        be = lr.element({g: random_poly(rng, gens, 1, 2) for g in gens})
        a, b = random_poly(rng, gens), random_poly(rng, gens)
        if (lr.bracket(al, be.scale(a)) != be.scale(al(a)) + lr.bracket(al, be).scale(a)
                or al.scale(a)(b) != A.reduce(a * al(b))
                or lr.bracket(al, be)(a) != A.reduce(al(be(a)) - be(al(a)))):
            bad.append(("axiom", i))
        axioms += 1
        Xe, Ye, Ze = (lr.ext_pair(random_poly(rng, gens, 2, 2), random_poly(rng, gens, 2, 2)) for _ in range(3))
        jac = (lr.ext_bracket(Xe, lr.ext_bracket(Ye, Ze)) + lr.ext_bracket(Ye, lr.ext_bracket(Ze, Xe))
               + lr.ext_bracket(Ze, lr.ext_bracket(Xe, Ye)))
        if not jac.is_zero():
            bad.append(("ext-jacobi", i))
        jacobi += 1
    dirac_counts = []
    for lr in spaces[:2]:
        M = PrequantumModule(lr)
        n, counter = dirac_sweep(M, 3)
        dirac_counts.append(n)
        if M.sign != 1 or counter is not None:
            bad.append(("dirac", lr.generators, counter))
    flat = spaces[0]
    q, p = flat.A.gens()
    stripped = PrequantumModule.without_potential(flat)
    flipped = PrequantumModule(flat, sign=-1, validate=False)
    mutants_fail = (bool(stripped.dirac_residual(q, p, flat.A.const(1)))
                    and dirac_sweep(flipped, 1)[1] is not None)
    ok = not bad and mutants_fail
    record(2, "Lie-Rinehart axioms, ext Jacobi and Dirac residuals", ok, time.perf_counter() - t0, 30,
           f"{axioms} axiom and {jacobi} Jacobi instances, Dirac residuals {dirac_counts}, "
           f"mutants fail={mutants_fail}" + (f", failures {bad[:3]}" if bad else ""))


# --- 3 ---------------------------------------------------------------------------------------

def test_criterion_3_bargmann_and_gram():
    t0 = time.perf_counter()
    pairs = 0
    mismatches = []
    for m in (1, 2, 3):
        idx = gmo.multi_indices(m, 4)
        for al in idx:
            for be in idx:
                pairs += 1
                want = fock.monomial_norm(al) if al == be else 0
                if gmo.multi_moment(al, be) != want:
                    mismatches.append((al, be))
    grams = 0
    not_pd = []
    for l in (1, 2):
        for s in range(1, l + 1):
            for k in range(4):
                grams += 1
                if not is_positive_definite(fock.gram(fock.invariant_basis(s, l, k))):
                    not_pd.append((s, l, k))
    ok = not mismatches and not not_pd
    record(3, "Bargmann closed form equals Gaussian moments; Gram matrices positive definite", ok,
           time.perf_counter() - t0, 30, f"{pairs} moment pairs, {grams} Gram matrices")


# --- 4 ---------------------------------------------------------------------------------------

def test_criterion_4_reduction_geometry():
    t0 = time.perf_counter()
    reports = [zero_level_report(s, l, 1000, 7919 * s + l) for s in (1, 2, 3) for l in (1, 2, 3)]
    ok = all(zero_level_passes(r) for r in reports)
    worst = min(r["rank_max"] for r in reports)
    record(4, "zero-level samples: mu_O = 0, rank bound, semicone identity, nilpotent mu_Sp", ok,
           time.perf_counter() - t0, 60, f"9 cells x 1000 samples, lowest generic-rank count {worst}/1000")


# --- 5 ---------------------------------------------------------------------------------------

def test_criterion_5_quantization_commutes_with_reduction():
    t0 = time.perf_counter()
    bad = []
    cells = 0
    for l in (1, 2, 3):
        for s in range(1, l + 1):
            for k in range(5):
                cells += 1
                sd = repcount.section_dim(s, l, k)
                got = [len(fock.invariant_basis(s, l, k)), repcount.oracle_dim(s, l, k, 101 + k),
                       repcount.oracle_dim(s, l, k, 202 + k)]
                if got != [sd] * 3:
                    bad.append(((s, l, k), sd, got))
    kernels = [(2, 2, k) for k in range(4)] + [(2, 3, k) for k in range(3)]
    for s, l, k in kernels:
        B = fock.invariant_basis(s, l, k)
        if len(B) - fock.restriction_rank(B, s - 1) != repcount.kernel_dim(s, l, k):
            bad.append(("kernel", (s, l, k)))
    record(5, "invariant basis = section_dim = oracle; kernel = restriction rank drop", not bad,
           time.perf_counter() - t0, 300, f"{cells} cells, {len(kernels)} kernel checks"
           + (f", failures {bad[:3]}" if bad else ""))


# --- 6 ---------------------------------------------------------------------------------------

def test_criterion_6_top_level_closed_form():
    t0 = time.perf_counter()
    ok = all(repcount.section_dim(l, l, k) == comb(k + l * (l + 1) // 2 - 1, k)
             for l in (1, 2, 3) for k in range(5))
    record(6, "section_dim(l,l,k) = C(k + l(l+1)/2 - 1, k)", ok, time.perf_counter() - t0, None)


# --- 7 ---------------------------------------------------------------------------------------

def test_criterion_7_killing_identities():
    t0 = time.perf_counter()
    bad = []
    for s in (3, 4):
        lie = so_algebra(s)
        rng = random.Random(s)
        for _ in range(100):
            a = lie.element([rng.randint(-4, 4) for _ in range(lie.dim)])
            b = lie.element([rng.randint(-4, 4) for _ in range(lie.dim)])
            if (s - 2) * trace(matmul(transpose(a), b)) != -lie.killing(a, b):
                bad.append(("so", s))
    for l in (1, 2, 3):
        lie = sp_algebra(l)
        rng = random.Random(10 + l)
        for _ in range(100):
            a = lie.element([rng.randint(-4, 4) for _ in range(lie.dim)])
            b = lie.element([rng.randint(-4, 4) for _ in range(lie.dim)])
            if lie.killing(a, b) != 2 * (l + 1) * trace(matmul(a, b)):
                bad.append(("sp", l))
    record(7, "Killing forms on so(3), so(4), sp(1..3) from structure constants", not bad,
           time.perf_counter() - t0, None, "500 random pairs")


# --- 8 ---------------------------------------------------------------------------------------

def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = cli_main(list(argv))
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue()


def test_criterion_8_cli_contract():
    t0 = time.perf_counter()
    reruns = [
        ("dims", "--lmax", "2", "--kmax", "2", "--json"),
        ("adjoint", "--count", "20", "--json"),
        ("gram", "--s", "2", "--l", "2", "--k", "2", "--json"),
        ("reduce-sample", "--s", "2", "--l", "2", "--count", "10", "--json"),
    ]
    identical = all(_cli(*a) == _cli(*a) for a in reruns)
    code_ok, doc = _cli("dims", "--lmax", "2", "--kmax", "2", "--json")
    schema_ok = json.loads(doc)["schema"] == "stratquant/1"
    codes = {
        "pass": _cli("adjoint", "--count", "5")[0],
        "poisson mutant": _cli("check", "poisson", "--mutate", "semicone-bracket")[0],
        "theta mutant": _cli("dirac", "--n", "1", "--mutate", "theta-sign")[0],
        "unknown suite": _cli("check", "nonsense")[0],
        "guard": _cli("dims", "--lmax", "7")[0],
    }
    want = {"pass": 0, "poisson mutant": 1, "theta mutant": 1, "unknown suite": 2, "guard": 2}
    ok = identical and schema_ok and code_ok == 0 and codes == want
    record(8, "CLI determinism and exit codes 0/1/2", ok, time.perf_counter() - t0, None,
           f"byte-identical reruns={identical}, exit codes {codes}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in dict(globals()).items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
