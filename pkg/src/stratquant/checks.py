"""Property suites driven by ``stratquant check``.

Each property draws its own ``random.Random`` seeded from the run seed and
the property name, so reports are reproducible and independent of which
suites run.  A property returns the number of instances examined and the
first counterexample found (or None).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from . import fock, poisson, reduction, repcount
from .exactalg import Poly, Scalar, is_nilpotent, is_positive_definite, monomials_of_degree
from .exactalg.linalg import commutator, matmul, transpose, trace
from .liealg import in_sp, so_algebra, sp_algebra
from .lierinehart import LieRinehartAlgebra, PrequantumModule

__all__ = ["SUITES", "MUTATIONS", "PropertyResult", "SuiteReport", "run_suite", "run_suites", "random_poly"]

MUTATIONS = ("semicone-bracket", "theta-sign")


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    instances: int
    passed: bool
    counterexample: str | None = None

    def to_json_obj(self) -> dict:
        return {"suite": self.suite, "property": self.name, "instances": self.instances,
                "passed": self.passed, "counterexample": self.counterexample}


@dataclass
class SuiteReport:
    suite: str
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


@dataclass
class Context:
    seed: int
    mutation: str | None = None

    def rng(self, suite: str, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{suite}:{name}")

    def semicone(self) -> poisson.PresentedPoissonAlgebra:
        A = poisson.semicone()
        if self.mutation == "semicone-bracket":
            return A.perturbed("x", "y", Poly.const(1, A.variables))
        return A

    def prequantum(self, lr: LieRinehartAlgebra) -> PrequantumModule:
        if self.mutation == "theta-sign":
            good = PrequantumModule(lr)
            return PrequantumModule(lr, sign=-good.sign, validate=False)
        return PrequantumModule(lr)


# --- random exact data -----------------------------------------------------------

def random_rational(rng: random.Random, num: int = 3, den: int = 2) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_poly(rng: random.Random, variables: Sequence[str], max_degree: int = 2, max_terms: int = 3,
                *, complex_: bool = False) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exp = rng.choice(monomials_of_degree(len(variables), deg))
        im = random_rational(rng) if complex_ else 0
        terms[exp] = Scalar(random_rational(rng), im)
    return Poly(variables, terms)


# --- suite plumbing ------------------------------------------------------------------

Property = Callable[[Context, random.Random], tuple[int, object]]
SUITES: dict[str, list[tuple[str, Property]]] = {}


def prop(suite: str, name: str):
    def register(fn: Property) -> Property:
        SUITES.setdefault(suite, []).append((name, fn))
        return fn
    return register


def run_suite(suite: str, *, seed: int = 0, mutation: str | None = None) -> SuiteReport:
    if suite not in SUITES:
        raise KeyError(suite)
    if mutation is not None and mutation not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutation!r}")
    ctx = Context(seed, mutation)
    report = SuiteReport(suite)
    for name, fn in SUITES[suite]:
        try:
            n, bad = fn(ctx, ctx.rng(suite, name))
        except Exception as exc:  # a crash is a failure with its message as witness
            n, bad = 0, f"{type(exc).__name__}: {exc}"
        report.results.append(PropertyResult(suite, name, n, bad is None, None if bad is None else str(bad)))
    return report


def run_suites(names: Sequence[str], **kw) -> list[SuiteReport]:
    return [run_suite(n, **kw) for n in names]


# --- poisson -------------------------------------------------------------------------------

def _named_algebras(ctx: Context):
    return [("semicone", ctx.semicone()), ("adjoint-quotient", poisson.adjoint_quotient(check=False))]


@prop("poisson", "jacobi identity on generator triples")
def _p_jacobi(ctx, rng):
    n = 0
    algebras = _named_algebras(ctx) + [(f"sp({l})", poisson.LiePoissonSpace(l).algebra) for l in (1, 2, 3)]
    for label, A in algebras:
        n += 1
        w = A.jacobi_witness()
        if w is not None:
            return n, f"{label}: jacobiator{w[0]} = {w[1]}"
    return n, None


@prop("poisson", "relations generate a Poisson ideal")
def _p_ideal(ctx, rng):
    for i, (label, A) in enumerate(_named_algebras(ctx), start=1):
        v = A.is_poisson_ideal()
        if not v.passed:
            return i, f"{label}: {{{v.generator}, {v.relation}}} reduces to {v.witness}"
    return 2, None


@prop("poisson", "perturbed tables are rejected")
def _p_perturb(ctx, rng):
    n = 0
    for label, A in _named_algebras(ctx):
        keys = sorted(A.table_dict())
        for _ in range(20):
            a, b = rng.choice(keys)
            delta = A.reduce(random_poly(rng, A.variables, 2, 2))
            if not delta:
                continue
            n += 1
            if A.perturbed(a, b, delta).is_poisson_ideal().passed:
                return n, f"{label}: {{{a},{b}}} += {delta} still passes"
    return n, None


@prop("poisson", "antisymmetry and Leibniz on random polynomials")
def _p_leibniz(ctx, rng):
    n = 0
    for label, A in _named_algebras(ctx):
        for _ in range(100):
            f, g, h = (random_poly(rng, A.variables) for _ in range(3))
            n += 1
            if A.bracket(f, g) != -A.bracket(g, f):
                return n, f"{label}: antisymmetry fails for {f}, {g}"
            if A.bracket(f, g * h) != A.reduce(g * A.bracket(f, h) + h * A.bracket(f, g)):
                return n, f"{label}: Leibniz fails for {f}, {g}, {h}"
    return n, None


@prop("poisson", "Lie-Poisson bracket of linear functions is the commutator")
def _p_lie_poisson(ctx, rng):
    n = 0
    for l in (1, 2, 3):
        S = poisson.LiePoissonSpace(l)
        basis = S.lie.basis
        for a in basis:
            for b in basis:
                n += 1
                if S.bracket(S.linear_function(a), S.linear_function(b)) != S.linear_function(commutator(a, b)):
                    return n, f"sp({l}): mismatch"
    return n, None


# --- lierinehart ---------------------------------------------------------------------------

def _lr_algebras(ctx: Context):
    return [("R2", poisson.flat_algebra(1)), ("R4", poisson.flat_algebra(2)), ("semicone", ctx.semicone())]


def _random_diff(rng, lr: LieRinehartAlgebra):
    return lr.element({g: random_poly(rng, lr.generators, 1, 2) for g in lr.generators if rng.random() < 0.7})


@prop("lierinehart", "Lie-Rinehart axioms")
def _lr_axioms(ctx, rng):
    n = 0
    for label, A in _lr_algebras(ctx):
        lr = LieRinehartAlgebra(A)
        for _ in range(70):
            al, be = _random_diff(rng, lr), _random_diff(rng, lr)
            a, b = random_poly(rng, A.variables), random_poly(rng, A.variables)
            n += 1
            if lr.bracket(al, be.scale(a)) != be.scale(al(a)) + lr.bracket(al, be).scale(a):
                return n, f"{label}: [al, a be] rule fails for al={al}, be={be}, a={a}"
            if al.scale(a)(b) != A.reduce(a * al(b)):
                return n, f"{label}: (a al)(b) rule fails for al={al}, a={a}, b={b}"
            if lr.bracket(al, be) != -lr.bracket(be, al):
                return n, f"{label}: antisymmetry fails for al={al}, be={be}"
            lhs = lr.bracket(al, be)(b)
            rhs = A.reduce(al(be(b)) - be(al(b)))
            if lhs != rhs:
                return n, f"{label}: anchor is not a Lie map on al={al}, be={be}, b={b}"
    return n, None


@prop("lierinehart", "extension bracket satisfies Jacobi")
def _lr_ext_jacobi(ctx, rng):
    n = 0
    for label, A in _lr_algebras(ctx)[:2]:
        lr = LieRinehartAlgebra(A)
        for _ in range(30):
            X, Y, Z = (lr.ext_pair(random_poly(rng, A.variables), random_poly(rng, A.variables, 3))
                       for _ in range(3))
            n += 1
            jac = (lr.ext_bracket(X, lr.ext_bracket(Y, Z)) + lr.ext_bracket(Y, lr.ext_bracket(Z, X))
                   + lr.ext_bracket(Z, lr.ext_bracket(X, Y)))
            if not jac.is_zero():
                return n, f"{label}: jacobiator {jac}"
    return n, None


@prop("lierinehart", "chi is a representation of the extension")
def _lr_chi(ctx, rng):
    n = 0
    for label, A in _lr_algebras(ctx)[:2]:
        lr = LieRinehartAlgebra(A)
        M = ctx.prequantum(lr)
        for _ in range(15):
            X = lr.ext_pair(random_poly(rng, A.variables), random_poly(rng, A.variables, 3))
            Y = lr.ext_pair(random_poly(rng, A.variables), random_poly(rng, A.variables, 3))
            for deg in range(4):
                x = Poly.monomial(rng.choice(monomials_of_degree(len(A.variables), deg)), A.variables)
                n += 1
                defect = M.representation_defect(X, Y, x)
                if defect:
                    return n, f"{label}: defect {defect} on {X}, {Y}, probe {x}"
    return n, None


def dirac_probes(variables: Sequence[str]) -> list[Poly]:
    """1, the coordinates and one quadratic.

    The residual is a first-order differential operator, so its values on
    1 and the coordinates already determine it; the quadratic is a spare.
    """
    out = [Poly.const(1, variables)] + Poly.gens(variables)
    out.append(Poly.var(variables[0], variables) * Poly.var(variables[-1], variables))
    return out


def dirac_sweep(M: PrequantumModule, max_degree: int = 3):
    """Dirac residuals over all pairs of monomials of degree <= max_degree."""
    vs = M.A.variables
    monos = [Poly.monomial(e, vs) for d in range(max_degree + 1) for e in monomials_of_degree(len(vs), d)]
    probes = dirac_probes(vs)
    n = 0
    for i, a in enumerate(monos):
        for b in monos[i + 1:]:
            for x in probes:
                n += 1
                r = M.dirac_residual(a, b, x)
                if r:
                    return n, f"({a}, {b}) on probe {x}: residual {r}"
    return n, None


@prop("lierinehart", "Dirac condition on monomial pairs of degree <= 3")
def _lr_dirac(ctx, rng):
    total = 0
    for label, A in _lr_algebras(ctx)[:2]:
        n, bad = dirac_sweep(ctx.prequantum(LieRinehartAlgebra(A)))
        total += n
        if bad:
            return total, f"{label}: {bad}"
    return total, None


@prop("lierinehart", "potential-free mutant violates Dirac")
def _lr_mutant(ctx, rng):
    lr = LieRinehartAlgebra(poisson.flat_algebra(1))
    M = PrequantumModule.without_potential(lr)
    q, p = lr.A.gens()
    r = M.dirac_residual(q, p, Poly.const(1, lr.generators))
    return 1, None if r else "residual vanished for the mutant"


# --- reduction -------------------------------------------------------------------------------

@prop("reduction", "angular momentum is equivariant")
def _r_equivariant(ctx, rng):
    for n in range(1, 101):
        s = rng.randint(1, 3)
        pt = reduction.sample_zero_level(s, rng.randint(1, 3), 1, rng.randrange(2**32))[0]
        # move off the zero level so the check is not trivial
        pt = reduction.PhasePoint(s, pt.l, pt.q, tuple(tuple(x + random_rational(rng) for x in v) for v in pt.p))
        perm = list(range(s))
        rng.shuffle(perm)
        g = reduction.signed_permutation(perm, [rng.choice((-1, 1)) for _ in range(s)])
        if reduction.mu_O(reduction.act(g, pt)) != reduction.conjugate_by(g, reduction.mu_O(pt)):
            return n, f"g={g}, point={pt.to_json_obj()}"
    return 100, None


def _random_element(rng, lie):
    return lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])


@prop("reduction", "Killing form identities")
def _r_killing(ctx, rng):
    n = 0
    for s in (3, 4):
        lie = so_algebra(s)
        for _ in range(100):
            a, b = _random_element(rng, lie), _random_element(rng, lie)
            n += 1
            if (s - 2) * trace(matmul(transpose(a), b)) != -lie.killing(a, b):
                return n, f"so({s}): a={a}, b={b}"
    for l in (1, 2, 3):
        lie = sp_algebra(l)
        for _ in range(100):
            a, b = _random_element(rng, lie), _random_element(rng, lie)
            n += 1
            if lie.killing(a, b) != 2 * (l + 1) * trace(matmul(a, b)):
                return n, f"sp({l}): a={a}, b={b}"
    return n, None


def zero_level_report(s: int, l: int, count: int, seed: int) -> dict:
    """Statistics of the orbit image on ``count`` zero-level samples."""
    pts = reduction.sample_zero_level(s, l, count, seed)
    out = {"s": s, "l": l, "count": count, "mu_O_zero": 0, "rank_ok": 0, "rank_max": 0,
           "mu_Sp_ok": 0, "semicone_ok": 0 if l == 1 else None}
    for pt in pts:
        out["mu_O_zero"] += reduction.is_zero_matrix(reduction.mu_O(pt))
        rank = reduction.orbit_image(pt, check=False).rank
        out["rank_ok"] += rank <= min(s, l)
        out["rank_max"] += rank == min(s, l)
        m = reduction.mu_Sp(pt)
        out["mu_Sp_ok"] += in_sp(m, l) and is_nilpotent(m)
        if l == 1:
            x, y, r = reduction.semicone_coordinates(pt)
            out["semicone_ok"] += x * x + y * y == r * r and r >= 0
    return out


def zero_level_passes(rep: dict) -> bool:
    c = rep["count"]
    ok = rep["mu_O_zero"] == c and rep["rank_ok"] == c and rep["mu_Sp_ok"] == c
    ok = ok and 100 * rep["rank_max"] >= 95 * c
    return ok and rep["semicone_ok"] in (None, c)


@prop("reduction", "zero-level samples: rank bound, semicone identity, nilpotent mu_Sp")
def _r_zero_level(ctx, rng):
    n = 0
    for s in (1, 2, 3):
        for l in (1, 2, 3):
            rep = zero_level_report(s, l, 1000, rng.randrange(2**32))
            n += rep["count"]
            if not zero_level_passes(rep):
                return n, rep
    return n, None


@prop("reduction", "adjoint quotient relation and Weyl symmetry")
def _r_adjoint(ctx, rng):
    for n in range(1, 1001):
        z = Scalar(random_rational(rng, 6, 4), random_rational(rng, 6, 4))
        if not z:
            z = Scalar(1)
        P, Q = reduction.adjoint_point(z), reduction.adjoint_point(z.inverse())
        if P.relation_residual() != 0:
            return n, f"z={z}: residual {P.relation_residual()}"
        if P.coordinates() != Q.coordinates():
            return n, f"z={z}: not invariant under z -> 1/z"
        if Scalar(P.X, P.Y) != P.steinberg:
            return n, f"z={z}: X + iY differs from z + 1/z"
    return 1000, None


# --- fock --------------------------------------------------------------------------------------

def random_fock(rng, s: int, l: int, max_degree: int = 3) -> fock.FockPoly:
    return fock.FockPoly(random_poly(rng, fock.fock_variables(s, l), max_degree, 4, complex_=True), s, l)


@prop("fock", "inner product is positive definite")
def _f_positive(ctx, rng):
    for n in range(1, 201):
        f = random_fock(rng, rng.randint(1, 2), rng.randint(1, 2))
        if not f:
            continue
        v = fock.bargmann_inner(f, f)
        if v.im or v.re <= 0:
            return n, f"<f, f> = {v} for f = {f}"
    return 200, None


@prop("fock", "quantized energy is self-adjoint")
def _f_adjoint(ctx, rng):
    for n in range(1, 101):
        s, l = rng.randint(1, 2), rng.randint(1, 2)
        f, g = random_fock(rng, s, l), random_fock(rng, s, l)
        if fock.bargmann_inner(fock.euler(f), g) != fock.bargmann_inner(f, fock.euler(g)):
            return n, f"f={f}, g={g}"
    return 100, None


def _random_u(rng, l: int) -> list[list[Scalar]]:
    a = [[Scalar() for _ in range(l)] for _ in range(l)]
    for j in range(l):
        a[j][j] = Scalar(0, random_rational(rng))
        for k in range(j + 1, l):
            c = Scalar(random_rational(rng), random_rational(rng))
            a[j][k], a[k][j] = c, -c.conjugate()
    return a


@prop("fock", "Dirac condition for quantized u(l)")
def _f_dirac(ctx, rng):
    for n in range(1, 61):
        s, l = rng.randint(1, 2), rng.randint(1, 3)
        a, b = _random_u(rng, l), _random_u(rng, l)
        f = random_fock(rng, s, l, 4)
        lhs = fock.quantize_u(commutator(a, b), f)
        rhs = fock.quantize_u(a, fock.quantize_u(b, f)) - fock.quantize_u(b, fock.quantize_u(a, f))
        if lhs != rhs * Scalar(0, 1):
            return n, f"a={a}, b={b}, f={f}"
    return 60, None


def _cells(lmax: int = 3, kmax: int = 4):
    return [(s, l, k) for l in range(1, lmax + 1) for s in range(1, l + 1) for k in range(kmax + 1)]


@prop("fock", "invariant basis dimension equals the highest-weight count")
def _f_dims(ctx, rng):
    for n, (s, l, k) in enumerate(_cells(), start=1):
        got, want = len(fock.invariant_basis(s, l, k)), repcount.section_dim(s, l, k)
        if got != want:
            return n, f"(s,l,k)=({s},{l},{k}): basis {got}, section_dim {want}"
    return len(_cells()), None


@prop("fock", "basis elements are O(s)-invariant")
def _f_invariance(ctx, rng):
    n = 0
    for s, l, k in _cells(2, 3) + [(3, 3, 1), (3, 3, 2)]:
        gens = reduction.orthogonal_generators(s)
        for f in fock.invariant_basis(s, l, k):
            n += 1
            if not fock.is_invariant(f, gens):
                return n, f"(s,l,k)=({s},{l},{k}): {f}"
    return n, None


@prop("fock", "Gram matrices are positive definite")
def _f_gram(ctx, rng):
    cells = [(s, l, k) for s, l, k in _cells(2, 3)]
    for n, (s, l, k) in enumerate(cells, start=1):
        if not is_positive_definite(fock.gram(fock.invariant_basis(s, l, k))):
            return n, f"(s,l,k)=({s},{l},{k})"
    return len(cells), None


@prop("fock", "restrictions compose coherently")
def _f_functorial(ctx, rng):
    n = 0
    for k in range(4):
        B = fock.invariant_basis(3, 3, k)
        for f, w in zip(B, B.w_reps):
            n += 1
            direct = fock.costratified_restrict(f, 1)
            via = fock.costratified_restrict(fock.costratified_restrict(f, 2), 1)
            if direct != via or fock.restrict_w(w, 3, 2) != fock.costratified_restrict(f, 2):
                return n, f"k={k}: {w}"
    return n, None


@prop("fock", "restriction kernel matches the delta_s count")
def _f_kernel(ctx, rng):
    cells = [(s, l, k) for s, l, k in _cells() if s >= 2 and (l, k) != (3, 4)]
    for n, (s, l, k) in enumerate(cells, start=1):
        B = fock.invariant_basis(s, l, k)
        drop = len(B) - fock.restriction_rank(B, s - 1)
        if drop != repcount.kernel_dim(s, l, k):
            return n, f"(s,l,k)=({s},{l},{k}): rank drop {drop}, kernel_dim {repcount.kernel_dim(s, l, k)}"
    return len(cells), None


# --- repcount --------------------------------------------------------------------------------

@prop("repcount", "section_dim equals the evaluation oracle (two seeds)")
def _rc_oracle(ctx, rng):
    n = 0
    for s, l, k in _cells():
        want = repcount.section_dim(s, l, k)
        for _ in range(2):
            n += 1
            got = repcount.oracle_dim(s, l, k, rng.randrange(2**32))
            if got != want:
                return n, f"(s,l,k)=({s},{l},{k}): oracle {got}, section_dim {want}"
    return n, None


@prop("repcount", "top level is the full polynomial ring")
def _rc_top(ctx, rng):
    n = 0
    for l in (1, 2, 3):
        for k in range(5):
            n += 1
            if repcount.section_dim(l, l, k) != comb(k + l * (l + 1) // 2 - 1, k):
                return n, f"(l,k)=({l},{k})"
    return n, None


@prop("repcount", "kernel dimensions telescope")
def _rc_telescope(ctx, rng):
    n = 0
    for l in range(2, 6):
        for s in range(2, l + 1):
            for k in range(7):
                n += 1
                lhs = sum(repcount.kernel_dim(t, l, k) for t in range(2, s + 1))
                if lhs != repcount.section_dim(s, l, k) - repcount.section_dim(1, l, k):
                    return n, f"(s,l,k)=({s},{l},{k})"
    return n, None


@prop("repcount", "Weyl dimensions are positive integers")
def _rc_weyl(ctx, rng):
    for n in range(1, 1001):
        l = rng.randint(1, 5)
        lam = sorted((rng.randint(0, 8) for _ in range(l)), reverse=True)
        d = repcount.weyl_dim(lam, l)
        if not (isinstance(d, int) and d > 0):
            return n, f"weight {lam}: {d}"
    return 1000, None
