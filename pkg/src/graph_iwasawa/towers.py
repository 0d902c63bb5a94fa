"""Iwasawa-type invariants of abelian l-towers over bouquets.

A tower is specified by a prime l and loop jumps a_1..a_t; level n is the
degree-l^n circulant cover of the bouquet B_t.  The l-adic valuation of
the spanning-tree count kappa_n eventually obeys

    ord_l(kappa_n) = mu * l^n + lambda * n + nu,

and (mu, lambda) can be read off the coefficients of the polynomial
Q(T) = sum_j P_{|a_j|}(T), where the P_a are the integer recursion with
P_a(eps(1)) = eps(a).  This module computes everything exactly:

* kappa_n from the product of per-level norms N_i (resultants of the
  cyclotomic polynomial against the jump polynomial), divided by l^n;
* the per-level valuation v_i = ord_L(Q(eps)) inside Z[zeta], an
  independent route to ord_l(kappa_n) = -n + sum v_i;
* a certified stabilization level: the smallest i past which the
  ultrametric minimum is attained by a single term, so the affine formula
  provably holds for every larger level, not just the inspected ones.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import cyclotomic, polys
from .cyclotomic import INFINITY, ord_int

DEFAULT_BUDGET_BITS = 1 << 26


@dataclass(frozen=True)
class TowerSpec:
    """Prime l and integer loop jumps defining the tower."""
    ell: int
    generators: tuple

    def __post_init__(self):
        if not cyclotomic.is_prime(self.ell):
            raise ValueError(f"{self.ell} is not prime")
        gens = tuple(int(a) for a in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("need at least one generator")
        if not any(math.gcd(a, self.ell) == 1 for a in gens):
            raise ValueError(
                "no generator is coprime to the prime; covers are disconnected")

    @property
    def t(self) -> int:
        return len(self.generators)

    @property
    def q(self) -> int:
        return 2 * self.t - 1

    @property
    def magnitudes(self) -> tuple:
        return tuple(abs(a) for a in self.generators)

    @property
    def is_cycle_tower(self) -> bool:
        """t = 1 means chi = 0: the tower of cycle graphs."""
        return self.t == 1

    @property
    def zero_generator_indices(self) -> tuple:
        return tuple(j for j, a in enumerate(self.generators) if a == 0)


def p_poly(a: int) -> list[int]:
    """P_0 = 0, P_1 = T, P_a = T*(a^2 - sum_{k<a} (a-k) P_k).

    Degree a, zero constant term, linear coefficient a^2, leading
    coefficient (-1)**(a+1); P_a evaluated at eps(1) gives eps(a).
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    table = [[], [0, 1]]
    for k in range(2, a + 1):
        acc = [k * k]
        for j in range(1, k):
            acc = polys.sub(acc, polys.scale(table[j], k - j))
        table.append(polys.shift(acc, 1))
    return table[a] if a else []


def q_poly(spec: TowerSpec) -> list[int]:
    """Q = sum of P over generator magnitudes; coefficient j is c_j."""
    out: list[int] = []
    for b in spec.magnitudes:
        out = polys.add(out, p_poly(b))
    return out


def mu_lambda(q: list[int], ell: int) -> tuple[int, int]:
    """mu = min ord_l(c_j) over nonzero coefficients; lambda = 2*j* - 1 for
    the smallest index j* attaining it."""
    q = polys.trim(list(q))
    if not q:
        raise ValueError("zero polynomial has no invariants")
    if q[0] != 0:
        raise ValueError("expected zero constant term")
    mu = None
    jstar = None
    for j in range(1, len(q)):
        if q[j] == 0:
            continue
        v = ord_int(q[j], ell)
        if mu is None or v < mu:
            mu, jstar = v, j
    return mu, 2 * jstar - 1


def stabilization_level(q: list[int], ell: int) -> int:
    """Smallest i such that the j* term strictly dominates every other term
    of Q(eps) in the valuation at level i (and hence at all larger levels,
    by monotonicity in phi(l^i))."""
    mu, lam = mu_lambda(q, ell)
    jstar = (lam + 1) // 2
    others = [(j, ord_int(q[j], ell)) for j in range(1, len(q))
              if q[j] != 0 and j != jstar]
    i = 1
    while True:
        phi = cyclotomic.euler_phi_prime_power(ell, i)
        if all(phi * (v - mu) + 2 * (j - jstar) > 0 for j, v in others):
            return i
        i += 1


def level_valuation(spec: TowerSpec, i: int,
                    budget_bits: int | None = DEFAULT_BUDGET_BITS):
    """v_i = ord_L(Q(eps)) evaluated exactly inside Z[y]/Phi_{l^i}."""
    if i < 1:
        raise ValueError("level must be >= 1")
    q = q_poly(spec)
    eps = cyclotomic.epsilon(spec.ell, i, 1)
    acc = cyclotomic.cyc_zero(spec.ell, i)
    for c in reversed(q):
        acc = cyclotomic.cyc_mul(acc, eps)
        if c:
            acc = cyclotomic.cyc_add(acc, cyclotomic.cyc_int(spec.ell, i, c))
    return cyclotomic.ord_L(acc, max_coeff_bits=budget_bits)


def _jump_poly(spec: TowerSpec) -> list[int]:
    # y**B * sum_j (2 - y**b_j - y**(-b_j)), B = max |a_j|
    bs = spec.magnitudes
    big = max(bs)
    if big == 0:
        raise ValueError("all generators are zero")
    f = [0] * (2 * big + 1)
    for b in bs:
        f[big] += 2
        f[big + b] -= 1
        f[big - b] -= 1
    return polys.trim(f)


def level_norm(spec: TowerSpec, i: int,
               budget_bits: int | None = DEFAULT_BUDGET_BITS) -> int:
    """N_i: the positive integer with l^n * kappa_n = prod_{i<=n} N_i.

    Computed as |Res(Phi_{l^i}, jump polynomial)|, the norm of the value of
    the faithful-character L-polynomial at u = 1.
    """
    res = cyclotomic.resultant_with_phi(spec.ell, i, _jump_poly(spec),
                                        max_coeff_bits=budget_bits)
    if res == 0:
        raise ArithmeticError(
            f"level {i} norm vanished; tower invariants are violated")
    return abs(res)


def kappa_exact(spec: TowerSpec, n: int,
                budget_bits: int | None = DEFAULT_BUDGET_BITS) -> int:
    """Spanning-tree count at level n, via the L-function decomposition."""
    if n < 0:
        raise ValueError("level must be >= 0")
    prod = 1
    for i in range(1, n + 1):
        prod *= level_norm(spec, i, budget_bits)
    q, r = divmod(prod, spec.ell ** n)
    if r:
        raise ArithmeticError("product of level norms not divisible by l^n")
    return q


def ord_kappa(spec: TowerSpec, n: int,
              budget_bits: int | None = DEFAULT_BUDGET_BITS) -> int:
    """ord_l(kappa_n) as -n + sum of level valuations (no big kappa built)."""
    if n < 0:
        raise ValueError("level must be >= 0")
    total = -n
    for i in range(1, n + 1):
        v = level_valuation(spec, i, budget_bits)
        if v == INFINITY:
            raise ArithmeticError(f"level {i} valuation is infinite")
        total += v
    return total


@dataclass(frozen=True)
class IwasawaInvariants:
    mu: int
    lam: int
    nu: int
    n0_certified: int
    n0_observed: int
    cycle_case: bool = False


def invariants(spec: TowerSpec,
               budget_bits: int | None = DEFAULT_BUDGET_BITS) -> IwasawaInvariants:
    """Exact (mu, lambda, nu) with a certified stabilization level.

    n0_certified comes from the strict-domination scan; nu is pinned there
    and n0_observed is the earliest level from which the affine formula
    already fits all the way up to n0_certified.
    """
    if spec.is_cycle_tower:
        # kappa_n = l^n exactly; chi = 0 so the generic route is off-limits
        return IwasawaInvariants(mu=0, lam=1, nu=0, n0_certified=1,
                                 n0_observed=1, cycle_case=True)
    q = q_poly(spec)
    mu, lam = mu_lambda(q, spec.ell)
    istar = stabilization_level(q, spec.ell)
    vs = [level_valuation(spec, i, budget_bits) for i in range(1, istar + 1)]
    ords = _ords_from_vs(vs)
    nu = ords[istar] - mu * spec.ell ** istar - lam * istar
    n0_obs = istar
    for n in range(istar - 1, 0, -1):
        if ords[n] == mu * spec.ell ** n + lam * n + nu:
            n0_obs = n
        else:
            break
    return IwasawaInvariants(mu=mu, lam=lam, nu=nu, n0_certified=istar,
                             n0_observed=n0_obs)


def _ords_from_vs(vs) -> list[int]:
    ords = [0]
    for n, v in enumerate(vs, start=1):
        ords.append(ords[n - 1] - 1 + v)
    return ords


# ---------------------------------------------------------------------------
# Bound verification
# ---------------------------------------------------------------------------

@dataclass
class BoundsReport:
    spec: TowerSpec
    n_max: int
    upper_bound_ok: bool
    lower_bound_ok: bool
    divisibility_ok: bool
    mu_bound_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.upper_bound_ok and self.lower_bound_ok
                and self.divisibility_ok and self.mu_bound_ok)


def verify_bounds(spec: TowerSpec, n_max: int,
                  budget_bits: int | None = DEFAULT_BUDGET_BITS) -> BoundsReport:
    """Exact big-integer checks for n <= n_max:

    (a) l^n kappa_n <= (1/(4|chi|)) ((q-1)/(q+1)) (2(q+1))**(l^n), cleared
        of denominators (skipped for the cycle tower, where chi = 0);
    (b) ord_l(kappa_n) >= n;
    (c) kappa_n divides kappa_{n+1};
    and l**mu <= 2(q+1) for the computed mu.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ell, q, t = spec.ell, spec.q, spec.t
    kappas = [kappa_exact(spec, n, budget_bits) for n in range(n_max + 2)]
    rpt = BoundsReport(spec=spec, n_max=n_max, upper_bound_ok=True,
                       lower_bound_ok=True, divisibility_ok=True,
                       mu_bound_ok=True)
    for n in range(n_max + 1):
        if not spec.is_cycle_tower:
            lhs = 4 * (t - 1) * (q + 1) * ell ** n * kappas[n]
            rhs = (q - 1) * (2 * (q + 1)) ** (ell ** n)
            if lhs > rhs:
                rpt.upper_bound_ok = False
                rpt.failures.append(f"upper bound fails at n={n}")
        if ord_int(kappas[n], ell) < n:
            rpt.lower_bound_ok = False
            rpt.failures.append(f"ord_l(kappa_{n}) < {n}")
        if kappas[n + 1] % kappas[n] != 0:
            rpt.divisibility_ok = False
            rpt.failures.append(f"kappa_{n} does not divide kappa_{n + 1}")
    inv = invariants(spec, budget_bits)
    if ell ** inv.mu > 2 * (q + 1):
        rpt.mu_bound_ok = False
        rpt.failures.append("mu exceeds log_l(2(q+1))")
    return rpt


# ---------------------------------------------------------------------------
# Full tower report
# ---------------------------------------------------------------------------

@dataclass
class LevelRecord:
    n: int
    kappa: int
    ord_kappa: int
    v: int | None
    norm: int | None
    fit: bool


@dataclass
class TowerReport:
    spec: TowerSpec
    n_max: int
    q_coeffs: list
    invariants: IwasawaInvariants
    levels: list
    consistency_ok: bool
    fit_ok: bool


def _level_pair(args):
    ell, gens, i, budget = args
    spec = TowerSpec(ell, gens)
    return i, level_norm(spec, i, budget), level_valuation(spec, i, budget)


def build_tower_report(spec: TowerSpec, n_max: int, parallel: bool = False,
                       budget_bits: int | None = DEFAULT_BUDGET_BITS) -> TowerReport:
    """Per-level kappa, valuations, invariants, and fit/consistency flags.

    Levels are independent, so they may be evaluated concurrently; the
    assembled report is identical either way.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    inv = invariants(spec, budget_bits)
    depth = n_max
    tasks = [(spec.ell, spec.generators, i, budget_bits)
             for i in range(1, depth + 1)]
    if parallel and tasks:
        with ProcessPoolExecutor() as pool:
            pairs = list(pool.map(_level_pair, tasks))
    else:
        pairs = [_level_pair(t) for t in tasks]
    pairs.sort()
    norms = [n for _, n, _ in pairs]
    vs = [v for _, _, v in pairs]
    ords = _ords_from_vs(vs)

    levels = []
    consistency_ok = True
    fit_ok = True
    kappa = 1
    prod = 1
    for n in range(n_max + 1):
        if n > 0:
            prod *= norms[n - 1]
            q, r = divmod(prod, spec.ell ** n)
            if r:
                consistency_ok = False
            kappa = q
        o = ord_int(kappa, spec.ell)
        if o != ords[n]:
            consistency_ok = False
        expected = inv.mu * spec.ell ** n + inv.lam * n + inv.nu
        fit = (o == expected)
        if n >= inv.n0_observed and not fit:
            fit_ok = False
        levels.append(LevelRecord(
            n=n, kappa=kappa, ord_kappa=o,
            v=vs[n - 1] if n > 0 else None,
            norm=norms[n - 1] if n > 0 else None,
            fit=fit))
    return TowerReport(spec=spec, n_max=n_max, q_coeffs=q_poly(spec),
                       invariants=inv, levels=levels,
                       consistency_ok=consistency_ok, fit_ok=fit_ok)


# ---------------------------------------------------------------------------
# Serialization: every integer as a decimal string
# ---------------------------------------------------------------------------

def report_to_json(report: TowerReport) -> dict:
    inv = report.invariants
    return {
        "prime": str(report.spec.ell),
        "generators": [str(a) for a in report.spec.generators],
        "t": str(report.spec.t),
        "q": str(report.spec.q),
        "zero_generator_indices": [str(j) for j in
                                   report.spec.zero_generator_indices],
        "cycle_case": inv.cycle_case,
        "n_max": str(report.n_max),
        "q_poly": [str(c) for c in report.q_coeffs],
        "invariants": {
            "mu": str(inv.mu), "lambda": str(inv.lam), "nu": str(inv.nu),
            "n0_certified": str(inv.n0_certified),
            "n0_observed": str(inv.n0_observed),
        },
        "levels": [
            {
                "n": str(rec.n),
                "kappa": str(rec.kappa),
                "ord_kappa": str(rec.ord_kappa),
                "v": None if rec.v is None else str(rec.v),
                "N": None if rec.norm is None else str(rec.norm),
                "fit": rec.fit,
            }
            for rec in report.levels
        ],
        "consistency_ok": report.consistency_ok,
        "fit_ok": report.fit_ok,
    }


def report_from_json(data: dict) -> TowerReport:
    spec = TowerSpec(int(data["prime"]), tuple(int(a) for a in data["generators"]))
    inv = IwasawaInvariants(
        mu=int(data["invariants"]["mu"]),
        lam=int(data["invariants"]["lambda"]),
        nu=int(data["invariants"]["nu"]),
        n0_certified=int(data["invariants"]["n0_certified"]),
        n0_observed=int(data["invariants"]["n0_observed"]),
        cycle_case=bool(data["cycle_case"]),
    )
    levels = [
        LevelRecord(
            n=int(rec["n"]), kappa=int(rec["kappa"]),
            ord_kappa=int(rec["ord_kappa"]),
            v=None if rec["v"] is None else int(rec["v"]),
            norm=None if rec["N"] is None else int(rec["N"]),
            fit=bool(rec["fit"]))
        for rec in data["levels"]
    ]
    return TowerReport(
        spec=spec, n_max=int(data["n_max"]),
        q_coeffs=[int(c) for c in data["q_poly"]],
        invariants=inv, levels=levels,
        consistency_ok=bool(data["consistency_ok"]),
        fit_ok=bool(data["fit_ok"]))


def report_to_csv(report: TowerReport) -> str:
    lines = ["n,ord_kappa,fit"]
    for rec in report.levels:
        lines.append(f"{rec.n},{rec.ord_kappa},{'true' if rec.fit else 'false'}")
    return "\n".join(lines) + "\n"
