"""Producer profit and aim-function maximization over polynomial curves.

Profit is total revenue minus total cost; the aim function adds an influence
curve on top of profit.  Maximizers are located by collecting every real
root of the objective's derivative inside the search domain (closed forms
for derivatives of degree <= 2, otherwise a 1024-interval sign scan plus
bisection to 1e-10) together with both endpoints, then taking the argmax.
Ties between equal maximizers go to the smallest quantity, for determinism.

Also covers the two-input firm: Cobb-Douglas production ``Q = c*K^alpha*L^beta``,
its money profit ``p*Q - m*K - n*L`` and the closed-form output maximization
under the budget constraint ``m*K + n*L = C``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvariantError, OperationError
from .polynomial import Polynomial

FOC_TOL = 1e-8
_BISECT_TOL = 1e-10
_GRID_INTERVALS = 1024


class DegenerateObjective(OperationError):
    """The objective is constant on the domain; there is nothing to maximize."""


class NotAnAimOptimum(OperationError):
    """deviation_check was handed a point that is not an interior aim optimum."""


class NonPositiveInput(OperationError):
    """Cobb-Douglas inputs must be strictly positive."""


@dataclass(frozen=True)
class Domain:
    """Closed quantity interval ``[lo, hi]`` searched for maximizers."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvariantError("domain bounds must be finite")
        if not (0.0 <= self.lo < self.hi):
            raise InvariantError("domain requires 0 <= lo < hi")


@dataclass(frozen=True)
class OptimumReport:
    """Where the objective peaks and how cleanly the first-order condition holds."""

    q_star: float
    objective_value: float
    foc_residual: float
    is_interior: bool
    second_order_ok: bool

    def to_dict(self) -> dict:
        return {
            "q_star": self.q_star,
            "objective_value": self.objective_value,
            "foc_residual": self.foc_residual,
            "is_interior": self.is_interior,
            "second_order_ok": self.second_order_ok,
        }


@dataclass(frozen=True)
class DeviationReport:
    """The marginal-revenue/marginal-cost gap at an aim optimum."""

    gap: float
    satisfies_eq9: bool

    def to_dict(self) -> dict:
        return {"gap": self.gap, "satisfies_eq9": self.satisfies_eq9}


@dataclass(frozen=True)
class PlanChoice:
    """Index of the profit-maximal technology plan and the profit it earns."""

    index: int
    profit: float

    def to_dict(self) -> dict:
        return {"index": self.index, "profit": self.profit}


@dataclass(frozen=True)
class FirmSpec:
    """Two-input firm: scale, exponents, the three prices and the budget."""

    c: float
    alpha: float
    beta: float
    p: float
    m: float
    n: float
    budget: float

    def __post_init__(self):
        for name in ("c", "alpha", "beta", "p", "m", "n", "budget"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise InvariantError(f"firm parameter {name} must be strictly positive")


@dataclass(frozen=True)
class TechnologySet:
    """Finite menu of (input x, output y) production plans."""

    plans: tuple[tuple[float, float], ...]

    def __init__(self, plans: Sequence[tuple[float, float]]):
        pts = tuple((float(x), float(y)) for x, y in plans)
        if not pts:
            raise InvariantError("technology set must be nonempty")
        if any(x < 0.0 or y < 0.0 for x, y in pts):
            raise InvariantError("plans require x >= 0 and y >= 0")
        object.__setattr__(self, "plans", pts)


def _quadratic_roots(c0: float, c1: float, c2: float) -> list[float]:
    # Numerically stable real roots of c2*x^2 + c1*x + c0.
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0.0:
        return []
    if disc == 0.0:
        return [-c1 / (2.0 * c2)]
    s = math.sqrt(disc)
    q = -(c1 + math.copysign(s, c1)) / 2.0
    if q == 0.0:
        return [0.0, -c1 / c2]
    return [q / c2, c0 / q]


def _bisect(poly: Polynomial, a: float, b: float) -> float:
    fa = poly(a)
    while b - a > _BISECT_TOL:
        mid = 0.5 * (a + b)
        fm = poly(mid)
        if fm == 0.0:
            return mid
        if (fa < 0.0) != (fm < 0.0):
            b = mid
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)


def _roots_in(poly: Polynomial, lo: float, hi: float) -> list[float]:
    """Real roots of ``poly`` inside ``[lo, hi]``.

    Exact closed forms up to degree 2; above that, sign-change bracketing on
    a 1024-interval grid refined by bisection.  Even-multiplicity roots that
    never flip sign between grid points are out of reach of the scan, by
    design — the procedure is documented and reproducible.
    """
    deg = poly.degree
    if deg <= 0:
        return []
    if deg == 1:
        c0, c1 = poly.coefficients
        roots = [-c0 / c1]
    elif deg == 2:
        c0, c1, c2 = poly.coefficients
        roots = _quadratic_roots(c0, c1, c2)
    else:
        roots = []
        xs = [lo + (hi - lo) * k / _GRID_INTERVALS for k in range(_GRID_INTERVALS + 1)]
        xs[-1] = hi
        vals = [poly(x) for x in xs]
        for k in range(_GRID_INTERVALS):
            if vals[k] == 0.0:
                roots.append(xs[k])
            elif (vals[k] < 0.0) != (vals[k + 1] < 0.0) and vals[k + 1] != 0.0:
                roots.append(_bisect(poly, xs[k], xs[k + 1]))
        if vals[-1] == 0.0:
            roots.append(hi)
    return sorted(r for r in roots if lo <= r <= hi)


def _maximize(objective: Polynomial, dom: Domain) -> OptimumReport:
    if objective.degree <= 0:
        raise DegenerateObjective("objective is constant on the domain")
    deriv = objective.derivative()

    candidates = [dom.lo, dom.hi]
    for r in _roots_in(deriv, dom.lo, dom.hi):
        # Snap roots that bisection landed next to an endpoint onto it, so
        # boundary optima are reported as boundary optima.
        if abs(r - dom.lo) <= _BISECT_TOL:
            continue
        if abs(r - dom.hi) <= _BISECT_TOL:
            continue
        candidates.append(r)
    candidates.sort()

    q_star, best = dom.lo, objective(dom.lo)
    for q in candidates[1:]:
        v = objective(q)
        if v > best:  # strict: exact ties keep the smallest q
            q_star, best = q, v

    is_interior = q_star != dom.lo and q_star != dom.hi
    second = deriv.derivative()
    return OptimumReport(
        q_star=q_star,
        objective_value=best,
        foc_residual=deriv(q_star),
        is_interior=is_interior,
        second_order_ok=bool(is_interior and second(q_star) < 0.0),
    )


def producer_profit(tech: TechnologySet, p: float, w: float) -> PlanChoice:
    """Pick the plan maximizing ``p*y - w*x``; ties go to the lowest index."""
    if p < 0.0 or w < 0.0:
        raise InvariantError("prices must be nonnegative")
    best_i, best = 0, p * tech.plans[0][1] - w * tech.plans[0][0]
    for i, (x, y) in enumerate(tech.plans[1:], start=1):
        v = p * y - w * x
        if v > best:
            best_i, best = i, v
    return PlanChoice(index=best_i, profit=best)


def maximize_profit(tr: Polynomial, tc: Polynomial, dom: Domain) -> OptimumReport:
    """Maximize profit TR - TC over the domain.

    The residual reported is marginal revenue minus marginal cost at the
    maximizer; at an interior optimum it vanishes (MR = MC).
    """
    return _maximize(tr - tc, dom)


def maximize_aim(
    tr: Polynomial, tc: Polynomial, infl: Polynomial, dom: Domain
) -> OptimumReport:
    """Maximize the aim function TR - TC + I over the domain.

    The residual is MR - MC + dI/dQ at the maximizer.
    """
    return _maximize(tr - tc + infl, dom)


def deviation_check(
    tr: Polynomial,
    tc: Polynomial,
    infl: Polynomial,
    q_star: float,
    tol: float = FOC_TOL,
) -> DeviationReport:
    """Measure how far an interior aim optimum deviates from MR = MC.

    At such a point the gap MR - MC equals -dI/dQ, and is strictly negative
    whenever influence is locally increasing.  When dI/dQ is zero at the
    point the gap degenerates to zero and the strict-negativity clause does
    not apply.

    Raises:
        NotAnAimOptimum: if the aim first-order condition does not hold at
            ``q_star`` within ``tol``.
    """
    aim_deriv = (tr - tc + infl).derivative()
    if abs(aim_deriv(q_star)) > tol:
        raise NotAnAimOptimum(
            f"aim derivative at q={q_star!r} is {aim_deriv(q_star)!r}, beyond tol={tol!r}"
        )
    gap = tr.derivative()(q_star) - tc.derivative()(q_star)
    di = infl.derivative()(q_star)
    satisfies = abs(gap + di) <= tol and (gap < 0.0 if di > 0.0 else True)
    return DeviationReport(gap=gap, satisfies_eq9=satisfies)


def cobb_douglas(firm: FirmSpec, K: float, L: float) -> float:
    """Output ``c * K^alpha * L^beta`` for strictly positive inputs."""
    if K <= 0.0 or L <= 0.0:
        raise NonPositiveInput("capital and labor must be strictly positive")
    return firm.c * K**firm.alpha * L**firm.beta


def firm_profit(firm: FirmSpec, K: float, L: float) -> float:
    """Money profit ``p*Q - m*K - n*L`` at the given input mix."""
    return firm.p * cobb_douglas(firm, K, L) - firm.m * K - firm.n * L


@dataclass(frozen=True)
class LagrangeReport:
    """Closed-form constrained output maximum on the budget line."""

    k_star: float
    l_star: float
    multiplier: float
    q_star: float

    def to_dict(self) -> dict:
        return {
            "K_star": self.k_star,
            "L_star": self.l_star,
            "lambda": self.multiplier,
            "Q_star": self.q_star,
        }


def lagrange_optimize(firm: FirmSpec) -> LagrangeReport:
    """Maximize output subject to ``m*K + n*L = C``.

    Cobb-Douglas makes the first-order system solvable in closed form:
    each input gets the share of the budget given by its exponent.
    The multiplier is the marginal product of capital per unit of its price,
    evaluated at the optimum (equal to the labor-side ratio there).
    """
    share = firm.alpha + firm.beta
    k_star = firm.alpha * firm.budget / (firm.m * share)
    l_star = firm.beta * firm.budget / (firm.n * share)
    q_star = cobb_douglas(firm, k_star, l_star)
    dq_dk = firm.c * firm.alpha * k_star ** (firm.alpha - 1.0) * l_star**firm.beta
    return LagrangeReport(
        k_star=k_star,
        l_star=l_star,
        multiplier=dq_dk / firm.m,
        q_star=q_star,
    )
