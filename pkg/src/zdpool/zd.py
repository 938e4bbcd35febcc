"""Equalizer synthesis: pool strategies that pin the miner's payoff.

A memory-one pool strategy ``p`` is an equalizer when its Press-Dyson
column ``(p1 - 1, p2 - 1, p3, p4)`` is an affine combination
``beta * S_m + gamma * 1`` of the miner's payoff vector and the ones
vector. The determinant identity then forces the miner's long-run
average payoff to ``-gamma / beta`` against every miner strategy; no
response, pure or mixed, can move it. The pin also survives loss of
ergodicity, because a column in the span of ``S_m`` and ``1`` makes
``v . (S_m - target)`` vanish under every stationary ``v``.

Three entry points:

* :func:`derive_p2_p3` solves the two interior components from the two
  corner components, leaving feasibility to the caller;
* :func:`strategy_for_target` synthesizes a full feasible strategy for
  a requested pinned payoff via a one-parameter family, choosing the
  scale just inside the feasibility boundary;
* :func:`self_control_report` scans the analogous construction applied
  to the pool's own payoff vector, which is infeasible everywhere
  except a single degenerate corner: a pool cannot pin itself.

Payoff-vector arguments accept either a plain 4-sequence or a
:class:`~zdpool.game.PayoffVectors`; in the latter case the miner's
vector is used by the miner-pinning operations and the pool's vector by
the self-control scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateSpreadError,
    DomainError,
    InfeasibleTargetError,
    ParameterError,
    UndefinedPayoffError,
)
from .game import MixedStrategy, PayoffVectors
from .tolerances import CONTROL_TOL, STRUCTURAL_TOL

__all__ = [
    "ZDCoefficients",
    "ZDStrategy",
    "derive_p2_p3",
    "controlled_payoff",
    "equalizer_coefficients",
    "strategy_for_target",
    "SelfControlPoint",
    "SelfControlReport",
    "self_control_report",
]

# Scale used when the caller does not pick one: stay strictly inside the
# feasible interval so every component keeps a little slack.
DEFAULT_SCALE_FRACTION = 0.95


@dataclass(frozen=True)
class ZDCoefficients:
    """Affine coefficients tying a strategy column to the payoff vectors.

    The pinned column equals ``alpha * S_p + beta * S_m + gamma * 1``.
    Equalizers keep ``alpha = 0``; the self-control scan keeps
    ``beta = 0``.
    """

    alpha: float
    beta: float
    gamma: float

    @property
    def pinned_payoff(self) -> float:
        """Payoff forced on the targeted player, ``-gamma / beta``."""
        if self.beta == 0.0:
            raise UndefinedPayoffError("beta is zero; this vector pins nothing")
        return -self.gamma / self.beta


@dataclass(frozen=True)
class ZDStrategy:
    """A feasible equalizer with its target and certifying coefficients."""

    strategy: MixedStrategy
    target_payoff: float
    coefficients: ZDCoefficients


def _miner_vector(values: "PayoffVectors | Sequence[float]") -> tuple[float, float, float, float]:
    if isinstance(values, PayoffVectors):
        return values.miner
    vec = tuple(float(x) for x in values)
    if len(vec) != 4:
        raise ParameterError(f"payoff vector needs 4 entries, got {len(vec)}")
    return vec


def _pool_vector(values: "PayoffVectors | Sequence[float]") -> tuple[float, float, float, float]:
    if isinstance(values, PayoffVectors):
        return values.pool
    return _miner_vector(values)


def _spread(values: Sequence[float]) -> float:
    spread = values[0] - values[3]
    if spread == 0.0:
        raise DegenerateSpreadError(
            "mutual-cooperation and mutual-defection payoffs coincide; no pinning strategy exists"
        )
    return spread


def _probability(name: str, value: float) -> float:
    if not (0.0 <= value <= 1.0):
        raise ParameterError(f"{name} must lie in [0, 1], got {value!r}")
    return float(value)


def derive_p2_p3(
    p1: float, p4: float, s_m: "PayoffVectors | Sequence[float]"
) -> tuple[float, float]:
    """Interior components completing an equalizer from its corners.

    Given the cooperation probabilities after mutual cooperation
    (``p1``) and mutual defection (``p4``), returns the unique
    ``(p2, p3)`` placing the strategy's column in the span of the miner
    payoffs and the ones vector. The values are returned raw: for many
    corner pairs one of them leaves ``[0, 1]``, meaning no feasible
    equalizer has those corners.
    """
    cc, cd, dc, dd = _miner_vector(s_m)
    _probability("p1", p1)
    _probability("p4", p4)
    spread = _spread((cc, cd, dc, dd))
    p2 = (p1 * (cd - dd) - (1.0 + p4) * (cd - cc)) / spread
    p3 = ((1.0 - p1) * (dd - dc) + p4 * (cc - dc)) / spread
    return p2, p3


def controlled_payoff(p1: float, p4: float, s_m: "PayoffVectors | Sequence[float]") -> float:
    """Payoff pinned on the miner by the equalizer with corners ``p1, p4``.

    A convex combination of the mutual-defection and mutual-cooperation
    payoffs with weights ``(1 - p1)`` and ``p4``, so the result always
    lies between the two. At ``p1 = 1, p4 = 0`` both weights vanish and
    the pinned value is undefined.
    """
    vec = _miner_vector(s_m)
    _probability("p1", p1)
    _probability("p4", p4)
    _spread(vec)
    denom = (1.0 - p1) + p4
    if denom == 0.0:
        raise UndefinedPayoffError(
            "p1 = 1 and p4 = 0 give a vanishing pin; the controlled payoff is 0/0"
        )
    return ((1.0 - p1) * vec[3] + p4 * vec[0]) / denom


def equalizer_coefficients(
    p: MixedStrategy | Sequence[float],
    s_m: "PayoffVectors | Sequence[float]",
    tol: float = CONTROL_TOL,
) -> ZDCoefficients:
    """Recover ``(beta, gamma)`` certifying that ``p`` is an equalizer.

    Solves the two corner components for the two coefficients and then
    verifies the interior components land within ``tol``. Raises if the
    strategy's column is not an affine image of the miner payoffs.
    """
    if not isinstance(p, MixedStrategy):
        p = MixedStrategy(tuple(float(x) for x in p))
    vec = np.array(_miner_vector(s_m))
    column = np.asarray(p) - np.array([1.0, 1.0, 0.0, 0.0])
    spread = _spread(tuple(vec))
    # corner 2x2 system: rows cc and dd of column = beta*S_m + gamma
    beta = (column[0] - column[3]) / spread
    gamma = column[0] - beta * vec[0]
    residual = column - (beta * vec + gamma)
    worst = float(np.max(np.abs(residual)))
    if worst > tol:
        raise DomainError(
            f"strategy is not an equalizer: interior residual {worst:.3e} exceeds {tol:.1e}"
        )
    return ZDCoefficients(alpha=0.0, beta=float(beta), gamma=float(gamma))


def strategy_for_target(
    target: float,
    s_m: "PayoffVectors | Sequence[float]",
    scale: float | None = None,
) -> ZDStrategy:
    """Feasible equalizer pinning the miner's payoff at ``target``.

    The pinnable range is exactly the closed interval between the
    mutual-defection and mutual-cooperation payoffs. Within it, the
    equalizers form a one-parameter family: with
    ``w = (target - dd) / (cc - dd)``, setting ``1 - p1 = lam * (1 - w)``
    and ``p4 = lam * w`` hits the target for every scale ``lam > 0``,
    and the interior components are affine in ``lam``, so feasibility
    holds up to a closed-form maximum scale (capped at 1). The default
    picks 95% of that maximum, keeping all four components strictly
    interior when possible; ``scale`` overrides it, and an infeasible
    override raises with the binding component named.
    """
    cc, cd, dc, dd = _miner_vector(s_m)
    spread = _spread((cc, cd, dc, dd))
    lo, hi = min(cc, dd), max(cc, dd)
    if not (lo <= target <= hi):
        raise InfeasibleTargetError(
            f"target {target} outside the pinnable range [{lo}, {hi}]"
        )
    w = (target - dd) / spread
    c2 = w - (cd - dd) / spread
    c3 = w - (dc - dd) / spread
    # p2 = 1 + lam*c2 needs lam <= -1/c2 when c2 < 0;
    # p3 = lam*c3 needs lam <= 1/c3 when c3 > 0;
    # p1 = 1 - lam*(1 - w) and p4 = lam*w hold for any lam <= 1.
    bounds = {"p1/p4": 1.0}
    if c2 < 0.0:
        bounds["p2"] = -1.0 / c2
    elif c2 > 0.0:
        raise InfeasibleTargetError(
            f"component p2 exceeds 1 for every positive scale (coefficient {c2:.6g} > 0)"
        )
    if c3 > 0.0:
        bounds["p3"] = 1.0 / c3
    elif c3 < 0.0:
        raise InfeasibleTargetError(
            f"component p3 falls below 0 for every positive scale (coefficient {c3:.6g} < 0)"
        )
    lam_max = min(bounds.values())
    if scale is None:
        lam = DEFAULT_SCALE_FRACTION * lam_max
    else:
        if not (0.0 < scale <= lam_max + STRUCTURAL_TOL):
            binding = min(bounds, key=bounds.get)
            raise InfeasibleTargetError(
                f"scale {scale} outside (0, {lam_max:.6g}]; binding component is {binding}"
            )
        lam = float(scale)
    p = MixedStrategy(
        (
            1.0 - lam * (1.0 - w),
            1.0 + lam * c2,
            lam * c3,
            lam * w,
        )
    )
    coeffs = ZDCoefficients(alpha=0.0, beta=-lam / spread, gamma=lam * target / spread)
    return ZDStrategy(strategy=p, target_payoff=float(target), coefficients=coeffs)


@dataclass(frozen=True)
class SelfControlPoint:
    """One corner pair from the self-pinning scan, with its verdict."""

    p1: float
    p4: float
    p2: float
    p3: float
    alpha: float
    gamma: float

    @property
    def violations(self) -> tuple[str, ...]:
        """Range violations of the implied interior components, if any."""
        out = []
        if self.p2 < -STRUCTURAL_TOL:
            out.append("p2 < 0")
        if self.p2 > 1.0 + STRUCTURAL_TOL:
            out.append("p2 > 1")
        if self.p3 < -STRUCTURAL_TOL:
            out.append("p3 < 0")
        if self.p3 > 1.0 + STRUCTURAL_TOL:
            out.append("p3 > 1")
        return tuple(out)

    @property
    def feasible(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class SelfControlReport:
    """Outcome of scanning the pool's self-pinning construction.

    ``feasible_points`` lists every grid pair whose implied ``(p2, p3)``
    lie in ``[0, 1]``. For prisoner's-dilemma payoffs the list collapses
    to the single corner ``(p1, p4) = (1, 0)``, i.e. the strategy
    ``(1, 1, 0, 0)``, whose coefficients are both zero and therefore pin
    nothing: the pool cannot fix its own payoff. Arbitrary off-grid
    pairs can be evaluated with :meth:`point`.
    """

    grid_step: float
    total_points: int
    feasible_points: tuple[SelfControlPoint, ...]
    s_p: tuple[float, float, float, float]

    @property
    def only_degenerate(self) -> bool:
        return all(
            point.alpha == 0.0 and point.gamma == 0.0 for point in self.feasible_points
        )

    def point(self, p1: float, p4: float) -> SelfControlPoint:
        """Evaluate one corner pair exactly, with violation flags."""
        return _self_control_point(p1, p4, self.s_p)


def _self_control_point(
    p1: float, p4: float, sp: tuple[float, float, float, float]
) -> SelfControlPoint:
    cc, cd, dc, dd = sp
    spread = _spread(sp)
    _probability("p1", p1)
    _probability("p4", p4)
    p2 = ((1.0 + p4) * (cc - cd) - p1 * (dd - cd)) / spread
    p3 = (-(1.0 - p1) * (dc - dd) - p4 * (dc - cc)) / spread
    alpha = (p1 - p4 - 1.0) / spread
    gamma = ((1.0 - p1) * dd + p4 * cc) / spread
    # + 0.0 folds negative zeros from the algebra into plain zeros
    return SelfControlPoint(
        p1=float(p1),
        p4=float(p4),
        p2=float(p2) + 0.0,
        p3=float(p3) + 0.0,
        alpha=alpha + 0.0,
        gamma=gamma + 0.0,
    )


def self_control_report(
    s_p: "PayoffVectors | Sequence[float]", grid_step: float = 0.01
) -> SelfControlReport:
    """Scan corner pairs for pool strategies pinning the pool's own payoff.

    Mirrors the equalizer construction with the pool's payoff vector in
    place of the miner's: for each ``(p1, p4)`` on a uniform grid the
    implied interior components are computed, and the pair is kept only
    if both land in ``[0, 1]`` (within float slack). Each kept point
    carries its affine coefficients; a point with both coefficients zero
    cannot pin any payoff.
    """
    if not (0.0 < grid_step <= 0.5):
        raise ParameterError(f"grid_step must lie in (0, 0.5], got {grid_step}")
    sp = _pool_vector(s_p)
    cc, cd, dc, dd = sp
    spread = _spread(sp)
    steps = int(round(1.0 / grid_step))
    axis = np.linspace(0.0, 1.0, steps + 1)
    p1g, p4g = np.meshgrid(axis, axis, indexing="ij")
    p2 = ((1.0 + p4g) * (cc - cd) - p1g * (dd - cd)) / spread
    p3 = (-(1.0 - p1g) * (dc - dd) - p4g * (dc - cc)) / spread
    ok = (
        (p2 >= -STRUCTURAL_TOL)
        & (p2 <= 1.0 + STRUCTURAL_TOL)
        & (p3 >= -STRUCTURAL_TOL)
        & (p3 <= 1.0 + STRUCTURAL_TOL)
    )
    points = [
        _self_control_point(float(axis[i]), float(axis[j]), sp)
        for i, j in zip(*np.nonzero(ok))
    ]
    return SelfControlReport(
        grid_step=float(grid_step),
        total_points=int(axis.size * axis.size),
        feasible_points=tuple(points),
        s_p=sp,
    )
