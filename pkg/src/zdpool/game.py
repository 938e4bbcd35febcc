"""Core two-player repeated game between a pool and a miner.

Each round both sides choose to cooperate or defect, giving four joint
outcomes ordered ``CC, CD, DC, DD`` with the pool's action first. Both
players use memory-one strategies: a vector of four cooperation
probabilities, one per previous outcome. A pair of such strategies
induces a Markov chain on the four outcomes, and long-run payoffs are
averages of the per-outcome payoff vectors under that chain's limiting
(Cesaro) distribution.

Payoffs are parameterized by a baseline plus four adjustment terms:

* the pool earns ``K_p`` under mutual cooperation, loses ``pi`` when the
  miner defects, and gains ``mu`` when it defects itself;
* the miner earns ``K_m`` under mutual cooperation, gains ``sigma`` by
  defecting, and loses ``rho`` when the pool defects.

Whether that game is a prisoner's dilemma, and whether its iterated form
rewards steady mutual cooperation over alternating exploitation, reduces
to strict inequalities among ``pi, mu, sigma, rho``; see
:func:`classify_game`.

The module also exposes the determinant identity that underlies
zero-determinant strategies: for ergodic strategy pairs, the stationary
average of any four-vector ``f`` equals a ratio of two 4x4 determinants
built from the strategies and ``f``. Equalizer synthesis in
:mod:`zdpool.zd` rests on forcing the numerator to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Sequence

import numpy as np

from .errors import ParameterError, UndefinedPayoffError
from .tolerances import STRUCTURAL_TOL

__all__ = [
    "GameState",
    "GameParameters",
    "PayoffVectors",
    "build_payoff_vectors",
    "InequalityCheck",
    "GameClassification",
    "classify_game",
    "MixedStrategy",
    "TransitionMatrix",
    "transition_matrix",
    "StationaryDistribution",
    "stationary_distribution",
    "press_dyson_determinant",
    "determinant_payoff",
    "PayoffOutcome",
    "expected_payoffs",
]


class GameState(IntEnum):
    """Joint outcome of one round; pool's action first, miner's second."""

    CC = 0
    CD = 1
    DC = 2
    DD = 3

    @property
    def pool_cooperates(self) -> bool:
        return self in (GameState.CC, GameState.CD)

    @property
    def miner_cooperates(self) -> bool:
        return self in (GameState.CC, GameState.DC)

    @property
    def label(self) -> str:
        return self.name

    @classmethod
    def from_actions(cls, pool_cooperates: bool, miner_cooperates: bool) -> "GameState":
        return cls((0 if pool_cooperates else 2) + (0 if miner_cooperates else 1))


@dataclass(frozen=True)
class GameParameters:
    """Baselines and adjustment terms defining both payoff vectors.

    ``k_p`` and ``k_m`` are unconstrained baselines. The four adjustment
    terms must be strictly positive: each names a real cost or gain, and
    the classification inequalities are only meaningful on that domain.
    """

    k_p: float = 3.0
    k_m: float = 3.0
    pi: float = 3.0
    mu: float = 2.0
    sigma: float = 2.0
    rho: float = 3.0

    def __post_init__(self) -> None:
        for name in ("pi", "mu", "sigma", "rho"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ParameterError(f"adjustment term {name} must be strictly positive, got {value!r}")


@dataclass(frozen=True)
class PayoffVectors:
    """Per-outcome payoffs ``(cc, cd, dc, dd)`` for pool and miner."""

    pool: tuple[float, float, float, float]
    miner: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        for name in ("pool", "miner"):
            vec = getattr(self, name)
            if len(vec) != 4:
                raise ParameterError(f"{name} payoff vector needs 4 entries, got {len(vec)}")
            object.__setattr__(self, name, tuple(float(x) for x in vec))

    @classmethod
    def from_parameters(cls, params: GameParameters) -> "PayoffVectors":
        pool = (
            params.k_p,
            params.k_p - params.pi,
            params.k_p + params.mu,
            params.k_p + params.mu - params.pi,
        )
        miner = (
            params.k_m,
            params.k_m + params.sigma,
            params.k_m - params.rho,
            params.k_m + params.sigma - params.rho,
        )
        return cls(pool=pool, miner=miner)

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.array(self.pool, dtype=float), np.array(self.miner, dtype=float)


def build_payoff_vectors(params: GameParameters) -> PayoffVectors:
    """Evaluate both per-outcome payoff vectors from the parameter form."""
    return PayoffVectors.from_parameters(params)


@dataclass(frozen=True)
class InequalityCheck:
    """One strict inequality with its evaluation on concrete parameters."""

    name: str
    statement: str
    holds: bool


@dataclass(frozen=True)
class GameClassification:
    """Verdict plus the individual inequality evaluations behind it.

    ``kind`` is one of ``"IPD"`` (a prisoner's dilemma whose iterated
    form favors sustained mutual cooperation), ``"PD_only"`` (defection
    is individually tempting and socially wasteful, but alternating
    exploitation beats steady cooperation in repeated play), or
    ``"neither"``.
    """

    kind: str
    checks: tuple[InequalityCheck, ...]
    derived: tuple[InequalityCheck, ...]

    @property
    def is_ipd(self) -> bool:
        return self.kind == "IPD"

    def lines(self) -> list[str]:
        """Human-readable report, one line per check plus the verdict."""
        out = [f"classification: {self.kind}"]
        for check in self.checks:
            out.append(f"  [{'ok' if check.holds else 'FAIL'}] {check.name}: {check.statement}")
        for check in self.derived:
            out.append(f"  (derived) [{'ok' if check.holds else 'FAIL'}] {check.name}: {check.statement}")
        return out


def classify_game(params: GameParameters) -> GameClassification:
    """Classify the stage game induced by ``params``.

    Four strict primary inequalities are evaluated. Two make defection
    dominant yet inefficient (the dilemma): the miner's temptation gain
    stays below the damage it inflicts (``sigma < pi``) and likewise for
    the pool (``mu < rho``). The other two make the iterated game favor
    mutual cooperation over alternating exploitation: each side's loss
    when exploited exceeds the other's gain from exploiting
    (``pi > mu`` and ``rho > sigma``).

    All four together give ``"IPD"``. If only the dilemma pair holds the
    game is ``"PD_only"``; anything else is ``"neither"``. The derived
    checks restate consequences (joint welfare of mutual cooperation,
    per-player no-alternation conditions) and never affect the verdict.
    """
    p = params
    checks = (
        InequalityCheck("pool_exploitation_costly", f"pi > mu ({p.pi} > {p.mu})", p.pi > p.mu),
        InequalityCheck("miner_exploitation_costly", f"rho > sigma ({p.rho} > {p.sigma})", p.rho > p.sigma),
        InequalityCheck("pool_temptation_wasteful", f"mu < rho ({p.mu} < {p.rho})", p.mu < p.rho),
        InequalityCheck("miner_temptation_wasteful", f"sigma < pi ({p.sigma} < {p.pi})", p.sigma < p.pi),
    )
    payoffs = PayoffVectors.from_parameters(p)
    sp, sm = payoffs.pool, payoffs.miner
    derived = (
        InequalityCheck(
            "joint_welfare",
            f"pi + rho > sigma + mu ({p.pi + p.rho} > {p.sigma + p.mu})",
            p.pi + p.rho > p.sigma + p.mu,
        ),
        InequalityCheck(
            "pool_no_alternation",
            f"2*cc > cd + dc for the pool ({2 * sp[0]} > {sp[1] + sp[2]})",
            2 * sp[0] > sp[1] + sp[2],
        ),
        InequalityCheck(
            "miner_no_alternation",
            f"2*cc > cd + dc for the miner ({2 * sm[0]} > {sm[1] + sm[2]})",
            2 * sm[0] > sm[1] + sm[2],
        ),
    )
    dilemma = checks[2].holds and checks[3].holds
    iterated = checks[0].holds and checks[1].holds
    if dilemma and iterated:
        kind = "IPD"
    elif dilemma:
        kind = "PD_only"
    else:
        kind = "neither"
    return GameClassification(kind=kind, checks=checks, derived=derived)


@dataclass(frozen=True)
class MixedStrategy:
    """Memory-one strategy: cooperation probability after each outcome.

    Component order follows :class:`GameState`. Values a hair outside
    ``[0, 1]`` from float arithmetic are snapped to the boundary; real
    violations raise.
    """

    probs: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        if len(self.probs) != 4:
            raise ParameterError(f"strategy needs 4 probabilities, got {len(self.probs)}")
        cleaned = []
        for i, value in enumerate(self.probs):
            v = float(value)
            if v < -STRUCTURAL_TOL or v > 1.0 + STRUCTURAL_TOL:
                raise ParameterError(f"strategy component {i} out of [0, 1]: {v!r}")
            cleaned.append(min(1.0, max(0.0, v)))
        object.__setattr__(self, "probs", tuple(cleaned))

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return np.array(self.probs, dtype=dtype or float)

    def __getitem__(self, index: int) -> float:
        return self.probs[index]

    @classmethod
    def constant(cls, q: float) -> "MixedStrategy":
        """Strategy that ignores history and cooperates with probability ``q``."""
        return cls((q, q, q, q))


def _strategy_array(p: "MixedStrategy | Sequence[float]") -> np.ndarray:
    if not isinstance(p, MixedStrategy):
        p = MixedStrategy(tuple(p))
    return np.array(p.probs, dtype=float)


@dataclass(frozen=True)
class TransitionMatrix:
    """Row-stochastic 4x4 outcome-to-outcome transition matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (4, 4):
            raise ParameterError(f"transition matrix must be 4x4, got {m.shape}")
        if np.any(m < -STRUCTURAL_TOL) or np.any(m > 1.0 + STRUCTURAL_TOL):
            raise ParameterError("transition entries must lie in [0, 1]")
        rows = m.sum(axis=1)
        if np.max(np.abs(rows - 1.0)) > 1e-9:
            raise ParameterError(f"transition rows must sum to 1, got sums {rows}")
        m = np.clip(m, 0.0, 1.0)
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return np.asarray(self.matrix, dtype=dtype or float)


def transition_matrix(
    p: MixedStrategy | Sequence[float], q: MixedStrategy | Sequence[float]
) -> TransitionMatrix:
    """Markov transition matrix induced by pool strategy ``p`` vs miner ``q``.

    Row ``s`` gives the distribution of the next outcome when the
    previous one was ``s``: both sides consult their component for ``s``
    and randomize independently.
    """
    pa = _strategy_array(p)
    qa = _strategy_array(q)
    m = np.column_stack(
        [pa * qa, pa * (1.0 - qa), (1.0 - pa) * qa, (1.0 - pa) * (1.0 - qa)]
    )
    return TransitionMatrix(m)


@dataclass(frozen=True)
class StationaryDistribution:
    """Limiting outcome distribution, with a flag for how it limits.

    ``ergodic`` is True when the chain is primitive, so the per-round
    distribution itself converges to ``probabilities`` from any start.
    When False the chain is reducible or periodic and ``probabilities``
    is the Cesaro (running-average) limit from the given start state.
    """

    probabilities: np.ndarray
    ergodic: bool

    def __post_init__(self) -> None:
        v = np.asarray(self.probabilities, dtype=float)
        v.flags.writeable = False
        object.__setattr__(self, "probabilities", v)

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        return np.asarray(self.probabilities, dtype=dtype or float)


def _boolean_power_all_positive(adj: np.ndarray, exponent: int) -> bool:
    result = adj.copy()
    for _ in range(exponent - 1):
        result = (result.astype(float) @ adj.astype(float)) > 0
    return bool(result.all())


def _solve_stationary(a: np.ndarray, support: np.ndarray) -> np.ndarray:
    """Stationary row vector of ``a`` restricted to index set ``support``.

    Solves ``v (A - I) = 0`` with the normalization row appended in
    place of one redundant equation. Falls back to least squares if the
    replaced system is singular to working precision.
    """
    sub = a[np.ix_(support, support)]
    n = len(support)
    m = sub.T - np.eye(n)
    m[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    try:
        v = np.linalg.solve(m, b)
    except np.linalg.LinAlgError:
        v, *_ = np.linalg.lstsq(m, b, rcond=None)
    v = np.clip(v, 0.0, None)
    total = v.sum()
    if total <= 0.0:
        raise UndefinedPayoffError("stationary solve collapsed to the zero vector")
    v = v / total
    full = np.zeros(a.shape[0])
    full[support] = v
    return full


def _closed_classes(reach: np.ndarray) -> list[np.ndarray]:
    """Strongly connected classes that the chain can never leave."""
    n = reach.shape[0]
    mutual = reach & reach.T
    seen: set[int] = set()
    classes: list[np.ndarray] = []
    for i in range(n):
        if i in seen:
            continue
        members = np.flatnonzero(mutual[i])
        seen.update(int(j) for j in members)
        # closed iff nothing outside the class is reachable from it
        outside = np.setdiff1d(np.arange(n), members)
        if not reach[np.ix_(members, outside)].any():
            classes.append(members)
    return classes


def stationary_distribution(
    transition: TransitionMatrix | np.ndarray,
    initial_state: GameState = GameState.CC,
) -> StationaryDistribution:
    """Long-run outcome distribution of ``transition``.

    For primitive chains this is the unique stationary vector and the
    start state is irrelevant. Otherwise the exact Cesaro limit from
    ``initial_state`` is assembled: each closed recurrent class carries
    its own stationary vector, weighted by the probability of being
    absorbed there from the start state; transient outcomes get weight
    zero.
    """
    a = np.asarray(transition, dtype=float)
    adj = a > 0.0
    # a 4-state chain is primitive iff the boolean 10th power is full
    if _boolean_power_all_positive(adj, 10):
        v = _solve_stationary(a, np.arange(4))
        return StationaryDistribution(probabilities=v, ergodic=True)

    eye = np.eye(4, dtype=bool)
    reach = eye | adj
    for _ in range(2):
        reach = reach | ((reach.astype(float) @ reach.astype(float)) > 0)
    classes = _closed_classes(reach)
    start = int(initial_state)

    weights: list[float] = []
    vectors: list[np.ndarray] = []
    recurrent = np.zeros(4, dtype=bool)
    for members in classes:
        recurrent[members] = True
    transient = np.flatnonzero(~recurrent)

    absorb: dict[int, np.ndarray] = {}
    if len(transient) and start in set(int(t) for t in transient):
        # hitting probabilities into each closed class from the start
        q = a[np.ix_(transient, transient)]
        lhs = np.eye(len(transient)) - q
        for idx, members in enumerate(classes):
            rhs = a[np.ix_(transient, members)].sum(axis=1)
            h = np.linalg.solve(lhs, rhs)
            absorb[idx] = h

    for idx, members in enumerate(classes):
        v = _solve_stationary(a, members)
        if start in set(int(m) for m in members):
            w = 1.0
        elif recurrent[start]:
            w = 0.0
        else:
            pos = int(np.flatnonzero(transient == start)[0])
            w = float(absorb[idx][pos])
        weights.append(w)
        vectors.append(v)

    combined = np.zeros(4)
    for w, v in zip(weights, vectors):
        combined += w * v
    total = combined.sum()
    if total <= 0.0:
        raise UndefinedPayoffError("no recurrent class is reachable from the start state")
    combined = combined / total
    return StationaryDistribution(probabilities=combined, ergodic=False)


def press_dyson_determinant(
    p: MixedStrategy | Sequence[float],
    q: MixedStrategy | Sequence[float],
    f: Sequence[float] | np.ndarray,
) -> float:
    """Press-Dyson determinant ``D(p, q, f)``.

    The 4x4 determinant whose columns are the joint cooperation terms,
    the pool's strategy with 1 subtracted where the pool just
    cooperated, the miner's strategy with 1 subtracted where the miner
    just cooperated, and ``f``. Its defining property: for any
    four-vector ``f``, the stationary average ``v . f`` is proportional
    to this determinant, with a proportionality constant independent of
    ``f``. A strategy choice that zeroes its own column therefore zeroes
    ``v . f`` for the matching ``f`` regardless of the opponent.
    """
    pa = _strategy_array(p)
    qa = _strategy_array(q)
    fa = np.asarray(f, dtype=float)
    if fa.shape != (4,):
        raise ParameterError(f"f must be a 4-vector, got shape {fa.shape}")
    col1 = pa * qa - np.array([1.0, 0.0, 0.0, 0.0])
    col2 = pa - np.array([1.0, 1.0, 0.0, 0.0])
    col3 = qa - np.array([1.0, 0.0, 1.0, 0.0])
    return float(np.linalg.det(np.column_stack([col1, col2, col3, fa])))


def determinant_payoff(
    p: MixedStrategy | Sequence[float],
    q: MixedStrategy | Sequence[float],
    values: Sequence[float] | np.ndarray,
) -> float:
    """Stationary average of ``values`` via the determinant identity.

    Computes ``D(p, q, values) / D(p, q, 1)``. Valid whenever the
    induced chain has a unique stationary vector; with several closed
    classes the denominator vanishes and this raises.
    """
    num = press_dyson_determinant(p, q, values)
    den = press_dyson_determinant(p, q, np.ones(4))
    if abs(den) < 1e-12:
        raise UndefinedPayoffError(
            "normalizing determinant vanishes; the chain has no unique stationary vector"
        )
    return num / den


@dataclass(frozen=True)
class PayoffOutcome:
    """Long-run average payoffs for both sides plus the distribution used.

    Unpacks as the pair ``(pool, miner)`` for callers that only want the
    two scalars.
    """

    pool: float
    miner: float
    distribution: StationaryDistribution

    @property
    def ergodic(self) -> bool:
        return self.distribution.ergodic

    def __iter__(self):
        return iter((self.pool, self.miner))


def expected_payoffs(
    p: MixedStrategy | Sequence[float],
    q: MixedStrategy | Sequence[float],
    payoffs: PayoffVectors,
    initial_state: GameState = GameState.CC,
) -> PayoffOutcome:
    """Exact long-run average payoffs of pool ``p`` against miner ``q``."""
    dist = stationary_distribution(transition_matrix(p, q), initial_state=initial_state)
    sp, sm = payoffs.as_arrays()
    v = np.asarray(dist)
    return PayoffOutcome(pool=float(v @ sp), miner=float(v @ sm), distribution=dist)
