"""Seeded iterated-game executor.

Couples a pool strategy, fixed memory-one play or the power-tracking
reward mechanism, with one of the miner families and runs the repeated
game round by round. Produces full per-round trajectories, averaged
cooperation-probability series with standard errors, and long-run
payoff summaries.

Randomness is split hierarchically: the experiment seed spawns one
stream per repetition, each repetition spawns one stream per miner, and
every stream draws two uniforms per round (miner action first, pool
action second). Runs with the same configuration are therefore
bit-identical, and per-miner results do not shift when other miners are
added or removed.

Round structure, identical in every mode:

1. the miner updates its cooperation probability (adaptive families) or
   reads it from its strategy table;
2. the miner's action is sampled and its devoted power refreshed;
3. a mechanism pool observes the power change and answers with a reward
   and a pinning strategy for this round;
4. the pool's action is sampled from its current strategy at the
   previous joint state;
5. payoffs are recorded and belief-tracking miners fold the announced
   reward into their estimates.

Devoted power defaults to the expected mapping ``m_t = q_t * max
power``, making the power reading an exact mirror of the cooperation
probability; the sampled variant ties it to the realized action
instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence, Union

import numpy as np

from .errors import DomainError, ParameterError
from .game import GameState, MixedStrategy, PayoffVectors
from .mechanism import (
    MechanismConfig,
    MinerLedger,
    initial_rewards,
    reward_for_increase,
    start_ledger,
)
from .mechanism import step as mechanism_step
from .miners import (
    ClassicalStrategy,
    MemorialState,
    frequency_tracked_w_update,
    memorial_update,
    stable_sigmoid,
)
from .zd import equalizer_coefficients

__all__ = [
    "ClassicalSpec",
    "FixedMinerSpec",
    "NonMemorialSpec",
    "MemorialSpec",
    "FixedPool",
    "MechanismPool",
    "ExperimentConfig",
    "Trajectory",
    "FixedRunResult",
    "EvolutionResult",
    "LongRunPayoffs",
    "play_round",
    "rounds_to_sustained",
    "simulate_average_payoffs",
    "run_fixed_zd",
    "run_nonmemorial_experiment",
    "run_memorial_experiment",
    "long_run_actual_payoffs",
]


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class ClassicalSpec:
    """Miner plays a fixed classical memory-one strategy."""

    kind: ClassicalStrategy

    def label(self) -> str:
        return self.kind.name.lower()


@dataclass(frozen=True)
class FixedMinerSpec:
    """Miner plays an arbitrary fixed memory-one strategy."""

    strategy: MixedStrategy

    def label(self) -> str:
        return "fixed"


@dataclass(frozen=True)
class NonMemorialSpec:
    """History-free adaptive miner: sigmoid of the current reward gap."""

    q0: float
    epsilon: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.q0 <= 1.0):
            raise ParameterError(f"q0 must lie in [0, 1], got {self.q0!r}")
        if self.epsilon <= 0.0:
            raise ParameterError(f"epsilon must be positive, got {self.epsilon!r}")

    def label(self) -> str:
        return "nonmemorial"


@dataclass(frozen=True)
class MemorialSpec:
    """Belief-tracking adaptive miner with initial estimates seeded at
    pool-cooperation probability ``p0`` and own probability ``q0``."""

    p0: float
    q0: float

    def __post_init__(self) -> None:
        for name in ("p0", "q0"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ParameterError(f"{name} must lie in [0, 1], got {value!r}")

    def label(self) -> str:
        return "memorial"


MinerSpec = Union[ClassicalSpec, FixedMinerSpec, NonMemorialSpec, MemorialSpec]


@dataclass(frozen=True)
class FixedPool:
    """Pool plays one memory-one strategy for the whole run."""

    strategy: MixedStrategy


@dataclass(frozen=True)
class MechanismPool:
    """Pool runs the power-tracking reward mechanism."""

    config: MechanismConfig


PoolSpec = Union[FixedPool, MechanismPool]

POWER_MAPPINGS = ("expected", "sampled")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything that determines a run, and nothing else.

    ``initial_powers`` holds each miner's maximum (nameplate) power; an
    adaptive experiment runs one coupled game per miner. ``tail_fraction``
    sets the trailing window used for long-run payoff reporting, and
    ``record`` controls whether full trajectories are kept (averages are
    always computed).
    """

    payoffs: PayoffVectors
    rounds: int
    repetitions: int
    miner_spec: MinerSpec
    pool_spec: PoolSpec
    initial_powers: tuple[float, ...]
    seed: int
    power_mapping: str = "expected"
    tail_fraction: float = 0.1
    record: bool = True

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ParameterError(f"rounds must be >= 1, got {self.rounds}")
        if self.repetitions < 1:
            raise ParameterError(f"repetitions must be >= 1, got {self.repetitions}")
        powers = tuple(float(x) for x in self.initial_powers)
        if not powers:
            raise ParameterError("initial_powers must name at least one miner")
        if any(x <= 0.0 for x in powers):
            raise ParameterError("maximum powers must be strictly positive")
        object.__setattr__(self, "initial_powers", powers)
        if self.power_mapping not in POWER_MAPPINGS:
            raise ParameterError(
                f"power_mapping must be one of {POWER_MAPPINGS}, got {self.power_mapping!r}"
            )
        if not (0.0 < self.tail_fraction <= 1.0):
            raise ParameterError(f"tail_fraction must lie in (0, 1], got {self.tail_fraction}")


# ---------------------------------------------------------------------------
# trajectories


@dataclass(frozen=True)
class Trajectory:
    """Column-wise record of one repetition of one miner's game.

    All arrays share one length (the round count). ``q_t_series`` and
    ``p_t_series`` are the cooperation probabilities actually used each
    round; ``strategy_series`` is the pool's full four-component
    strategy and ``reward_series`` the announced reward (NaN for fixed
    pools that pin nothing).
    """

    states: np.ndarray
    pool_coop_flags: np.ndarray
    miner_coop_flags: np.ndarray
    pool_payoffs: np.ndarray
    miner_payoffs: np.ndarray
    q_t_series: np.ndarray
    p_t_series: np.ndarray
    strategy_series: np.ndarray
    reward_series: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        n = len(self.states)
        fields = (
            self.pool_coop_flags,
            self.miner_coop_flags,
            self.pool_payoffs,
            self.miner_payoffs,
            self.q_t_series,
            self.p_t_series,
            self.strategy_series,
            self.reward_series,
        )
        if any(len(arr) != n for arr in fields):
            raise ParameterError("trajectory columns must share one length")

    def __len__(self) -> int:
        return len(self.states)

    @property
    def averages(self) -> tuple[float, float]:
        """(pool, miner) payoff means over the whole run."""
        return float(self.pool_payoffs.mean()), float(self.miner_payoffs.mean())

    def tail_averages(self, fraction: float) -> tuple[float, float]:
        """(pool, miner) payoff means over the trailing window."""
        if not (0.0 < fraction <= 1.0):
            raise ParameterError(f"fraction must lie in (0, 1], got {fraction}")
        n = max(1, int(round(len(self) * fraction)))
        return (
            float(self.pool_payoffs[-n:].mean()),
            float(self.miner_payoffs[-n:].mean()),
        )

    def cumulative_average(self, which: str = "miner") -> np.ndarray:
        """Running payoff mean by round for ``"miner"`` or ``"pool"``."""
        if which not in ("miner", "pool"):
            raise ParameterError(f"which must be 'miner' or 'pool', got {which!r}")
        series = self.miner_payoffs if which == "miner" else self.pool_payoffs
        return np.cumsum(series) / np.arange(1, len(self) + 1)


def play_round(p_coop: float, q_coop: float, rng: np.random.Generator) -> GameState:
    """Sample one joint state: miner draw first, pool draw second."""
    for name, value in (("p_coop", p_coop), ("q_coop", q_coop)):
        if not (0.0 <= value <= 1.0):
            raise ParameterError(f"{name} must lie in [0, 1], got {value!r}")
    miner_cooperates = rng.random() < q_coop
    pool_cooperates = rng.random() < p_coop
    return GameState.from_actions(pool_cooperates, miner_cooperates)


def rounds_to_sustained(
    series: Sequence[float], threshold: float = 0.99, hold: int = 50
) -> int | None:
    """First index from which ``series`` stays >= ``threshold`` for
    ``hold`` consecutive entries, or ``None`` if that never happens."""
    run = 0
    for t, value in enumerate(series):
        run = run + 1 if value >= threshold else 0
        if run >= hold:
            return t - hold + 1
    return None


# ---------------------------------------------------------------------------
# fixed-strategy kernels

# The payoff-only loop is the hot path (10^5..10^6 rounds per case in
# the verification suites), so it touches nothing but scalars.


def _fixed_sums(
    p_probs: tuple[float, float, float, float],
    q_probs: tuple[float, float, float, float],
    rounds: int,
    rng: np.random.Generator,
    s_p: tuple[float, float, float, float],
    s_m: tuple[float, float, float, float],
    initial_state: int,
) -> tuple[float, float]:
    draws = rng.random((rounds, 2)).tolist()
    state = initial_state
    total_p = 0.0
    total_m = 0.0
    for u_m, u_p in draws:
        miner_c = u_m < q_probs[state]
        pool_c = u_p < p_probs[state]
        state = (0 if pool_c else 2) + (0 if miner_c else 1)
        total_p += s_p[state]
        total_m += s_m[state]
    return total_p / rounds, total_m / rounds


def _fixed_record(
    p_probs: tuple[float, float, float, float],
    q_probs: tuple[float, float, float, float],
    rounds: int,
    rng: np.random.Generator,
    payoffs: PayoffVectors,
    initial_state: int,
    pinned: float,
    seed: int,
) -> Trajectory:
    s_p, s_m = payoffs.pool, payoffs.miner
    draws = rng.random((rounds, 2)).tolist()
    state = initial_state
    states = np.empty(rounds, dtype=np.int8)
    pool_flags = np.empty(rounds, dtype=bool)
    miner_flags = np.empty(rounds, dtype=bool)
    pool_pay = np.empty(rounds)
    miner_pay = np.empty(rounds)
    q_series = np.empty(rounds)
    p_series = np.empty(rounds)
    for t in range(rounds):
        u_m, u_p = draws[t]
        q_used = q_probs[state]
        p_used = p_probs[state]
        miner_c = u_m < q_used
        pool_c = u_p < p_used
        state = (0 if pool_c else 2) + (0 if miner_c else 1)
        states[t] = state
        pool_flags[t] = pool_c
        miner_flags[t] = miner_c
        pool_pay[t] = s_p[state]
        miner_pay[t] = s_m[state]
        q_series[t] = q_used
        p_series[t] = p_used
    return Trajectory(
        states=states,
        pool_coop_flags=pool_flags,
        miner_coop_flags=miner_flags,
        pool_payoffs=pool_pay,
        miner_payoffs=miner_pay,
        q_t_series=q_series,
        p_t_series=p_series,
        strategy_series=np.tile(np.array(p_probs), (rounds, 1)),
        reward_series=np.full(rounds, pinned),
        seed=seed,
    )


def simulate_average_payoffs(
    p: "MixedStrategy | Sequence[float]",
    q: "MixedStrategy | Sequence[float]",
    rounds: int,
    seed: int,
    payoffs: PayoffVectors,
    initial_state: GameState = GameState.CC,
) -> tuple[float, float]:
    """Empirical (pool, miner) payoff means for two fixed strategies.

    The lean path for convergence checks: no trajectory is kept, only
    the two running sums.
    """
    if rounds < 1:
        raise ParameterError(f"rounds must be >= 1, got {rounds}")
    p_probs = p.probs if isinstance(p, MixedStrategy) else MixedStrategy(tuple(p)).probs
    q_probs = q.probs if isinstance(q, MixedStrategy) else MixedStrategy(tuple(q)).probs
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    return _fixed_sums(
        p_probs, q_probs, rounds, rng, payoffs.pool, payoffs.miner, int(initial_state)
    )


# ---------------------------------------------------------------------------
# fixed-pool experiment


@dataclass(frozen=True)
class FixedRunResult:
    """Repetition-aggregated outcome of a fixed-pool run.

    ``running_mean``/``running_se`` describe the cumulative average of
    the miner's payoff by round, across repetitions; ``trajectory`` is
    repetition 0 in full (``None`` when recording is off).
    """

    trajectory: "Trajectory | None"
    pool_average: float
    miner_average: float
    per_rep_miner_averages: tuple[float, ...]
    running_mean: np.ndarray
    running_se: np.ndarray

    @property
    def miner_final_average(self) -> float:
        return float(self.running_mean[-1])


def _miner_strategy_table(spec: MinerSpec) -> MixedStrategy:
    if isinstance(spec, ClassicalSpec):
        return spec.kind.mixed
    if isinstance(spec, FixedMinerSpec):
        return spec.strategy
    raise ParameterError(
        "fixed-pool runs need a classical or fixed miner; adaptive miners require the mechanism"
    )


def run_fixed_zd(config: ExperimentConfig) -> FixedRunResult:
    """Iterate a fixed pool strategy against a fixed-table miner.

    Repetitions are averaged into a per-round cumulative mean of the
    miner's payoff with its standard error; the announced-reward column
    of the recorded trajectory carries the strategy's pinned payoff
    when the pool strategy is an equalizer and NaN otherwise.
    """
    if not isinstance(config.pool_spec, FixedPool):
        raise ParameterError("run_fixed_zd needs a fixed pool strategy")
    p = config.pool_spec.strategy
    q = _miner_strategy_table(config.miner_spec)
    try:
        pinned = equalizer_coefficients(p, config.payoffs).pinned_payoff
    except DomainError:
        pinned = math.nan
    reps = config.repetitions
    rounds = config.rounds
    base = np.random.SeedSequence(config.seed)
    sum_series = np.zeros(rounds)
    sumsq_series = np.zeros(rounds)
    pool_total = 0.0
    finals = []
    trajectory = None
    for rep_seq in base.spawn(reps):
        rng = np.random.default_rng(rep_seq.spawn(1)[0])
        traj = _fixed_record(
            p.probs, q.probs, rounds, rng, config.payoffs, int(GameState.CC),
            pinned, config.seed,
        )
        if trajectory is None and config.record:
            trajectory = traj
        running = traj.cumulative_average("miner")
        pool_total += traj.averages[0]
        sum_series += running
        sumsq_series += running * running
        finals.append(float(running[-1]))
    mean = sum_series / reps
    if reps > 1:
        var = np.maximum(sumsq_series / reps - mean * mean, 0.0) * reps / (reps - 1)
        se = np.sqrt(var / reps)
    else:
        se = np.zeros(rounds)
    return FixedRunResult(
        trajectory=trajectory,
        pool_average=pool_total / reps,
        miner_average=float(mean[-1]),
        per_rep_miner_averages=tuple(finals),
        running_mean=mean,
        running_se=se,
    )


# ---------------------------------------------------------------------------
# mechanism-coupled experiments


def _adaptive_single(
    spec: MinerSpec,
    max_power: float,
    e1: float,
    mech: MechanismConfig,
    rounds: int,
    rng: np.random.Generator,
    payoffs: PayoffVectors,
    power_mapping: str,
    miner_id: int,
    seed: int,
) -> tuple[Trajectory, MinerLedger]:
    """One miner against the mechanism for one repetition."""
    s_p, s_m = payoffs.pool, payoffs.miner
    draws = rng.random((rounds, 2)).tolist()
    floor = mech.l_reward
    memorial = isinstance(spec, MemorialSpec)
    nonmemorial = isinstance(spec, NonMemorialSpec)
    if not (memorial or nonmemorial):
        raise ParameterError("mechanism experiments need an adaptive miner family")

    states = np.empty(rounds, dtype=np.int8)
    pool_flags = np.empty(rounds, dtype=bool)
    miner_flags = np.empty(rounds, dtype=bool)
    pool_pay = np.empty(rounds)
    miner_pay = np.empty(rounds)
    q_series = np.empty(rounds)
    p_series = np.empty(rounds)
    strat_series = np.empty((rounds, 4))
    reward_series = np.empty(rounds)

    q = spec.q0
    m = q * max_power
    ledger = start_ledger(miner_id, m, e1, mech)
    e_now = e1
    pvec = ledger.last_strategy.strategy.probs
    mem_state = (
        MemorialState.initial(spec.q0, e1, floor, spec.p0) if memorial else None
    )
    state_history: list[int] = []
    qsum = q
    psum = 0.0
    state_prev = int(GameState.CC)

    for t in range(rounds):
        u_m, u_p = draws[t]
        dm = 0.0
        if t > 0:
            if nonmemorial:
                # counterfactual full-devotion reward vs the floor
                dm_cf = max_power - m
                if dm_cf > 0.0:
                    e_coop, _ = reward_for_increase(dm_cf, max_power, e_now, mech)
                else:
                    e_coop = e_now
                q = stable_sigmoid(spec.epsilon * (e_coop - floor))
            else:
                q = memorial_update(mem_state)
            qsum += q
            miner_c = u_m < q
            if power_mapping == "expected":
                m_new = q * max_power
            else:
                m_new = max_power if miner_c else 0.0
            dm = m_new - m
            ledger, e_now, zd = mechanism_step(ledger, m_new, mech)
            pvec = zd.strategy.probs
            m = m_new
        else:
            miner_c = u_m < q
        p_used = pvec[state_prev]
        pool_c = u_p < p_used
        state = (0 if pool_c else 2) + (0 if miner_c else 1)
        state_history.append(state)
        psum += p_used

        states[t] = state
        pool_flags[t] = pool_c
        miner_flags[t] = miner_c
        pool_pay[t] = s_p[state]
        miner_pay[t] = s_m[state]
        q_series[t] = q
        p_series[t] = p_used
        strat_series[t] = pvec
        reward_series[t] = e_now

        if memorial and t > 0:
            mem_state = frequency_tracked_w_update(
                state_history,
                e_now,
                replace(mem_state, q_t=q),
                cooperative=dm >= 0.0,
                frequencies=(psum / (t + 1), qsum / (t + 1)),
            )
        state_prev = state

    trajectory = Trajectory(
        states=states,
        pool_coop_flags=pool_flags,
        miner_coop_flags=miner_flags,
        pool_payoffs=pool_pay,
        miner_payoffs=miner_pay,
        q_t_series=q_series,
        p_t_series=p_series,
        strategy_series=strat_series,
        reward_series=reward_series,
        seed=seed,
    )
    return trajectory, ledger


def _mechanism_of(config: ExperimentConfig) -> MechanismConfig:
    if not isinstance(config.pool_spec, MechanismPool):
        raise ParameterError("this experiment needs a mechanism pool")
    mech = config.pool_spec.config
    if mech.payoffs != config.payoffs:
        raise ParameterError("mechanism and experiment disagree on the payoff vectors")
    return mech


def _opening_rewards(config: ExperimentConfig, mech: MechanismConfig) -> np.ndarray:
    # opening shares always use expected power: actions are not yet drawn
    q0 = getattr(config.miner_spec, "q0", None)
    if q0 is None:
        raise ParameterError("mechanism experiments need an adaptive miner family")
    first = [q0 * mp for mp in config.initial_powers]
    if sum(first) <= 0.0:
        first = list(config.initial_powers)
    return initial_rewards(first, mech)


@dataclass(frozen=True)
class EvolutionResult:
    """Repetition-averaged cooperation paths for one adaptive config.

    Arrays are (miners, rounds). ``crossings`` holds each miner's
    sustained-threshold round index (or ``None``), computed on the
    averaged series. ``trajectories`` is repetition 0, one per miner,
    ``None`` when recording is off.
    """

    q_means: np.ndarray
    q_ses: np.ndarray
    crossings: tuple["int | None", ...]
    trajectories: "tuple[Trajectory, ...] | None"
    ledgers: tuple[MinerLedger, ...]

    @property
    def final_probabilities(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.q_means[:, -1])


def _run_adaptive(config: ExperimentConfig) -> EvolutionResult:
    mech = _mechanism_of(config)
    opening = _opening_rewards(config, mech)
    n_miners = len(config.initial_powers)
    rounds = config.rounds
    reps = config.repetitions
    base = np.random.SeedSequence(config.seed)
    q_sum = np.zeros((n_miners, rounds))
    # accumulate squares of deviations from the first repetition so the
    # variance of identical repetitions is exactly zero
    q_shift = np.zeros((n_miners, rounds))
    dev_sum = np.zeros((n_miners, rounds))
    dev_sumsq = np.zeros((n_miners, rounds))
    rep0_trajectories: list[Trajectory] = []
    rep0_ledgers: list[MinerLedger] = []
    for r, rep_seq in enumerate(base.spawn(reps)):
        miner_seqs = rep_seq.spawn(n_miners)
        for i in range(n_miners):
            rng = np.random.default_rng(miner_seqs[i])
            trajectory, ledger = _adaptive_single(
                config.miner_spec,
                config.initial_powers[i],
                float(opening[i]),
                mech,
                rounds,
                rng,
                config.payoffs,
                config.power_mapping,
                i,
                config.seed,
            )
            q_sum[i] += trajectory.q_t_series
            if r == 0:
                q_shift[i] = trajectory.q_t_series
                rep0_trajectories.append(trajectory)
                rep0_ledgers.append(ledger)
            else:
                dev = trajectory.q_t_series - q_shift[i]
                dev_sum[i] += dev
                dev_sumsq[i] += dev * dev
    q_means = q_sum / reps
    if reps > 1:
        dev_mean = dev_sum / reps
        var = np.maximum(dev_sumsq / reps - dev_mean * dev_mean, 0.0) * reps / (reps - 1)
        q_ses = np.sqrt(var / reps)
    else:
        q_ses = np.zeros_like(q_means)
    crossings = tuple(rounds_to_sustained(q_means[i]) for i in range(n_miners))
    return EvolutionResult(
        q_means=q_means,
        q_ses=q_ses,
        crossings=crossings,
        trajectories=tuple(rep0_trajectories) if config.record else None,
        ledgers=tuple(rep0_ledgers),
    )


def run_nonmemorial_experiment(config: ExperimentConfig) -> EvolutionResult:
    """Mechanism-coupled run of history-free sigmoid miners."""
    if not isinstance(config.miner_spec, NonMemorialSpec):
        raise ParameterError("config.miner_spec must be a NonMemorialSpec")
    return _run_adaptive(config)


def run_memorial_experiment(config: ExperimentConfig) -> EvolutionResult:
    """Mechanism-coupled run of belief-tracking miners."""
    if not isinstance(config.miner_spec, MemorialSpec):
        raise ParameterError("config.miner_spec must be a MemorialSpec")
    return _run_adaptive(config)


@dataclass(frozen=True)
class LongRunPayoffs:
    """Cumulative and tail-window payoff averages of a mechanism run."""

    pool_average: float
    miner_average: float
    pool_tail: float
    miner_tail: float
    tail_rounds: int

    def __iter__(self):
        yield self.pool_average
        yield self.miner_average


def long_run_actual_payoffs(config: ExperimentConfig) -> LongRunPayoffs:
    """Realized payoff averages of a mechanism-driven adaptive run.

    Averages pool and miner payoffs over every (repetition, miner)
    game, full-horizon and over the trailing ``tail_fraction`` window.
    """
    mech = _mechanism_of(config)
    opening = _opening_rewards(config, mech)
    n_miners = len(config.initial_powers)
    reps = config.repetitions
    base = np.random.SeedSequence(config.seed)
    tail_rounds = max(1, int(round(config.rounds * config.tail_fraction)))
    full_p = full_m = tail_p = tail_m = 0.0
    for rep_seq in base.spawn(reps):
        miner_seqs = rep_seq.spawn(n_miners)
        for i in range(n_miners):
            rng = np.random.default_rng(miner_seqs[i])
            trajectory, _ = _adaptive_single(
                config.miner_spec,
                config.initial_powers[i],
                float(opening[i]),
                mech,
                config.rounds,
                rng,
                config.payoffs,
                config.power_mapping,
                i,
                config.seed,
            )
            a_p, a_m = trajectory.averages
            t_p, t_m = trajectory.tail_averages(config.tail_fraction)
            full_p += a_p
            full_m += a_m
            tail_p += t_p
            tail_m += t_m
    count = reps * n_miners
    return LongRunPayoffs(
        pool_average=full_p / count,
        miner_average=full_m / count,
        pool_tail=tail_p / count,
        miner_tail=tail_m / count,
        tail_rounds=tail_rounds,
    )
