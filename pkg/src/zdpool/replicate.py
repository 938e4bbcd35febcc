"""Preset experiment batteries with the reference parameters baked in.

Each battery runs a family of configurations, 100 repetitions by
default, and flattens the aggregated series into one table ready for
CSV emission: payoff-convergence curves for four classical miners
against a fixed pinning strategy, cooperation-probability curves for
history-free miners at two reactivity levels, and the same for
belief-tracking miners. No user input is needed; every constant is
embedded so a given (figure, seed) pair always reproduces the same
table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .game import GameParameters, MixedStrategy, PayoffVectors
from .mechanism import MechanismConfig
from .miners import ClassicalStrategy
from .engine import (
    ClassicalSpec,
    ExperimentConfig,
    FixedPool,
    MechanismPool,
    MemorialSpec,
    NonMemorialSpec,
    run_fixed_zd,
    run_memorial_experiment,
    run_nonmemorial_experiment,
)

__all__ = [
    "FIGURE_IDS",
    "DEFAULT_SEED",
    "FigureDataset",
    "reference_payoffs",
    "reference_mechanism",
    "figure_dataset",
]

FIGURE_IDS = (1, 2, 3, 4)
DEFAULT_SEED = 1014

# reference constants shared by every battery
PIN_STRATEGY = (0.9, 0.3, 0.8, 0.2)
CLASSICAL_LINEUP = (
    ClassicalStrategy.ALWAYS_COOPERATE,
    ClassicalStrategy.ALWAYS_DEFECT,
    ClassicalStrategy.TIT_FOR_TAT,
    ClassicalStrategy.WIN_STAY_LOSE_SHIFT,
)
CLASSICAL_LABELS = ("allc", "alld", "tft", "wsls")
INITIAL_PROBABILITY_GRID = (0.01, 0.1, 0.5, 0.8)
POWER_LINEUP = (1.0, 2.0, 3.0, 4.0)
EPSILON_BY_FIGURE = {2: 5.0, 3: 8.0}
PAYOFF_HORIZON = 10_000
EVOLUTION_HORIZON = 500


def reference_payoffs() -> PayoffVectors:
    return PayoffVectors.from_parameters(GameParameters())


def reference_mechanism() -> MechanismConfig:
    return MechanismConfig(payoffs=reference_payoffs())


@dataclass(frozen=True)
class FigureDataset:
    """One battery's flattened output table plus rendering hints."""

    figure: int
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    seed: int
    repetitions: int
    rounds: int

    @property
    def name(self) -> str:
        return f"figure{self.figure}"


def _payoff_battery(seed: int, repetitions: int, rounds: int) -> FigureDataset:
    payoffs = reference_payoffs()
    pool = FixedPool(MixedStrategy(PIN_STRATEGY))
    rows = []
    for label, kind in zip(CLASSICAL_LABELS, CLASSICAL_LINEUP):
        config = ExperimentConfig(
            payoffs=payoffs,
            rounds=rounds,
            repetitions=repetitions,
            miner_spec=ClassicalSpec(kind),
            pool_spec=pool,
            initial_powers=(1.0,),
            seed=seed,
            record=False,
        )
        result = run_fixed_zd(config)
        for t in range(rounds):
            rows.append(
                (t + 1, label, float(result.running_mean[t]), float(result.running_se[t]))
            )
    return FigureDataset(
        figure=1,
        header=("round", "series", "miner_payoff_mean", "miner_payoff_se"),
        rows=tuple(rows),
        seed=seed,
        repetitions=repetitions,
        rounds=rounds,
    )


def _evolution_battery(
    figure: int, seed: int, repetitions: int, rounds: int
) -> FigureDataset:
    payoffs = reference_payoffs()
    mech = reference_mechanism()
    memorial = figure == 4
    rows = []
    for q0 in INITIAL_PROBABILITY_GRID:
        if memorial:
            spec = MemorialSpec(p0=q0, q0=q0)
        else:
            spec = NonMemorialSpec(q0=q0, epsilon=EPSILON_BY_FIGURE[figure])
        config = ExperimentConfig(
            payoffs=payoffs,
            rounds=rounds,
            repetitions=repetitions,
            miner_spec=spec,
            pool_spec=MechanismPool(mech),
            initial_powers=POWER_LINEUP,
            seed=seed,
            record=False,
        )
        result = (
            run_memorial_experiment(config) if memorial else run_nonmemorial_experiment(config)
        )
        for i, power in enumerate(POWER_LINEUP):
            for t in range(rounds):
                entry = (t + 1, q0, power)
                if not memorial:
                    entry += (EPSILON_BY_FIGURE[figure],)
                entry += (float(result.q_means[i, t]), float(result.q_ses[i, t]))
                rows.append(entry)
    header = ("round", "q0", "power")
    if not memorial:
        header += ("epsilon",)
    header += ("q_mean", "q_se")
    return FigureDataset(
        figure=figure,
        header=header,
        rows=tuple(rows),
        seed=seed,
        repetitions=repetitions,
        rounds=rounds,
    )


def figure_dataset(
    figure: int,
    seed: int = DEFAULT_SEED,
    repetitions: int = 100,
    rounds: "int | None" = None,
) -> FigureDataset:
    """Run one preset battery and return its table.

    Battery 1 plays the four classical miners against the fixed pinning
    strategy and tabulates the cumulative miner-payoff mean per round;
    batteries 2 and 3 run the history-free miners at reactivity 5 and 8;
    battery 4 runs the belief-tracking miners. All use the reference
    payoff constants, powers (1, 2, 3, 4), and the initial-probability
    grid (0.01, 0.1, 0.5, 0.8).
    """
    if figure not in FIGURE_IDS:
        raise ParameterError(f"figure must be one of {FIGURE_IDS}, got {figure!r}")
    if repetitions < 1:
        raise ParameterError(f"repetitions must be >= 1, got {repetitions}")
    if rounds is None:
        rounds = PAYOFF_HORIZON if figure == 1 else EVOLUTION_HORIZON
    if rounds < 1:
        raise ParameterError(f"rounds must be >= 1, got {rounds}")
    if figure == 1:
        return _payoff_battery(seed, repetitions, rounds)
    return _evolution_battery(figure, seed, repetitions, rounds)
