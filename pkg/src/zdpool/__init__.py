"""Pinned-payoff pooled mining: game algebra, equalizer synthesis,
reward mechanism, and seeded experiment engine."""

from .errors import (
    DegenerateSpreadError,
    DomainError,
    InfeasibleTargetError,
    ParameterError,
    UndefinedPayoffError,
)
from .game import (
    GameClassification,
    GameParameters,
    GameState,
    MixedStrategy,
    PayoffOutcome,
    PayoffVectors,
    StationaryDistribution,
    TransitionMatrix,
    build_payoff_vectors,
    classify_game,
    determinant_payoff,
    expected_payoffs,
    press_dyson_determinant,
    stationary_distribution,
    transition_matrix,
)
from .zd import (
    SelfControlPoint,
    SelfControlReport,
    ZDCoefficients,
    ZDStrategy,
    controlled_payoff,
    derive_p2_p3,
    equalizer_coefficients,
    self_control_report,
    strategy_for_target,
)
from .miners import (
    ClassicalStrategy,
    MemorialState,
    NonMemorialState,
    classical_cooperation_prob,
    clamp_frequency,
    frequency_tracked_w_update,
    memorial_update,
    nonmemorial_update,
    update_w_values,
)
from .mechanism import (
    MechanismConfig,
    MinerLedger,
    initial_rewards,
    ledger_table,
    reward_for_increase,
    run_mechanism,
    start_ledger,
    step,
)
from .engine import (
    ClassicalSpec,
    EvolutionResult,
    ExperimentConfig,
    FixedMinerSpec,
    FixedPool,
    FixedRunResult,
    LongRunPayoffs,
    MechanismPool,
    MemorialSpec,
    NonMemorialSpec,
    Trajectory,
    long_run_actual_payoffs,
    play_round,
    rounds_to_sustained,
    run_fixed_zd,
    run_memorial_experiment,
    run_nonmemorial_experiment,
    simulate_average_payoffs,
)
from .replicate import FigureDataset, figure_dataset

__version__ = "0.1.0"
