"""Reward mechanism coupling devoted power to pinned payoffs.

The pool watches each miner's devoted power round over round and
answers with two levers at once: a reward level ``E`` and an equalizer
strategy that pins the miner's long-run payoff to exactly ``E``. The
reward rule is deliberately asymmetric:

* any drop in devoted power is punished immediately with the floor
  reward ``L``;
* holding power steady leaves the reward untouched;
* an increase earns ``H * sigmoid(zeta * (dm / B + 1) * E_prev)``,
  where ``B`` is the largest power the miner has ever devoted. Sharing
  the gain through a saturating curve keeps rewards inside ``(0, H)``
  while still ordering bigger increases above smaller ones.

``L`` and ``H`` must bracket between the miner's mutual-defection and
mutual-cooperation payoffs so every announced reward is actually
pinnable. State per miner lives in a :class:`MinerLedger`; a whole
power schedule can be replayed with :func:`run_mechanism`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ParameterError
from .game import GameParameters, PayoffVectors
from .miners import stable_sigmoid
from .zd import ZDStrategy, strategy_for_target

__all__ = [
    "MechanismConfig",
    "MinerLedger",
    "LEDGER_COLUMNS",
    "initial_rewards",
    "reward_for_increase",
    "start_ledger",
    "step",
    "run_mechanism",
    "ledger_table",
]


def _reference_payoffs() -> PayoffVectors:
    return PayoffVectors.from_parameters(GameParameters())


@dataclass(frozen=True)
class MechanismConfig:
    """Reward bounds and sharing curve for the power-tracking mechanism.

    ``rounds`` and ``miners`` are optional declared dimensions; when
    set, :func:`run_mechanism` validates the schedule against them.
    """

    l_reward: float = 2.0
    h_reward: float = 3.0
    zeta: float = 5.0
    payoffs: PayoffVectors = field(default_factory=_reference_payoffs)
    rounds: int | None = None
    miners: int | None = None

    def __post_init__(self) -> None:
        if not self.l_reward < self.h_reward:
            raise ParameterError(
                f"reward floor must stay below the ceiling: L={self.l_reward}, H={self.h_reward}"
            )
        sm = self.payoffs.miner
        lo, hi = min(sm[0], sm[3]), max(sm[0], sm[3])
        if self.l_reward < lo or self.h_reward > hi:
            raise ParameterError(
                f"[L, H] = [{self.l_reward}, {self.h_reward}] must sit inside the pinnable "
                f"range [{lo}, {hi}]"
            )
        if not self.zeta > 0.0:
            raise ParameterError(f"zeta must be strictly positive, got {self.zeta}")
        for name in ("rounds", "miners"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ParameterError(f"{name} must be >= 1 when declared, got {value}")


LEDGER_COLUMNS = ("round", "miner_id", "m", "dm", "b", "e", "p1", "p2", "p3", "p4")


@dataclass
class MinerLedger:
    """Everything the pool remembers about one miner.

    Parallel per-round histories of devoted power, announced reward,
    and the pinning strategy in force, plus the running power peak
    ``b_cap`` that scales future increases and a counter of floor
    clamps. Each stored strategy carries its target, and that target is
    the announced reward: the pin and the announcement never disagree.
    """

    miner_id: int
    powers: list[float]
    rewards: list[float]
    strategies: list[ZDStrategy]
    b_cap: float
    clamp_events: int = 0

    @property
    def round_count(self) -> int:
        return len(self.powers)

    @property
    def last_reward(self) -> float:
        return self.rewards[-1]

    @property
    def last_strategy(self) -> ZDStrategy:
        return self.strategies[-1]

    def rows(self) -> list[tuple]:
        """Per-round export rows ``(round, miner_id, m, dm, b, e, p1..p4)``.

        ``dm`` is ``None`` on the opening row (no prior reading) and
        ``b`` is the power peak as of that round.
        """
        out = []
        peak = 0.0
        for t in range(self.round_count):
            peak = max(peak, self.powers[t])
            dm = None if t == 0 else self.powers[t] - self.powers[t - 1]
            p = self.strategies[t].strategy
            out.append(
                (t + 1, self.miner_id, self.powers[t], dm, peak, self.rewards[t], *p.probs)
            )
        return out


def ledger_table(ledgers: Sequence[MinerLedger]) -> list[tuple]:
    """All ledgers' rows merged, ordered by round then miner id."""
    rows = [row for ledger in ledgers for row in ledger.rows()]
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def initial_rewards(first_powers: Sequence[float], config: MechanismConfig) -> np.ndarray:
    """Opening rewards proportional to each miner's share of total power.

    The shares map the interval ``[L, H]``: a miner with the whole
    pool's power would open at ``H``, one with none at ``L``.
    """
    m = np.asarray(first_powers, dtype=float)
    if m.ndim != 1 or m.size == 0:
        raise ParameterError("first_powers must be a non-empty 1-D sequence")
    if np.any(m < 0.0):
        raise ParameterError("devoted power cannot be negative")
    total = float(m.sum())
    if total <= 0.0:
        raise ParameterError("total devoted power must be positive in the opening round")
    shares = m / total
    return shares * (config.h_reward - config.l_reward) + config.l_reward


def reward_for_increase(
    dm: float, cap: float, e_prev: float, config: MechanismConfig
) -> tuple[float, bool]:
    """Reward announced for a power increase of ``dm`` under peak ``cap``.

    Returns the reward and whether the floor clamp fired. The raw curve
    ``H * sigmoid(zeta * (dm / cap + 1) * E_prev)`` never reaches ``H``
    but can dip below ``L`` for weak curves, hence the clamp.
    """
    if cap <= 0.0:
        raise ParameterError(f"power peak must be positive, got {cap}")
    y = (dm / cap + 1.0) * e_prev
    raw = config.h_reward * stable_sigmoid(config.zeta * y)
    if raw < config.l_reward:
        return config.l_reward, True
    return raw, False


# Repeated rewards (the floor, converged fixed points) dominate long
# runs; caching the synthesis turns the per-round cost into a dict hit.
@lru_cache(maxsize=8192)
def _pin_cached(e: float, payoffs: PayoffVectors) -> ZDStrategy:
    return strategy_for_target(e, payoffs)


def _pin(e: float, config: MechanismConfig) -> ZDStrategy:
    return _pin_cached(float(e), config.payoffs)


def start_ledger(miner_id: int, m1: float, e1: float, config: MechanismConfig) -> MinerLedger:
    """Open a ledger after the first round's power and reward are known."""
    if m1 < 0.0:
        raise ParameterError("devoted power cannot be negative")
    return MinerLedger(
        miner_id=miner_id,
        powers=[float(m1)],
        rewards=[float(e1)],
        strategies=[_pin(e1, config)],
        b_cap=float(m1),
    )


def step(
    ledger: MinerLedger, m_new: float, config: MechanismConfig
) -> tuple[MinerLedger, float, ZDStrategy]:
    """Advance one miner's ledger by one observed power reading.

    Decreases are punished with the floor reward, unchanged power keeps
    reward and strategy frozen, and increases earn the shared-gain
    curve with the power peak refreshed first. The announced reward is
    re-pinned through a fresh equalizer whenever it changes. Returns
    the ledger (mutated in place) with the new reward and pin.
    """
    if m_new < 0.0:
        raise ParameterError("devoted power cannot be negative")
    dm = m_new - ledger.powers[-1]
    if dm < 0.0:
        e_new = config.l_reward
        strategy = _pin(e_new, config)
    elif dm == 0.0:
        e_new = ledger.rewards[-1]
        strategy = ledger.strategies[-1]
    else:
        ledger.b_cap = max(ledger.b_cap, m_new)
        e_new, clamped = reward_for_increase(dm, ledger.b_cap, ledger.rewards[-1], config)
        if clamped:
            ledger.clamp_events += 1
        strategy = _pin(e_new, config)
    ledger.powers.append(float(m_new))
    ledger.rewards.append(float(e_new))
    ledger.strategies.append(strategy)
    return ledger, float(e_new), strategy


def run_mechanism(schedule: Sequence[Sequence[float]], config: MechanismConfig) -> list[MinerLedger]:
    """Replay a full power schedule, one row per miner, one column per round."""
    grid = np.asarray(schedule, dtype=float)
    if grid.ndim != 2 or grid.shape[1] < 1:
        raise ParameterError(f"schedule must be a 2-D miners x rounds grid, got shape {grid.shape}")
    if config.miners is not None and grid.shape[0] != config.miners:
        raise ParameterError(f"schedule has {grid.shape[0]} miners, config declares {config.miners}")
    if config.rounds is not None and grid.shape[1] != config.rounds:
        raise ParameterError(f"schedule has {grid.shape[1]} rounds, config declares {config.rounds}")
    opening = initial_rewards(grid[:, 0], config)
    ledgers = [
        start_ledger(i, float(grid[i, 0]), float(opening[i]), config)
        for i in range(grid.shape[0])
    ]
    for t in range(1, grid.shape[1]):
        for ledger in ledgers:
            step(ledger, float(grid[ledger.miner_id, t]), config)
    return ledgers
