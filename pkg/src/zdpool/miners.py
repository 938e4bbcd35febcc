"""Miner-side strategy families: classical, payoff-reactive, belief-tracking.

Three tiers of sophistication, matching how much a miner can observe:

* classical memory-one strategies react only to the previous round's
  joint state;
* nonmemorial miners compare the current round's cooperation and
  defection rewards through a sigmoid and keep no history;
* memorial miners maintain running estimates ``W_c`` and ``W_d`` of the
  reward for cooperating and defecting, reconstructed each round from
  the realized reward and clamped empirical frequencies, and update
  their cooperation probability multiplicatively.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from .errors import ParameterError
from .game import GameState, MixedStrategy, PayoffVectors
from .tolerances import DEGENERATE_PAYOFF_EPS

__all__ = [
    "ClassicalStrategy",
    "classical_cooperation_prob",
    "NonMemorialState",
    "nonmemorial_update",
    "MemorialState",
    "memorial_update",
    "update_w_values",
    "clamp_frequency",
    "frequency_tracked_w_update",
]

logger = logging.getLogger(__name__)


class ClassicalStrategy(Enum):
    """Memory-one miner archetypes, as cooperation probabilities per state."""

    ALWAYS_COOPERATE = (1.0, 1.0, 1.0, 1.0)
    ALWAYS_DEFECT = (0.0, 0.0, 0.0, 0.0)
    TIT_FOR_TAT = (1.0, 1.0, 0.0, 0.0)
    WIN_STAY_LOSE_SHIFT = (1.0, 0.0, 0.0, 1.0)

    @property
    def mixed(self) -> MixedStrategy:
        return MixedStrategy(self.value)

    @classmethod
    def from_name(cls, name: str) -> "ClassicalStrategy":
        key = name.strip().lower().replace("-", "_").replace(" ", "_")
        aliases = {
            "allc": cls.ALWAYS_COOPERATE,
            "always_cooperate": cls.ALWAYS_COOPERATE,
            "cooperate": cls.ALWAYS_COOPERATE,
            "alld": cls.ALWAYS_DEFECT,
            "always_defect": cls.ALWAYS_DEFECT,
            "defect": cls.ALWAYS_DEFECT,
            "tft": cls.TIT_FOR_TAT,
            "tit_for_tat": cls.TIT_FOR_TAT,
            "wsls": cls.WIN_STAY_LOSE_SHIFT,
            "win_stay_lose_shift": cls.WIN_STAY_LOSE_SHIFT,
            "pavlov": cls.WIN_STAY_LOSE_SHIFT,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ParameterError(
                f"unknown classical strategy {name!r}; valid: allc, alld, tft, wsls"
            ) from None


def classical_cooperation_prob(
    kind: "ClassicalStrategy | str", previous_state: GameState
) -> float:
    """Cooperation probability of a classical miner given last round's state."""
    if isinstance(kind, str):
        kind = ClassicalStrategy.from_name(kind)
    return kind.mixed[GameState(previous_state)]


def stable_sigmoid(x: float) -> float:
    # avoid overflow in exp for large |x|
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


@dataclass(frozen=True)
class NonMemorialState:
    """Cooperation probability and reactivity of a history-free miner."""

    q_t: float
    epsilon: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.q_t <= 1.0):
            raise ParameterError(f"q_t must lie in [0, 1], got {self.q_t!r}")
        if self.epsilon <= 0.0:
            raise ParameterError(f"epsilon must be positive, got {self.epsilon!r}")


def nonmemorial_update(e_coop: float, e_defect: float, epsilon: float) -> float:
    """Next cooperation probability from the current reward gap.

    ``sigmoid(epsilon * (e_coop - e_defect))``: the miner leans toward
    whichever action pays more right now, with ``epsilon`` setting how
    sharply the lean saturates. Equal rewards give exactly 1/2.
    """
    if epsilon <= 0.0:
        raise ParameterError(f"epsilon must be positive, got {epsilon!r}")
    return stable_sigmoid(epsilon * (e_coop - e_defect))


@dataclass(frozen=True)
class MemorialState:
    """Belief state of a frequency-tracking miner.

    ``w_c`` and ``w_d`` estimate the per-round reward for cooperating
    and defecting; ``f_p`` and ``f_m`` are the tracked pool and miner
    cooperation frequencies; ``e_m`` is the blended expected reward.
    Consistency: ``e_m == f_m * w_c + (1 - f_m) * w_d`` up to float
    error, both at initialization and after every tracked update.
    """

    q_t: float
    f_p: float
    f_m: float
    w_c: float
    w_d: float
    e_m: float

    def __post_init__(self) -> None:
        for name in ("q_t", "f_p", "f_m"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ParameterError(f"{name} must lie in [0, 1], got {value!r}")

    @property
    def blended_payoff(self) -> float:
        return self.f_m * self.w_c + (1.0 - self.f_m) * self.w_d

    @classmethod
    def initial(
        cls, q0: float, first_reward: float, fallback_reward: float, p0: float = 1.0
    ) -> "MemorialState":
        """Belief state before any history: the offered reward is taken as
        the cooperative estimate and the fallback floor as the defecting one."""
        w_c = float(first_reward)
        w_d = float(fallback_reward)
        return cls(
            q_t=float(q0),
            f_p=float(p0),
            f_m=float(q0),
            w_c=w_c,
            w_d=w_d,
            e_m=q0 * w_c + (1.0 - q0) * w_d,
        )


def memorial_update(state: MemorialState) -> float:
    """Next cooperation probability, ``q * W_c / E_m`` clipped to [0, 1].

    Cooperation grows exactly when the cooperative estimate beats the
    blend, i.e. when ``W_c > E_m``. A vanishing or negative blend makes
    the ratio meaningless; the probability is then left unchanged and
    the event is logged.
    """
    if state.e_m < DEGENERATE_PAYOFF_EPS:
        logger.warning(
            "degenerate blended payoff %.3e; keeping q_t = %.6f", state.e_m, state.q_t
        )
        return state.q_t
    return min(max(state.q_t * state.w_c / state.e_m, 0.0), 1.0)


def update_w_values(
    p_t: float, payoffs: "PayoffVectors | Sequence[float]"
) -> tuple[float, float]:
    """One-shot reward estimates implied by the pool cooperating w.p. ``p_t``.

    Averages the miner's payoff vector over the pool's action:
    ``W_c`` mixes the two states where the miner cooperates, ``W_d``
    the two where it defects. No history enters; this is the stateless
    baseline the tracked update replaces.
    """
    if not (0.0 <= p_t <= 1.0):
        raise ParameterError(f"p_t must lie in [0, 1], got {p_t!r}")
    sm = payoffs.miner if isinstance(payoffs, PayoffVectors) else tuple(float(x) for x in payoffs)
    if len(sm) != 4:
        raise ParameterError(f"payoff vector needs 4 entries, got {len(sm)}")
    w_c = p_t * sm[GameState.CC] + (1.0 - p_t) * sm[GameState.DC]
    w_d = p_t * sm[GameState.CD] + (1.0 - p_t) * sm[GameState.DD]
    return w_c, w_d


def clamp_frequency(f: float, t: int) -> float:
    """Empirical frequency bounded away from 0 and 1 by ``1 / max(t, 2)``.

    Early rounds carry almost no information, so the bound is widest
    there (at ``t <= 2`` the frequency is pinned to 1/2) and relaxes as
    history accumulates. Keeping the frequency strictly interior keeps
    the tracked ``W`` solve well posed.
    """
    t_eff = max(int(t), 2)
    lo = 1.0 / t_eff
    return min(max(f, lo), 1.0 - lo)


def _state_of(record: object) -> GameState:
    return GameState(getattr(record, "state", record))


def frequency_tracked_w_update(
    history: Sequence[object],
    e_m_from_mechanism: float,
    prior: MemorialState,
    *,
    cooperative: bool | None = None,
    frequencies: tuple[float, float] | None = None,
) -> MemorialState:
    """Fold one realized reward into the belief state.

    The round is classified as cooperative or defecting (by the caller,
    or from the last history entry), and the matching estimate is
    re-solved so the blend reproduces the realized reward exactly:
    cooperative rounds solve ``W_c`` from
    ``f_m * W_c + (1 - f_m) * W_d = E`` holding ``W_d`` fixed, and
    defecting rounds solve ``W_d`` holding ``W_c`` fixed. Frequencies
    default to clamped empirical means over ``history``; callers
    tracking expected rather than realized frequencies pass them in as
    ``(f_p, f_m)``, already clamped or not as they prefer (values are
    re-clamped here).

    ``history`` must contain at least the round being folded in.
    """
    n = len(history)
    if n < 1:
        raise ParameterError("history must contain at least one round")
    if frequencies is None:
        states = [_state_of(rec) for rec in history]
        f_p_raw = sum(1.0 for s in states if s.pool_cooperates) / n
        f_m_raw = sum(1.0 for s in states if s.miner_cooperates) / n
    else:
        f_p_raw, f_m_raw = frequencies
    t = n - 1
    f_p = clamp_frequency(f_p_raw, t)
    f_m = clamp_frequency(f_m_raw, t)
    if cooperative is None:
        cooperative = _state_of(history[-1]).miner_cooperates
    e = float(e_m_from_mechanism)
    if cooperative:
        w_c = (e - (1.0 - f_m) * prior.w_d) / f_m
        w_d = prior.w_d
    else:
        w_c = prior.w_c
        w_d = (e - f_m * prior.w_c) / (1.0 - f_m)
    return replace(prior, f_p=f_p, f_m=f_m, w_c=w_c, w_d=w_d, e_m=e)
