"""Acceptance battery.

Nine numbered checks, each printing one visible PASS/FAIL line with the
measured numbers. They exercise the public API end to end at fixed
seeds and assert both the tolerance and the runtime budget.
"""

import time

import numpy as np

from zdpool import (
    ClassicalStrategy,
    ExperimentConfig,
    GameParameters,
    MechanismConfig,
    MechanismPool,
    MemorialSpec,
    NonMemorialSpec,
    PayoffVectors,
    expected_payoffs,
    long_run_actual_payoffs,
    press_dyson_determinant,
    reward_for_increase,
    run_mechanism,
    run_memorial_experiment,
    run_nonmemorial_experiment,
    self_control_report,
    simulate_average_payoffs,
    stationary_distribution,
    strategy_for_target,
    transition_matrix,
)
from zdpool.cli import main

PAYOFFS = PayoffVectors.from_parameters(GameParameters())
MECH = MechanismConfig(payoffs=PAYOFFS)
PIN = (0.9, 0.3, 0.8, 0.2)
PINNED_VALUE = 8.0 / 3.0
POWERS = (1.0, 2.0, 3.0, 4.0)
Q0_GRID = (0.01, 0.1, 0.5, 0.8)


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"acceptance {number} ({'PASS' if ok else 'FAIL'}): {detail}")


def test_acceptance_1_determinant_identity(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(1000):
        p = rng.uniform(0.05, 0.95, 4)
        q = rng.uniform(0.05, 0.95, 4)
        f = rng.uniform(-5.0, 5.0, 4)
        dist = stationary_distribution(transition_matrix(p, q))
        direct = float(dist.probabilities @ f) / float(dist.probabilities.sum())
        ratio = press_dyson_determinant(p, q, f) / press_dyson_determinant(
            p, q, np.ones(4)
        )
        worst = max(worst, abs(direct - ratio))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-8 and elapsed < 5.0
    report(
        capsys, 1, ok,
        f"determinant identity vs stationary average, worst gap {worst:.2e} "
        f"over 1000 random strategy pairs in {elapsed:.2f}s (budget 5s)",
    )
    assert worst < 1e-8
    assert elapsed < 5.0


def test_acceptance_2_payoff_pinning(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(202)
    opponents = [kind.mixed.probs for kind in ClassicalStrategy]
    opponents += [tuple(rng.uniform(0.01, 0.99, 4)) for _ in range(100)]
    worst_exact = 0.0
    worst_sim = 0.0
    for i, q in enumerate(opponents):
        exact = expected_payoffs(PIN, q, PAYOFFS).miner
        worst_exact = max(worst_exact, abs(exact - PINNED_VALUE))
        _, sim = simulate_average_payoffs(PIN, q, 100_000, 1000 + i, PAYOFFS)
        worst_sim = max(worst_sim, abs(sim - PINNED_VALUE))
    elapsed = time.perf_counter() - t0
    ok = worst_exact < 1e-10 and worst_sim < 0.02 and elapsed < 30.0
    report(
        capsys, 2, ok,
        f"pinned miner payoff 8/3 against {len(opponents)} opponents, "
        f"worst exact gap {worst_exact:.2e}, worst sampled gap {worst_sim:.4f} "
        f"in {elapsed:.1f}s (budget 30s)",
    )
    assert worst_exact < 1e-10
    assert worst_sim < 0.02
    assert elapsed < 30.0


def test_acceptance_3_self_control_scan(capsys):
    t0 = time.perf_counter()
    grid = self_control_report(PAYOFFS, grid_step=0.01)
    elapsed = time.perf_counter() - t0
    points = grid.feasible_points
    corner = points[0] if points else None
    shape_ok = (
        len(points) == 1
        and (corner.p1, corner.p2, corner.p3, corner.p4) == (1.0, 1.0, 0.0, 0.0)
        and corner.alpha == 0.0
        and corner.gamma == 0.0
        and grid.only_degenerate
    )
    ok = shape_ok and elapsed < 1.0
    report(
        capsys, 3, ok,
        f"self-pinning scan found {len(points)} feasible point(s) of "
        f"{grid.total_points} on the 0.01 grid, degenerate corner only, "
        f"in {elapsed:.2f}s (budget 1s)",
    )
    assert shape_ok
    assert elapsed < 1.0


def test_acceptance_4_reward_rules(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(404)
    band_ok = drop_ok = freeze_ok = True
    announcements = 0
    for _ in range(250):
        schedule = rng.uniform(0.5, 10.0, size=(2, 20))
        # inject exact repeats so the freeze rule is exercised
        repeats = rng.random(size=(2, 19)) < 0.3
        for i in range(2):
            for t in range(1, 20):
                if repeats[i, t - 1]:
                    schedule[i, t] = schedule[i, t - 1]
        ledgers = run_mechanism(schedule, MECH)
        for ledger in ledgers:
            rewards = ledger.rewards
            announcements += len(rewards)
            for t in range(len(rewards)):
                if not (MECH.l_reward - 1e-12 <= rewards[t] <= MECH.h_reward + 1e-12):
                    band_ok = False
                if t == 0:
                    continue
                dm = ledger.powers[t] - ledger.powers[t - 1]
                if dm < 0 and rewards[t] != MECH.l_reward:
                    drop_ok = False
                if dm == 0 and rewards[t] != rewards[t - 1]:
                    freeze_ok = False
    monotone_ok = True
    for _ in range(1000):
        cap = float(rng.uniform(1.0, 10.0))
        e_prev = float(rng.uniform(MECH.l_reward, MECH.h_reward))
        dm_small = float(rng.uniform(0.0, cap))
        dm_large = dm_small + float(rng.uniform(1e-6, cap))
        small, small_clamped = reward_for_increase(dm_small, cap, e_prev, MECH)
        large, _ = reward_for_increase(dm_large, cap, e_prev, MECH)
        if large < small or (not small_clamped and large <= small):
            monotone_ok = False
    elapsed = time.perf_counter() - t0
    ok = band_ok and drop_ok and freeze_ok and monotone_ok and elapsed < 10.0
    report(
        capsys, 4, ok,
        f"reward rules over {announcements} scheduled announcements and "
        f"1000 ordered-increase pairs: band {band_ok}, drop-to-floor {drop_ok}, "
        f"freeze-on-hold {freeze_ok}, monotone {monotone_ok}, "
        f"in {elapsed:.1f}s (budget 10s)",
    )
    assert band_ok and drop_ok and freeze_ok and monotone_ok
    assert elapsed < 10.0


def _evolution_config(spec, seed):
    return ExperimentConfig(
        payoffs=PAYOFFS,
        rounds=500,
        repetitions=100,
        miner_spec=spec,
        pool_spec=MechanismPool(MECH),
        initial_powers=POWERS,
        seed=seed,
    )


def test_acceptance_5_reactive_cooperation(capsys):
    t0 = time.perf_counter()
    crossings = {}
    converged = True
    for epsilon in (5.0, 8.0):
        for q0 in Q0_GRID:
            result = run_nonmemorial_experiment(
                _evolution_config(NonMemorialSpec(q0=q0, epsilon=epsilon), seed=500)
            )
            crossings[(epsilon, q0)] = result.crossings
            if any(c is None for c in result.crossings):
                converged = False
    power_ok = all(
        all(c[i + 1] <= c[i] for i in range(len(POWERS) - 1))
        for c in crossings.values()
        if all(x is not None for x in c)
    )
    epsilon_ok = converged and all(
        crossings[(8.0, q0)][i] <= crossings[(5.0, q0)][i]
        for q0 in Q0_GRID
        for i in range(len(POWERS))
    )
    elapsed = time.perf_counter() - t0
    ok = converged and power_ok and epsilon_ok and elapsed < 120.0
    report(
        capsys, 5, ok,
        f"history-free miners sustain 0.99 cooperation in all 8 batteries "
        f"(100 reps x 500 rounds); threshold rounds non-increasing in power "
        f"{power_ok} and in reactivity {epsilon_ok}, in {elapsed:.1f}s (budget 120s)",
    )
    assert converged and power_ok and epsilon_ok
    assert elapsed < 120.0


def test_acceptance_6_belief_cooperation(capsys):
    t0 = time.perf_counter()
    crossings = {}
    converged = True
    for q0 in Q0_GRID:
        result = run_memorial_experiment(
            _evolution_config(MemorialSpec(p0=q0, q0=q0), seed=600)
        )
        crossings[q0] = result.crossings
        if any(c is None for c in result.crossings):
            converged = False
        if min(result.final_probabilities) < 0.99:
            converged = False
    power_ok = converged and all(c[0] >= c[-1] for c in crossings.values())
    start_ok = converged and all(
        max(crossings[hi]) <= min(crossings[lo])
        for lo, hi in zip(Q0_GRID, Q0_GRID[1:])
    )
    elapsed = time.perf_counter() - t0
    ok = converged and power_ok and start_ok and elapsed < 120.0
    report(
        capsys, 6, ok,
        f"belief-tracking miners reach 0.99 cooperation from every start "
        f"(crossings {[crossings[q][0] for q in Q0_GRID]} for q0 {list(Q0_GRID)}); "
        f"weakest power no faster {power_ok}, higher start no slower {start_ok}, "
        f"in {elapsed:.1f}s (budget 120s)",
    )
    assert converged and power_ok and start_ok
    assert elapsed < 120.0


def test_acceptance_7_long_run_payoffs(capsys):
    t0 = time.perf_counter()
    gaps = {}
    for name, spec in (
        ("belief", MemorialSpec(p0=0.5, q0=0.5)),
        ("reactive", NonMemorialSpec(q0=0.5, epsilon=5.0)),
    ):
        config = ExperimentConfig(
            payoffs=PAYOFFS,
            rounds=10_000,
            repetitions=1,
            miner_spec=spec,
            pool_spec=MechanismPool(MECH),
            initial_powers=POWERS,
            seed=700,
        )
        payoffs = long_run_actual_payoffs(config)
        gaps[name] = max(abs(payoffs.pool_tail - 3.0), abs(payoffs.miner_tail - 3.0))
    worst = max(gaps.values())
    elapsed = time.perf_counter() - t0
    ok = worst < 0.05 and elapsed < 60.0
    report(
        capsys, 7, ok,
        f"tail averages of 10000-round runs sit at the mutual-cooperation "
        f"value 3 (worst gap {worst:.2e}; belief {gaps['belief']:.2e}, "
        f"reactive {gaps['reactive']:.2e}) in {elapsed:.1f}s (budget 60s)",
    )
    assert worst < 0.05
    assert elapsed < 60.0


def test_acceptance_8_target_synthesis(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(808)
    worst_target = 0.0
    feasible = True
    for _ in range(500):
        target = float(rng.uniform(2.0, 3.0))
        zd = strategy_for_target(target, PAYOFFS)
        worst_target = max(
            worst_target, abs(zd.coefficients.pinned_payoff - target)
        )
        if any(not 0.0 <= x <= 1.0 for x in zd.strategy.probs):
            feasible = False
    elapsed = time.perf_counter() - t0
    ok = worst_target < 1e-10 and feasible and elapsed < 2.0
    report(
        capsys, 8, ok,
        f"synthesized equalizers for 500 random targets in [2, 3]: worst "
        f"pinned-payoff gap {worst_target:.2e}, all components valid "
        f"probabilities {feasible}, in {elapsed:.2f}s (budget 2s)",
    )
    assert worst_target < 1e-10
    assert feasible
    assert elapsed < 2.0


def test_acceptance_9_reproducible_exports(capsys, tmp_path):
    t0 = time.perf_counter()
    first = tmp_path / "first"
    second = tmp_path / "second"
    for out in (first, second):
        code = main(
            [
                "replicate", "2", "--seed", "1014", "--reps", "4",
                "--rounds", "40", "--no-figures", "--out", str(out),
            ]
        )
        assert code == 0
    body_a = (first / "figure2.csv").read_bytes()
    body_b = (second / "figure2.csv").read_bytes()
    elapsed = time.perf_counter() - t0
    ok = body_a == body_b and len(body_a) > 0
    report(
        capsys, 9, ok,
        f"repeated seeded export produced byte-identical CSV bodies "
        f"({len(body_a)} bytes) in {elapsed:.1f}s",
    )
    assert body_a == body_b
    assert len(body_a) > 0
