"""Command-line front end.

Four commands: ``classify`` reports the stage-game verdict, ``zd``
exposes the equalizer algebra (derive, target, self-control), and
``simulate`` / ``replicate`` run the engine and emit CSV tables, a JSON
manifest with content digests, and rendered PNG figures next to the
delimited output.

Exit codes: 0 success, 1 domain error (infeasible or invalid math
input; for ``classify``, also "not an iterated dilemma"), 2 usage error
(bad flags, malformed config, unwritable output).

CSV bodies are deterministic for a fixed seed: floats are written in
shortest round-trip form and no timestamps enter the tables (the
manifest carries the only timestamp).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

import yaml

from .errors import DomainError
from .game import GameParameters, GameState, MixedStrategy, PayoffVectors, classify_game
from .mechanism import LEDGER_COLUMNS, MechanismConfig
from .miners import ClassicalStrategy
from .engine import (
    ClassicalSpec,
    EvolutionResult,
    ExperimentConfig,
    FixedPool,
    MechanismPool,
    MemorialSpec,
    NonMemorialSpec,
    Trajectory,
    rounds_to_sustained,
    run_fixed_zd,
    run_memorial_experiment,
    run_nonmemorial_experiment,
)
from .replicate import DEFAULT_SEED, FIGURE_IDS, figure_dataset
from .zd import derive_p2_p3, self_control_report, strategy_for_target

try:
    from importlib.metadata import version as _dist_version

    TOOL_VERSION = _dist_version("zdpool")
except Exception:  # pragma: no cover - metadata absent in odd installs
    TOOL_VERSION = "0.0.0"

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

OUTPUT_DIR_ENV = "ZDPOOL_OUT"
DEFAULT_OUTPUT_DIR = "zdpool-out"

TRAJECTORY_COLUMNS = (
    "series", "round", "state", "pool_payoff", "miner_payoff",
    "q_t", "p1", "p2", "p3", "p4", "E",
)
SUMMARY_COLUMNS = (
    "series", "rounds", "repetitions", "final_q", "rounds_to_sustained",
    "pool_average", "miner_average", "pool_tail", "miner_tail",
)
LEDGER_CSV_COLUMNS = ("series",) + LEDGER_COLUMNS

COLUMN_NOTES = f"""\
output files and their columns:
  trajectory.csv  {', '.join(TRAJECTORY_COLUMNS)}
      one repetition per series; state is CC/CD/DC/DD (pool letter first);
      p1..p4 is the pool strategy in force; E is the announced reward
      (the pinned payoff for fixed equalizer pools, empty otherwise)
  summary.csv     {', '.join(SUMMARY_COLUMNS)}
      payoff columns average repetitions for fixed pools and report the
      recorded repetition for mechanism runs; tails use the trailing window
  ledger.csv      {', '.join(LEDGER_CSV_COLUMNS)}
      mechanism runs only; dm is empty on each miner's opening row
  figure1.csv     round, series, miner_payoff_mean, miner_payoff_se
  figure2/3.csv   round, q0, power, epsilon, q_mean, q_se
  figure4.csv     round, q0, power, q_mean, q_se
  manifest.json   tool version, seed, config digest, output digests

environment:
  {OUTPUT_DIR_ENV}  default output directory when --out is not given
"""

CONFIG_KEY_HELP = (
    "required config keys: experiment (fixed|nonmemorial|memorial), rounds, seed; "
    "'fixed' additionally needs pool.strategy (4 probabilities) and miners.kinds "
    "(allc|alld|tft|wsls list); 'nonmemorial' needs epsilon, q0, powers; "
    "'memorial' needs q0, powers (p0 optional, defaults to q0); optional keys: "
    "repetitions, payoffs {kp,km,pi,mu,sigma,rho}, mechanism {L,H,zeta}, "
    "power_mapping, tail_fraction"
)


class UsageError(Exception):
    """Bad invocation or malformed configuration."""


# ---------------------------------------------------------------------------
# small emission helpers


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        if value == int(value) and abs(value) < 1e15:
            return str(int(value))
        return repr(value)
    return str(value)


def _g(value: float) -> str:
    return format(value, "g")


def write_csv(path: Path, header: Sequence[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(value) for value in row])


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(
    out_dir: Path, command: str, seed: int, config_data: dict, outputs: list[Path]
) -> Path:
    config_digest = hashlib.sha256(
        json.dumps(config_data, sort_keys=True, default=str).encode("utf-8")
    ).hexdigest()
    manifest = {
        "tool": "zdpool",
        "tool_version": TOOL_VERSION,
        "command": command,
        "seed": seed,
        "config_digest": config_digest,
        "outputs": [
            {"path": path.name, "sha256": _sha256(path)} for path in outputs
        ],
        "created_at": datetime.now(timezone.utc).isoformat(),
    }
    path = out_dir / "manifest.json"
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True)
        handle.write("\n")
    return path


def _resolve_out_dir(flag_value: "str | None") -> Path:
    raw = flag_value or os.environ.get(OUTPUT_DIR_ENV) or DEFAULT_OUTPUT_DIR
    out = Path(raw)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise UsageError(f"output directory {out} is not writable: {exc}") from exc
    return out


# ---------------------------------------------------------------------------
# classify


def _game_parameters(args, config: "dict | None" = None) -> GameParameters:
    config = config or {}
    fields = {"kp": "k_p", "km": "k_m", "pi": "pi", "mu": "mu", "sigma": "sigma", "rho": "rho"}
    kwargs = {}
    for flag, field in fields.items():
        flag_value = getattr(args, flag, None)
        if flag_value is not None:
            kwargs[field] = flag_value
        elif flag in config:
            kwargs[field] = float(config[flag])
    return GameParameters(**kwargs)


def cmd_classify(args) -> int:
    config = None
    if args.config:
        config = _read_yaml(Path(args.config))
    params = _game_parameters(args, config)
    classification = classify_game(params)
    for line in classification.lines():
        print(line)
    return EXIT_OK if classification.is_ipd else EXIT_DOMAIN


# ---------------------------------------------------------------------------
# zd


def cmd_zd_derive(args) -> int:
    payoffs = PayoffVectors.from_parameters(_game_parameters(args))
    p2, p3 = derive_p2_p3(args.p1, args.p4, payoffs)
    feasible = 0.0 <= p2 <= 1.0 and 0.0 <= p3 <= 1.0
    print(f"({_g(p2)}, {_g(p3)}), {'feasible' if feasible else 'infeasible'}")
    return EXIT_OK


def cmd_zd_target(args) -> int:
    payoffs = PayoffVectors.from_parameters(_game_parameters(args))
    zd = strategy_for_target(args.payoff, payoffs, scale=args.scale)
    p = zd.strategy.probs
    print(f"strategy: ({_g(p[0])}, {_g(p[1])}, {_g(p[2])}, {_g(p[3])})")
    print(f"controlled payoff: {_g(zd.target_payoff)}")
    print(f"beta: {_g(zd.coefficients.beta)}")
    print(f"gamma: {_g(zd.coefficients.gamma)}")
    return EXIT_OK


def cmd_zd_self_control(args) -> int:
    payoffs = PayoffVectors.from_parameters(_game_parameters(args))
    report = self_control_report(payoffs, grid_step=args.grid_step)
    print(f"grid step: {_g(report.grid_step)}")
    print(f"feasible points: {len(report.feasible_points)} of {report.total_points}")
    for point in report.feasible_points:
        print(
            f"  (p1, p4) = ({_g(point.p1)}, {_g(point.p4)}) -> "
            f"strategy ({_g(point.p1)}, {_g(point.p2)}, {_g(point.p3)}, {_g(point.p4)}), "
            f"alpha = {_g(point.alpha)}, gamma = {_g(point.gamma)}"
        )
    if args.point is not None:
        p1, p4 = args.point
        point = report.point(p1, p4)
        flags = ", ".join(point.violations) if point.violations else "none"
        print(
            f"query (p1, p4) = ({_g(p1)}, {_g(p4)}): p2 = {_g(point.p2)}, "
            f"p3 = {_g(point.p3)}, violations: {flags}"
        )
    if report.only_degenerate:
        print(
            "verdict: only the degenerate corner is feasible; "
            "the pool cannot pin its own payoff"
        )
    else:  # pragma: no cover - impossible for dilemma payoffs
        print("verdict: non-degenerate self-pinning strategies exist")
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate


def _read_yaml(path: Path) -> dict:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise UsageError(f"config {path} is not valid YAML: {exc}") from exc
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must be a mapping; {CONFIG_KEY_HELP}")
    return data


def _payoffs_from_config(data: dict) -> PayoffVectors:
    section = data.get("payoffs") or {}
    if not isinstance(section, dict):
        raise UsageError("config key 'payoffs' must be a mapping of kp,km,pi,mu,sigma,rho")
    fields = {"kp": "k_p", "km": "k_m", "pi": "pi", "mu": "mu", "sigma": "sigma", "rho": "rho"}
    kwargs = {field: float(section[flag]) for flag, field in fields.items() if flag in section}
    return PayoffVectors.from_parameters(GameParameters(**kwargs))


def _mechanism_from_config(data: dict, payoffs: PayoffVectors) -> MechanismConfig:
    section = data.get("mechanism") or {}
    if not isinstance(section, dict):
        raise UsageError("config key 'mechanism' must be a mapping of L,H,zeta")
    kwargs = {}
    if "L" in section:
        kwargs["l_reward"] = float(section["L"])
    if "H" in section:
        kwargs["h_reward"] = float(section["H"])
    if "zeta" in section:
        kwargs["zeta"] = float(section["zeta"])
    return MechanismConfig(payoffs=payoffs, **kwargs)


def _as_list(value) -> list:
    return list(value) if isinstance(value, (list, tuple)) else [value]


def _require(data: dict, keys: Sequence[str], context: str) -> None:
    missing = [key for key in keys if key not in data]
    if missing:
        raise UsageError(
            f"{context} is missing required keys: {', '.join(missing)}; {CONFIG_KEY_HELP}"
        )


def _trajectory_rows(label: str, trajectory: Trajectory):
    for t in range(len(trajectory)):
        p = trajectory.strategy_series[t]
        yield (
            label,
            t + 1,
            GameState(int(trajectory.states[t])).label,
            float(trajectory.pool_payoffs[t]),
            float(trajectory.miner_payoffs[t]),
            float(trajectory.q_t_series[t]),
            float(p[0]),
            float(p[1]),
            float(p[2]),
            float(p[3]),
            float(trajectory.reward_series[t]),
        )


def _summary_row(
    label: str,
    config: ExperimentConfig,
    trajectory: Trajectory,
    q_series,
    pool_average: float,
    miner_average: float,
) -> tuple:
    crossing = rounds_to_sustained(q_series)
    pool_tail, miner_tail = trajectory.tail_averages(config.tail_fraction)
    return (
        label,
        config.rounds,
        config.repetitions,
        float(q_series[-1]),
        crossing,
        pool_average,
        miner_average,
        pool_tail,
        miner_tail,
    )


def _run_simulate_config(data: dict):
    """Execute one parsed config; returns rows for the three tables and
    the per-series plot groups."""
    _require(data, ("experiment", "rounds", "seed"), "config")
    experiment = str(data["experiment"]).strip().lower()
    rounds = int(data["rounds"])
    seed = int(data["seed"])
    repetitions = int(data.get("repetitions", 1))
    payoffs = _payoffs_from_config(data)
    mapping = str(data.get("power_mapping", "expected"))
    tail_fraction = float(data.get("tail_fraction", 0.1))

    trajectory_rows: list[tuple] = []
    summary_rows: list[tuple] = []
    ledger_rows: list[tuple] = []
    plot_groups: dict[str, tuple[list, list]] = {}
    plot_kind = "q"

    if experiment == "fixed":
        _require(data, ("pool",), "fixed config")
        pool_section = data["pool"] if isinstance(data["pool"], dict) else {}
        if "strategy" not in pool_section:
            raise UsageError(f"fixed config needs pool.strategy; {CONFIG_KEY_HELP}")
        strategy = MixedStrategy(tuple(float(x) for x in pool_section["strategy"]))
        miners_section = data.get("miners") if isinstance(data.get("miners"), dict) else {}
        kinds = miners_section.get("kinds")
        if not kinds:
            raise UsageError(f"fixed config needs miners.kinds; {CONFIG_KEY_HELP}")
        plot_kind = "payoff"
        for kind_name in _as_list(kinds):
            kind = ClassicalStrategy.from_name(str(kind_name))
            label = str(kind_name).strip().lower()
            config = ExperimentConfig(
                payoffs=payoffs,
                rounds=rounds,
                repetitions=repetitions,
                miner_spec=ClassicalSpec(kind),
                pool_spec=FixedPool(strategy),
                initial_powers=(1.0,),
                seed=seed,
                power_mapping=mapping,
                tail_fraction=tail_fraction,
            )
            result = run_fixed_zd(config)
            trajectory = result.trajectory
            trajectory_rows.extend(_trajectory_rows(label, trajectory))
            summary_rows.append(
                _summary_row(
                    label, config, trajectory, trajectory.q_t_series,
                    result.pool_average, result.miner_average,
                )
            )
            running = result.running_mean
            plot_groups[label] = (list(range(1, rounds + 1)), [float(x) for x in running])
    elif experiment in ("nonmemorial", "memorial"):
        needed = ("q0", "powers") if experiment == "memorial" else ("epsilon", "q0", "powers")
        _require(data, needed, f"{experiment} config")
        mech = _mechanism_from_config(data, payoffs)
        powers = tuple(float(x) for x in _as_list(data["powers"]))
        q0_values = [float(x) for x in _as_list(data["q0"])]
        if experiment == "memorial":
            p0_values = [float(x) for x in _as_list(data.get("p0", data["q0"]))]
            if len(p0_values) != len(q0_values):
                raise UsageError("config keys p0 and q0 must have matching lengths")
        for idx, q0 in enumerate(q0_values):
            if experiment == "memorial":
                spec = MemorialSpec(p0=p0_values[idx], q0=q0)
            else:
                spec = NonMemorialSpec(q0=q0, epsilon=float(data["epsilon"]))
            config = ExperimentConfig(
                payoffs=payoffs,
                rounds=rounds,
                repetitions=repetitions,
                miner_spec=spec,
                pool_spec=MechanismPool(mech),
                initial_powers=powers,
                seed=seed,
                power_mapping=mapping,
                tail_fraction=tail_fraction,
            )
            result: EvolutionResult = (
                run_memorial_experiment(config)
                if experiment == "memorial"
                else run_nonmemorial_experiment(config)
            )
            for i, power in enumerate(powers):
                label = f"q0={q0:g}/power={power:g}"
                trajectory = result.trajectories[i]
                trajectory_rows.extend(_trajectory_rows(label, trajectory))
                summary_rows.append(
                    _summary_row(
                        label, config, trajectory, result.q_means[i],
                        trajectory.averages[0], trajectory.averages[1],
                    )
                )
                for row in result.ledgers[i].rows():
                    ledger_rows.append((label,) + row)
                plot_groups[label] = (
                    list(range(1, rounds + 1)),
                    [float(x) for x in result.q_means[i]],
                )
    else:
        raise UsageError(
            f"unknown experiment kind {experiment!r}; expected fixed, nonmemorial, or memorial"
        )
    return seed, trajectory_rows, summary_rows, ledger_rows, plot_groups, plot_kind


def cmd_simulate(args) -> int:
    data = _read_yaml(Path(args.config))
    seed, trajectory_rows, summary_rows, ledger_rows, plot_groups, plot_kind = (
        _run_simulate_config(data)
    )
    out_dir = _resolve_out_dir(args.out)
    outputs = []
    trajectory_path = out_dir / "trajectory.csv"
    write_csv(trajectory_path, TRAJECTORY_COLUMNS, trajectory_rows)
    outputs.append(trajectory_path)
    summary_path = out_dir / "summary.csv"
    write_csv(summary_path, SUMMARY_COLUMNS, summary_rows)
    outputs.append(summary_path)
    if ledger_rows:
        ledger_path = out_dir / "ledger.csv"
        write_csv(ledger_path, LEDGER_CSV_COLUMNS, ledger_rows)
        outputs.append(ledger_path)
    if not args.no_figures:
        from .figures import render_series

        figure_path = out_dir / "series.png"
        if plot_kind == "payoff":
            render_series(
                plot_groups, str(figure_path), "round", "cumulative miner payoff",
                "payoff convergence", hline=None,
            )
        else:
            render_series(
                plot_groups, str(figure_path), "round", "cooperation probability",
                "cooperation paths", hline=1.0,
            )
        outputs.append(figure_path)
    manifest_path = write_manifest(out_dir, "simulate", seed, data, outputs)
    for path in outputs + [manifest_path]:
        print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# replicate


def cmd_replicate(args) -> int:
    dataset = figure_dataset(
        args.figure, seed=args.seed, repetitions=args.reps, rounds=args.rounds
    )
    out_dir = _resolve_out_dir(args.out)
    outputs = []
    csv_path = out_dir / f"{dataset.name}.csv"
    write_csv(csv_path, dataset.header, dataset.rows)
    outputs.append(csv_path)
    if not args.no_figures:
        from .figures import render_dataset

        png_path = out_dir / f"{dataset.name}.png"
        render_dataset(dataset, str(png_path))
        outputs.append(png_path)
    config_data = {
        "figure": dataset.figure,
        "seed": dataset.seed,
        "repetitions": dataset.repetitions,
        "rounds": dataset.rounds,
    }
    manifest_path = write_manifest(out_dir, "replicate", dataset.seed, config_data, outputs)
    for path in outputs + [manifest_path]:
        print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_payoff_flags(parser: argparse.ArgumentParser, include_baselines: bool = True) -> None:
    if include_baselines:
        parser.add_argument("--kp", type=float, default=None, help="pool baseline payoff (default 3)")
        parser.add_argument("--km", type=float, default=None, help="miner baseline payoff (default 3)")
    parser.add_argument("--pi", type=float, default=None, help="pool loss when betrayed (default 3)")
    parser.add_argument("--mu", type=float, default=None, help="pool gain from betraying (default 2)")
    parser.add_argument("--sigma", type=float, default=None, help="miner gain from betraying (default 2)")
    parser.add_argument("--rho", type=float, default=None, help="miner loss when betrayed (default 3)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdpool",
        description="Pinned-payoff pooled-mining simulator: stage-game classification, "
        "equalizer synthesis, and seeded mechanism experiments.",
        epilog=COLUMN_NOTES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"zdpool {TOOL_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser(
        "classify",
        help="classify the stage game; exit 0 only for an iterated dilemma",
        description="Evaluate the four classification inequalities and print the verdict. "
        "Exits 0 when the game is an iterated prisoner's dilemma, 1 otherwise.",
    )
    _add_payoff_flags(classify)
    classify.add_argument("--config", default=None, help="YAML file with kp,km,pi,mu,sigma,rho")
    classify.set_defaults(func=cmd_classify)

    zd = commands.add_parser(
        "zd",
        help="equalizer algebra: derive, target, self-control",
        description="Work with payoff-pinning strategies.",
    )
    zd_sub = zd.add_subparsers(dest="zd_command", required=True)

    derive = zd_sub.add_parser(
        "derive",
        help="complete an equalizer from its corner components",
        description="Print the interior components (p2, p3) implied by p1 and p4, "
        "and whether they are feasible probabilities.",
    )
    derive.add_argument("--p1", type=float, required=True)
    derive.add_argument("--p4", type=float, required=True)
    _add_payoff_flags(derive)
    derive.set_defaults(func=cmd_zd_derive)

    target = zd_sub.add_parser(
        "target",
        help="synthesize an equalizer pinning a chosen payoff",
        description="Print a feasible strategy pinning the miner's payoff at the target, "
        "with its certifying coefficients. Targets outside the pinnable range exit 1.",
    )
    target.add_argument("--payoff", type=float, required=True)
    target.add_argument("--scale", type=float, default=None, help="family scale override")
    _add_payoff_flags(target)
    target.set_defaults(func=cmd_zd_target)

    selfc = zd_sub.add_parser(
        "self-control",
        help="scan for strategies pinning the pool's own payoff",
        description="Grid-scan the self-pinning construction and report every feasible "
        "corner pair; optionally evaluate one pair exactly with --point.",
    )
    selfc.add_argument("--grid-step", type=float, default=0.01)
    selfc.add_argument(
        "--point", type=float, nargs=2, metavar=("P1", "P4"), default=None,
        help="evaluate one corner pair and print its range violations",
    )
    _add_payoff_flags(selfc)
    selfc.set_defaults(func=cmd_zd_self_control)

    simulate = commands.add_parser(
        "simulate",
        help="run a configured experiment and emit CSV + manifest + figure",
        description="Run the experiment described by a YAML config and write "
        "trajectory.csv, summary.csv, ledger.csv (mechanism runs), manifest.json, "
        "and series.png into the output directory.\n\n" + CONFIG_KEY_HELP,
        epilog=COLUMN_NOTES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    simulate.add_argument("config", help="YAML experiment configuration")
    simulate.add_argument("--out", default=None, help=f"output directory (default ${OUTPUT_DIR_ENV} or {DEFAULT_OUTPUT_DIR})")
    simulate.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    simulate.set_defaults(func=cmd_simulate)

    replicate = commands.add_parser(
        "replicate",
        help="run a preset battery (1-4) with reference parameters",
        description="Run one of the four preset batteries and write figureN.csv, "
        "figureN.png, and manifest.json. Battery 1: classical miners vs the fixed "
        "pinning strategy; 2 and 3: history-free miners at reactivity 5 and 8; "
        "4: belief-tracking miners.",
        epilog=COLUMN_NOTES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    replicate.add_argument("figure", type=int, choices=FIGURE_IDS)
    replicate.add_argument("--out", default=None, help=f"output directory (default ${OUTPUT_DIR_ENV} or {DEFAULT_OUTPUT_DIR})")
    replicate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    replicate.add_argument("--reps", type=int, default=100, help="repetitions per configuration")
    replicate.add_argument("--rounds", type=int, default=None, help="override the preset horizon")
    replicate.add_argument("--no-figures", action="store_true", help="skip PNG rendering")
    replicate.set_defaults(func=cmd_replicate)

    return parser


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
