"""Command-line front end: scenario runs, CSV emission, and summaries."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .hamiltonian import PulseParams, SystemParams
from .lindblad import DecoherenceRates, SimulationConfig, evolve
from .measures import CorrelationSample, measure_trajectory
from .scenarios import (
    BELL,
    SEPARABLE,
    FigureScenario,
    SweepSpec,
    bell_state,
    builtin_scenarios,
    expand_sweep,
    scenario_registry,
    separable_state,
)

CSV_HEADER = "t,ng,qd,qd_doubled,u_exact,u_approx,purity,trace_error"
SUDDEN_DEATH_THRESHOLD = 1e-4

_CONFIG_KEYS = {
    "epsilon0": float,
    "epsilon1": float,
    "j_zz": float,
    "j_xx": float,
    "a_pulse": float,
    "beta_pulse": float,
    "t0": float,
    "gamma_amp": float,
    "gamma_deph": float,
    "g_pulse": float,
    "t_max": float,
    "dt": float,
    "sample_stride": int,
    "initial_state": str,
}


class UsageError(Exception):
    """Bad arguments or config; maps to exit code 2."""


@dataclass(frozen=True)
class RunRequest:
    """A validated single-run invocation."""

    scenario: str | None
    config_path: str | None
    output_dir: str
    dt_override: float | None = None
    stride_override: int | None = None
    emit_exact_eur: bool = True
    qd_display_scale: str = "raw"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twinqubit",
        description="Driven, dissipative two-qubit simulator: correlation time series per figure scenario.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default="./results", help="output directory")
        p.add_argument("--dt", type=float, default=None, help="integration step override")
        p.add_argument("--stride", type=int, default=None, help="recording stride override")
        p.add_argument("--qd-scale", choices=("raw", "doubled"), default="raw",
                       help="discord scale recorded in the summary (CSV always carries both)")
        p.add_argument("--skip-exact-eur", action="store_true",
                       help="skip the entropic uncertainty column (written as NaN)")

    run = sub.add_parser("run", help="run one scenario or a config file")
    group = run.add_mutually_exclusive_group(required=True)
    group.add_argument("--scenario", help="built-in scenario name (see `list`)")
    group.add_argument("--config", help="path to a flat JSON parameter file")
    add_common(run)

    allfig = sub.add_parser("all-figures", help="run all 16 built-in scenarios")
    allfig.add_argument("--workers", type=int, default=None, help="process pool size")
    add_common(allfig)

    sub.add_parser("list", help="list built-in scenario names")

    sweep = sub.add_parser("sweep", help="sweep one parameter over a base scenario")
    sweep.add_argument("--scenario", required=True, help="base scenario name")
    sweep.add_argument("--axis", required=True, help="parameter to sweep")
    sweep.add_argument("--values", required=True, help="comma-separated values")
    add_common(sweep)

    return parser


def _request_from_namespace(args: argparse.Namespace) -> RunRequest:
    if args.scenario is not None and args.scenario not in scenario_registry():
        names = ", ".join(s.name for s in builtin_scenarios())
        raise UsageError(f"unknown scenario {args.scenario!r}; valid names: {names}")
    return RunRequest(
        scenario=args.scenario,
        config_path=args.config,
        output_dir=args.out,
        dt_override=args.dt,
        stride_override=args.stride,
        emit_exact_eur=not args.skip_exact_eur,
        qd_display_scale=args.qd_scale,
    )


def parse_args(argv) -> RunRequest:
    """Parse a `run` invocation into a validated RunRequest (exit 2 on errors)."""
    args = build_parser().parse_args(argv)
    if args.command != "run":
        print(f"parse_args handles the 'run' command, got {args.command!r}", file=sys.stderr)
        raise SystemExit(2)
    try:
        return _request_from_namespace(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        raise SystemExit(2) from exc


def load_config(path: str) -> tuple[FigureScenario, str]:
    """Read a flat JSON config into a scenario; returns (scenario, initial_state)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError(f"malformed config {path}: expected a JSON object")
    unknown = set(raw) - set(_CONFIG_KEYS)
    if unknown:
        raise UsageError(f"malformed config {path}: unknown keys {sorted(unknown)}")
    missing = set(_CONFIG_KEYS) - set(raw)
    if missing:
        raise UsageError(f"malformed config {path}: missing keys {sorted(missing)}")
    values = {}
    for key, kind in _CONFIG_KEYS.items():
        try:
            values[key] = kind(raw[key])
        except (TypeError, ValueError) as exc:
            raise UsageError(f"malformed config {path}: bad value for {key}: {raw[key]!r}") from exc
    initial = values["initial_state"]
    if initial not in (BELL, SEPARABLE, "both"):
        raise UsageError(f"malformed config {path}: initial_state must be bell, separable, or both")
    try:
        scenario = FigureScenario(
            name=Path(path).stem,
            system=SystemParams(values["epsilon0"], values["epsilon1"], values["j_zz"], values["j_xx"]),
            pulse=PulseParams(values["a_pulse"], values["beta_pulse"], values["t0"]),
            rates=DecoherenceRates(values["gamma_amp"], values["gamma_deph"], values["g_pulse"]),
            sim=SimulationConfig(values["t_max"], values["dt"], values["sample_stride"]),
        )
    except ValueError as exc:
        raise UsageError(f"malformed config {path}: {exc}") from exc
    return scenario, initial


def _format_value(value: float) -> str:
    return repr(float(value))


def write_trajectory_csv(samples: list[CorrelationSample], path) -> None:
    """Write the fixed-header CSV; deterministic bytes, newline-terminated rows."""
    if not samples:
        raise ValueError("no samples to write")
    lines = [CSV_HEADER]
    for s in samples:
        lines.append(",".join((
            f"{s.t:.9f}",
            _format_value(s.ng),
            _format_value(s.qd),
            _format_value(2.0 * s.qd),
            _format_value(s.u_exact),
            _format_value(s.u_approx),
            _format_value(s.purity),
            _format_value(s.trace_error),
        )))
    Path(path).write_text("\n".join(lines) + "\n", newline="\n")


def read_trajectory_csv(path) -> list[CorrelationSample]:
    """Parse a CSV produced by write_trajectory_csv back into samples."""
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: missing or wrong header")
    samples = []
    for line in lines[1:]:
        fields = line.split(",")
        if len(fields) != 8:
            raise ValueError(f"{path}: expected 8 fields, got {len(fields)}")
        t, ng, qd, _, u_exact, u_approx, purity, trace_error = (float(f) for f in fields)
        samples.append(CorrelationSample(t, ng, qd, u_exact, u_approx, purity, trace_error))
    return samples


def summarize(samples: list[CorrelationSample], pulse_center: float = 15.0) -> dict:
    """Headline numbers for one run: initial/final values, sudden death, revival."""
    if not samples:
        raise ValueError("no samples to summarize")
    sudden_death = next((s.t for s in samples if s.ng <= SUDDEN_DEATH_THRESHOLD), None)
    after_pulse = [s.ng for s in samples if s.t > pulse_center]
    return {
        "ng_initial": samples[0].ng,
        "ng_final": samples[-1].ng,
        "sudden_death_time": sudden_death,
        "ng_revival_max": max(after_pulse) if after_pulse else None,
        "u_approx_final": samples[-1].u_approx,
    }


def _apply_overrides(scenario: FigureScenario, request: RunRequest) -> FigureScenario:
    sim = scenario.sim
    if request.dt_override is not None:
        try:
            sim = replace(sim, dt=request.dt_override)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if request.stride_override is not None:
        try:
            sim = replace(sim, sample_stride=request.stride_override)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return replace(scenario, sim=sim)


def _ensure_output_dir(path: str) -> Path:
    out = Path(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise OSError(f"output directory {path} is not writable: {exc}") from exc
    return out


def _run_one_scenario(
    scenario: FigureScenario,
    out_dir: str,
    qd_scale: str,
    include_exact: bool,
    kinds: tuple[str, ...] = (BELL, SEPARABLE),
) -> list[str]:
    """Evolve, measure, and write CSVs plus the summary JSON for one scenario."""
    out = Path(out_dir)
    states = {s.kind: s for s in (bell_state(), separable_state())}
    summary = {"scenario": scenario.name, "qd_scale": qd_scale}
    written = []
    for kind in kinds:
        traj = evolve(states[kind].matrix, scenario.system, scenario.pulse, scenario.rates, scenario.sim)
        samples = measure_trajectory(traj, include_exact=include_exact)
        csv_path = out / f"{scenario.name}_{kind}.csv"
        write_trajectory_csv(samples, csv_path)
        written.append(str(csv_path))
        summary[kind] = summarize(samples, pulse_center=scenario.pulse.t0)
    summary_path = out / f"{scenario.name}_summary.json"
    summary_path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    written.append(str(summary_path))
    return written


def _execute_run(request: RunRequest) -> int:
    kinds: tuple[str, ...] = (BELL, SEPARABLE)
    if request.scenario is not None:
        scenario = scenario_registry()[request.scenario]
    else:
        scenario, initial = load_config(request.config_path)
        if initial != "both":
            kinds = (initial,)
    scenario = _apply_overrides(scenario, request)
    out = _ensure_output_dir(request.output_dir)
    written = _run_one_scenario(scenario, str(out), request.qd_display_scale, request.emit_exact_eur, kinds)
    for path in written:
        print(path)
    return 0


def _execute_all_figures(args: argparse.Namespace) -> int:
    out = _ensure_output_dir(args.out)
    request = RunRequest(
        scenario=None, config_path=None, output_dir=str(out),
        dt_override=args.dt, stride_override=args.stride,
        emit_exact_eur=not args.skip_exact_eur, qd_display_scale=args.qd_scale,
    )
    scenarios = [_apply_overrides(s, request) for s in builtin_scenarios()]
    jobs = [(s, str(out), args.qd_scale, not args.skip_exact_eur) for s in scenarios]
    if args.workers == 1:
        results = [_run_one_scenario(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_run_one_scenario, *zip(*jobs)))
    for written in results:
        for path in written:
            print(path)
    return 0


def _execute_sweep(args: argparse.Namespace) -> int:
    registry = scenario_registry()
    if args.scenario not in registry:
        names = ", ".join(registry)
        raise UsageError(f"unknown scenario {args.scenario!r}; valid names: {names}")
    try:
        values = tuple(float(v) for v in args.values.split(",") if v.strip())
    except ValueError as exc:
        raise UsageError(f"bad sweep values {args.values!r}: {exc}") from exc
    try:
        expanded = expand_sweep(SweepSpec(base=registry[args.scenario], axis=args.axis, values=values))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    request = RunRequest(
        scenario=None, config_path=None, output_dir=args.out,
        dt_override=args.dt, stride_override=args.stride,
        emit_exact_eur=not args.skip_exact_eur, qd_display_scale=args.qd_scale,
    )
    out = _ensure_output_dir(args.out)
    for scenario in expanded:
        scenario = _apply_overrides(scenario, request)
        for path in _run_one_scenario(scenario, str(out), args.qd_scale, not args.skip_exact_eur):
            print(path)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            for scenario in builtin_scenarios():
                print(scenario.name)
            return 0
        if args.command == "run":
            return _execute_run(_request_from_namespace(args))
        if args.command == "all-figures":
            return _execute_all_figures(args)
        if args.command == "sweep":
            return _execute_sweep(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
