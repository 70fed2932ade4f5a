"""
One function per subcommand. Each writes a JSON document to stdout (with the
seed echoed), optionally a human-readable rendering, and returns the exit
code: 0 success, 1 verification failure, 2 input error.
"""

import json
import logging
import os
import sys
from typing import Callable, Dict, TextIO

from errors import BudgetExceededError, ConsistencyError, InvalidInputError, UnsupportedModelError
from classify.classifier import classify
from classify.strata import singular_locus_summary
from classify.verdict_structures import CaseLabel
from cli.run_config import Command, RunConfig, parse_type
from estimates.delta_estimates import verify_bounds
from estimates.sweep import SweepBounds, run_sweep
from ffprobe.point_counter import count_points, slope_from_counts
from lattice.mukai_structures import load_surface, parse_mukai_vector
from local_model.model_builder import expected_dim, model_from_json, model_from_type
from local_model.model_structures import LocalModel
from local_model.probes import probe_model
from reporting.human_logger import HumanLogger
from reporting.report_builder import build_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def emit(out: TextIO, config: RunConfig, result) -> None:
    """Print {"command", "seed", "result"} with sorted keys and fixed indentation."""
    document = {"command": config.command.value, "seed": config.seed, "result": result}
    out.write(json.dumps(document, sort_keys=True, indent=2) + "\n")


def _plain(obj) -> dict:
    # through JSON so enums and rationals come out encoded
    return json.loads(obj.to_json())


def _load_model(config: RunConfig) -> LocalModel:
    if config.type_spec is not None:
        return model_from_type(config.e0, parse_type(config.type_spec))
    source = config.model
    if os.path.isfile(source):
        try:
            with open(source, encoding="utf-8") as handle:
                source = handle.read()
        except OSError as e:
            raise InvalidInputError(f"cannot read model file {config.model}: {e}")
    return model_from_json(source)


def _human(config: RunConfig, human: HumanLogger) -> bool:
    return not config.quiet and human is not None


def cmd_classify(config: RunConfig, out: TextIO, human: HumanLogger = None) -> int:
    surface = load_surface(config.surface_path)
    v = parse_mukai_vector(config.vector, surface.rho)
    verdict = classify(surface, v, config.v_general, config.effective)
    if _human(config, human):
        human.log_verdict(verdict)
        if verdict.case in (CaseLabel.B, CaseLabel.C):
            human.log_strata(singular_locus_summary(verdict.e0, verdict.m))
    emit(out, config, _plain(verdict))
    return EXIT_OK


def cmd_local_model(config: RunConfig, out: TextIO, human: HumanLogger = None) -> int:
    model = _load_model(config)
    probe = probe_model(model, seeds=range(config.seed, config.seed + config.probes))
    if _human(config, human):
        human.log_models([probe.summary])
    emit(out, config, _plain(probe))
    return EXIT_OK if probe.passed else EXIT_FAILED


def cmd_verify_estimates(config: RunConfig, out: TextIO, human: HumanLogger = None) -> int:
    if config.sweep:
        defaults = SweepBounds.from_settings()
        bounds = SweepBounds(
            max_total=config.max_total if config.max_total is not None else defaults.max_total,
            max_entry=config.max_entry if config.max_entry is not None else defaults.max_entry,
            full_range_parts=config.full_range_parts if config.full_range_parts is not None
            else defaults.full_range_parts,
        )
        report = run_sweep(bounds, workers=config.workers)
        if _human(config, human):
            human.log_sweep(report)
        emit(out, config, _plain(report))
        return EXIT_OK if report.passed else EXIT_FAILED

    report = verify_bounds(_load_model(config))
    if _human(config, human):
        human.log_delta_report(report)
    emit(out, config, _plain(report))
    return EXIT_OK


def cmd_count_points(config: RunConfig, out: TextIO, human: HumanLogger = None) -> int:
    model = _load_model(config)
    counts = [count_points(model, q, workers=config.workers) for q in sorted(set(config.primes))]
    result = {"expected_dim": expected_dim(model), "counts": [_plain(c) for c in counts]}
    estimate = None
    if len(counts) >= 2:
        estimate = slope_from_counts(counts)
        result["dim_estimate"] = str(estimate)
        result["deviation"] = str(estimate - expected_dim(model))
    if _human(config, human):
        human.log_counts(counts)
        if estimate is not None:
            human.banner(f"📈 Slope {estimate} against expected {expected_dim(model)}")
    emit(out, config, result)
    return EXIT_OK


def cmd_report(config: RunConfig, out: TextIO, human: HumanLogger = None) -> int:
    surface = load_surface(config.surface_path)
    v = parse_mukai_vector(config.vector, surface.rho)
    report = build_report(surface, v, config.v_general, primes=config.primes, seed=config.seed)
    if _human(config, human):
        human.log_verdict(report.verdict)
        if report.strata is not None:
            human.log_strata(report.strata)
        human.log_models([e.model for e in report.local_models])
        for entry in report.local_models:
            if entry.delta is not None and entry.delta.deltas:
                human.log_delta_report(entry.delta)
    emit(out, config, _plain(report))
    return EXIT_FAILED if report.failures else EXIT_OK


COMMANDS: Dict[Command, Callable[..., int]] = {
    Command.CLASSIFY: cmd_classify,
    Command.LOCAL_MODEL: cmd_local_model,
    Command.VERIFY_ESTIMATES: cmd_verify_estimates,
    Command.COUNT_POINTS: cmd_count_points,
    Command.REPORT: cmd_report,
}


def run(config: RunConfig, out: TextIO, human: HumanLogger = None) -> int:
    """Dispatch and turn library errors into exit codes."""
    try:
        return COMMANDS[config.command](config, out, human)
    except ConsistencyError as e:
        print(f"❌ Verification failed: {e}", file=human.stream if human else sys.stderr)
        emit(out, config, {"error": str(e), "counterexample": e.counterexample})
        return EXIT_FAILED
    except (InvalidInputError, UnsupportedModelError, BudgetExceededError) as e:
        print(f"❌ {e}", file=human.stream if human else sys.stderr)
        return EXIT_INPUT
