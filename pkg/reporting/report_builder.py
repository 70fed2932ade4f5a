"""
Assembles the full report for one Mukai vector: the verdict, the strata, the
local model of every polystable type with its estimates, and optional point
counts. Given identical inputs and seed the JSON is identical byte for byte;
runtimes are left out for that reason.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from dataclasses_json import dataclass_json

from errors import BudgetExceededError, ConsistencyError
from classify.classifier import classify
from classify.strata import enumerate_types, generic_point_structure, singular_locus_summary
from classify.verdict_structures import CaseLabel, GenericPointStructure, SingularLocusSummary, Verdict
from estimates.delta_estimates import DeltaReport, verify_bounds
from ffprobe.point_counter import CountResult, count_points
from lattice.mukai_structures import MukaiVector, SurfaceData
from local_model.model_builder import model_from_type, model_summary
from local_model.model_structures import ModelSummary
from local_model.points import dump_point, lagrangian_point
from settings import get_settings

logger = logging.getLogger(__name__)


@dataclass_json
@dataclass
class LocalModelEntry:
    """
    Local model of one polystable type.

    Attributes:
        type: The polystable type
        model: Its numerical description
        delta: The estimates, when the type is small enough to enumerate
        counts: Point counts over the requested primes that fit the budget
        sample_point: A seeded exact point of the null-fibre
        skipped: What was left out and why
    """
    type: str
    model: ModelSummary
    delta: Optional[DeltaReport] = None
    counts: List[CountResult] = field(default_factory=list)
    sample_point: Optional[dict] = None
    skipped: List[str] = field(default_factory=list)


@dataclass_json
@dataclass
class FullReport:
    """
    Everything known about M_H(v).

    Attributes:
        surface: The surface
        v: The Mukai vector
        v_general: Whether H was asserted v-general
        seed: Seed for the sample points
        verdict: The classification
        strata: Singular stratification, for m >= 2 and <v0,v0> >= 2
        generic_points: Local structure at generic points of each component
        local_models: One entry per polystable type
        notes: Caveats
        failures: Sections whose checks failed, with the reason
    """
    surface: SurfaceData
    v: MukaiVector
    v_general: bool
    seed: int
    verdict: Verdict
    strata: Optional[SingularLocusSummary] = None
    generic_points: List[GenericPointStructure] = field(default_factory=list)
    local_models: List[LocalModelEntry] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)


def build_report(surface: SurfaceData, v: MukaiVector, v_general: bool,
                 primes: Sequence[int] = (), seed: Optional[int] = None) -> FullReport:
    """
    Build the report; local models are only attached when <v0,v0> >= 2.

    Args:
        surface: Surface data
        v: Mukai vector
        v_general: Whether H is asserted v-general
        primes: Fields to count points over, skipped per model when over budget
        seed: Seed for sample points (settings default when omitted)
    """
    settings = get_settings()
    seed = settings.seed if seed is None else seed
    verdict = classify(surface, v, v_general)
    report = FullReport(surface=surface, v=v, v_general=v_general, seed=seed, verdict=verdict)
    e0, m = verdict.e0, verdict.m
    if verdict.case is CaseLabel.EMPTY or e0 < 2:
        report.notes.append("no local models: they are described for nonempty M_v with <v0,v0> >= 2 only")
        return report

    if m >= 2:
        report.strata = singular_locus_summary(e0, m)
        report.generic_points = [generic_point_structure(e0, k, m - k) for k in range(1, m // 2 + 1)]

    for t in enumerate_types(m):
        model = model_from_type(e0, t)
        entry = LocalModelEntry(type=str(t), model=model_summary(model))
        if sum(model.n) <= settings.enum_limit:
            try:
                entry.delta = verify_bounds(model, settings.enum_limit)
            except ConsistencyError as e:
                report.failures.append(f"estimates for {t}: {e}")
        else:
            entry.skipped.append(f"estimates: sum of n_i exceeds the enumeration limit {settings.enum_limit}")
        for q in primes:
            try:
                counted = count_points(model, q)
            except BudgetExceededError as e:
                entry.skipped.append(f"count over F_{q}: {e}")
                continue
            except ConsistencyError as e:
                report.failures.append(f"count over F_{q} for {t}: {e}")
                continue
            counted.runtime = 0.0
            entry.counts.append(counted)
        entry.sample_point = dump_point(model, lagrangian_point(model, seed))
        report.local_models.append(entry)
    logger.info("report for %s: %d local models", v, len(report.local_models))
    return report
