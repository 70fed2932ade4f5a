"""
Human-readable output for verdicts, local models, estimates and point counts.

Machine-readable JSON goes to stdout; everything printed here goes to the
stream the logger was built with (stderr from the command line).
"""

import sys
from typing import List, Optional, TextIO

import pandas as pd

from classify.verdict_structures import SingularLocusSummary, Verdict
from estimates.delta_estimates import DeltaReport
from estimates.sweep import SweepReport
from ffprobe.point_counter import CountResult, DimensionEstimate
from local_model.model_structures import ModelSummary


class HumanLogger:
    """
    Prints banners and pandas tables for people reading a terminal.
    """

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream or sys.stderr

    def _print(self, text: str = "") -> None:
        print(text, file=self.stream)

    def banner(self, title: str) -> None:
        self._print(f"\n{'='*80}")
        self._print(title)
        self._print(f"{'='*80}")

    def table(self, rows: List[dict]) -> None:
        if not rows:
            self._print("   (none)")
            return
        frame = pd.DataFrame(rows)
        for line in frame.to_string(index=False).splitlines():
            self._print(f"   {line}")

    def log_verdict(self, verdict: Verdict) -> None:
        """Case, dimensions and the resolution question."""
        self.banner(f"🏷️ VERDICT FOR v = {verdict.v}")
        self._print(f"   📐 v = {verdict.m} * ({verdict.v0}), <v0,v0> = {verdict.e0}")
        self._print(f"   🧭 Case: {verdict.case.value}")
        self._print(f"   📏 dim M_v: {_or_dash(verdict.dim_M)}")
        self._print(f"   🕳️ Singular codimension: {_or_dash(verdict.sing_codim)}")
        self._print(f"   🧱 Locally factorial: {_or_dash(verdict.locally_factorial)}")
        self._print(f"   🛠️ Symplectic resolution: {verdict.resolution.value}")
        if verdict.star is not None:
            self.table([{"clause": c.name, "status": c.status.value, "detail": c.detail}
                        for c in verdict.star.clauses])
        for note in verdict.notes:
            self._print(f"   📝 {note}")

    def log_strata(self, summary: SingularLocusSummary) -> None:
        self.banner(f"🗺️ STRATA (e0 = {summary.e0}, m = {summary.m})")
        self.table([{"type": str(s.type), "dim": s.dim, "codim": s.codim, "component": s.label or ""}
                    for s in summary.components + summary.strata])
        self._print(f"   🕳️ Singular locus codimension: {summary.min_codim}")

    def log_models(self, models: List[ModelSummary]) -> None:
        self.banner("🧩 LOCAL MODELS")
        self.table([{"n": tuple(m.n), "D": tuple(tuple(r) for r in m.D), "a": m.a, "dim U": m.dim_u,
                     "expected dim": m.expected_dim, "exceptional": m.exceptional} for m in models])

    def log_delta_report(self, report: DeltaReport) -> None:
        self.banner(f"📐 ESTIMATES FOR n = {tuple(report.n)}, D = {report.D}")
        self.table([{"kind": d.kind, "decomposition": d.description, "Delta": d.delta,
                     "bound": d.lower_bound} for d in report.deltas])
        self._print(f"   ⬇️ min Delta: {_or_dash(report.min_delta)}")
        self._print(f"   ⚠️ Exceptional hits: {len(report.exceptional_hits)}")
        for conclusion in report.conclusions:
            self._print(f"   ✅ {conclusion}")

    def log_sweep(self, report: SweepReport) -> None:
        self.banner("🔍 ESTIMATE SWEEP")
        bounds = report.bounds
        self._print(f"   📦 sum n_i <= {bounds.max_total}, D entries <= {bounds.max_entry}")
        self._print(f"   🧮 Models checked: {report.models_checked} (skipped {report.models_skipped})")
        self._print(f"   🔀 Decompositions: {report.decompositions}")
        self._print(f"   ⬇️ min Delta: {_or_dash(report.min_delta)}")
        self._print(f"   ⚠️ Exceptional: {', '.join(report.exceptional_configurations) or '-'}")
        self._print(f"   🧾 Estimate reports for Delta = 3: {len(report.exceptional_reports)}")
        self._print(f"   {'✅' if report.passed else '❌'} Violations: {len(report.violations)}")
        for note in report.notes:
            self._print(f"   📝 {note}")

    def log_counts(self, counts: List[CountResult], estimate: Optional[DimensionEstimate] = None) -> None:
        self.banner("🔢 POINT COUNTS")
        self.table([{"q": c.q, "points": c.total_points, "solutions": c.solutions,
                     "log_q": str(c.log_dim_estimate), "seconds": round(c.runtime, 3)} for c in counts])
        if estimate is not None:
            self._print(f"   📈 Slope {estimate.estimate} against expected {estimate.expected}")
            for note in estimate.notes:
                self._print(f"   📝 {note}")


def _or_dash(value) -> str:
    return "-" if value is None else str(value)
