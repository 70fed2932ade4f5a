"""
Exhaustive sweep of the estimates over dimension vectors and Ext matrices.

Every closed form is affine in the independent entries of D, so each one is
reduced to a coefficient vector by evaluating it at D = 0 and at the
symmetric unit matrices. Equal coefficient vectors mean the forms agree for
every D at once, and nonnegative coefficients mean every estimate is
nondecreasing in D. The estimates on a whole grid of D matrices are then one
integer matrix product.

Models with at most full_range_parts indices get the full grid of D entries.
Larger ones get the minimal admissible D and every single-entry variation of
it over the full range; monotonicity places the minimum of every estimate at
the minimal D, so nothing below it is skipped.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

import numpy as np
from dataclasses_json import dataclass_json

from errors import ConsistencyError, InvalidInputError
from estimates.decompositions import enum_gradings, enum_splits
from estimates.delta_estimates import DeltaReport, semisimple_forms, unipotent_forms, verify_bounds
from local_model.model_structures import LocalModel
from settings import get_settings

logger = logging.getLogger(__name__)

CONFIG_DOUBLE = "n=(2), d_11=4"
CONFIG_PAIR = "n=(1,1), d_12=2"


@dataclass_json
@dataclass
class SweepBounds:
    """
    Limits of the sweep.

    Attributes:
        max_total: Largest sum of n_i
        max_entry: Largest entry of D
        full_range_parts: Models with at most this many indices get the full D grid
    """
    max_total: int = 6
    max_entry: int = 8
    full_range_parts: int = 3

    @classmethod
    def from_settings(cls) -> "SweepBounds":
        settings = get_settings()
        return cls(max_total=settings.enum_limit, max_entry=settings.sweep_max_entry,
                   full_range_parts=settings.sweep_full_range_parts)


@dataclass_json
@dataclass
class SweepReport:
    """
    Outcome of a sweep.

    Attributes:
        bounds: The limits used
        dimension_vectors: Number of dimension vectors visited
        models_checked: (n, D) pairs with a >= 2 that were evaluated
        models_skipped: (n, D) pairs skipped because a < 2
        decompositions: Splits and gradings evaluated, summed over dimension vectors
        forms_agree: Every closed form has the same coefficients on every decomposition
        monotone: Every coefficient on D is nonnegative
        min_delta: Smallest estimate seen
        exceptional_configurations: Configurations where some estimate equals 3
        exceptional_models: Number of (n, D) pairs with an estimate equal to 3
        exceptional_reports: Full estimate report for each of those pairs
        violations: Counterexamples (must stay empty)
        notes: Remarks on coverage
    """
    bounds: SweepBounds
    dimension_vectors: int = 0
    models_checked: int = 0
    models_skipped: int = 0
    decompositions: int = 0
    forms_agree: bool = True
    monotone: bool = True
    min_delta: Optional[int] = None
    exceptional_configurations: List[str] = field(default_factory=list)
    exceptional_models: int = 0
    exceptional_reports: List[DeltaReport] = field(default_factory=list)
    violations: List[Dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (not self.violations and self.forms_agree and self.monotone
                and sorted(self.exceptional_configurations) == sorted([CONFIG_DOUBLE, CONFIG_PAIR]))


def dimension_vectors(max_total: int) -> List[Tuple[int, ...]]:
    """All vectors of positive integers with sum <= max_total."""
    out = []

    def extend(prefix, remaining):
        if prefix:
            out.append(tuple(prefix))
        for x in range(1, remaining + 1):
            extend(prefix + [x], remaining - x)

    extend([], max_total)
    return sorted(out, key=lambda v: (sum(v), len(v), v))


def _entries(s: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(s) for j in range(i, s)]


def _matrix(s: int, entries, values) -> List[List[int]]:
    D = [[0] * s for _ in range(s)]
    for (i, j), v in zip(entries, values):
        D[i][j] = D[j][i] = int(v)
    return D


def affine_coefficients(n: Tuple[int, ...], form, decomposition) -> np.ndarray:
    """[constant, coefficient of each independent entry of D] of one closed form."""
    s = len(n)
    entries = _entries(s)
    constant = form(n, _matrix(s, entries, [0] * len(entries)), decomposition)
    coeffs = [constant]
    for e in range(len(entries)):
        unit = [1 if f == e else 0 for f in range(len(entries))]
        coeffs.append(form(n, _matrix(s, entries, unit), decomposition) - constant)
    return np.array(coeffs, dtype=np.int64)


def _entry_ranges(s: int, max_entry: int) -> List[List[int]]:
    return [list(range(0, max_entry + 1, 2)) if i == j else list(range(0, max_entry + 1))
            for i, j in _entries(s)]


def d_grid(s: int, bounds: SweepBounds) -> np.ndarray:
    """Rows of independent D entries visited for a model with s indices."""
    entries = _entries(s)
    ranges = _entry_ranges(s, bounds.max_entry)
    if s <= bounds.full_range_parts:
        return np.array(list(product(*ranges)), dtype=np.int64).reshape(-1, len(entries))
    minimal = np.array([4 if i == j else 2 for i, j in entries], dtype=np.int64)
    rows = [minimal]
    for e, values in enumerate(ranges):
        for value in values:
            if value > minimal[e]:
                row = minimal.copy()
                row[e] = value
                rows.append(row)
    return np.stack(rows)


def _sweep_vector(args) -> Dict:
    """Check every D on the grid for one dimension vector; returns a partial summary."""
    n, bounds = args
    s = len(n)
    entries = _entries(s)
    diag = np.array([i == j for i, j in entries])
    grid = d_grid(s, bounds)
    a = np.min(np.where(diag, grid - 2, grid), axis=1)
    admissible = a >= 2
    grid = grid[admissible]
    partial = {"n": list(n), "checked": int(grid.shape[0]), "skipped": int((~admissible).sum()),
               "decompositions": 0, "forms_agree": True, "monotone": True, "min_delta": None,
               "configurations": [], "exceptional_models": 0, "exceptional_reports": [], "violations": []}

    columns, lower_bounds = [], []
    for split in enum_splits(n):
        coeffs = [affine_coefficients(n, lambda nn, D, sp, f=f: semisimple_forms(nn, D, sp)[f], split)
                  for f in range(2)]
        columns.append((coeffs, "split " + str(split)))
        lower_bounds.append((2 * split.nu - 1) * (split.nu - 1))
    for grading in enum_gradings(n):
        coeffs = [affine_coefficients(n, lambda nn, D, g, f=f: unipotent_forms(nn, D, g)[f], grading)
                  for f in range(3)]
        columns.append((coeffs, "grading " + str(grading)))
        lower_bounds.append(None)
    partial["decompositions"] = len(columns)
    if not columns or grid.shape[0] == 0:
        return partial

    for coeffs, description in columns:
        if any(not np.array_equal(coeffs[0], c) for c in coeffs[1:]):
            partial["forms_agree"] = False
            partial["violations"].append({"n": list(n), "decomposition": description,
                                          "reason": "closed forms have different coefficients"})
        if np.any(coeffs[0][1:] < 0):
            partial["monotone"] = False
            partial["violations"].append({"n": list(n), "decomposition": description,
                                          "reason": "negative coefficient on D"})

    C = np.stack([c[0] for c, _ in columns], axis=1)
    deltas = C[0] + grid @ C[1:]
    minima = deltas.min(axis=1)
    partial["min_delta"] = int(minima.min())

    # the exceptional configurations, visible only for these two dimension vectors
    col = {e: k for k, e in enumerate(entries)}
    if n == (2,):
        exceptional = grid[:, col[(0, 0)]] == 4
    elif n == (1, 1):
        exceptional = grid[:, col[(0, 1)]] == 2
    else:
        exceptional = np.zeros(grid.shape[0], dtype=bool)

    bad = (minima < 3) | ((minima == 3) != exceptional)
    for k, bound in enumerate(lower_bounds):
        if bound is not None:
            bad |= deltas[:, k] < bound
    for row in np.nonzero(bad)[0][:10]:
        D = _matrix(s, entries, grid[row])
        partial["violations"].append({"n": list(n), "D": D, "min_delta": int(minima[row]),
                                      "reason": "bound violated or misplaced exceptional estimate"})
    hits = minima == 3
    partial["exceptional_models"] = int(hits.sum())
    if hits.any():
        partial["configurations"] = [CONFIG_DOUBLE if n == (2,) else CONFIG_PAIR if n == (1, 1) else str(n)]
    for row in np.nonzero(hits)[0]:
        D = _matrix(s, entries, grid[row])
        try:
            partial["exceptional_reports"].append(verify_bounds(LocalModel(n=n, D=D), enum_limit=sum(n)))
        except ConsistencyError as e:
            partial["violations"].append({"n": list(n), "D": D, "min_delta": 3, "reason": str(e)})

    # spot check the first row against direct evaluation
    D = _matrix(s, entries, grid[0])
    direct = []
    for split in enum_splits(n):
        direct.append(semisimple_forms(n, D, split)[0])
    for grading in enum_gradings(n):
        direct.append(unipotent_forms(n, D, grading)[0])
    if direct != [int(x) for x in deltas[0]]:
        raise ConsistencyError(f"affine evaluation differs from direct evaluation at n={n}, D={D}")
    return partial


def run_sweep(bounds: Optional[SweepBounds] = None, workers: Optional[int] = None) -> SweepReport:
    """
    Evaluate every estimate for all n with sum <= bounds.max_total and all D on the grid.

    Args:
        bounds: Sweep limits (from settings when omitted)
        workers: Worker processes; 1 runs in-process

    Returns:
        A SweepReport; results do not depend on the number of workers
    """
    bounds = bounds or SweepBounds.from_settings()
    if bounds.max_total < 1 or bounds.max_entry < 0 or bounds.full_range_parts < 1:
        raise InvalidInputError(f"invalid sweep bounds {bounds}")
    workers = workers or get_settings().workers
    vectors = dimension_vectors(bounds.max_total)
    jobs = [(n, bounds) for n in vectors]
    if workers > 1:
        with Pool(processes=workers) as pool:
            partials = pool.map(_sweep_vector, jobs)
    else:
        partials = [_sweep_vector(job) for job in jobs]

    report = SweepReport(bounds=bounds, dimension_vectors=len(vectors))
    configurations = set()
    for partial in partials:
        report.models_checked += partial["checked"]
        report.models_skipped += partial["skipped"]
        report.decompositions += partial["decompositions"]
        report.forms_agree &= partial["forms_agree"]
        report.monotone &= partial["monotone"]
        if partial["min_delta"] is not None:
            report.min_delta = partial["min_delta"] if report.min_delta is None else min(report.min_delta, partial["min_delta"])
        configurations.update(partial["configurations"])
        report.exceptional_models += partial["exceptional_models"]
        report.exceptional_reports.extend(partial["exceptional_reports"])
        report.violations.extend(partial["violations"])
    report.exceptional_configurations = sorted(configurations)
    report.notes.append(f"{report.models_skipped} (n, D) pairs with a < 2 skipped")
    if any(len(n) > bounds.full_range_parts for n in vectors):
        report.notes.append(
            f"models with more than {bounds.full_range_parts} indices: minimal D and single-entry "
            f"variations only (estimates are nondecreasing in D)"
        )
    logger.info("sweep: %d models checked, %d skipped, min Delta %s",
                report.models_checked, report.models_skipped, report.min_delta)
    return report
