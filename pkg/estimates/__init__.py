"""
Estimates - exhaustive check of the stabiliser codimension estimates.

Enumerates semisimple splits and unipotent gradings of a dimension vector,
evaluates the estimate Delta in several independent closed forms and sweeps
whole families of local models.
"""

from .decompositions import SemisimpleSplit, UnipotentGrading, enum_splits, enum_gradings
from .delta_estimates import (
    DecompositionDelta, DeltaReport,
    semisimple_total_form, semisimple_pairwise_form,
    unipotent_raw_form, unipotent_expanded_form, unipotent_collected_form,
    unipotent_part_bounds, delta_semisimple, delta_unipotent,
    evaluate_decompositions, conclusions_for, verify_bounds,
)
from .sweep import SweepBounds, SweepReport, dimension_vectors, d_grid, run_sweep

__all__ = [
    'SemisimpleSplit', 'UnipotentGrading', 'enum_splits', 'enum_gradings',
    'DecompositionDelta', 'DeltaReport',
    'semisimple_total_form', 'semisimple_pairwise_form',
    'unipotent_raw_form', 'unipotent_expanded_form', 'unipotent_collected_form',
    'unipotent_part_bounds', 'delta_semisimple', 'delta_unipotent',
    'evaluate_decompositions', 'conclusions_for', 'verify_bounds',
    'SweepBounds', 'SweepReport', 'dimension_vectors', 'd_grid', 'run_sweep',
]
