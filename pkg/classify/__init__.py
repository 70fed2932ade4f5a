"""
Classify - case labels, verdicts and the singular stratification of M_v.
"""

from .verdict_structures import (
    CaseLabel, Resolution, PolystableType, Stratum, SingularLocusSummary,
    GenericPointStructure, Verdict,
)
from .strata import (
    enumerate_types, stratum_dims, singular_locus_summary, quot_dims, generic_point_structure,
)
from .classifier import case_of, classify

__all__ = [
    'CaseLabel', 'Resolution', 'PolystableType', 'Stratum', 'SingularLocusSummary',
    'GenericPointStructure', 'Verdict',
    'enumerate_types', 'stratum_dims', 'singular_locus_summary', 'quot_dims',
    'generic_point_structure', 'case_of', 'classify',
]
