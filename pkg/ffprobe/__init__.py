"""
Ffprobe - exact point counts of the null-fibre over small prime fields.
"""

from .point_counter import (
    CountResult, DimensionEstimate, lagrangian_dim, count_points, count_points_reference,
    slope_from_counts, dim_estimate, parse_primes,
)

__all__ = [
    'CountResult', 'DimensionEstimate', 'lagrangian_dim', 'count_points', 'count_points_reference',
    'slope_from_counts', 'dim_estimate', 'parse_primes',
]
