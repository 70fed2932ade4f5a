"""
Local model - the symplectic vector space U(n), its form omega, the quadratic
moment map mu and exact points of the null-fibre F(n) = mu^{-1}(0).
"""

from .model_structures import LocalModel, PointU, MomentValue, ScalarDomain, ModelSummary, RATIONALS
from .model_builder import (
    model_from_type, build_model, model_from_json, a_value, expected_dim,
    expected_dim_via_spaces, is_exceptional, model_summary,
)
from .points import (
    zero_point, flatten_point, unflatten_point, basis_point, random_point,
    lagrangian_point, reduce_point, dump_point, load_point,
)
from .moment_map import (
    dim_u, dim_gl, mu_bilinear, mu_eval, omega_eval, infinitesimal_action, act,
    mu_jacobian, action_matrix, stabilizer_dim, jacobian_rank, torus_weights,
    omega_gram, is_symplectic,
)
from .exact_linalg import rank, inverse, random_invertible, lagrangian_basis
from .probes import PointProbe, ModelProbe, probe_point, probe_model

__all__ = [
    'LocalModel', 'PointU', 'MomentValue', 'ScalarDomain', 'ModelSummary', 'RATIONALS',
    'model_from_type', 'build_model', 'model_from_json', 'a_value', 'expected_dim',
    'expected_dim_via_spaces', 'is_exceptional', 'model_summary',
    'zero_point', 'flatten_point', 'unflatten_point', 'basis_point', 'random_point',
    'lagrangian_point', 'reduce_point', 'dump_point', 'load_point',
    'dim_u', 'dim_gl', 'mu_bilinear', 'mu_eval', 'omega_eval', 'infinitesimal_action', 'act',
    'mu_jacobian', 'action_matrix', 'stabilizer_dim', 'jacobian_rank', 'torus_weights',
    'omega_gram', 'is_symplectic',
    'rank', 'inverse', 'random_invertible', 'lagrangian_basis',
    'PointProbe', 'ModelProbe', 'probe_point', 'probe_model',
]
