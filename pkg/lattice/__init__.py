"""
Lattice - exact arithmetic on Mukai vectors of K3 and abelian surfaces.

Surfaces are described by an even Gram matrix on NS(X) and an ample class;
Mukai vectors by integer triples (r, c, a).
"""

from .mukai_structures import (
    SurfaceKind, SurfaceData, MukaiVector, HilbertPoly,
    ClauseStatus, ClauseResult, StarReport,
    surface_from_dict, parse_surface, load_surface, parse_mukai_vector,
)
from .mukai_lattice import (
    pairing, mukai_dual, mukai_from_chern, line_bundle_vector, hilbert_poly,
    primitive_decompose, check_star, ext_dims,
)

__all__ = [
    'SurfaceKind', 'SurfaceData', 'MukaiVector', 'HilbertPoly',
    'ClauseStatus', 'ClauseResult', 'StarReport',
    'surface_from_dict', 'parse_surface', 'load_surface', 'parse_mukai_vector',
    'pairing', 'mukai_dual', 'mukai_from_chern', 'line_bundle_vector', 'hilbert_poly',
    'primitive_decompose', 'check_star', 'ext_dims',
]
