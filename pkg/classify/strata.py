"""
Stratification of M_v by polystable type.

For v = m v0 every polystable sheaf is a sum of stable sheaves with vectors
m_i v0; the stratum of a type is a finite image of a product of smaller
moduli spaces, so its dimension is the sum of m_i^2 e0 + 2 over the factors.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from errors import ConsistencyError, InvalidInputError
from lattice.mukai_lattice import hilbert_poly, pairing
from lattice.mukai_structures import MukaiVector, SurfaceData
from classify.verdict_structures import (
    GenericPointStructure, PolystableType, SingularLocusSummary, Stratum
)

logger = logging.getLogger(__name__)


def _type_order(t: PolystableType):
    # fewer factors first, then larger parts first
    return (len(t.parts), tuple((-m, -n) for m, n in sorted(t.parts, reverse=True)))


@lru_cache(maxsize=None)
def _multisets(remaining: int, largest: Tuple[int, int]) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """Non-increasing sequences of pairs (m, n) <= largest with sum of m*n = remaining."""
    if remaining == 0:
        return ((),)
    found = []
    for m in range(min(remaining, largest[0]), 0, -1):
        n_top = remaining // m
        if m == largest[0]:
            n_top = min(n_top, largest[1])
        for n in range(n_top, 0, -1):
            for rest in _multisets(remaining - m * n, (m, n)):
                found.append(((m, n),) + rest)
    return tuple(found)


def enumerate_types(m: int, n_max: Optional[int] = None) -> List[PolystableType]:
    """
    All polystable types with total multiplicity m.

    Args:
        m: Total multiplicity, at least 1
        n_max: When given, keep only types whose local model has sum of n_i <= n_max

    Returns:
        Types ordered by number of factors, then by parts in decreasing order;
        the stable type {(m,1)} comes first
    """
    if m < 1:
        raise InvalidInputError(f"multiplicity must be positive, got {m}")
    types = [PolystableType(parts) for parts in _multisets(m, (m, m))]
    if n_max is not None:
        types = [t for t in types if sum(n for _, n in t.parts) <= n_max]
    return sorted(types, key=_type_order)


def stratum_dims(e0: int, t: PolystableType) -> Stratum:
    """Dimension and codimension of the stratum of type t in M_{m v0}."""
    if e0 < 2:
        raise InvalidInputError(f"strata are only described for <v0,v0> >= 2, got {e0}")
    dim = sum(m_i * m_i * e0 + 2 for m_i, _ in t.parts)
    total = t.total
    return Stratum(type=t, dim=dim, codim=total * total * e0 + 2 - dim)


def singular_locus_summary(e0: int, m: int) -> SingularLocusSummary:
    """
    Components Y(m', m - m'), 1 <= m' <= m/2, of the singular locus with
    codimension 2 m'(m - m') e0 - 2, together with every non-stable stratum.

    Raises:
        ConsistencyError: if the strata disagree with the component formula
    """
    if m < 2 or e0 < 2:
        raise InvalidInputError(f"singular locus needs m >= 2 and e0 >= 2, got m={m}, e0={e0}")
    components = []
    for m1 in range(1, m // 2 + 1):
        m2 = m - m1
        stratum = stratum_dims(e0, PolystableType(((m1, 1), (m2, 1))))
        stratum.label = f"Y({m1},{m2})"
        if stratum.codim != 2 * m1 * m2 * e0 - 2:
            raise ConsistencyError(f"component {stratum.label} has codim {stratum.codim}")
        components.append(stratum)
    strata = [stratum_dims(e0, t) for t in enumerate_types(m) if not t.is_stable]

    min_codim = min(s.codim for s in components)
    if min(s.codim for s in strata) != min_codim:
        raise ConsistencyError(
            f"strata minimum codim {min(s.codim for s in strata)} differs from component minimum {min_codim}"
        )
    is_b = (e0, m) == (2, 2)
    if (min_codim == 2) != is_b or (not is_b and min_codim < 4):
        raise ConsistencyError(f"singular codimension {min_codim} contradicts the case split for e0={e0}, m={m}")
    return SingularLocusSummary(e0=e0, m=m, components=components, strata=strata, min_codim=min_codim)


def quot_dims(surface: SurfaceData, v: MukaiVector, k: int) -> Tuple[int, int]:
    """
    N = P_v(k) and dim R^ss = <v,v> + 1 + N^2 for the Quot-scheme chart.

    Raises:
        InvalidInputError: if P_v(k) <= 0, i.e. k is too small
    """
    value = hilbert_poly(surface, v)(k)
    if value <= 0:
        raise InvalidInputError(f"P_v({k}) = {value} <= 0: k is too small")
    n = int(value)
    return n, pairing(surface, v, v) + 1 + n * n


def generic_point_structure(e0: int, m1: int, m2: int) -> GenericPointStructure:
    """
    Local structure at a generic point E' + E'' of Y(m1, m2).

    The scaling torus acts on the four Ext^1 blocks with the weights read off
    the two-vertex local model; the invariants of the mixed blocks form the
    cone of d x d matrices of rank at most 1, d = m1 m2 e0.
    """
    # local import: local_model depends on this package for PolystableType
    from local_model.model_builder import model_from_type
    from local_model.moment_map import torus_weights

    if m1 < 1 or m2 < 1:
        raise InvalidInputError(f"multiplicities must be positive, got {m1}, {m2}")
    model = model_from_type(e0, PolystableType(((m1, 1), (m2, 1))))
    # the type is stored sorted; locate the factor that plays the role of E''
    first = 0 if model.parts[0][0] == m1 else 1
    order = [(first, first), (first, 1 - first), (1 - first, first), (1 - first, 1 - first)]
    weights_by_block = torus_weights(model, 1 - first)
    d = m1 * m2 * e0
    ext = [model.D[i][j] for i, j in order]
    cone = 2 * d - 1
    local_dim = ext[0] + cone + ext[3] - 1
    m = m1 + m2
    structure = GenericPointStructure(
        e0=e0, m1=m1, m2=m2, ext_dims=ext,
        weights=[weights_by_block[b] for b in order],
        cone_dim=cone, local_dim=local_dim, expected_dim=m * m * e0 + 2,
    )
    if not structure.dimensions_agree:
        raise ConsistencyError(f"local dimension {local_dim} at Y({m1},{m2}) differs from {structure.expected_dim}")
    logger.debug("generic point of Y(%d,%d): weights %s", m1, m2, structure.weights)
    return structure
