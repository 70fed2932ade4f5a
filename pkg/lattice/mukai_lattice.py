"""
Exact arithmetic in the even cohomology lattice of a K3 or abelian surface.

All functions are pure and work on Python integers, so nothing overflows and
nothing is ever rounded. The Hilbert polynomial is derived symbolically with
sympy from the pairing against v(O(-mH)).
"""

import logging
import math
from fractions import Fraction
from functools import reduce
from typing import Optional, Tuple

import sympy

from errors import InvalidInputError
from lattice.mukai_structures import (
    ClauseResult, ClauseStatus, HilbertPoly, MukaiVector, StarReport, SurfaceData
)

logger = logging.getLogger(__name__)


def _check_length(surface: SurfaceData, v: MukaiVector) -> None:
    if len(v.c) != surface.rho:
        raise InvalidInputError(
            f"Mukai vector {v} has c of length {len(v.c)}, surface has rho={surface.rho}"
        )


def _pair(surface: SurfaceData, v: Tuple, w: Tuple):
    """Mukai pairing on raw (r, c, a) triples; entries may be sympy expressions."""
    r_v, c_v, a_v = v
    r_w, c_w, a_w = w
    return surface.dot(c_v, c_w) - r_v * a_w - r_w * a_v


def pairing(surface: SurfaceData, v: MukaiVector, w: MukaiVector) -> int:
    """
    Mukai pairing <v, w> = c_v.c_w - r_v*a_w - r_w*a_v.

    Args:
        surface: The surface whose NS lattice the c parts live in
        v: First vector
        w: Second vector

    Returns:
        The pairing as an exact integer
    """
    _check_length(surface, v)
    _check_length(surface, w)
    return int(_pair(surface, (v.r, v.c, v.a), (w.r, w.c, w.a)))


def mukai_dual(v: MukaiVector) -> MukaiVector:
    """Flip the sign of the degree-2 part."""
    return MukaiVector(v.r, tuple(-x for x in v.c), v.a)


def mukai_from_chern(surface: SurfaceData, r: int, c1: Tuple[int, ...], ch2) -> MukaiVector:
    """
    Mukai vector ch(E)*sqrt(td(X)) of a sheaf with rank r, first Chern class c1 and ch_2.

    Raises:
        InvalidInputError: if c1 has the wrong length or ch2 + r*epsilon is not an integer
    """
    c1 = tuple(int(x) for x in c1)
    if len(c1) != surface.rho:
        raise InvalidInputError(f"c1 has length {len(c1)}, surface has rho={surface.rho}")
    a = Fraction(ch2) + r * surface.kind.td_correction
    if a.denominator != 1:
        raise InvalidInputError(f"inconsistent Chern data: a = ch2 + r*eps = {a} is not an integer")
    return MukaiVector(int(r), c1, int(a))


def line_bundle_vector(surface: SurfaceData, c1: Tuple[int, ...]) -> MukaiVector:
    """Mukai vector of the line bundle O(c1): rank 1, ch2 = c1^2/2."""
    return mukai_from_chern(surface, 1, c1, Fraction(surface.dot(c1, c1), 2))


def hilbert_poly(surface: SurfaceData, v: MukaiVector) -> HilbertPoly:
    """
    Hilbert polynomial chi(E(mH)) = -<v, v(O(-mH))> with respect to the ample class.

    v(O(-mH)) = (1, -mH, m^2 H^2/2 + epsilon) is paired with v symbolically in m.
    """
    _check_length(surface, v)
    m = sympy.Symbol('m')
    eps = surface.kind.td_correction
    line = (
        1,
        tuple(-m * h for h in surface.ample),
        sympy.Rational(surface.h_squared, 2) * m ** 2 + eps,
    )
    expr = sympy.expand(-_pair(surface, (v.r, v.c, v.a), line))
    poly = sympy.Poly(expr, m)
    coeffs = [sympy.Rational(poly.coeff_monomial(m ** k)) for k in (2, 1, 0)]
    q2, q1, q0 = (Fraction(int(c.p), int(c.q)) for c in coeffs)
    result = HilbertPoly(q2=q2, q1=q1, q0=q0)
    if not result.is_integer_valued():
        # the even lattice forces integrality; reaching this means corrupt input
        raise InvalidInputError(f"Hilbert polynomial {result} of {v} is not integer valued")
    return result


def primitive_decompose(v: MukaiVector) -> Tuple[int, MukaiVector]:
    """
    Write v = m * v0 with m > 0 and v0 primitive.

    Raises:
        InvalidInputError: for the zero vector
    """
    if v.is_zero():
        raise InvalidInputError("the zero vector has no primitive decomposition")
    m = reduce(math.gcd, (abs(x) for x in (v.r, *v.c, v.a)))
    v0 = MukaiVector(v.r // m, tuple(x // m for x in v.c), v.a // m)
    return m, v0


def check_star(surface: SurfaceData, v0: MukaiVector,
               effective_hint: Optional[bool] = None) -> StarReport:
    """
    Check the (*) conditions on a primitive vector v0.

    The clauses are: positivity (r0 > 0, or r0 = 0 with c0 effective), then
    <v0, v0> >= 2, then for torsion vectors a0 != 0. Effectivity of c0 comes
    from effective_hint when it is given; otherwise c0.H > 0 is used as a
    necessary condition and the clause is marked heuristic. A failed
    positivity clause means M_v is empty; the other clauses only decide
    whether the factoriality and resolution statements apply.
    """
    e0 = pairing(surface, v0, v0)
    report = StarReport(v0=v0, self_pairing=e0)

    if v0.r > 0:
        report.clauses.append(ClauseResult("positivity", ClauseStatus.PASS, f"r0 = {v0.r} > 0"))
    elif v0.r < 0:
        report.clauses.append(ClauseResult("positivity", ClauseStatus.FAIL, f"r0 = {v0.r} < 0"))
    elif not any(v0.c):
        report.clauses.append(ClauseResult("positivity", ClauseStatus.FAIL, "r0 = 0 and c0 = 0 is not effective"))
    elif effective_hint is not None:
        status = ClauseStatus.PASS if effective_hint else ClauseStatus.FAIL
        report.clauses.append(ClauseResult(
            "positivity", status, f"r0 = 0, c0 effective by assertion: {effective_hint}, a0 = {v0.a}"
        ))
    else:
        degree = surface.dot(v0.c, surface.ample)
        if degree > 0:
            report.clauses.append(ClauseResult(
                "positivity", ClauseStatus.HEURISTIC,
                f"r0 = 0, c0.H = {degree} > 0 (necessary for effectivity only), a0 = {v0.a}"
            ))
        else:
            report.clauses.append(ClauseResult(
                "positivity", ClauseStatus.FAIL, f"r0 = 0 and c0.H = {degree} <= 0, c0 not effective"
            ))

    if e0 >= 2:
        report.clauses.append(ClauseResult("self_pairing", ClauseStatus.PASS, f"<v0,v0> = {e0} >= 2"))
    else:
        report.clauses.append(ClauseResult("self_pairing", ClauseStatus.FAIL, f"<v0,v0> = {e0} < 2"))
    if v0.r == 0:
        if v0.a != 0:
            report.clauses.append(ClauseResult("a0_nonzero", ClauseStatus.PASS, f"a0 = {v0.a} != 0"))
        else:
            report.clauses.append(ClauseResult("a0_nonzero", ClauseStatus.FAIL, "r0 = 0 and a0 = 0"))

    if report.is_heuristic:
        logger.warning("effectivity of c0 for %s decided heuristically", v0)
    return report


def ext_dims(surface: SurfaceData, v1: MukaiVector, v2: MukaiVector, same_sheaf: bool) -> int:
    """
    dim Ext^1(E1, E2) for stable sheaves with Mukai vectors v1, v2.

    For distinct stable sheaves Hom and Ext^2 vanish and the dimension is
    <v1, v2>; for E1 = E2 both are one-dimensional and add 2.
    """
    value = pairing(surface, v1, v2) + (2 if same_sheaf else 0)
    if value < 0:
        raise InvalidInputError(
            f"dim Ext^1 would be {value} < 0: no pair of stable sheaves with vectors {v1}, {v2}"
        )
    return value
