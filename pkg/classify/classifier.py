"""
Classifier - turns (surface, v, assertion about H) into a Verdict.

The verdict records the case label, the dimension of M_v, the codimension of
its singular locus, local factoriality and whether a symplectic resolution
exists, together with notes on where each statement comes from.
"""

import logging
from typing import Optional

from errors import InvalidInputError
from lattice.mukai_lattice import check_star, pairing, primitive_decompose
from lattice.mukai_structures import ClauseStatus, MukaiVector, SurfaceData, SurfaceKind
from classify.strata import singular_locus_summary
from classify.verdict_structures import CaseLabel, Resolution, Verdict

logger = logging.getLogger(__name__)

NOTE_TORSION = "torsion case: conditional on cited hypotheses"
NOTE_EXISTENCE = "existence: per cited criterion (non-emptiness is not verified independently)"
NOTE_NOT_V_GENERAL = ("warning: H not asserted v-general; singularity, factoriality "
                      "and resolution statements are withheld")
NOTE_OUTSIDE_STAR = ("r0 = 0 and a0 = 0: outside (*), singularity, factoriality and "
                     "resolution statements do not apply")


def case_of(e0: int, m: int) -> CaseLabel:
    """
    Case label from <v0, v0> and the multiplicity m.

    Args:
        e0: Self-pairing of the primitive part, even
        m: Multiplicity, positive

    Returns:
        Minus2Point for e0 = -2, IsotropicSymmetricProduct for e0 = 0, A for
        m = 1, B for (e0, m) = (2, 2), C otherwise; Empty below -2
    """
    if e0 % 2 != 0:
        raise InvalidInputError(f"<v0,v0> = {e0} is odd, impossible on an even lattice")
    if m < 1:
        raise InvalidInputError(f"multiplicity must be positive, got {m}")
    if e0 < -2:
        return CaseLabel.EMPTY
    if e0 == -2:
        return CaseLabel.MINUS2_POINT
    if e0 == 0:
        return CaseLabel.ISOTROPIC_SYMMETRIC_PRODUCT
    if m == 1:
        return CaseLabel.A
    if e0 == 2 and m == 2:
        return CaseLabel.B
    return CaseLabel.C


def _empty(v: MukaiVector, m: int, v0: MukaiVector, e0: int, v_general: bool, reason: str) -> Verdict:
    return Verdict(case=CaseLabel.EMPTY, v=v, m=m, v0=v0, e0=e0, dim_M=None, sing_codim=None,
                   locally_factorial=None, resolution=Resolution.NOT_APPLICABLE,
                   v_general=v_general, notes=[reason, NOTE_EXISTENCE])


def _zero_dim_torsion(v: MukaiVector, m: int, v0: MukaiVector, v_general: bool) -> Verdict:
    a = v.a
    if a <= 0:
        return _empty(v, m, v0, 0, v_general, f"v = (0,0,{a}) with a <= 0 is not the vector of a sheaf")
    notes = [f"M_v = S^{a} X (symmetric product of the surface)"]
    if a == 1:
        return Verdict(case=CaseLabel.ZERO_DIM_TORSION, v=v, m=m, v0=v0, e0=0, dim_M=2,
                       sing_codim=None, locally_factorial=True, resolution=Resolution.SMOOTH,
                       v_general=v_general, notes=notes)
    notes.append("symplectic resolution: Hilbert-Chow morphism Hilb^a X -> S^a X")
    notes.append("a0 = 0 lies outside the (*) conditions; verdict from the symmetric product description")
    return Verdict(case=CaseLabel.ZERO_DIM_TORSION, v=v, m=m, v0=v0, e0=0, dim_M=2 * a,
                   sing_codim=2, locally_factorial=False, resolution=Resolution.EXISTS,
                   v_general=v_general, notes=notes)


def classify(surface: SurfaceData, v: MukaiVector, h_is_v_general: bool,
             effective_hint: Optional[bool] = None) -> Verdict:
    """
    Classify the moduli space M_H(v).

    Args:
        surface: Surface data
        v: Nonzero Mukai vector
        h_is_v_general: Whether the polarisation is asserted to avoid all v-walls
        effective_hint: Effectivity of c0 in the torsion case, if known

    Returns:
        The Verdict; non-v-general input keeps case and dimension only
    """
    m, v0 = primitive_decompose(v)
    if v.r == 0 and not any(v.c):
        verdict = _zero_dim_torsion(v, m, v0, h_is_v_general)
        verdict.check_invariants()
        return verdict

    e0 = pairing(surface, v0, v0)
    if v0.r < 0:
        return _empty(v, m, v0, e0, h_is_v_general, f"r0 = {v0.r} < 0")
    if e0 < -2:
        return _empty(v, m, v0, e0, h_is_v_general, f"<v0,v0> = {e0} < -2")

    star = check_star(surface, v0, effective_hint)
    positivity = star.clauses[0]
    if positivity.status is ClauseStatus.FAIL:
        verdict = _empty(v, m, v0, e0, h_is_v_general, f"positivity fails: {positivity.detail}")
        verdict.star = star
        return verdict

    case = case_of(e0, m)
    notes = []
    if v0.r == 0:
        notes.append(NOTE_TORSION)
    if positivity.status is ClauseStatus.HEURISTIC:
        notes.append("effectivity of c0 decided heuristically from c0.H > 0")

    if case is CaseLabel.MINUS2_POINT:
        notes.append("M_v consists of a single point, the polystable sheaf E0^{+m}")
        verdict = Verdict(case=case, v=v, m=m, v0=v0, e0=e0, dim_M=0, sing_codim=None,
                          locally_factorial=True, resolution=Resolution.SMOOTH)
    elif case is CaseLabel.ISOTROPIC_SYMMETRIC_PRODUCT:
        notes.append(f"M_v = S^{m}(M_v0) with M_v0 a smooth surface")
        if m == 1:
            verdict = Verdict(case=case, v=v, m=m, v0=v0, e0=e0, dim_M=2, sing_codim=None,
                              locally_factorial=True, resolution=Resolution.SMOOTH)
        else:
            notes.append("symplectic resolution: Hilbert-Chow morphism Hilb^m(M_v0) -> S^m(M_v0)")
            verdict = Verdict(case=case, v=v, m=m, v0=v0, e0=e0, dim_M=2 * m, sing_codim=2,
                              locally_factorial=False, resolution=Resolution.EXISTS)
    elif case is CaseLabel.A:
        if surface.kind is SurfaceKind.K3:
            notes.append(f"deformation equivalent to Hilb^{1 + e0 // 2}(X) (reported, not computed)")
        else:
            notes.append(f"deformation equivalent to Pic^0(X) x Hilb^{e0 // 2}(X) (reported, not computed)")
        verdict = Verdict(case=case, v=v, m=m, v0=v0, e0=e0, dim_M=2 + e0, sing_codim=None,
                          locally_factorial=True, resolution=Resolution.SMOOTH)
    elif case is CaseLabel.B:
        summary = singular_locus_summary(e0, m)
        notes.append("singular locus = S^2 M_v0, of codimension 2")
        notes.append("symplectic resolution: blow-up of the reduced singular locus")
        verdict = Verdict(case=case, v=v, m=m, v0=v0, e0=e0, dim_M=2 + m * m * e0,
                          sing_codim=summary.min_codim, locally_factorial=False,
                          resolution=Resolution.EXISTS)
    else:
        summary = singular_locus_summary(e0, m)
        notes.append("locally factorial singular symplectic variety")
        notes.append("no projective symplectic resolution (singular locus of codimension >= 4)")
        notes.append("completed local rings at generic points of Y(m',m'') are not factorial (not computed)")
        verdict = Verdict(case=case, v=v, m=m, v0=v0, e0=e0, dim_M=2 + m * m * e0,
                          sing_codim=summary.min_codim, locally_factorial=True,
                          resolution=Resolution.DOES_NOT_EXIST)

    verdict.star = star
    verdict.v_general = h_is_v_general
    outside_star = any(c.name == "a0_nonzero" and c.status is ClauseStatus.FAIL for c in star.clauses)
    if outside_star or not h_is_v_general:
        verdict.sing_codim = None
        verdict.locally_factorial = None
        verdict.resolution = Resolution.NOT_APPLICABLE
    if outside_star:
        notes.append(NOTE_OUTSIDE_STAR)
        logger.warning("v0 = %s has r0 = a0 = 0; verdict restricted", v0)
    if not h_is_v_general:
        notes.append(NOTE_NOT_V_GENERAL)
        logger.warning("H not asserted v-general for v = %s; verdict restricted", v)
    verdict.notes = notes
    verdict.check_invariants()
    return verdict
