#!/usr/bin/env python3
"""
Tests for the classifier: case labels, verdicts, polystable types and the
stratification of the singular locus.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from errors import InvalidInputError
from lattice import SurfaceData, SurfaceKind, MukaiVector
from classify import (
    CaseLabel, Resolution, PolystableType,
    enumerate_types, stratum_dims, singular_locus_summary, quot_dims, generic_point_structure,
    case_of, classify,
)
from classify.classifier import NOTE_NOT_V_GENERAL, NOTE_OUTSIDE_STAR, NOTE_TORSION


def create_test_quartic() -> SurfaceData:
    return SurfaceData(kind=SurfaceKind.K3, gram=[[4]], ample=[1])


def create_test_abelian() -> SurfaceData:
    return SurfaceData(kind=SurfaceKind.ABELIAN, gram=[[2]], ample=[1])


def create_test_vector(r: int, c: int, a: int) -> MukaiVector:
    return MukaiVector(r=r, c=(c,), a=a)


def test_case_of():
    """Case labels from (e0, m)."""
    print("🏷️ Testing case labels...")
    assert case_of(2, 2) is CaseLabel.B
    assert case_of(4, 2) is CaseLabel.C
    assert case_of(-2, 5) is CaseLabel.MINUS2_POINT
    assert case_of(0, 3) is CaseLabel.ISOTROPIC_SYMMETRIC_PRODUCT
    assert case_of(6, 1) is CaseLabel.A
    assert case_of(-4, 1) is CaseLabel.EMPTY
    for e0, m in [(2, 3), (2, 4), (4, 2), (6, 2), (4, 3)]:
        assert case_of(e0, m) is CaseLabel.C
    with pytest.raises(InvalidInputError):
        case_of(3, 2)
    with pytest.raises(InvalidInputError):
        case_of(2, 0)
    print("✅ Case labels correct")


def test_classify_ogrady():
    print("🔬 Testing the ten-dimensional example...")
    verdict = classify(create_test_quartic(), create_test_vector(2, 0, -2), True)
    assert verdict.case is CaseLabel.B
    assert verdict.m == 2 and verdict.e0 == 2
    assert verdict.dim_M == 10
    assert verdict.sing_codim == 2
    assert verdict.resolution is Resolution.EXISTS
    assert verdict.locally_factorial is False
    assert verdict.star.holds
    print("✅ Case B verdict")


def test_classify_case_c():
    verdict = classify(create_test_quartic(), create_test_vector(3, 0, -3), True)
    assert verdict.case is CaseLabel.C
    assert verdict.dim_M == 20
    assert verdict.sing_codim == 6
    assert verdict.locally_factorial is True
    assert verdict.resolution is Resolution.DOES_NOT_EXIST
    assert any("no projective symplectic resolution" in note for note in verdict.notes)

    verdict = classify(create_test_quartic(), create_test_vector(2, 0, -4), True)
    assert verdict.case is CaseLabel.C
    assert verdict.e0 == 4 and verdict.dim_M == 18 and verdict.sing_codim == 6


def test_classify_smooth_cases():
    quartic = create_test_quartic()
    verdict = classify(quartic, create_test_vector(1, 0, -1), True)
    assert verdict.case is CaseLabel.A
    assert verdict.dim_M == 4 and verdict.resolution is Resolution.SMOOTH
    assert any("Hilb^2(X)" in note for note in verdict.notes)

    verdict = classify(create_test_abelian(), create_test_vector(1, 0, -1), True)
    assert verdict.case is CaseLabel.A
    assert any("Pic^0(X) x Hilb^1(X)" in note for note in verdict.notes)

    verdict = classify(quartic, create_test_vector(1, 0, 1), True)
    assert verdict.case is CaseLabel.MINUS2_POINT
    assert verdict.dim_M == 0 and verdict.resolution is Resolution.SMOOTH

    verdict = classify(quartic, create_test_vector(2, 0, 0), True)
    assert verdict.case is CaseLabel.ISOTROPIC_SYMMETRIC_PRODUCT
    assert verdict.dim_M == 4 and verdict.sing_codim == 2
    assert verdict.resolution is Resolution.EXISTS


def test_classify_zero_dim_torsion():
    verdict = classify(create_test_quartic(), create_test_vector(0, 0, 4), True)
    assert verdict.case is CaseLabel.ZERO_DIM_TORSION
    assert verdict.dim_M == 8
    assert verdict.resolution is Resolution.EXISTS
    assert verdict.locally_factorial is False

    verdict = classify(create_test_quartic(), create_test_vector(0, 0, 1), True)
    assert verdict.dim_M == 2 and verdict.resolution is Resolution.SMOOTH


def test_classify_empty_and_torsion():
    quartic = create_test_quartic()
    assert classify(quartic, create_test_vector(1, 0, 2), True).case is CaseLabel.EMPTY
    assert classify(quartic, create_test_vector(-1, 0, 1), True).case is CaseLabel.EMPTY

    verdict = classify(quartic, create_test_vector(0, 1, 1), True)
    assert verdict.case is CaseLabel.A
    assert NOTE_TORSION in verdict.notes
    assert verdict.star.is_heuristic
    assert classify(quartic, create_test_vector(0, 1, 1), True, effective_hint=False).case is CaseLabel.EMPTY


def test_classify_torsion_outside_star():
    """r0 = a0 = 0 with c0 effective is nonempty but only case and dimension are reported."""
    print("🧮 Testing torsion vector with a0 = 0...")
    quartic = create_test_quartic()
    for hint in (None, True):
        verdict = classify(quartic, create_test_vector(0, 1, 0), True, effective_hint=hint)
        assert verdict.case is CaseLabel.A
        assert verdict.e0 == 4
        assert verdict.dim_M == 6
        assert verdict.sing_codim is None
        assert verdict.locally_factorial is None
        assert verdict.resolution is Resolution.NOT_APPLICABLE
        assert NOTE_OUTSIDE_STAR in verdict.notes

    verdict = classify(quartic, create_test_vector(0, 2, 0), True, effective_hint=True)
    assert verdict.case is CaseLabel.C
    assert verdict.dim_M == 2 + 4 * 4
    assert verdict.resolution is Resolution.NOT_APPLICABLE

    assert classify(quartic, create_test_vector(0, 1, 0), True, effective_hint=False).case is CaseLabel.EMPTY
    assert classify(quartic, create_test_vector(0, -1, 0), True).case is CaseLabel.EMPTY
    print("✅ Restricted verdict outside (*)")


def test_classify_not_v_general():
    verdict = classify(create_test_quartic(), create_test_vector(3, 0, -3), False)
    assert verdict.case is CaseLabel.C
    assert verdict.dim_M == 20
    assert verdict.sing_codim is None
    assert verdict.locally_factorial is None
    assert verdict.resolution is Resolution.NOT_APPLICABLE
    assert NOTE_NOT_V_GENERAL in verdict.notes


def test_classify_is_deterministic():
    quartic = create_test_quartic()
    v = create_test_vector(4, 0, -4)
    assert classify(quartic, v, True).to_dict() == classify(quartic, v, True).to_dict()


def test_enumerate_types():
    print("🧱 Testing polystable types...")
    assert [t.parts for t in enumerate_types(1)] == [((1, 1),)]
    assert [t.parts for t in enumerate_types(2)] == [((2, 1),), ((1, 2),), ((1, 1), (1, 1))]
    assert len(enumerate_types(3)) == 5
    assert len(enumerate_types(4)) == 11
    assert enumerate_types(4)[0].is_stable
    assert len(enumerate_types(3, n_max=2)) == 2
    for m in range(1, 7):
        types = enumerate_types(m)
        assert all(t.total == m for t in types)
        assert len(set(types)) == len(types)
    with pytest.raises(InvalidInputError):
        enumerate_types(0)
    print("✅ Types enumerated")


def test_stratum_dims():
    stratum = stratum_dims(2, PolystableType(((1, 1), (1, 1))))
    assert (stratum.dim, stratum.codim) == (8, 2)
    assert stratum_dims(4, PolystableType(((1, 1), (1, 1)))).codim == 6
    stratum = stratum_dims(2, PolystableType(((1, 2),)))
    assert (stratum.dim, stratum.codim) == (4, 6)
    with pytest.raises(InvalidInputError):
        stratum_dims(0, PolystableType(((1, 2),)))


def test_singular_locus_matches_components():
    """Minimum stratum codimension equals the component formula; 2 only for e0 = m = 2."""
    print("🗺️ Testing singular locus summaries...")
    for e0 in (2, 4, 6):
        for m in range(2, 7):
            summary = singular_locus_summary(e0, m)
            formula = min(2 * k * (m - k) * e0 - 2 for k in range(1, m // 2 + 1))
            assert summary.min_codim == formula
            assert (summary.min_codim == 2) == ((e0, m) == (2, 2))
            assert len(summary.components) == m // 2
            for stratum in summary.strata:
                assert stratum.dim + stratum.codim == 2 + m * m * e0
    assert singular_locus_summary(2, 3).min_codim == 6
    assert [s.label for s in singular_locus_summary(2, 4).components] == ["Y(1,3)", "Y(2,2)"]
    print("✅ Singular locus consistent")


def test_quot_dims():
    quartic = create_test_quartic()
    assert quot_dims(quartic, create_test_vector(1, 0, 1), 1) == (4, 15)
    assert quot_dims(quartic, create_test_vector(2, 0, -2), 2) == (16, 265)
    with pytest.raises(InvalidInputError):
        quot_dims(quartic, create_test_vector(1, 0, -5), 1)


def test_generic_point_structure():
    structure = generic_point_structure(2, 1, 1)
    assert structure.weights == [0, 1, -1, 0]
    assert structure.ext_dims == [4, 2, 2, 4]
    assert structure.cone_dim == 3
    assert structure.local_dim == 10 == structure.expected_dim

    structure = generic_point_structure(4, 1, 2)
    assert structure.ext_dims == [6, 8, 8, 18]
    assert structure.local_dim == structure.expected_dim == 38
    with pytest.raises(InvalidInputError):
        generic_point_structure(2, 0, 1)


if __name__ == "__main__":
    print("=" * 80)
    print("🏷️ CLASSIFIER TESTS")
    print("=" * 80)
    test_case_of()
    test_classify_ogrady()
    test_classify_case_c()
    test_classify_smooth_cases()
    test_classify_zero_dim_torsion()
    test_classify_empty_and_torsion()
    test_classify_torsion_outside_star()
    test_classify_not_v_general()
    test_classify_is_deterministic()
    test_enumerate_types()
    test_stratum_dims()
    test_singular_locus_matches_components()
    test_quot_dims()
    test_generic_point_structure()
    print("\n🎉 All classifier tests passed!")
