#!/usr/bin/env python3
"""
Tests for the stabiliser estimates: enumeration of splits and gradings, the
closed forms of Delta, verify_bounds on single models and the exhaustive sweep.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from errors import BudgetExceededError, InvalidInputError, UnsupportedModelError
from estimates import (
    SemisimpleSplit, UnipotentGrading, enum_splits, enum_gradings,
    delta_semisimple, delta_unipotent, unipotent_part_bounds, conclusions_for, verify_bounds,
    SweepBounds, dimension_vectors, d_grid, run_sweep,
)
from estimates.sweep import CONFIG_DOUBLE, CONFIG_PAIR, affine_coefficients
from estimates.delta_estimates import semisimple_total_form, unipotent_raw_form
from local_model import build_model


def create_test_model(n, D):
    return build_model(tuple(n), D)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for k in range(len(partition)):
            yield partition[:k] + [[first] + partition[k]] + partition[k + 1:]


def _brute_force_split_count(n) -> int:
    """Distinct multisets of count vectors over all set partitions of a labelled basis."""
    labels = [i for i, m in enumerate(n) for _ in range(m)]
    seen = set()
    for partition in _set_partitions(list(range(len(labels)))):
        if len(partition) < 2:
            continue
        vectors = tuple(sorted(tuple(sum(1 for e in block if labels[e] == i) for i in range(len(n)))
                               for block in partition))
        seen.add(vectors)
    return len(seen)


def test_enum_splits():
    """Splits of small dimension vectors."""
    print("🔀 Testing semisimple splits...")
    assert enum_splits((1,)) == ()
    assert [sp.parts for sp in enum_splits((2,))] == [((1,), (1,))]
    assert [sp.parts for sp in enum_splits((1, 1))] == [((0, 1), (1, 0))]
    assert [sp.parts for sp in enum_splits((3,))] == [((1,), (2,)), ((1,), (1,), (1,))]
    for n in [(1, 1, 1), (2, 1), (2, 2), (1, 1, 1, 1), (3, 1), (4,), (6,)]:
        splits = enum_splits(n)
        assert len(splits) == _brute_force_split_count(n), n
        assert len(set(splits)) == len(splits)
        assert all(sp.total == n for sp in splits)
    print("✅ Splits match a brute-force count")


def test_enum_gradings():
    print("📶 Testing unipotent gradings...")
    assert enum_gradings((1,)) == ()
    assert enum_gradings((1, 1)) == ()
    assert [g.levels for g in enum_gradings((2,))] == [((0,), (1,))]
    assert [g.levels for g in enum_gradings((3,))] == [((1,), (1,)), ((0,), (0,), (1,))]
    # single index: partitions of n with a part >= 2
    assert len(enum_gradings((4,))) == 4
    assert len(enum_gradings((6,))) == 10
    for g in enum_gradings((2, 2)):
        assert g.total == (2, 2)
        assert g.max_level >= 2
    print("✅ Gradings enumerated")


def test_decomposition_validation():
    with pytest.raises(InvalidInputError):
        SemisimpleSplit(((2,),))
    with pytest.raises(InvalidInputError):
        SemisimpleSplit(((1,), (0,)))
    with pytest.raises(InvalidInputError):
        UnipotentGrading(((2,),))
    with pytest.raises(InvalidInputError):
        UnipotentGrading(((1,), (0,)))
    with pytest.raises(InvalidInputError):
        enum_splits((-1, 2))


def test_delta_semisimple_examples():
    print("🧮 Testing semisimple estimates...")
    split = SemisimpleSplit(((1,), (1,)))
    assert delta_semisimple(create_test_model((2,), [[4]]), split) == 3
    assert delta_semisimple(create_test_model((2,), [[6]]), split) == 7
    triple = SemisimpleSplit(((1,), (1,), (1,)))
    assert delta_semisimple(create_test_model((3,), [[4]]), triple) == 10
    pair = SemisimpleSplit(((1, 0), (0, 1)))
    assert delta_semisimple(create_test_model((1, 1), [[4, 2], [2, 4]]), pair) == 3
    print("✅ Semisimple estimates match")


def test_delta_unipotent_examples():
    print("🧮 Testing unipotent estimates...")
    square = UnipotentGrading(((0,), (1,)))
    assert delta_unipotent(create_test_model((2,), [[4]]), square) == 3
    assert delta_unipotent(create_test_model((2,), [[6]]), square) == 7
    mixed = UnipotentGrading(((1,), (1,)))
    assert delta_unipotent(create_test_model((3,), [[4]]), mixed) == 4
    assert unipotent_raw_form((3,), [[4]], mixed) == 4
    assert unipotent_part_bounds(2, square) == [2]
    print("✅ Unipotent estimates match")


def test_verify_bounds_examples():
    print("📋 Testing verify_bounds...")
    report = verify_bounds(create_test_model((2,), [[4]]))
    assert report.min_delta == 3
    assert report.exceptional_model
    assert len(report.exceptional_hits) == 2
    assert report.n_splits == 1 and report.n_gradings == 1

    report = verify_bounds(create_test_model((1, 1), [[4, 2], [2, 4]]))
    assert report.min_delta == 3
    assert [d.kind for d in report.exceptional_hits] == ["split"]
    assert report.n_gradings == 0

    report = verify_bounds(create_test_model((2,), [[6]]))
    assert report.min_delta >= 4
    assert not report.exceptional_hits
    assert report.semisimple_bound_holds
    assert "F(n) is regular in codimension <= 3" in report.conclusions

    report = verify_bounds(create_test_model((3,), [[4]]))
    assert report.min_delta == 4
    assert report.argmin.kind == "grading"
    print("✅ verify_bounds reports")


def test_verify_bounds_errors():
    with pytest.raises(UnsupportedModelError):
        verify_bounds(create_test_model((1,), [[2]]))
    with pytest.raises(UnsupportedModelError):
        verify_bounds(create_test_model((1, 1), [[4, 1], [1, 4]]))
    with pytest.raises(BudgetExceededError):
        verify_bounds(create_test_model((7,), [[4]]), enum_limit=6)


def test_conclusions():
    assert conclusions_for(None, 2)[0].endswith("smooth")
    three = conclusions_for(3, 7)
    assert "F(n) is a reduced complete intersection of dimension 7" in three
    assert "F(n) is normal" in three
    assert "F(n) may be singular in codimension 3" in three


def test_affine_coefficients():
    split = SemisimpleSplit(((1,), (1,)))
    coeffs = affine_coefficients((2,), semisimple_total_form, split)
    # Delta = 2 d_11 - 5 for n = (2)
    assert coeffs.tolist() == [-5, 2]


def test_sweep_grid():
    assert len(dimension_vectors(4)) == 15
    assert len(dimension_vectors(6)) == 63
    bounds = SweepBounds(max_total=6, max_entry=8, full_range_parts=3)
    assert d_grid(1, bounds).shape == (5, 1)
    assert d_grid(2, bounds).shape == (225, 3)
    assert d_grid(4, bounds).shape == (45, 10)


def test_small_sweep():
    """Sum of n_i <= 4 and entries <= 6: exactly the two exceptional configurations."""
    print("🔍 Running small sweep...")
    report = run_sweep(SweepBounds(max_total=4, max_entry=6, full_range_parts=3), workers=1)
    assert report.violations == []
    assert report.forms_agree and report.monotone
    assert report.min_delta == 3
    assert report.exceptional_configurations == sorted([CONFIG_DOUBLE, CONFIG_PAIR])
    assert report.models_checked > 0 and report.models_skipped > 0
    assert report.passed
    print(f"✅ {report.models_checked} models checked")


def test_sweep_is_independent_of_workers():
    bounds = SweepBounds(max_total=3, max_entry=4, full_range_parts=3)
    assert run_sweep(bounds, workers=1).to_dict() == run_sweep(bounds, workers=2).to_dict()


def test_full_sweep():
    """Sum of n_i <= 6 and entries <= 8."""
    print("🔍 Running full sweep...")
    report = run_sweep(SweepBounds(max_total=6, max_entry=8, full_range_parts=3), workers=1)
    assert report.passed, report.violations[:3]
    assert report.min_delta == 3
    assert report.dimension_vectors == 63
    print(f"✅ {report.models_checked} models checked, {report.decompositions} decompositions")


def test_sweep_rejects_bad_bounds():
    with pytest.raises(InvalidInputError):
        run_sweep(SweepBounds(max_total=0), workers=1)


def test_sweep_attaches_exceptional_reports():
    """Every (n, D) with an estimate equal to 3 carries its full estimate report."""
    report = run_sweep(SweepBounds(max_total=4, max_entry=6, full_range_parts=3), workers=1)
    assert report.exceptional_models == len(report.exceptional_reports) == 5
    keys = [(tuple(r.n), tuple(map(tuple, r.D))) for r in report.exceptional_reports]
    assert ((2,), ((4,),)) in keys
    assert ((1, 1), ((4, 2), (2, 6))) in keys
    for delta_report in report.exceptional_reports:
        assert delta_report.min_delta == 3
        assert delta_report.exceptional_model
        assert delta_report.exceptional_hits
        assert delta_report.n in ([2], [1, 1])
        assert delta_report.n != [1, 1] or delta_report.D[0][1] == 2
    assert report.to_dict()["exceptional_reports"][0]["min_delta"] == 3


if __name__ == "__main__":
    print("=" * 80)
    print("📐 ESTIMATE TESTS")
    print("=" * 80)
    test_enum_splits()
    test_enum_gradings()
    test_decomposition_validation()
    test_delta_semisimple_examples()
    test_delta_unipotent_examples()
    test_verify_bounds_examples()
    test_verify_bounds_errors()
    test_conclusions()
    test_affine_coefficients()
    test_sweep_grid()
    test_small_sweep()
    test_sweep_is_independent_of_workers()
    test_full_sweep()
    test_sweep_rejects_bad_bounds()
    test_sweep_attaches_exceptional_reports()
    print("\n🎉 All estimate tests passed!")
