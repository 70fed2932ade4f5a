"""
Dimension estimates for the stabiliser strata of F(n).

For every semisimple split and every unipotent grading the estimate Delta is
a lower bound for the codimension of the corresponding stabiliser locus in
F(n). Each estimate is evaluated through independent closed forms that must
agree exactly. With B = D - 2I:

    semisimple, total form:    (n^t B n + 1) - sum_lambda (n(lambda)^t B n(lambda) + 1)
    semisimple, pairwise form: sum_{lambda != mu} n(lambda)^t B n(mu) - (nu - 1)
    unipotent, raw form:       [n^t (D-I) n - n^t n + 1]
                               - sum'_l [n^(l)^t (D-I) m^(l) - n^(l)^t n^(l) + 1]
    unipotent, expanded form:  sum_{k,l} (kl - min) n^(k)^t (D-I) n^(l) - sum_{k,l} kl n^(k)^t n^(l)
                               + sum'_k (n^(k)^t n^(k) - 1) + 1
    unipotent, collected form: the expanded form with the level-1 piece collected

The form functions take plain (n, D) data and never validate D, so they are
affine in the entries of D; the sweep relies on that.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from dataclasses_json import dataclass_json

from errors import BudgetExceededError, ConsistencyError, UnsupportedModelError
from estimates.decompositions import SemisimpleSplit, UnipotentGrading, enum_gradings, enum_splits
from local_model.model_builder import a_value, expected_dim, is_exceptional
from local_model.model_structures import LocalModel
from settings import get_settings

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[int]]

NOTE_JORDAN = ("mixed elements g = su need no separate enumeration: their fixed locus lies in "
               "F(n)^s and F(n)^u, which the split and grading estimates already bound")
NOTE_ESTIMATE = "Delta is an estimate value for the codimension of a stabiliser locus, not a computed dimension"


def _form(u: Sequence[int], M: Matrix, w: Sequence[int]) -> int:
    s = len(u)
    return sum(u[i] * M[i][j] * w[j] for i in range(s) for j in range(s) if u[i] and w[j])


def _dot(u: Sequence[int], w: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, w))


def _shifted(D: Matrix, shift: int) -> List[List[int]]:
    """D - shift * I."""
    return [[D[i][j] - (shift if i == j else 0) for j in range(len(D))] for i in range(len(D))]


def semisimple_total_form(n: Sequence[int], D: Matrix, split: SemisimpleSplit) -> int:
    B = _shifted(D, 2)
    return (_form(n, B, n) + 1) - sum(_form(p, B, p) + 1 for p in split.parts)


def semisimple_pairwise_form(n: Sequence[int], D: Matrix, split: SemisimpleSplit) -> int:
    B = _shifted(D, 2)
    parts = split.parts
    cross = sum(_form(parts[x], B, parts[y]) for x in range(len(parts)) for y in range(len(parts)) if x != y)
    return cross - (split.nu - 1)


def unipotent_raw_form(n: Sequence[int], D: Matrix, grading: UnipotentGrading) -> int:
    C = _shifted(D, 1)
    value = _form(n, C, n) - _dot(n, n) + 1
    for l in range(1, grading.max_level + 1):
        piece = grading.piece(l)
        if not any(piece):
            continue
        value -= _form(piece, C, grading.m_level(l)) - _dot(piece, piece) + 1
    return value


def unipotent_expanded_form(n: Sequence[int], D: Matrix, grading: UnipotentGrading) -> int:
    C = _shifted(D, 1)
    L = grading.max_level
    value = 1
    for k in range(1, L + 1):
        nk = grading.piece(k)
        if any(nk):
            value += _dot(nk, nk) - 1
        for l in range(1, L + 1):
            nl = grading.piece(l)
            value += (k * l - min(k, l)) * _form(nk, C, nl) - k * l * _dot(nk, nl)
    return value


def unipotent_collected_form(n: Sequence[int], D: Matrix, grading: UnipotentGrading) -> int:
    B = _shifted(D, 2)
    L = grading.max_level
    n1 = grading.piece(1)
    value = 1
    if any(n1):
        value += -1 + 2 * sum((k - 1) * _form(n1, B, grading.piece(k)) - _dot(n1, grading.piece(k))
                              for k in range(2, L + 1))
    for k in range(2, L + 1):
        nk = grading.piece(k)
        if any(nk):
            value += _dot(nk, nk) - 1
        for l in range(2, L + 1):
            nl = grading.piece(l)
            value += (k * l - min(k, l)) * _form(nk, B, nl) - min(k, l) * _dot(nk, nl)
    return value


def unipotent_part_bounds(a: int, grading: UnipotentGrading) -> List[int]:
    """Per-level diagnostic k((k-1)a - 1)(sum_i n_i^(k))^2 for k >= 2."""
    return [k * ((k - 1) * a - 1) * sum(grading.piece(k)) ** 2 for k in range(2, grading.max_level + 1)]


def semisimple_forms(n, D, split: SemisimpleSplit) -> Tuple[int, int]:
    return semisimple_total_form(n, D, split), semisimple_pairwise_form(n, D, split)


def unipotent_forms(n, D, grading: UnipotentGrading) -> Tuple[int, int, int]:
    return (unipotent_raw_form(n, D, grading), unipotent_expanded_form(n, D, grading),
            unipotent_collected_form(n, D, grading))


def delta_semisimple(model: LocalModel, split: SemisimpleSplit) -> int:
    """
    Delta for a semisimple split, evaluated in total and pairwise form.

    Raises:
        ConsistencyError: if the two forms disagree
    """
    forms = semisimple_forms(model.n, model.D, split)
    if len(set(forms)) != 1:
        raise ConsistencyError(
            f"semisimple forms disagree for n={model.n}, D={model.D}, split {split}: {forms}",
            {"n": list(model.n), "D": [list(r) for r in model.D], "split": str(split), "forms": list(forms)},
        )
    return forms[0]


def delta_unipotent(model: LocalModel, grading: UnipotentGrading) -> int:
    """
    Delta for a unipotent grading, evaluated in raw, expanded and collected form.

    Raises:
        ConsistencyError: if the forms disagree
    """
    forms = unipotent_forms(model.n, model.D, grading)
    if len(set(forms)) != 1:
        raise ConsistencyError(
            f"unipotent forms disagree for n={model.n}, D={model.D}, grading {grading}: {forms}",
            {"n": list(model.n), "D": [list(r) for r in model.D], "grading": str(grading), "forms": list(forms)},
        )
    return forms[0]


@dataclass_json
@dataclass
class DecompositionDelta:
    """
    One evaluated estimate.

    Attributes:
        kind: "split" or "grading"
        description: Human-readable decomposition
        parts: Split parts, or graded pieces n^(1), n^(2), ...
        delta: The estimate value
        forms: Values of every closed form
        lower_bound: (2nu-1)(nu-1) for splits; sum of per-level diagnostics for gradings
    """
    kind: str
    description: str
    parts: List[List[int]]
    delta: int
    forms: List[int]
    lower_bound: int


@dataclass_json
@dataclass
class DeltaReport:
    """
    Exhaustive evaluation of the estimates for one model.

    Attributes:
        n: Dimension vector
        D: Ext-dimension matrix
        a: min of d_ij - 2 delta_ij
        min_delta: Smallest estimate, None when there is nothing to decompose
        argmin: First decomposition attaining it
        exceptional_hits: Decompositions with estimate 3
        exceptional_model: Whether the model is one of the two exceptional configurations
        all_deltas_agree: Every closed form agreed on every decomposition
        semisimple_bound_holds: Delta >= (2nu-1)(nu-1) for every split
        n_splits: Number of splits
        n_gradings: Number of gradings
        conclusions: What the minimum implies for F(n)
        notes: Caveats
        deltas: All evaluated decompositions
    """
    n: List[int]
    D: List[List[int]]
    a: int
    min_delta: Optional[int]
    argmin: Optional[DecompositionDelta]
    exceptional_hits: List[DecompositionDelta]
    exceptional_model: bool
    all_deltas_agree: bool
    semisimple_bound_holds: bool
    n_splits: int
    n_gradings: int
    conclusions: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    deltas: List[DecompositionDelta] = field(default_factory=list)


def conclusions_for(min_delta: Optional[int], expected: int) -> List[str]:
    """Consequences of codim Z >= min_delta for the null-fibre."""
    if min_delta is None:
        return ["mu vanishes identically: F(n) = U(n) is smooth"]
    out = []
    if min_delta >= 1:
        out.append(f"F(n) is a reduced complete intersection of dimension {expected}")
    if min_delta >= 2:
        out.append("F(n) is normal")
    if min_delta >= 4:
        out.append("F(n) is regular in codimension <= 3")
    else:
        out.append("F(n) may be singular in codimension 3")
    return out


def evaluate_decompositions(model: LocalModel) -> List[DecompositionDelta]:
    """Every split and grading of the model with its estimate."""
    a = a_value(model)
    out = []
    for split in enum_splits(model.n):
        delta = delta_semisimple(model, split)
        out.append(DecompositionDelta(
            kind="split", description=str(split), parts=[list(p) for p in split.parts], delta=delta,
            forms=list(semisimple_forms(model.n, model.D, split)),
            lower_bound=(2 * split.nu - 1) * (split.nu - 1),
        ))
    for grading in enum_gradings(model.n):
        delta = delta_unipotent(model, grading)
        out.append(DecompositionDelta(
            kind="grading", description=str(grading), parts=[list(v) for v in grading.levels], delta=delta,
            forms=list(unipotent_forms(model.n, model.D, grading)),
            lower_bound=sum(unipotent_part_bounds(a, grading)),
        ))
    return out


def verify_bounds(model: LocalModel, enum_limit: Optional[int] = None) -> DeltaReport:
    """
    Enumerate all splits and gradings of the model and check the estimates.

    Checks that min Delta >= 3, that Delta = 3 happens exactly for the two
    exceptional configurations, that Delta >= 4 otherwise, and that every
    split satisfies Delta >= (2nu-1)(nu-1).

    Raises:
        UnsupportedModelError: if a < 2
        BudgetExceededError: if sum of n_i exceeds the enumeration limit
        ConsistencyError: on any violated bound, with the counterexample attached
    """
    a = a_value(model)
    if a < 2:
        raise UnsupportedModelError(f"a = {a} < 2 for n={model.n}: the estimates assume a >= 2")
    limit = enum_limit if enum_limit is not None else get_settings().enum_limit
    if sum(model.n) > limit:
        raise BudgetExceededError(f"sum of n_i = {sum(model.n)} exceeds the enumeration limit {limit}")

    deltas = evaluate_decompositions(model)
    exceptional = is_exceptional(model)
    splits_ok = all(d.delta >= d.lower_bound for d in deltas if d.kind == "split")
    hits = [d for d in deltas if d.delta == 3]
    min_delta = min((d.delta for d in deltas), default=None)
    argmin = next((d for d in deltas if d.delta == min_delta), None)

    report = DeltaReport(
        n=list(model.n), D=[list(r) for r in model.D], a=a, min_delta=min_delta, argmin=argmin,
        exceptional_hits=hits, exceptional_model=exceptional, all_deltas_agree=True,
        semisimple_bound_holds=splits_ok, n_splits=sum(1 for d in deltas if d.kind == "split"),
        n_gradings=sum(1 for d in deltas if d.kind == "grading"),
        conclusions=conclusions_for(min_delta, expected_dim(model)),
        notes=[NOTE_ESTIMATE, NOTE_JORDAN], deltas=deltas,
    )
    counterexample = {"n": report.n, "D": report.D}
    if min_delta is not None and min_delta < 3:
        raise ConsistencyError(f"estimate {min_delta} < 3 at {argmin.description}", dict(counterexample, delta=min_delta))
    if not splits_ok:
        raise ConsistencyError("a split violates Delta >= (2nu-1)(nu-1)", counterexample)
    if hits and not exceptional:
        raise ConsistencyError(f"estimate 3 outside the exceptional configurations at {hits[0].description}",
                               counterexample)
    if exceptional and not hits:
        raise ConsistencyError("exceptional configuration without an estimate equal to 3", counterexample)
    logger.debug("n=%s D=%s: min Delta %s over %d decompositions", model.n, model.D, min_delta, len(deltas))
    return report
