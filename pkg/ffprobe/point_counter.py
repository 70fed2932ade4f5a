"""
Exact point counts of the null-fibre F(n) over small prime fields.

The points of U(n)(F_q) are enumerated in chunks: a chunk of consecutive
indices is expanded into base-q digits, reshaped into batched blocks and fed
through the vectorised moment map. The counts are heuristic evidence for the
dimension of F(n), never a proof of it.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple

import numpy as np
from dataclasses_json import config, dataclass_json

from errors import BudgetExceededError, ConsistencyError, InvalidInputError
from local_model.exact_linalg import rank
from local_model.model_builder import expected_dim
from local_model.model_structures import LocalModel, ScalarDomain
from local_model.moment_map import dim_u, mu_bilinear, mu_eval
from local_model.points import unflatten_point
from settings import get_settings

logger = logging.getLogger(__name__)

NOTE_HEURISTIC = "finite-field counts are consistency evidence for the dimension of F(n), not a proof"


@dataclass_json
@dataclass
class CountResult:
    """
    Number of F_q-points of F(n).

    Attributes:
        q: Field size
        total_points: q^dim U(n)
        solutions: Points with mu_j = 0 for every counted component
        log_dim_estimate: log_q(solutions), as a rational approximation
        components: The moment-map components imposed
        lagrangian_dim: Dimension of the Lagrangian subspace of F(n) built by lagrangian_point
        runtime: Wall-clock seconds
        budget: Configured point budget
    """
    q: int
    total_points: int
    solutions: int
    log_dim_estimate: Fraction = field(metadata=config(encoder=str, decoder=Fraction))
    components: List[int] = field(default_factory=list)
    lagrangian_dim: int = 0
    runtime: float = 0.0
    budget: int = 0


@dataclass_json
@dataclass
class DimensionEstimate:
    """
    Slope of log(solutions) against log(q) over several primes.

    Attributes:
        estimate: The fitted slope, as a rational approximation
        expected: n^t (D - I) n + 1
        deviation: estimate - expected
        counts: The counts the slope was fitted to
        notes: Caveats
    """
    estimate: Fraction = field(metadata=config(encoder=str, decoder=Fraction))
    expected: int
    deviation: Fraction = field(metadata=config(encoder=str, decoder=Fraction))
    counts: List[CountResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)


def lagrangian_dim(model: LocalModel) -> int:
    """Blocks above the diagonal plus half of each diagonal block."""
    return sum(model.n[i] * model.n[j] * (model.D[i][j] if i < j else model.D[i][i] // 2)
               for i, j in model.blocks if i <= j)


def _check_field(model: LocalModel, q: int) -> None:
    ScalarDomain(q)
    for (i, j), block in model.omega_blocks.items():
        if block.size and rank(block, modulus=q) < block.shape[0]:
            raise InvalidInputError(f"omega block ({i},{j}) is degenerate mod {q}")


def _batched_blocks(model: LocalModel, digits: np.ndarray) -> dict:
    blocks, offset = {}, 0
    for b in model.blocks:
        shape = model.block_shape(*b)
        size = int(np.prod(shape))
        blocks[b] = digits[:, offset:offset + size].reshape((digits.shape[0],) + shape)
        offset += size
    return blocks


def _count_range(args) -> int:
    """Solutions among the points with flat index in [start, stop)."""
    model, q, start, stop, components = args
    size = dim_u(model)
    if size == 0:
        return stop - start
    powers = np.array([q ** (size - 1 - c) for c in range(size)], dtype=np.int64)
    indices = np.arange(start, stop, dtype=np.int64)
    digits = (indices[:, None] // powers[None, :]) % q
    blocks = _batched_blocks(model, digits)
    values = mu_bilinear(model, blocks, blocks, components)
    alive = np.ones(indices.shape[0], dtype=bool)
    for value in values:
        if value is None or value.shape[-1] == 0:
            continue
        alive &= ~np.any((value % q).reshape(indices.shape[0], -1) != 0, axis=1)
    return int(alive.sum())


def count_points(model: LocalModel, q: int, components: Optional[Sequence[int]] = None,
                 budget: Optional[int] = None, workers: Optional[int] = None,
                 chunk_size: Optional[int] = None) -> CountResult:
    """
    Count x in U(n)(F_q) with mu_j(x) = 0 for every j in components (all by default).

    Raises:
        InvalidInputError: if q is not prime or omega degenerates mod q
        BudgetExceededError: if q^dim U(n) exceeds the budget
        ConsistencyError: if the count breaks the cone or Lagrangian bounds
    """
    settings = get_settings()
    budget = budget if budget is not None else settings.point_budget
    workers = workers or settings.workers
    chunk_size = chunk_size or settings.chunk_size
    _check_field(model, q)
    wanted = list(range(model.s)) if components is None else sorted(set(int(c) for c in components))
    if any(not 0 <= c < model.s for c in wanted):
        raise InvalidInputError(f"components {wanted} out of range for s={model.s}")

    size = dim_u(model)
    total = q ** size
    if total > budget:
        raise BudgetExceededError(f"q^dim U = {q}^{size} = {total} exceeds the point budget {budget}")

    started = time.perf_counter()
    ranges = [(model, q, start, min(start + chunk_size, total), wanted)
              for start in range(0, total, chunk_size)]
    if workers > 1 and len(ranges) > 1:
        with Pool(processes=workers) as pool:
            solutions = sum(pool.map(_count_range, ranges))
    else:
        solutions = sum(_count_range(r) for r in ranges)
    runtime = time.perf_counter() - started

    lag = lagrangian_dim(model)
    if solutions < 1 or (solutions - 1) % (q - 1) != 0:
        raise ConsistencyError(f"{solutions} points is not a cone count over F_{q}",
                               {"n": list(model.n), "D": [list(r) for r in model.D], "q": q})
    if components is None and solutions < q ** lag:
        raise ConsistencyError(f"{solutions} points is below the Lagrangian bound {q}^{lag}",
                               {"n": list(model.n), "D": [list(r) for r in model.D], "q": q})

    estimate = Fraction(math.log(solutions) / math.log(q)).limit_denominator(1000)
    logger.info("F(n) over F_%d: %d of %d points (%.2fs)", q, solutions, total, runtime)
    return CountResult(q=q, total_points=total, solutions=solutions, log_dim_estimate=estimate,
                       components=wanted, lagrangian_dim=lag, runtime=runtime, budget=budget)


def count_points_reference(model: LocalModel, q: int) -> int:
    """Nested-loop count through mu_eval, one point at a time."""
    _check_field(model, q)
    domain = ScalarDomain(q)
    size = dim_u(model)
    if q ** size > 2 ** 16:
        raise BudgetExceededError(f"reference count limited to 2^16 points, got {q}^{size}")
    return sum(1 for digits in product(range(q), repeat=size)
               if mu_eval(model, unflatten_point(model, list(digits), domain)).is_zero())


def slope_from_counts(counts: Sequence[CountResult]) -> Fraction:
    """Least-squares slope of log(solutions) against log(q)."""
    if len({c.q for c in counts}) < 2:
        raise InvalidInputError("a dimension estimate needs counts over at least two primes")
    x = np.log([c.q for c in counts])
    y = np.log([c.solutions for c in counts])
    slope = np.polyfit(x, y, 1)[0]
    return Fraction(float(slope)).limit_denominator(1000)


def dim_estimate(model: LocalModel, primes: Sequence[int], budget: Optional[int] = None,
                 workers: Optional[int] = None) -> DimensionEstimate:
    """
    Heuristic dimension of F(n) from exact counts over several primes.

    Raises:
        InvalidInputError: for fewer than two distinct primes
    """
    primes = sorted(set(int(p) for p in primes))
    if len(primes) < 2:
        raise InvalidInputError("a dimension estimate needs at least two primes")
    counts = [count_points(model, q, budget=budget, workers=workers) for q in primes]
    estimate = slope_from_counts(counts)
    expected = expected_dim(model)
    return DimensionEstimate(estimate=estimate, expected=expected, deviation=estimate - expected,
                             counts=counts, notes=[NOTE_HEURISTIC])


def parse_primes(text: str) -> Tuple[int, ...]:
    """'2,3,5' -> (2, 3, 5)."""
    try:
        primes = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise InvalidInputError(f"primes must be comma-separated integers, got {text!r}")
    if not primes:
        raise InvalidInputError("no primes given")
    for p in primes:
        ScalarDomain(p)
    return primes
