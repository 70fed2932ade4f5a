"""
Enumeration of the numerical shadows of stabilising group elements.

A semisimple element splits every W_i into eigenspaces; only the dimension
vectors n(lambda) matter, so a split is an unordered multiset of at least two
nonzero vectors summing to n. A unipotent element is recorded by its graded
pieces n^(k), k >= 1, with sum of k * n^(k) = n and some piece at level >= 2.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import List, Tuple

from dataclasses_json import dataclass_json

from errors import InvalidInputError

Vector = Tuple[int, ...]


@dataclass_json
@dataclass(frozen=True)
class SemisimpleSplit:
    """
    Eigenspace dimension vectors of a semisimple element.

    Attributes:
        parts: The nonzero vectors n(lambda), sorted so each multiset appears once
    """
    parts: Tuple[Vector, ...]

    def __post_init__(self):
        parts = tuple(sorted(tuple(int(x) for x in p) for p in self.parts))
        if len(parts) < 2:
            raise InvalidInputError("a split needs at least two eigenspaces")
        if any(not any(p) or min(p) < 0 for p in parts):
            raise InvalidInputError(f"split parts must be nonzero and nonnegative, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def nu(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.parts))

    def __str__(self) -> str:
        return " + ".join(str(p) for p in self.parts)


@dataclass_json
@dataclass(frozen=True)
class UnipotentGrading:
    """
    Jordan type of a unipotent element in graded form.

    Attributes:
        levels: levels[k-1] = n^(k) for k = 1..L, the last one nonzero
    """
    levels: Tuple[Vector, ...]

    def __post_init__(self):
        levels = tuple(tuple(int(x) for x in v) for v in self.levels)
        if not levels or not any(levels[-1]):
            raise InvalidInputError("the top level of a grading must be nonzero")
        if any(min(v) < 0 for v in levels):
            raise InvalidInputError("graded pieces must be nonnegative")
        if not any(any(v) for v in levels[1:]):
            raise InvalidInputError("a unipotent grading needs a piece at level >= 2")
        object.__setattr__(self, 'levels', levels)

    @property
    def max_level(self) -> int:
        return len(self.levels)

    def piece(self, k: int) -> Vector:
        """n^(k), zero outside 1..L."""
        if 1 <= k <= self.max_level:
            return self.levels[k - 1]
        return tuple(0 for _ in self.levels[0])

    def m_level(self, l: int) -> Vector:
        """m^(l) = sum over k of n^(k) * min(k, l)."""
        s = len(self.levels[0])
        return tuple(sum(self.levels[k - 1][i] * min(k, l) for k in range(1, self.max_level + 1))
                     for i in range(s))

    @property
    def total(self) -> Vector:
        return self.m_level(self.max_level)

    def __str__(self) -> str:
        return ", ".join(f"n^({k})={v}" for k, v in enumerate(self.levels, start=1) if any(v))


def _check_vector(n) -> Vector:
    n = tuple(int(x) for x in n)
    if not n or min(n) < 0:
        raise InvalidInputError(f"dimension vector must be non-empty and nonnegative, got {n}")
    return n


def _vectors_below(bound: Vector) -> List[Vector]:
    """All nonzero vectors componentwise <= bound, in lexicographic order."""
    return [v for v in product(*(range(b + 1) for b in bound)) if any(v)]


@lru_cache(maxsize=None)
def _vector_partitions(remaining: Vector, ceiling: Vector) -> Tuple[Tuple[Vector, ...], ...]:
    """Non-increasing sequences of nonzero vectors <= ceiling (lexicographically) summing to remaining."""
    if not any(remaining):
        return ((),)
    found = []
    for v in reversed(_vectors_below(remaining)):
        if v > ceiling:
            continue
        rest_vector = tuple(r - x for r, x in zip(remaining, v))
        for rest in _vector_partitions(rest_vector, v):
            found.append((v,) + rest)
    return tuple(found)


@lru_cache(maxsize=None)
def enum_splits(n: Vector) -> Tuple[SemisimpleSplit, ...]:
    """
    All unordered splittings of n into at least two nonzero parts.

    Ordered by number of parts, then by the sorted parts.
    """
    n = _check_vector(n)
    if sum(n) < 2:
        return ()
    splits = [SemisimpleSplit(parts) for parts in _vector_partitions(n, n) if len(parts) >= 2]
    return tuple(sorted(splits, key=lambda sp: (sp.nu, sp.parts)))


@lru_cache(maxsize=None)
def _gradings_from(remaining: Vector, level: int) -> Tuple[Tuple[Vector, ...], ...]:
    """Pieces for levels 1..level (listed bottom up) with sum of k * n^(k) = remaining."""
    if level == 0:
        return ((),) if not any(remaining) else ()
    found = []
    for v in product(*(range(r // level + 1) for r in remaining)):
        rest = tuple(r - level * x for r, x in zip(remaining, v))
        for lower in _gradings_from(rest, level - 1):
            found.append(lower + (v,))
    return tuple(found)


@lru_cache(maxsize=None)
def enum_gradings(n: Vector) -> Tuple[UnipotentGrading, ...]:
    """
    All gradings k -> n^(k) with sum of k * n^(k) = n and a nonzero piece at some k >= 2.

    Ordered by top level, then by the pieces.
    """
    n = _check_vector(n)
    total = sum(n)
    if total < 2:
        return ()
    gradings = []
    for levels in _gradings_from(n, total):
        top = max((k for k, v in enumerate(levels, start=1) if any(v)), default=0)
        if top < 2:
            continue
        gradings.append(UnipotentGrading(levels[:top]))
    return tuple(sorted(set(gradings), key=lambda g: (g.max_level, g.levels)))
