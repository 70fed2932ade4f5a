"""
Value types of the quadratic local model: the model itself, points of U(n),
moment-map values and the scalar domain they live over.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy
from dataclasses_json import dataclass_json

from errors import InvalidInputError
from local_model.exact_linalg import rank

Block = Tuple[int, int]


@dataclass(frozen=True)
class ScalarDomain:
    """
    Exact rationals (modulus None) or the prime field F_q.

    Rational points are numpy object arrays of Fraction; prime-field points are
    int64 arrays with entries in [0, q).
    """
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and not sympy.isprime(self.modulus):
            raise InvalidInputError(f"field size must be prime, got {self.modulus}")

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def array(self, values, shape=None) -> np.ndarray:
        """Convert nested values into an array over this domain."""
        if self.is_rational:
            arr = np.array(values, dtype=object)
            flat = arr.reshape(-1)
            for idx, value in enumerate(flat):
                flat[idx] = Fraction(int(value)) if isinstance(value, (int, np.integer)) else Fraction(value)
            arr = flat.reshape(arr.shape)
        else:
            arr = np.array(values, dtype=np.int64) % self.modulus
        if shape is not None:
            arr = arr.reshape(shape)
        return arr

    def zeros(self, shape) -> np.ndarray:
        if self.is_rational:
            return self.array(np.zeros(shape, dtype=np.int64))
        return np.zeros(shape, dtype=np.int64)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr if self.is_rational else arr % self.modulus

    def __str__(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.modulus})"


RATIONALS = ScalarDomain()


def standard_symplectic(size: int) -> np.ndarray:
    """[[0, I], [-I, 0]] of even size."""
    half = size // 2
    omega = np.zeros((size, size), dtype=np.int64)
    omega[:half, half:] = np.eye(half, dtype=np.int64)
    omega[half:, :half] = -np.eye(half, dtype=np.int64)
    return omega


@dataclass(frozen=True)
class LocalModel:
    """
    The symplectic local model U(n) = sum over (i,j) of Hom(W_i, W_j) x V_ij.

    Attributes:
        n: Dimension vector (n_1, ..., n_s)
        D: Symmetric matrix d_ij = dim V_ij with even diagonal
        omega_blocks: Gram matrix of the pairing V_ij x V_ji -> C for every (i, j)
        parts: The polystable type the model was built from, if any
    """
    n: Tuple[int, ...]
    D: Tuple[Tuple[int, ...], ...]
    omega_blocks: Dict[Block, np.ndarray] = field(default=None, compare=False, repr=False)
    parts: Optional[Tuple[Tuple[int, int], ...]] = None

    def __post_init__(self):
        n = tuple(int(x) for x in self.n)
        D = tuple(tuple(int(x) for x in row) for row in self.D)
        s = len(n)
        if s == 0 or any(x < 1 for x in n):
            raise InvalidInputError(f"dimension vector must be non-empty and positive, got {n}")
        if len(D) != s or any(len(row) != s for row in D):
            raise InvalidInputError(f"D must be {s}x{s}")
        for i in range(s):
            if D[i][i] % 2 != 0:
                raise InvalidInputError(f"diagonal entry d_{i}{i} = {D[i][i]} must be even")
            for j in range(s):
                if D[i][j] < 0:
                    raise InvalidInputError("D entries must be nonnegative")
                if D[i][j] != D[j][i]:
                    raise InvalidInputError(f"D is not symmetric at ({i},{j})")
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'D', D)
        if self.omega_blocks is None:
            object.__setattr__(self, 'omega_blocks', self._default_omega())
        else:
            blocks = {(int(i), int(j)): np.array(b, dtype=np.int64).reshape(D[i][j], D[j][i])
                      for (i, j), b in self.omega_blocks.items()}
            object.__setattr__(self, 'omega_blocks', blocks)
        self._check_omega()

    def _default_omega(self) -> Dict[Block, np.ndarray]:
        blocks = {}
        for i in range(self.s):
            for j in range(self.s):
                d = self.D[i][j]
                if i == j:
                    blocks[(i, j)] = standard_symplectic(d)
                elif i < j:
                    blocks[(i, j)] = np.eye(d, dtype=np.int64)
                else:
                    blocks[(i, j)] = -np.eye(d, dtype=np.int64)
        return blocks

    def _check_omega(self) -> None:
        for i in range(self.s):
            for j in range(self.s):
                if (i, j) not in self.omega_blocks:
                    raise InvalidInputError(f"missing omega block ({i},{j})")
                block = self.omega_blocks[(i, j)]
                if not np.array_equal(block, -self.omega_blocks[(j, i)].T):
                    raise InvalidInputError(f"omega blocks ({i},{j}) and ({j},{i}) are not skew")
                if block.size and rank(block) < block.shape[0]:
                    raise InvalidInputError(f"omega block ({i},{j}) is degenerate")

    @property
    def s(self) -> int:
        return len(self.n)

    @property
    def blocks(self) -> List[Block]:
        """All index pairs in the fixed flattening order."""
        return [(i, j) for i in range(self.s) for j in range(self.s)]

    def block_shape(self, i: int, j: int) -> Tuple[int, int, int]:
        return (self.n[i], self.n[j], self.D[i][j])

    def nonzero_omega(self, i: int, j: int) -> List[Tuple[int, int, int]]:
        """Triples (k, l, Omega_ij[k, l]) with nonzero coefficient."""
        block = self.omega_blocks[(i, j)]
        rows, cols = np.nonzero(block)
        return [(int(k), int(l), int(block[k, l])) for k, l in zip(rows, cols)]


@dataclass(frozen=True)
class PointU:
    """
    A point of U(n): for each (i, j) a tensor of shape n_i x n_j x d_ij whose
    slice [:, :, k] is the matrix of x_ij^k acting on row vectors W_i -> W_j.
    """
    blocks: Dict[Block, np.ndarray]
    domain: ScalarDomain = RATIONALS

    def check_shapes(self, model: LocalModel) -> None:
        for (i, j) in model.blocks:
            if (i, j) not in self.blocks:
                raise InvalidInputError(f"point is missing block ({i},{j})")
            if self.blocks[(i, j)].shape != model.block_shape(i, j):
                raise InvalidInputError(
                    f"block ({i},{j}) has shape {self.blocks[(i, j)].shape}, expected {model.block_shape(i, j)}"
                )


@dataclass(frozen=True)
class MomentValue:
    """Values mu_j in gl(n_j) for every index j."""
    blocks: Tuple[np.ndarray, ...]
    domain: ScalarDomain = RATIONALS

    def total_trace(self):
        total = sum((np.trace(b) for b in self.blocks), Fraction(0) if self.domain.is_rational else 0)
        return total if self.domain.is_rational else int(total) % self.domain.modulus

    def is_zero(self) -> bool:
        return all(not np.any(self.domain.reduce(b) != 0) for b in self.blocks)


@dataclass_json
@dataclass
class ModelSummary:
    """
    Serializable description of a local model.

    Attributes:
        n: Dimension vector
        D: Ext-dimension matrix
        a: min over (i,j) of d_ij - 2 delta_ij
        dim_u: dim U(n)
        expected_dim: n^t (D - I) n + 1
        exceptional: One of the two configurations where the estimate is 3
        parts: Polystable type, when built from one
    """
    n: List[int]
    D: List[List[int]]
    a: int
    dim_u: int
    expected_dim: int
    exceptional: bool
    parts: Optional[List[List[int]]] = None
