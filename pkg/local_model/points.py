"""
Constructors, flattening and dumps for points of U(n).

Flattening order: blocks in order (0,0), (0,1), ..., (s-1,s-1), each block in
C order over (row, column, k).
"""

from typing import Dict, Optional

import numpy as np

from errors import InvalidInputError
from local_model.exact_linalg import lagrangian_basis
from local_model.model_structures import RATIONALS, LocalModel, PointU, ScalarDomain


def zero_point(model: LocalModel, domain: Optional[ScalarDomain] = None) -> PointU:
    domain = domain or RATIONALS
    return PointU(blocks={b: domain.zeros(model.block_shape(*b)) for b in model.blocks}, domain=domain)


def flatten_point(model: LocalModel, x: PointU) -> np.ndarray:
    return np.concatenate([x.blocks[b].reshape(-1) for b in model.blocks])


def unflatten_point(model: LocalModel, vector, domain: Optional[ScalarDomain] = None) -> PointU:
    """Inverse of flatten_point."""
    domain = domain or RATIONALS
    vector = domain.array(vector)
    blocks = {}
    offset = 0
    for b in model.blocks:
        shape = model.block_shape(*b)
        size = int(np.prod(shape))
        blocks[b] = vector[offset:offset + size].reshape(shape)
        offset += size
    if offset != vector.shape[0]:
        raise InvalidInputError(f"vector has length {vector.shape[0]}, model needs {offset}")
    return PointU(blocks=blocks, domain=domain)


def basis_point(model: LocalModel, index: int, domain: Optional[ScalarDomain] = None) -> PointU:
    """The standard basis vector e_index of U(n)."""
    size = sum(int(np.prod(model.block_shape(*b))) for b in model.blocks)
    vector = np.zeros(size, dtype=np.int64)
    vector[index] = 1
    return unflatten_point(model, vector, domain)


def random_point(model: LocalModel, seed: int, bound: int) -> PointU:
    """Uniform integer entries in [-bound, bound], reproducible per seed; rarely in F(n)."""
    if bound < 1:
        raise InvalidInputError(f"bound must be at least 1, got {bound}")
    rng = np.random.default_rng(seed)
    blocks = {b: RATIONALS.array(rng.integers(-bound, bound + 1, size=model.block_shape(*b)))
              for b in model.blocks}
    return PointU(blocks=blocks, domain=RATIONALS)


def lagrangian_point(model: LocalModel, seed: int, bound: int = 3) -> PointU:
    """
    Exact point of the null-fibre F(n).

    Blocks (i, j) with i < j are random, blocks with i > j vanish, and each
    diagonal block is a random integer combination of a Lagrangian basis of
    Omega_ii. Off-diagonal terms of mu pair a block with a zero partner and
    diagonal terms pair isotropic vectors, so mu vanishes exactly for any
    omega the model carries.
    """
    rng = np.random.default_rng(seed)
    blocks = {}
    for i, j in model.blocks:
        shape = model.block_shape(i, j)
        values = np.zeros(shape, dtype=np.int64)
        if i < j:
            values = rng.integers(-bound, bound + 1, size=shape)
        elif i == j:
            basis = lagrangian_basis(model.omega_blocks[(i, i)])
            coeffs = rng.integers(-bound, bound + 1, size=(shape[0], shape[1], basis.shape[0]))
            values = (coeffs @ basis).reshape(shape)
        blocks[(i, j)] = RATIONALS.array(values)
    return PointU(blocks=blocks, domain=RATIONALS)


def reduce_point(x: PointU, modulus: int) -> PointU:
    """Reduce an integral rational point modulo a prime."""
    domain = ScalarDomain(modulus)
    blocks = {}
    for b, arr in x.blocks.items():
        if any(getattr(v, 'denominator', 1) != 1 for v in arr.reshape(-1)):
            raise InvalidInputError("only integral points can be reduced modulo q")
        blocks[b] = domain.array(np.vectorize(int, otypes=[np.int64])(arr) if arr.size else np.zeros(arr.shape, dtype=np.int64))
    return PointU(blocks=blocks, domain=domain)


def dump_point(model: LocalModel, x: PointU) -> Dict[str, list]:
    """Nested lists per block, keyed "i,j", with entries as exact rational strings."""
    x.check_shapes(model)
    out = {}
    for i, j in model.blocks:
        arr = x.blocks[(i, j)]
        out[f"{i},{j}"] = np.vectorize(str, otypes=[object])(arr).tolist() if arr.size else arr.tolist()
    return out


def load_point(model: LocalModel, data: Dict[str, list]) -> PointU:
    """Read back a dump_point document over the rationals."""
    blocks = {}
    for i, j in model.blocks:
        key = f"{i},{j}"
        if key not in data:
            raise InvalidInputError(f"point dump is missing block {key}")
        try:
            blocks[(i, j)] = RATIONALS.array(data[key], shape=model.block_shape(i, j))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"bad entries in block {key}: {e}")
    return PointU(blocks=blocks, domain=RATIONALS)
