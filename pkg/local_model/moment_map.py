"""
Symplectic form, moment map and group action on U(n).

Conventions: x_ij^k acts on row vectors, so the group G(n) acts by
X_ij -> G_i^{-1} X_ij G_j and the Lie algebra by (A.x)_ij = X_ij A_j - A_i X_ij.
With

    omega(x, y) = sum_{i,j,k,l} Omega_ij[k,l] tr(X_ij^k Y_ji^l)
    mu_p(x)     = sum_{q,k,l}   Omega_pq[k,l] X_pq^k X_qp^l

the Hamiltonian identity sum_p tr(dmu_x(xi)_p A_p) = omega(xi, A.x) holds on
the nose. mu carries no factor 1/2; the null-fibre does not see it.

Every function also accepts blocks with leading batch axes, which is what the
finite-field point counter relies on.
"""

import logging
from typing import Dict, Sequence

import numpy as np

from errors import ConsistencyError, InvalidInputError
from local_model.exact_linalg import inverse, rank
from local_model.model_structures import RATIONALS, Block, LocalModel, MomentValue, PointU, ScalarDomain
from local_model.points import basis_point, flatten_point

logger = logging.getLogger(__name__)


def dim_u(model: LocalModel) -> int:
    return sum(model.n[i] * model.n[j] * model.D[i][j] for i, j in model.blocks)


def dim_gl(model: LocalModel) -> int:
    return sum(x * x for x in model.n)


def _check_pair(model: LocalModel, x: PointU, y: PointU) -> None:
    x.check_shapes(model)
    y.check_shapes(model)
    if x.domain != y.domain:
        raise InvalidInputError(f"scalar domains differ: {x.domain} vs {y.domain}")


def mu_bilinear(model: LocalModel, x_blocks: Dict[Block, np.ndarray],
                y_blocks: Dict[Block, np.ndarray], components: Sequence[int] = None) -> list:
    """
    The bilinear form B with mu(x) = B(x, x): B(x, y)_p = sum Omega_pq[k,l] X_pq^k Y_qp^l.

    Unreduced; blocks may carry leading batch axes. Only the listed components
    are computed (all by default); the others come back as None.
    """
    wanted = range(model.s) if components is None else components
    sample = next(iter(x_blocks.values()))
    batch = sample.shape[:-3]
    out = [None] * model.s
    for p in wanted:
        acc = np.zeros(batch + (model.n[p], model.n[p]), dtype=sample.dtype)
        for q in range(model.s):
            xb = x_blocks[(p, q)]
            yb = y_blocks[(q, p)]
            for k, l, coeff in model.nonzero_omega(p, q):
                acc = acc + coeff * (xb[..., k] @ yb[..., l])
        out[p] = acc
    return out


def mu_eval(model: LocalModel, x: PointU) -> MomentValue:
    """Moment map mu(x) = (mu_1, ..., mu_s)."""
    x.check_shapes(model)
    values = mu_bilinear(model, x.blocks, x.blocks)
    return MomentValue(blocks=tuple(x.domain.reduce(v) for v in values), domain=x.domain)


def omega_eval(model: LocalModel, x: PointU, y: PointU):
    """Symplectic form omega(x, y)."""
    _check_pair(model, x, y)
    total = x.domain.zeros(())[()]
    for i, j in model.blocks:
        xb = x.blocks[(i, j)]
        yb = y.blocks[(j, i)]
        for k, l, coeff in model.nonzero_omega(i, j):
            total = total + coeff * np.trace(xb[:, :, k] @ yb[:, :, l])
    if x.domain.is_rational:
        return total
    return int(total) % x.domain.modulus


def infinitesimal_action(model: LocalModel, A: Sequence[np.ndarray], x: PointU) -> PointU:
    """(A.x)_ij = X_ij A_j - A_i X_ij for A in the sum of gl(n_i)."""
    x.check_shapes(model)
    if len(A) != model.s or any(np.shape(A[i]) != (model.n[i], model.n[i]) for i in range(model.s)):
        raise InvalidInputError("Lie algebra element does not match the dimension vector")
    out = {}
    for i, j in model.blocks:
        slices = np.moveaxis(x.blocks[(i, j)], 2, 0)
        moved = slices @ A[j] - A[i] @ slices
        out[(i, j)] = x.domain.reduce(np.moveaxis(moved, 0, 2))
    return PointU(blocks=out, domain=x.domain)


def act(model: LocalModel, g: Sequence[np.ndarray], x: PointU) -> PointU:
    """Group action X_ij -> G_i^{-1} X_ij G_j; mu transforms as mu_p -> G_p^{-1} mu_p G_p."""
    x.check_shapes(model)
    inverses = [inverse(np.asarray(gi), x.domain.modulus) for gi in g]
    out = {}
    for i, j in model.blocks:
        slices = np.moveaxis(x.blocks[(i, j)], 2, 0)
        moved = inverses[i] @ slices @ np.asarray(g[j])
        out[(i, j)] = x.domain.reduce(np.moveaxis(moved, 0, 2))
    return PointU(blocks=out, domain=x.domain)


def _flatten_moment(values: Sequence[np.ndarray]) -> np.ndarray:
    return np.concatenate([np.asarray(v).reshape(-1) for v in values])


def mu_jacobian(model: LocalModel, x: PointU) -> np.ndarray:
    """
    Matrix of dmu_x: rows index the entries of (mu_1, ..., mu_s), columns the
    flattened coordinates of U(n). Column c is B(x, e_c) + B(e_c, x).
    """
    x.check_shapes(model)
    size = dim_u(model)
    columns = []
    for c in range(size):
        e = basis_point(model, c, x.domain)
        left = mu_bilinear(model, x.blocks, e.blocks)
        right = mu_bilinear(model, e.blocks, x.blocks)
        columns.append(x.domain.reduce(_flatten_moment([a + b for a, b in zip(left, right)])))
    rows = dim_gl(model)
    if not columns:
        return x.domain.zeros((rows, 0))
    return np.stack(columns, axis=1)


def lie_basis(model: LocalModel, domain: ScalarDomain):
    """Elementary matrices E_ab placed in each summand gl(n_i), in flattening order."""
    for i in range(model.s):
        for a in range(model.n[i]):
            for b in range(model.n[i]):
                A = [domain.zeros((m, m)) for m in model.n]
                A[i][a, b] = domain.array(1, ())[()]
                yield A


def action_matrix(model: LocalModel, x: PointU) -> np.ndarray:
    """Matrix of A -> A.x from the sum of gl(n_i) to U(n)."""
    columns = [flatten_point(model, infinitesimal_action(model, A, x)) for A in lie_basis(model, x.domain)]
    return np.stack(columns, axis=1)


def stabilizer_dim(model: LocalModel, x: PointU) -> int:
    """Dimension of the stabiliser algebra of x; at least 1 because scalars act trivially."""
    return dim_gl(model) - rank(action_matrix(model, x), x.domain.modulus)


def jacobian_rank(model: LocalModel, x: PointU) -> int:
    return rank(mu_jacobian(model, x), x.domain.modulus)


def torus_weights(model: LocalModel, index: int) -> Dict[Block, int]:
    """
    Weight on each block of the one-parameter subgroup scaling W_index.

    Read off from the infinitesimal action of A = id on W_index (zero
    elsewhere) at the all-ones point of a model with the same dimension
    vector and every block nonempty; each block must come back as a scalar
    multiple of itself.
    """
    if not 0 <= index < model.s:
        raise InvalidInputError(f"index {index} out of range for s={model.s}")
    full = LocalModel(n=model.n, D=tuple(tuple(2 for _ in model.n) for _ in model.n))
    ones = PointU(blocks={b: RATIONALS.array(np.ones(full.block_shape(*b), dtype=np.int64)) for b in full.blocks},
                  domain=RATIONALS)
    A = [RATIONALS.array(np.eye(m, dtype=np.int64) * int(p == index)) for p, m in enumerate(model.n)]
    moved = infinitesimal_action(full, A, ones)
    weights = {}
    for b in model.blocks:
        values = set(moved.blocks[b].reshape(-1).tolist())
        if len(values) != 1:
            raise ConsistencyError(f"block {b} is not an eigenspace of the torus",
                                   {"index": index, "block": list(b)})
        weights[b] = int(values.pop())
    return weights


def omega_gram(model: LocalModel, domain: ScalarDomain = None) -> np.ndarray:
    """Gram matrix omega(e_a, e_b) on the standard basis of U(n)."""
    domain = domain or ScalarDomain()
    size = dim_u(model)
    basis = [basis_point(model, c, domain) for c in range(size)]
    gram = domain.zeros((size, size))
    for a in range(size):
        for b in range(size):
            gram[a, b] = omega_eval(model, basis[a], basis[b])
    return gram


def is_symplectic(model: LocalModel) -> bool:
    """omega is non-degenerate on U(n)."""
    return rank(omega_gram(model)) == dim_u(model)
