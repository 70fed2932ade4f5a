"""
Exact linear algebra over QQ and GF(q) on top of sympy's DomainMatrix.
"""

import math
from fractions import Fraction
from functools import reduce
from typing import Optional

import numpy as np
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def _domain(modulus: Optional[int]):
    return QQ if modulus is None else GF(modulus)


def to_domain_matrix(matrix: np.ndarray, modulus: Optional[int] = None) -> DomainMatrix:
    """Wrap a 2-d array of Fractions or integers as a DomainMatrix."""
    K = _domain(modulus)
    rows, cols = matrix.shape
    if modulus is None:
        entries = [[K(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in matrix.tolist()]
    else:
        entries = [[K(int(x) % modulus) for x in row] for row in matrix.tolist()]
    return DomainMatrix(entries, (rows, cols), K)


def rank(matrix: np.ndarray, modulus: Optional[int] = None) -> int:
    """Exact rank over QQ (modulus None) or GF(modulus)."""
    if matrix.size == 0:
        return 0
    return int(to_domain_matrix(matrix, modulus).rank())


def inverse(matrix: np.ndarray, modulus: Optional[int] = None) -> np.ndarray:
    """Exact inverse; raises ZeroDivisionError-like sympy errors when singular."""
    K = _domain(modulus)
    inv = to_domain_matrix(matrix, modulus).inv()
    rows = inv.to_list()
    if modulus is None:
        out = [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in rows]
        return np.array(out, dtype=object).reshape(matrix.shape)
    return np.array([[int(K.to_int(x)) % modulus for x in row] for row in rows], dtype=np.int64)


def random_invertible(size: int, rng: np.random.Generator, bound: int = 2) -> np.ndarray:
    """Product of random unit lower and upper triangular integer matrices (determinant 1)."""
    lower = np.tril(rng.integers(-bound, bound + 1, size=(size, size)), -1) + np.eye(size, dtype=np.int64)
    upper = np.triu(rng.integers(-bound, bound + 1, size=(size, size)), 1) + np.eye(size, dtype=np.int64)
    product = (lower @ upper).astype(object)
    return np.vectorize(Fraction, otypes=[object])(product)


def lagrangian_basis(omega: np.ndarray) -> np.ndarray:
    """
    Integer rows spanning a Lagrangian subspace for the skew form u^T omega w.

    Symplectic Gram-Schmidt over QQ: take a vector, find a partner it pairs
    with, keep the vector and project the rest onto the complement of the pair.
    Rows are cleared of denominators and common factors.
    """
    size = omega.shape[0]
    if size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    form = np.array([[Fraction(int(x)) for x in row] for row in np.asarray(omega).tolist()], dtype=object)

    def pair(u, w):
        return u @ form @ w

    pool = [np.array([Fraction(int(k == l)) for l in range(size)], dtype=object) for k in range(size)]
    chosen = []
    while pool:
        e = pool.pop(0)
        partner = next((k for k, w in enumerate(pool) if pair(e, w) != 0), None)
        if partner is None:
            # e lies in the radical
            if any(x != 0 for x in e):
                chosen.append(e)
            continue
        f = pool.pop(partner)
        f = f / pair(e, f)
        pool = [w - pair(w, f) * e + pair(w, e) * f for w in pool]
        chosen.append(e)

    rows = []
    for e in chosen:
        scale = reduce(math.lcm, (Fraction(x).denominator for x in e), 1)
        ints = [int(Fraction(x) * scale) for x in e]
        common = reduce(math.gcd, (abs(x) for x in ints), 0) or 1
        rows.append([x // common for x in ints])
    return np.array(rows, dtype=np.int64).reshape(len(rows), size)
