"""
Construction of local models from polystable types or JSON, and the
numerical invariants attached to them.
"""

import json
import logging
from typing import Union

import numpy as np

from errors import InvalidInputError, UnsupportedModelError
from classify.verdict_structures import PolystableType
from local_model.model_structures import LocalModel, ModelSummary

logger = logging.getLogger(__name__)


def model_from_type(e0: int, t: PolystableType) -> LocalModel:
    """
    Local model at a polystable point of type t in M_{m v0}.

    One index per stable factor, n_i its multiplicity, and
    d_ij = dim Ext^1(E_i, E_j) = m_i m_j e0 + 2 delta_ij.
    """
    if e0 % 2 != 0:
        raise InvalidInputError(f"<v0,v0> = {e0} is odd")
    if e0 < 2:
        raise InvalidInputError(f"local models need <v0,v0> >= 2, got {e0}")
    ms = [m for m, _ in t.parts]
    D = [[ms[i] * ms[j] * e0 + (2 if i == j else 0) for j in range(len(ms))] for i in range(len(ms))]
    return LocalModel(n=tuple(n for _, n in t.parts), D=D, parts=t.parts)


def build_model(n, D, omega=None) -> LocalModel:
    """Model from a dimension vector and Ext-dimension matrix (default pairings unless omega is given)."""
    try:
        return LocalModel(n=tuple(n), D=tuple(tuple(row) for row in D), omega_blocks=omega)
    except (TypeError, ValueError) as e:
        if isinstance(e, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed model: {e}")


def model_from_json(source: Union[str, dict]) -> LocalModel:
    """
    Parse {"n": [...], "D": [[...]]}, optionally with "omega": {"i,j": [[...]]}.
    """
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"model is not valid JSON: {e}")
    else:
        data = source
    if not isinstance(data, dict) or "n" not in data or "D" not in data:
        raise InvalidInputError("model JSON needs keys 'n' and 'D'")
    omega = None
    if "omega" in data:
        try:
            omega = {tuple(int(p) for p in key.split(",")): value for key, value in data["omega"].items()}
        except (AttributeError, ValueError) as e:
            raise InvalidInputError(f"bad omega blocks: {e}")
    return build_model(data["n"], data["D"], omega)


def a_value(model: LocalModel) -> int:
    """a = min over (i, j) of d_ij - 2 delta_ij."""
    return min(model.D[i][j] - (2 if i == j else 0) for i, j in model.blocks)


def expected_dim(model: LocalModel) -> int:
    """n^t (D - I) n + 1, the dimension of F(n) as a complete intersection."""
    n = np.array(model.n, dtype=object)
    D = np.array(model.D, dtype=object)
    return int(n @ (D - np.eye(model.s, dtype=np.int64).astype(object)) @ n) + 1


def expected_dim_via_spaces(model: LocalModel) -> int:
    """dim U(n) - dim pg(n) = sum n_i n_j d_ij - (sum n_i^2 - 1)."""
    dim_u = sum(model.n[i] * model.n[j] * model.D[i][j] for i, j in model.blocks)
    return dim_u - (sum(x * x for x in model.n) - 1)


def is_exceptional(model: LocalModel) -> bool:
    """
    True exactly for n = (2), d_11 = 4 and for n = (1, 1), d_12 = 2 (in either order).

    Raises:
        UnsupportedModelError: if a < 2
    """
    a = a_value(model)
    if a < 2:
        raise UnsupportedModelError(f"a = {a} < 2 for n={model.n}, D={model.D}")
    if model.s == 1:
        return model.n == (2,) and model.D[0][0] == 4
    if model.s == 2:
        return model.n == (1, 1) and model.D[0][1] == 2
    return False


def model_summary(model: LocalModel) -> ModelSummary:
    a = a_value(model)
    return ModelSummary(
        n=list(model.n),
        D=[list(row) for row in model.D],
        a=a,
        dim_u=sum(model.n[i] * model.n[j] * model.D[i][j] for i, j in model.blocks),
        expected_dim=expected_dim(model),
        exceptional=is_exceptional(model) if a >= 2 else False,
        parts=[list(p) for p in model.parts] if model.parts else None,
    )
