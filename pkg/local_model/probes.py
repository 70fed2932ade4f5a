"""
Probes of a local model at exact points of the null-fibre.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence

from dataclasses_json import dataclass_json

from local_model.model_builder import expected_dim, model_summary
from local_model.model_structures import LocalModel, ModelSummary, PointU
from local_model.moment_map import dim_gl, is_symplectic, jacobian_rank, mu_eval, stabilizer_dim
from local_model.points import lagrangian_point, zero_point

logger = logging.getLogger(__name__)


@dataclass_json
@dataclass
class PointProbe:
    """
    Rank of d mu and the stabiliser at one point.

    Attributes:
        label: "zero" or "lagrangian seed=<k>"
        mu_vanishes: mu(x) = 0 exactly
        jacobian_rank: rank of d mu_x
        stabilizer_dim: dimension of the stabiliser algebra of x
        law_holds: rank d mu_x = sum n_i^2 - stabilizer_dim(x)
    """
    label: str
    mu_vanishes: bool
    jacobian_rank: int
    stabilizer_dim: int
    law_holds: bool


@dataclass_json
@dataclass
class ModelProbe:
    """
    A local model with omega checked and the rank-stabiliser law probed.

    Attributes:
        summary: Numerical description of the model
        omega_nondegenerate: omega is symplectic on U(n)
        points: One probe per point
    """
    summary: ModelSummary
    omega_nondegenerate: bool
    points: List[PointProbe] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.omega_nondegenerate and all(p.mu_vanishes and p.law_holds for p in self.points)


def probe_point(model: LocalModel, x: PointU, label: str) -> PointProbe:
    r = jacobian_rank(model, x)
    stab = stabilizer_dim(model, x)
    return PointProbe(label=label, mu_vanishes=mu_eval(model, x).is_zero(), jacobian_rank=r,
                      stabilizer_dim=stab, law_holds=r == dim_gl(model) - stab)


def probe_model(model: LocalModel, seeds: Sequence[int]) -> ModelProbe:
    """Probe at x = 0 and at one lagrangian point per seed."""
    probe = ModelProbe(summary=model_summary(model), omega_nondegenerate=is_symplectic(model))
    probe.points.append(probe_point(model, zero_point(model), "zero"))
    for seed in seeds:
        probe.points.append(probe_point(model, lagrangian_point(model, seed), f"lagrangian seed={seed}"))
    logger.debug("probed n=%s (expected dim %d) at %d points", model.n, expected_dim(model), len(probe.points))
    return probe
