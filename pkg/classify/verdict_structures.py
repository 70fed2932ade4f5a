"""
Data structures for classification verdicts and the stratification of the
moduli space by polystable type.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from dataclasses_json import dataclass_json

from errors import ConsistencyError, InvalidInputError
from lattice.mukai_structures import MukaiVector, StarReport


class CaseLabel(Enum):
    """Which of the distinguished cases a Mukai vector falls into."""
    MINUS2_POINT = "Minus2Point"
    ISOTROPIC_SYMMETRIC_PRODUCT = "IsotropicSymmetricProduct"
    A = "A"
    B = "B"
    C = "C"
    ZERO_DIM_TORSION = "ZeroDimTorsion"
    EMPTY = "Empty"


class Resolution(Enum):
    """Status of a symplectic resolution of M_v."""
    SMOOTH = "Smooth"
    EXISTS = "Exists"
    DOES_NOT_EXIST = "DoesNotExist"
    NOT_APPLICABLE = "NotApplicable"


@dataclass_json
@dataclass(frozen=True)
class PolystableType:
    """
    Numerical type of a polystable sheaf E = sum of E_i^{n_i} with v(E_i) = m_i v0.

    Each pair is one stable factor, so two distinct factors with the same
    Mukai vector appear as two equal pairs. Parts are kept sorted, which makes
    tuple equality the same as multiset equality.

    Attributes:
        parts: Pairs (m_i, n_i), sorted
    """
    parts: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple(sorted((int(m), int(n)) for m, n in self.parts))
        if not parts:
            raise InvalidInputError("a polystable type needs at least one part")
        if any(m < 1 or n < 1 for m, n in parts):
            raise InvalidInputError(f"type parts must be positive pairs, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def total(self) -> int:
        """The multiplicity m = sum of m_i * n_i."""
        return sum(m * n for m, n in self.parts)

    @property
    def is_stable(self) -> bool:
        return len(self.parts) == 1 and self.parts[0][1] == 1

    def __str__(self) -> str:
        return "{" + ", ".join(f"({m},{n})" for m, n in self.parts) + "}"


@dataclass_json
@dataclass
class Stratum:
    """
    Locus of polystable points of a fixed type.

    Attributes:
        type: The polystable type
        dim: Dimension of the stratum
        codim: Codimension inside M_v
        label: Optional name, e.g. "Y(1,2)" for a component of the singular locus
    """
    type: PolystableType
    dim: int
    codim: int
    label: Optional[str] = None


@dataclass_json
@dataclass
class SingularLocusSummary:
    """
    Irreducible components Y(m', m - m') of the singular locus plus every
    strictly semistable stratum.

    Attributes:
        e0: <v0, v0>
        m: Multiplicity of v
        components: One stratum per 1 <= m' <= m/2
        strata: All non-stable strata in enumeration order
        min_codim: Codimension of the singular locus
    """
    e0: int
    m: int
    components: List[Stratum]
    strata: List[Stratum]
    min_codim: int


@dataclass_json
@dataclass
class GenericPointStructure:
    """
    Local structure of M_v at a generic point E' + E'' of Y(m1, m2).

    Attributes:
        e0: <v0, v0>
        m1: Multiplicity of the first summand
        m2: Multiplicity of the second summand
        ext_dims: dim Ext^1 of (E',E'), (E',E''), (E'',E'), (E'',E'')
        weights: Weights of the scaling torus on the same four spaces
        cone_dim: Dimension of the cone of d x d matrices of rank <= 1
        local_dim: Ext^1(E',E') + cone + Ext^1(E'',E'') minus one equation
        expected_dim: dim M_v = m^2 e0 + 2
    """
    e0: int
    m1: int
    m2: int
    ext_dims: List[int]
    weights: List[int]
    cone_dim: int
    local_dim: int
    expected_dim: int

    @property
    def dimensions_agree(self) -> bool:
        return self.local_dim == self.expected_dim


@dataclass_json
@dataclass
class Verdict:
    """
    Complete classification of M_H(v).

    Attributes:
        case: Case label
        v: The input Mukai vector
        m: Multiplicity, v = m v0
        v0: Primitive part
        e0: <v0, v0>
        dim_M: Dimension of M_v; None when empty
        sing_codim: Codimension of the singular locus; None when smooth or unknown
        locally_factorial: Local factoriality; None when unknown
        resolution: Status of a symplectic resolution
        v_general: Whether H was asserted to be v-general
        star: The (*) report for v0, when it was evaluated
        notes: Provenance and caveats
    """
    case: CaseLabel
    v: MukaiVector
    m: int
    v0: MukaiVector
    e0: int
    dim_M: Optional[int]
    sing_codim: Optional[int]
    locally_factorial: Optional[bool]
    resolution: Resolution
    v_general: bool = True
    star: Optional[StarReport] = None
    notes: List[str] = field(default_factory=list)

    def check_invariants(self) -> None:
        """Raise ConsistencyError when the verdict contradicts the case rules; restricted verdicts are skipped."""
        if not self.v_general or self.resolution is Resolution.NOT_APPLICABLE:
            return
        if self.case is CaseLabel.C:
            if self.locally_factorial is not True or self.resolution is not Resolution.DOES_NOT_EXIST:
                raise ConsistencyError(f"case C verdict is inconsistent: {self}")
        if self.case is CaseLabel.B:
            if self.sing_codim != 2 or self.resolution is not Resolution.EXISTS:
                raise ConsistencyError(f"case B verdict is inconsistent: {self}")
