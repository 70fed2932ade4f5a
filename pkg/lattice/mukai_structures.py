"""
Value types of the Mukai lattice: surfaces, Mukai vectors, Hilbert polynomials
and the report produced by the (*) condition check.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from dataclasses_json import config, dataclass_json

from errors import InvalidInputError


class SurfaceKind(Enum):
    """Kind of the underlying surface."""
    K3 = "k3"
    ABELIAN = "abelian"

    @property
    def td_correction(self) -> int:
        """Degree-4 part of sqrt(td(X)): 1 for K3 surfaces, 0 for abelian ones."""
        return 1 if self is SurfaceKind.K3 else 0


@dataclass_json
@dataclass(frozen=True)
class SurfaceData:
    """
    Discrete data of a K3 or abelian surface with a fixed polarisation.

    Attributes:
        kind: K3 or abelian
        gram: Intersection form on NS(X), symmetric and even
        ample: Coordinates of the ample class H
    """
    kind: SurfaceKind
    gram: Tuple[Tuple[int, ...], ...]
    ample: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'gram', tuple(tuple(int(x) for x in row) for row in self.gram))
        object.__setattr__(self, 'ample', tuple(int(x) for x in self.ample))
        rho = len(self.gram)
        if rho == 0:
            raise InvalidInputError("gram matrix must be non-empty")
        if any(len(row) != rho for row in self.gram):
            raise InvalidInputError("gram matrix must be square")
        for i in range(rho):
            if self.gram[i][i] % 2 != 0:
                raise InvalidInputError(f"gram matrix must be even, diagonal entry {i} is {self.gram[i][i]}")
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InvalidInputError(f"gram matrix is not symmetric at ({i},{j})")
        if len(self.ample) != rho:
            raise InvalidInputError(f"ample class has length {len(self.ample)}, expected {rho}")
        if self.h_squared <= 0:
            raise InvalidInputError(f"ample class must have H^2 > 0, got {self.h_squared}")

    @property
    def rho(self) -> int:
        return len(self.gram)

    def dot(self, c: Tuple, d: Tuple):
        """Intersection product c.d in NS coordinates; works on symbolic entries too."""
        return sum(c[i] * self.gram[i][j] * d[j] for i in range(self.rho) for j in range(self.rho))

    @property
    def h_squared(self) -> int:
        return self.dot(self.ample, self.ample)


@dataclass_json
@dataclass(frozen=True)
class MukaiVector:
    """
    A Mukai vector v = (r, c, a) with c written in NS coordinates.

    Attributes:
        r: Rank component (H^0 part)
        c: First Chern class in NS coordinates (H^2 part)
        a: H^4 part, ch_2 + r * epsilon
    """
    r: int
    c: Tuple[int, ...]
    a: int

    def __post_init__(self):
        object.__setattr__(self, 'c', tuple(int(x) for x in self.c))

    def is_zero(self) -> bool:
        return self.r == 0 and self.a == 0 and not any(self.c)

    def scaled(self, m: int) -> "MukaiVector":
        return MukaiVector(self.r * m, tuple(m * x for x in self.c), self.a * m)

    def __str__(self) -> str:
        return f"{self.r};{','.join(str(x) for x in self.c)};{self.a}"


def _rational_field():
    return field(metadata=config(encoder=str, decoder=Fraction))


@dataclass_json
@dataclass(frozen=True)
class HilbertPoly:
    """
    Hilbert polynomial P(m) = q2*m^2 + q1*m + q0 of a Mukai vector.

    Attributes:
        q2: Leading coefficient r*H^2/2
        q1: Linear coefficient c.H
        q0: Constant term a + r*epsilon
    """
    q2: Fraction = _rational_field()
    q1: Fraction = _rational_field()
    q0: Fraction = _rational_field()

    def __call__(self, m: int) -> Fraction:
        return self.q2 * m * m + self.q1 * m + self.q0

    def is_integer_valued(self) -> bool:
        # a quadratic is integer valued iff it is so at three consecutive integers
        return all(self(m).denominator == 1 for m in (-1, 0, 1))

    def __str__(self) -> str:
        return f"{self.q2}*m^2 + {self.q1}*m + {self.q0}"


class ClauseStatus(Enum):
    """Outcome of one clause of the (*) conditions."""
    PASS = "pass"
    FAIL = "fail"
    HEURISTIC = "heuristic"


@dataclass_json
@dataclass
class ClauseResult:
    """One clause of the (*) check with its outcome and an explanation."""
    name: str
    status: ClauseStatus
    detail: str


@dataclass_json
@dataclass
class StarReport:
    """
    Result of checking the (*) conditions for a primitive Mukai vector v0.

    Attributes:
        v0: The vector that was checked
        self_pairing: <v0, v0>
        clauses: Per-clause results (positivity, then self-pairing)
    """
    v0: MukaiVector
    self_pairing: int
    clauses: List[ClauseResult] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        """True when no clause failed (heuristic passes count as passes)."""
        return all(c.status is not ClauseStatus.FAIL for c in self.clauses)

    @property
    def is_heuristic(self) -> bool:
        return any(c.status is ClauseStatus.HEURISTIC for c in self.clauses)


def surface_from_dict(data: dict) -> SurfaceData:
    """Build a surface from the documented JSON layout."""
    try:
        kind = SurfaceKind(str(data["kind"]).lower())
        gram = data["gram"]
        ample = data["ample"]
    except (KeyError, ValueError, TypeError) as e:
        raise InvalidInputError(f"malformed surface description: {e}")
    if not isinstance(gram, list) or not all(isinstance(row, list) for row in gram):
        raise InvalidInputError("surface 'gram' must be a list of lists")
    if not isinstance(ample, list):
        raise InvalidInputError("surface 'ample' must be a list")
    try:
        return SurfaceData(kind=kind, gram=gram, ample=ample)
    except (TypeError, ValueError) as e:
        if isinstance(e, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed surface description: {e}")


def parse_surface(text: str) -> SurfaceData:
    """Parse a surface JSON document such as {"kind":"k3","gram":[[4]],"ample":[1]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"surface file is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise InvalidInputError("surface JSON must be an object")
    return surface_from_dict(data)


def load_surface(path: str) -> SurfaceData:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return parse_surface(f.read())
    except OSError as e:
        raise InvalidInputError(f"cannot read surface file {path}: {e}")


def parse_mukai_vector(text: str, rho: Optional[int] = None) -> MukaiVector:
    """
    Parse the text form "r;c1,...,c_rho;a", e.g. "2;0;-2".

    Args:
        text: The vector in text form
        rho: Expected Neron-Severi rank, checked when given

    Returns:
        The parsed MukaiVector
    """
    pieces = text.strip().split(";")
    if len(pieces) != 3:
        raise InvalidInputError(f"Mukai vector must look like 'r;c1,...;a', got {text!r}")
    try:
        r = int(pieces[0])
        c = tuple(int(x) for x in pieces[1].split(",")) if pieces[1].strip() else ()
        a = int(pieces[2])
    except ValueError:
        raise InvalidInputError(f"Mukai vector has non-integer components: {text!r}")
    if rho is not None and len(c) != rho:
        raise InvalidInputError(f"Mukai vector {text!r} has c of length {len(c)}, surface has rho={rho}")
    return MukaiVector(r, c, a)
