"""
Validated configuration of one command-line run.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from dataclasses_json import dataclass_json

from errors import InvalidInputError
from classify.verdict_structures import PolystableType
from settings import get_settings


class Command(Enum):
    """Subcommands."""
    CLASSIFY = "classify"
    LOCAL_MODEL = "local-model"
    VERIFY_ESTIMATES = "verify-estimates"
    COUNT_POINTS = "count-points"
    REPORT = "report"


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_type(text: str) -> PolystableType:
    """'(1,1),(1,1)' -> the type with two factors of multiplicity one."""
    pairs = _PAIR.findall(text)
    if not pairs or _PAIR.sub("", text).replace(",", "").strip():
        raise InvalidInputError(f"polystable type must look like '(m,n),(m,n)', got {text!r}")
    return PolystableType(tuple((int(m), int(n)) for m, n in pairs))


@dataclass_json
@dataclass
class RunConfig:
    """
    Everything a subcommand needs.

    Attributes:
        command: The subcommand
        surface_path: Surface JSON file (classify, report)
        vector: Mukai vector text "r;c1,...;a" (classify, report)
        v_general: H is asserted v-general
        effective: Effectivity assertion for c0 in the torsion case
        model: Local model JSON, inline or a file path
        e0: <v0,v0> for a model given by its polystable type
        type_spec: Polystable type "(m,n),..."
        sweep: Run the estimate sweep instead of a single model
        max_total: Sweep bound on sum of n_i
        max_entry: Sweep bound on entries of D
        full_range_parts: Sweep uses the full D grid up to this many indices
        primes: Fields for point counts
        probes: Number of lagrangian points probed by local-model
        seed: Seed for all sampled points, echoed in the output
        workers: Worker processes
        quiet: Suppress the human-readable output
        verbose: Debug logging
    """
    command: Command
    surface_path: Optional[str] = None
    vector: Optional[str] = None
    v_general: bool = False
    effective: Optional[bool] = None
    model: Optional[str] = None
    e0: Optional[int] = None
    type_spec: Optional[str] = None
    sweep: bool = False
    max_total: Optional[int] = None
    max_entry: Optional[int] = None
    full_range_parts: Optional[int] = None
    primes: Tuple[int, ...] = field(default_factory=tuple)
    probes: int = 5
    seed: int = 0
    workers: int = 1
    quiet: bool = False
    verbose: bool = False

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        settings = get_settings()
        config = cls(command=Command(args.command))
        for name in ("surface_path", "vector", "model", "e0", "type_spec", "max_total", "max_entry",
                     "full_range_parts", "probes"):
            value = getattr(args, name, None)
            if value is not None:
                setattr(config, name, value)
        config.v_general = bool(getattr(args, "v_general", False))
        config.effective = getattr(args, "effective", None)
        config.sweep = bool(getattr(args, "sweep", False))
        config.primes = tuple(getattr(args, "primes", None) or ())
        config.seed = args.seed if getattr(args, "seed", None) is not None else settings.seed
        config.workers = args.workers if getattr(args, "workers", None) is not None else settings.workers
        config.quiet = bool(getattr(args, "quiet", False))
        config.verbose = bool(getattr(args, "verbose", False))
        config.validate()
        return config

    def validate(self) -> None:
        """Check that the inputs the command needs are present."""
        if self.command in (Command.CLASSIFY, Command.REPORT):
            if not self.surface_path or not self.vector:
                raise InvalidInputError(f"{self.command.value} needs --surface and --v")
        if self.command in (Command.LOCAL_MODEL, Command.COUNT_POINTS):
            self._check_model_source()
        if self.command is Command.VERIFY_ESTIMATES and not self.sweep:
            self._check_model_source()
        if self.command is Command.COUNT_POINTS and not self.primes:
            raise InvalidInputError("count-points needs --primes")
        if self.probes < 0 or self.workers < 1 or self.seed < 0:
            raise InvalidInputError("probes and seed must be nonnegative, workers positive")

    def _check_model_source(self) -> None:
        by_type = self.e0 is not None or self.type_spec is not None
        if bool(self.model) == by_type:
            raise InvalidInputError("give either --model or both --e0 and --type")
        if by_type and (self.e0 is None or self.type_spec is None):
            raise InvalidInputError("--e0 and --type go together")
