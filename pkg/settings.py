from dataclasses import dataclass
from dotenv import load_dotenv
import os
import threading

from errors import InvalidInputError

# Global settings instance, created on first use
_settings_instance = None
_init_lock = threading.Lock()


@dataclass(frozen=True)
class Settings:
    """
    Process-wide configuration, read from the environment (and a .env file).

    Attributes:
        point_budget: Largest q^dim U that count-points will enumerate
        enum_limit: Largest sum of n_i that verify_bounds accepts
        sweep_max_entry: Largest D entry visited by the estimate sweep
        sweep_full_range_parts: Models with at most this many indices get the full D range
        seed: Default seed for point constructors
        workers: Worker processes for sweeps and point counts (1 = in-process)
        chunk_size: Points per vectorised batch when counting over F_q
    """
    point_budget: int = 2 ** 32
    enum_limit: int = 6
    sweep_max_entry: int = 8
    sweep_full_range_parts: int = 3
    seed: int = 0
    workers: int = 1
    chunk_size: int = 2 ** 18


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise InvalidInputError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise InvalidInputError(f"{name} must be >= {minimum}, got {value}")
    return value


def get_settings() -> Settings:
    """Load the settings once and return the shared instance."""
    global _settings_instance
    if _settings_instance is not None:
        return _settings_instance
    with _init_lock:
        # Double-check after acquiring the lock
        if _settings_instance is not None:
            return _settings_instance
        load_dotenv()
        _settings_instance = Settings(
            point_budget=_env_int('MODULI_POINT_BUDGET', Settings.point_budget, 1),
            enum_limit=_env_int('MODULI_ENUM_LIMIT', Settings.enum_limit, 1),
            sweep_max_entry=_env_int('MODULI_SWEEP_MAX_ENTRY', Settings.sweep_max_entry, 0),
            sweep_full_range_parts=_env_int('MODULI_SWEEP_FULL_RANGE_PARTS', Settings.sweep_full_range_parts, 1),
            seed=_env_int('MODULI_SEED', Settings.seed, 0),
            workers=_env_int('MODULI_WORKERS', Settings.workers, 1),
            chunk_size=_env_int('MODULI_CHUNK_SIZE', Settings.chunk_size, 1),
        )
        return _settings_instance


def reset_settings() -> None:
    """Forget the cached settings so the next call re-reads the environment."""
    global _settings_instance
    with _init_lock:
        _settings_instance = None
