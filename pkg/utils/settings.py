import os
from fractions import Fraction

from utils.exceptions import InvalidParameter

# Valori di default del progetto. Alcuni possono essere sovrascritti da variabili d'ambiente.
BRUTE_FORCE_CAP = 4
DEFAULT_STEPS = 256
DEFAULT_DENOMINATOR_BOUND = 12
DEFAULT_SEED = 0
DEFAULT_QUERIES = 1000
CONTINUITY_EPSILON = Fraction(1, 1000)
CONTINUITY_CONSTANT = 100.0
LOG_LEVEL = "WARNING"


def _env_int(name: str, default: int, min_value: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameter(f"{name} deve essere un intero, ricevuto {raw!r}") from None
    if value < min_value:
        raise InvalidParameter(f"{name} deve essere almeno {min_value}, ricevuto {value}")
    return value


def brute_force_cap() -> int:
    """
    Limite su n per la ricerca esaustiva della zero-divisor cup-length.
    Sovrascrivibile con TC_BRUTE_CAP.
    """
    return _env_int("TC_BRUTE_CAP", BRUTE_FORCE_CAP, min_value=1)


def denominator_bound() -> int:
    return _env_int("TC_DENOMINATOR_BOUND", DEFAULT_DENOMINATOR_BOUND, min_value=2)


def continuity_constant() -> float:
    raw = os.environ.get("TC_CONTINUITY_CONSTANT")
    if raw is None or not raw.strip():
        return CONTINUITY_CONSTANT
    try:
        value = float(raw)
    except ValueError:
        raise InvalidParameter(f"TC_CONTINUITY_CONSTANT deve essere un numero, ricevuto {raw!r}") from None
    if value <= 0:
        raise InvalidParameter("TC_CONTINUITY_CONSTANT deve essere positiva")
    return value


def log_level() -> str:
    level = os.environ.get("TC_LOG_LEVEL", LOG_LEVEL).strip().upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise InvalidParameter(f"TC_LOG_LEVEL deve essere un livello di logging, ricevuto {level!r}")
    return level
