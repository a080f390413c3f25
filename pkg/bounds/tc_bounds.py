from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable

import pandas as pd

from algebra.certificate import lower_bound_certificate
from algebra.exterior import AlgebraSignature
from utils.exceptions import BoundMismatch
from utils.logger import get_logger

logger = get_logger(__name__)

TABLE_COLUMNS = ["n", "r", "lower", "upper_constructive", "upper_dimension", "tc"]


@dataclass(frozen=True)
class TcBounds:
    """
    Limiti per TC(M) = TC(M0) di un arrangiamento generico di n iperpiani in C^r.
    """
    n: int
    r: int
    lower: int
    upper_constructive: int
    upper_dimension: int
    tc: int
    certificate_length: int
    dim_skeleton: int
    tc_skeleton_dimension: int
    tc_skeleton_constructive: int

    @property
    def tc_skeleton_upper(self) -> int:
        # TC(M̄0) <= min{n, 2r-1}
        return min(self.tc_skeleton_constructive, self.tc_skeleton_dimension)

    @property
    def constructive_tight(self) -> bool:
        # Il planner esplicito con n+1 regole è ottimale solo se n+1 <= 2r
        return self.upper_constructive == self.tc

    def to_dict(self) -> dict:
        record = asdict(self)
        record["tc_skeleton_upper"] = self.tc_skeleton_upper
        record["constructive_tight"] = self.constructive_tight
        return record


@lru_cache(maxsize=None)
def compute_bounds(n: int, r: int) -> TcBounds:
    """
    Riconcilia il limite inferiore certificato con i limiti superiori.

    - inferiore: 1 + lunghezza del prodotto non nullo ē_0 ∏_{i∈J} ē_i (k+1 fattori);
    - superiore costruttivo: n+1 regole (planner su M̄0 con n regole, più il fattore S^1);
    - superiore dimensionale: TC(M̄0) <= 2 dim M̄0 + 1 = 2r-1, più 1 per il fattore S^1.
    """
    sig = AlgebraSignature(n, r)
    certificate = lower_bound_certificate(sig)
    lower = 1 + certificate.factors

    dim_skeleton = r - 1
    tc_skeleton_dimension = 2 * dim_skeleton + 1
    tc_skeleton_constructive = n
    upper_dimension = tc_skeleton_dimension + 1
    upper_constructive = tc_skeleton_constructive + 1
    tc = min(upper_constructive, upper_dimension)

    if lower != tc:
        raise BoundMismatch(f"il limite inferiore certificato {lower} differisce dal limite superiore {tc} per n={n}, r={r}")
    if tc != min(n + 1, 2 * r):
        raise BoundMismatch(f"tc={tc} differisce da min(n+1, 2r) per n={n}, r={r}")

    logger.info("limiti n=%d r=%d: inferiore=%d costruttivo=%d dimensione=%d tc=%d",
                n, r, lower, upper_constructive, upper_dimension, tc)
    return TcBounds(n=n, r=r, lower=lower, upper_constructive=upper_constructive,
                    upper_dimension=upper_dimension, tc=tc, certificate_length=certificate.factors,
                    dim_skeleton=dim_skeleton, tc_skeleton_dimension=tc_skeleton_dimension,
                    tc_skeleton_constructive=tc_skeleton_constructive)


def bounds_table(signatures: Iterable[tuple[int, int]]) -> pd.DataFrame:
    """
    Tabella dei limiti, una riga per segnatura (n, r).
    """
    rows = [compute_bounds(n, r).to_dict() for n, r in signatures]
    table = pd.DataFrame(rows, columns=TABLE_COLUMNS + ["constructive_tight"])
    return table.astype({column: int for column in TABLE_COLUMNS})
