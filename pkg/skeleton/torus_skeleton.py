from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from algebra.exterior import AlgebraSignature
from skeleton.turn import Turn
from utils.exceptions import InvalidCoordinates, InvalidParameter
from utils.settings import denominator_bound as default_denominator_bound


@dataclass(frozen=True)
class MembershipResult:
    is_member: bool
    support: frozenset[int]  # indici 1-based delle coordinate non nulle

    def __bool__(self):
        return self.is_member


@dataclass(frozen=True)
class SkeletonPoint:
    """
    Punto di M̄0 = ∪_{|I|=r-1} T^{n-1}_I (circle_coord assente) oppure di
    M0 = S^1 × M̄0 (circle_coord presente).
    """
    base_coords: tuple[Turn, ...]
    circle_coord: Turn | None = None

    def __post_init__(self):
        coords = tuple(self.base_coords)
        if any(not isinstance(c, Turn) for c in coords):
            raise InvalidCoordinates("le coordinate dello scheletro devono essere valori Turn")
        if self.circle_coord is not None and not isinstance(self.circle_coord, Turn):
            raise InvalidCoordinates("la coordinata del cerchio deve essere un valore Turn")
        object.__setattr__(self, "base_coords", coords)

    @classmethod
    def from_values(cls, values: Sequence[Fraction | int | str], circle: Fraction | int | str | None = None) -> SkeletonPoint:
        def to_turn(v):
            return Turn.parse(v) if isinstance(v, str) else Turn(Fraction(v))
        return cls(tuple(to_turn(v) for v in values), None if circle is None else to_turn(circle))

    @property
    def is_product(self) -> bool:
        return self.circle_coord is not None

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, c in enumerate(self.base_coords, start=1) if not c.is_basepoint)

    def to_json(self) -> dict:
        record = {"base": [c.to_json() for c in self.base_coords]}
        if self.circle_coord is not None:
            record["circle"] = self.circle_coord.to_json()
        return record

    def __str__(self):
        base = "(" + ", ".join(str(c) for c in self.base_coords) + ")"
        if self.circle_coord is None:
            return base
        return f"[{self.circle_coord}; {base}]"


def membership(coords: Sequence[Turn] | SkeletonPoint, sig: AlgebraSignature) -> MembershipResult:
    """
    Appartenenza allo scheletro: al più r-1 coordinate diverse dal punto base.
    """
    if isinstance(coords, SkeletonPoint):
        coords = coords.base_coords
    if len(coords) != sig.n - 1:
        raise InvalidCoordinates(f"attese {sig.n - 1} coordinate dello scheletro per n={sig.n}, ricevute {len(coords)}")
    support = frozenset(j for j, c in enumerate(coords, start=1) if not c.is_basepoint)
    return MembershipResult(is_member=len(support) <= sig.r - 1, support=support)


def random_turn(rng: np.random.Generator, denominator_bound: int) -> Turn:
    # Denominatore in 1..bound, numeratore in 0..q-1: lo zero ha probabilità positiva
    q = int(rng.integers(1, denominator_bound + 1))
    p = int(rng.integers(0, q))
    return Turn(Fraction(p, q))


def sample(sig: AlgebraSignature, rng: np.random.Generator, denominator_bound: int | None = None,
           with_circle: bool = False) -> SkeletonPoint:
    """
    Campiona un punto dello scheletro: sceglie uniformemente un supporto I con |I| = r-1,
    poi giri razionali casuali su I e zero altrove. Le coordinate su I possono
    comunque valere 0 (strati inferiori).
    """
    bound = default_denominator_bound() if denominator_bound is None else denominator_bound
    if bound < 2:
        raise InvalidParameter(f"denominator_bound deve essere almeno 2, ricevuto {bound}")

    coords = [Turn()] * (sig.n - 1)
    if sig.r > 1:
        for j in rng.choice(sig.n - 1, size=sig.r - 1, replace=False):
            coords[int(j)] = random_turn(rng, bound)
    circle = random_turn(rng, bound) if with_circle else None
    return SkeletonPoint(tuple(coords), circle)


def sample_partner(point: SkeletonPoint, sig: AlgebraSignature, rng: np.random.Generator,
                   denominator_bound: int | None = None) -> SkeletonPoint:
    """
    Campiona un secondo estremo vicino combinatoriamente a point: ogni coordinata del
    supporto viene tenuta, ricampionata o azzerata. Il supporto non cresce, quindi il
    punto resta nello scheletro; serve a raggiungere tutti gli indici di dominio.
    """
    bound = default_denominator_bound() if denominator_bound is None else denominator_bound
    coords = list(point.base_coords)
    for j, c in enumerate(coords):
        if c.is_basepoint:
            continue
        choice = int(rng.integers(0, 3))
        if choice == 1:
            coords[j] = random_turn(rng, bound)
        elif choice == 2:
            coords[j] = Turn()

    circle = point.circle_coord
    if circle is not None:
        choice = int(rng.integers(0, 3))
        if choice == 1:
            circle = Turn.wrap(circle.value + Fraction(1, 2))
        elif choice == 2:
            circle = random_turn(rng, bound)
    return SkeletonPoint(tuple(coords), circle)
