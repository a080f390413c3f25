from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from skeleton.turn import Turn
from utils.exceptions import DegenerateArc, InvalidTime

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
_BELOW_HALF = float(np.nextafter(0.5, 0.0))


def tau(z: Turn) -> Fraction | float:
    """
    Funzione ausiliaria τ: S^1 -> [0, 1/2].

        τ(z) = 1/2 (1 - |z-1| / √2)   se |z-1| <= √2
        τ(z) = 0                      altrimenti

    Con θ = z in giri, |z-1| = 2 sin(π min(θ, 1-θ)), quindi il primo caso vale
    per θ ∈ [0, 1/4] ∪ [3/4, 1). Il valore è esatto (Fraction) quando è razionale:
    τ(1) = 1/2 e τ = 0 fuori dal primo caso e sul suo bordo.
    """
    theta = min(z.value, 1 - z.value)
    if theta == 0:
        return HALF
    if theta >= QUARTER:
        return Fraction(0)
    value = 0.5 * (1.0 - np.sqrt(2.0) * np.sin(np.pi * float(theta)))
    # Per θ != 0 vale τ < 1/2 anche quando il float arrotonda a 1/2 (θ sotto ~1e-16)
    return float(np.clip(value, 0.0, _BELOW_HALF))


def zeta(z: Turn, z_prime: Turn, s: Fraction | int | float) -> Turn | float:
    """
    Percorso ζ_{z,z'}: moto a velocità costante da z a z' in senso antiorario.
    Δ = (z' - z) mod 1 ∈ (0, 1); ζ(s) = (z + s·Δ) mod 1.

    Con s razionale il risultato è un Turn esatto, con s float è un giro numerico.
    """
    if z == z_prime:
        raise DegenerateArc(f"zeta richiede estremi distinti, ricevuto z = z' = {z}")
    if isinstance(s, float):
        if not 0.0 <= s <= 1.0:
            raise InvalidTime(f"il tempo locale deve stare in [0, 1], ricevuto {s}")
        delta = float((z_prime.value - z.value) % 1)
        return (float(z.value) + s * delta) % 1.0
    s = Fraction(s)
    if not 0 <= s <= 1:
        raise InvalidTime(f"il tempo locale deve stare in [0, 1], ricevuto {s}")
    delta = (z_prime.value - z.value) % 1
    return Turn.wrap(z.value + s * delta)


@dataclass(frozen=True)
class CircleRule:
    """
    Regola del planner a due regole sul fattore S^1 di M0:
    G0 (z' non antipodale a z): arco più corto a velocità costante;
    G1 (z' antipodale a z): mezzo giro in senso antiorario.
    """
    start: Turn
    end: Turn
    index: int
    delta: Fraction

    def at(self, t: Fraction) -> tuple[Turn | None, float]:
        """
        Valore al tempo t: (Turn esatto, float) agli estremi o per il percorso costante,
        (None, float) durante il moto.
        """
        if self.delta == 0 or t == 0:
            return self.start, float(self.start)
        if t == 1:
            return self.end, float(self.end)
        return None, float((self.start.value + t * self.delta) % 1)

    def to_json(self) -> dict:
        return {"rule": f"G{self.index}", "index": self.index, "delta": str(self.delta)}


def plan_circle(z: Turn, z_prime: Turn) -> CircleRule:
    if z_prime.value == (z.value + HALF) % 1:
        return CircleRule(start=z, end=z_prime, index=1, delta=HALF)
    # Spostamento con segno in (-1/2, 1/2): l'arco più corto
    delta = (z_prime.value - z.value + HALF) % 1 - HALF
    return CircleRule(start=z, end=z_prime, index=0, delta=delta)
