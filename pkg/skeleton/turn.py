from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from utils.exceptions import InvalidTurn

# Solo interi o frazioni "p/q": niente virgola mobile in input
_TURN_SYNTAX = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


@dataclass(frozen=True, order=True)
class Turn:
    """
    Punto di S^1 espresso in giri: value ∈ [0, 1) rappresenta exp(2πi·value).
    value = 0 è il punto base 1 ∈ S^1.
    """
    value: Fraction = Fraction(0)

    def __post_init__(self):
        value = self.value
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise InvalidTurn(f"un giro deve essere un razionale esatto, ricevuto {value!r}")
        value = Fraction(value)
        if not 0 <= value < 1:
            raise InvalidTurn(f"un giro deve stare in [0, 1), ricevuto {value}")
        object.__setattr__(self, "value", value)

    @classmethod
    def parse(cls, text: str) -> Turn:
        """
        Legge un giro nella sintassi "p/q" (oppure "0").
        """
        if not isinstance(text, str) or not _TURN_SYNTAX.match(text):
            raise InvalidTurn(f"un giro si scrive come 'p/q' o come intero, ricevuto {text!r}")
        try:
            value = Fraction(text.replace(" ", ""))
        except ZeroDivisionError:
            raise InvalidTurn(f"denominatore nullo nel giro {text!r}") from None
        return cls(value)

    @classmethod
    def wrap(cls, value: Fraction | int) -> Turn:
        # Riduce un valore razionale qualsiasi modulo 1
        return cls(Fraction(value) % 1)

    @property
    def is_basepoint(self) -> bool:
        return self.value == 0

    def __float__(self):
        return float(self.value)

    def __str__(self):
        if self.value == 0:
            return "0"
        return f"{self.value.numerator}/{self.value.denominator}"

    def to_json(self) -> str:
        return str(self)


BASEPOINT = Turn(Fraction(0))


def circular_distance(a: float, b: float) -> float:
    """
    Distanza su S^1 misurata in giri, in [0, 1/2].
    """
    d = abs(float(a) - float(b)) % 1.0
    return min(d, 1.0 - d)
