from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from utils.exceptions import InvalidGenerator, InvalidSignature


@dataclass(frozen=True)
class AlgebraSignature:
    """
    Segnatura (n, r) dell'algebra H*(M0) = E(1) ⊗ E(n-1)^{r-1}.

    :param n: numero di iperpiani, cioè di generatori e_0, ..., e_{n-1}.
    :param r: dimensione dello spazio ambiente. Ogni prodotto di r generatori
              tra e_1, ..., e_{n-1} si annulla.
    """
    n: int
    r: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.r, int):
            raise InvalidSignature(f"n e r devono essere interi, ricevuti n={self.n!r}, r={self.r!r}")
        if self.r < 1:
            raise InvalidSignature(f"r deve essere almeno 1, ricevuto r={self.r}")
        if self.r > self.n:
            raise InvalidSignature(f"segnatura non valida, r exceeds n (n={self.n}, r={self.r})")

    @property
    def truncation(self) -> int:
        # Grado massimo ammesso nel fattore E(n-1)
        return self.r - 1

    @property
    def top_degree(self) -> int:
        return self.r

    def admits(self, mask: int) -> bool:
        """
        True se la maschera di bit rappresenta un monomio non nullo dell'algebra.
        """
        return 0 <= mask < (1 << self.n) and (mask >> 1).bit_count() <= self.r - 1


def _indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def mul_masks(a: int, b: int, truncation: int) -> tuple[int, int]:
    """
    Prodotto esterno di due monomi codificati come maschere di bit.
    Restituisce (segno, maschera); segno 0 se il prodotto è nullo.
    """
    if a & b:
        return 0, 0
    union = a | b
    if (union >> 1).bit_count() > truncation:
        return 0, 0
    # Inversioni: coppie (i in a, j in b) con i > j
    inversions = 0
    rest = b
    while rest:
        low = rest & -rest
        j = low.bit_length() - 1
        inversions += (a >> (j + 1)).bit_count()
        rest ^= low
    return (-1 if inversions & 1 else 1), union


@dataclass(frozen=True, order=True)
class ExteriorMonomial:
    """
    Monomio e_I = e_{i1} ... e_{ik} con i1 < ... < ik, codificato come insieme di bit.
    e_0 è il generatore del fattore S^1.
    """
    mask: int = 0

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> ExteriorMonomial:
        mask = 0
        for i in indices:
            if i < 0:
                raise InvalidGenerator(f"l'indice del generatore deve essere non negativo, ricevuto {i}")
            if mask >> i & 1:
                raise InvalidGenerator(f"generatore e{i} ripetuto nel monomio")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def one(cls) -> ExteriorMonomial:
        return cls(0)

    @property
    def indices(self) -> tuple[int, ...]:
        return _indices(self.mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def __str__(self):
        if not self.mask:
            return "1"
        return "".join(f"e{i}" for i in self.indices)


def multiply_monomials(a: ExteriorMonomial, b: ExteriorMonomial,
                       sig: AlgebraSignature) -> tuple[int, ExteriorMonomial | None]:
    """
    Moltiplica due monomi canonici: (segno, monomio) oppure (0, None) se il prodotto è zero.
    """
    for m in (a, b):
        if not sig.admits(m.mask):
            raise InvalidGenerator(f"il monomio {m} non è canonico per {sig}")
    sign, mask = mul_masks(a.mask, b.mask, sig.truncation)
    if sign == 0:
        return 0, None
    return sign, ExteriorMonomial(mask)


def format_terms(items: Iterable[tuple[str, int]]) -> str:
    text = ""
    for label, coeff in items:
        magnitude = abs(coeff)
        body = label if magnitude == 1 else f"{magnitude}·{label}"
        if not text:
            text = ("-" if coeff < 0 else "") + body
        else:
            text += (" - " if coeff < 0 else " + ") + body
    return text or "0"


class AlgebraElement:
    """
    Elemento di H*(M0) a coefficienti interi, in forma sparsa canonica:
    dizionario maschera -> coefficiente non nullo.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: AlgebraSignature, terms: Mapping[int | ExteriorMonomial, int] | None = None):
        self.sig = sig
        clean = {}
        for key, coeff in (terms or {}).items():
            mask = key.mask if isinstance(key, ExteriorMonomial) else key
            if not sig.admits(mask):
                raise InvalidGenerator(f"il monomio {ExteriorMonomial(mask)} viola il troncamento di {sig}")
            value = clean.get(mask, 0) + int(coeff)
            if value:
                clean[mask] = value
            else:
                clean.pop(mask, None)
        self._terms = clean

    @classmethod
    def _canonical(cls, sig: AlgebraSignature, terms: dict[int, int]) -> AlgebraElement:
        # Costruttore interno: i termini sono già canonici
        element = cls.__new__(cls)
        element.sig = sig
        element._terms = terms
        return element

    @classmethod
    def one(cls, sig: AlgebraSignature) -> AlgebraElement:
        return cls._canonical(sig, {0: 1})

    @classmethod
    def zero(cls, sig: AlgebraSignature) -> AlgebraElement:
        return cls._canonical(sig, {})

    @classmethod
    def generator(cls, i: int, sig: AlgebraSignature) -> AlgebraElement:
        """
        Il generatore e_i; è zero quando la troncatura lo annulla (r = 1, i >= 1).
        """
        if not 0 <= i < sig.n:
            raise InvalidGenerator(f"indice del generatore {i} fuori dall'intervallo 0..{sig.n - 1}")
        mask = 1 << i
        return cls._canonical(sig, {mask: 1} if sig.admits(mask) else {})

    @property
    def terms(self) -> dict[ExteriorMonomial, int]:
        return {ExteriorMonomial(mask): coeff for mask, coeff in self._terms.items()}

    @property
    def raw_terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        """
        Grado se l'elemento è omogeneo (e non nullo), altrimenti None.
        """
        degrees = {mask.bit_count() for mask in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self):
        return hash((self.sig, frozenset(self._terms.items())))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        terms = dict(self._terms)
        for mask, coeff in other._terms.items():
            value = terms.get(mask, 0) + coeff
            if value:
                terms[mask] = value
            else:
                terms.pop(mask, None)
        return AlgebraElement._canonical(self.sig, terms)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._canonical(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return AlgebraElement.zero(self.sig)
            return AlgebraElement._canonical(self.sig, {m: c * other for m, c in self._terms.items()})
        if isinstance(other, AlgebraElement):
            return multiply_elements(self, other, self.sig)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        return format_terms((str(ExteriorMonomial(m)), c) for m, c in sorted(self._terms.items()))


def multiply_elements(x: AlgebraElement, y: AlgebraElement, sig: AlgebraSignature) -> AlgebraElement:
    """
    Estensione bilineare di multiply_monomials.
    """
    truncation = sig.truncation
    terms: dict[int, int] = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            sign, mask = mul_masks(a, b, truncation)
            if sign:
                value = terms.get(mask, 0) + sign * ca * cb
                if value:
                    terms[mask] = value
                else:
                    del terms[mask]
    return AlgebraElement._canonical(sig, terms)


def basis_monomials(sig: AlgebraSignature) -> list[ExteriorMonomial]:
    """
    Base monomiale di H*(M0), ordinata per grado e poi per indici.
    """
    basis = []
    for degree in range(sig.top_degree + 1):
        basis.extend(degree_basis(sig, degree))
    return basis


def degree_basis(sig: AlgebraSignature, degree: int) -> list[ExteriorMonomial]:
    """
    Base di H^degree(M0): monomi e_I e e_0 e_I con I ⊂ {1..n-1}, |I| <= r-1.
    In grado r restano solo i monomi e_0 e_I con |I| = r-1.
    """
    monomials = []
    base = range(1, sig.n)
    if degree <= sig.truncation:
        monomials.extend(ExteriorMonomial.from_indices(I) for I in combinations(base, degree))
    if 1 <= degree <= sig.truncation + 1:
        monomials.extend(ExteriorMonomial.from_indices((0,) + I) for I in combinations(base, degree - 1))
    return sorted(monomials, key=lambda m: m.indices)


def poincare_polynomial(sig: AlgebraSignature) -> list[int]:
    # (1 + t) * sum_{i <= r-1} C(n-1, i) t^i, come lista di coefficienti
    skeleton = [comb(sig.n - 1, i) for i in range(sig.r)]
    coefficients = [0] * (sig.r + 1)
    for i, b in enumerate(skeleton):
        coefficients[i] += b
        coefficients[i + 1] += b
    return coefficients
