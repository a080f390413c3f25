from __future__ import annotations

from typing import Mapping

from algebra.exterior import (AlgebraElement, AlgebraSignature, ExteriorMonomial,
                              format_terms, mul_masks)
from utils.exceptions import InvalidGenerator

Pair = tuple[int, int]


class TensorElement:
    """
    Elemento di H*(M0) ⊗ H*(M0) a coefficienti interi.
    Le chiavi sono coppie di maschere (sinistra, destra); ogni lato rispetta la troncatura.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: AlgebraSignature,
                 terms: Mapping[tuple[int | ExteriorMonomial, int | ExteriorMonomial], int] | None = None):
        self.sig = sig
        clean: dict[Pair, int] = {}
        for (left, right), coeff in (terms or {}).items():
            u = left.mask if isinstance(left, ExteriorMonomial) else left
            v = right.mask if isinstance(right, ExteriorMonomial) else right
            for mask in (u, v):
                if not sig.admits(mask):
                    raise InvalidGenerator(f"il monomio {ExteriorMonomial(mask)} viola il troncamento di {sig}")
            value = clean.get((u, v), 0) + int(coeff)
            if value:
                clean[(u, v)] = value
            else:
                clean.pop((u, v), None)
        self._terms = clean

    @classmethod
    def _canonical(cls, sig: AlgebraSignature, terms: dict[Pair, int]) -> TensorElement:
        element = cls.__new__(cls)
        element.sig = sig
        element._terms = terms
        return element

    @classmethod
    def one(cls, sig: AlgebraSignature) -> TensorElement:
        return cls._canonical(sig, {(0, 0): 1})

    @classmethod
    def zero(cls, sig: AlgebraSignature) -> TensorElement:
        return cls._canonical(sig, {})

    @classmethod
    def pure(cls, left: AlgebraElement, right: AlgebraElement) -> TensorElement:
        """
        Il tensore puro left ⊗ right, esteso bilinearmente.
        """
        terms: dict[Pair, int] = {}
        for u, cu in left.raw_terms.items():
            for v, cv in right.raw_terms.items():
                terms[(u, v)] = cu * cv
        return cls._canonical(left.sig, terms)

    @property
    def terms(self) -> dict[tuple[ExteriorMonomial, ExteriorMonomial], int]:
        return {(ExteriorMonomial(u), ExteriorMonomial(v)): c for (u, v), c in self._terms.items()}

    @property
    def raw_terms(self) -> dict[Pair, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    @property
    def bidegrees(self) -> set[tuple[int, int]]:
        return {(u.bit_count(), v.bit_count()) for u, v in self._terms}

    @property
    def degree(self) -> int | None:
        # Grado totale, se l'elemento è omogeneo
        totals = {s + t for s, t in self.bidegrees}
        return totals.pop() if len(totals) == 1 else None

    def component(self, s: int, t: int) -> TensorElement:
        """
        Componente di bigrado (s, t), cioè la proiezione su H^s ⊗ H^t.
        """
        return TensorElement._canonical(self.sig, {
            (u, v): c for (u, v), c in self._terms.items()
            if u.bit_count() == s and v.bit_count() == t
        })

    def coefficients(self) -> set[int]:
        return set(self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self):
        return hash((self.sig, frozenset(self._terms.items())))

    def __add__(self, other: TensorElement) -> TensorElement:
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            value = terms.get(key, 0) + coeff
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return TensorElement._canonical(self.sig, terms)

    def __neg__(self) -> TensorElement:
        return TensorElement._canonical(self.sig, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TensorElement.zero(self.sig)
            return TensorElement._canonical(self.sig, {k: c * other for k, c in self._terms.items()})
        if isinstance(other, TensorElement):
            return multiply_tensor(self, other, self.sig)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __repr__(self):
        return f"TensorElement({self})"

    def __str__(self):
        items = sorted(self._terms.items(), key=lambda kv: (kv[0][0].bit_count(), kv[0][0], kv[0][1]))
        return format_terms(
            (f"{ExteriorMonomial(u)}⊗{ExteriorMonomial(v)}", c) for (u, v), c in items
        )


def multiply_tensor(x: TensorElement, y: TensorElement, sig: AlgebraSignature) -> TensorElement:
    """
    Prodotto nel quadrato tensoriale con la regola dei segni di Koszul:
    (u1 ⊗ v1)(u2 ⊗ v2) = (-1)^{|v1||u2|} u1u2 ⊗ v1v2
    """
    truncation = sig.truncation
    terms: dict[Pair, int] = {}
    for (u1, v1), c1 in x._terms.items():
        v1_odd = v1.bit_count() & 1
        for (u2, v2), c2 in y._terms.items():
            sign_u, u = mul_masks(u1, u2, truncation)
            if not sign_u:
                continue
            sign_v, v = mul_masks(v1, v2, truncation)
            if not sign_v:
                continue
            sign = sign_u * sign_v
            if v1_odd and u2.bit_count() & 1:
                sign = -sign
            key = (u, v)
            value = terms.get(key, 0) + sign * c1 * c2
            if value:
                terms[key] = value
            else:
                del terms[key]
    return TensorElement._canonical(sig, terms)


def bar_element(monomial: ExteriorMonomial, sig: AlgebraSignature) -> TensorElement:
    """
    Lo zero-divisore ā = 1 ⊗ a - a ⊗ 1 associato a un monomio di base a.
    """
    if not sig.admits(monomial.mask):
        raise InvalidGenerator(f"il monomio {monomial} non è un monomio di base per {sig}")
    mask = monomial.mask
    if mask == 0:
        return TensorElement.zero(sig)
    return TensorElement._canonical(sig, {(0, mask): 1, (mask, 0): -1})


def zero_divisor(i: int, sig: AlgebraSignature) -> TensorElement:
    """
    ē_i = 1 ⊗ e_i - e_i ⊗ 1, per i = 0, 1, ..., n-1.
    """
    if not isinstance(i, int) or not 0 <= i < sig.n:
        raise InvalidGenerator(f"indice di zero-divisore {i} fuori dall'intervallo 0..{sig.n - 1}")
    mask = 1 << i
    if not sig.admits(mask):
        # e_i è già zero in H*(M0) (caso r = 1)
        return TensorElement.zero(sig)
    return bar_element(ExteriorMonomial(mask), sig)


def apply_multiplication_map(x: TensorElement, sig: AlgebraSignature) -> AlgebraElement:
    """
    La moltiplicazione H*(M0) ⊗ H*(M0) -> H*(M0), u ⊗ v -> u v.
    Il nucleo è l'ideale degli zero-divisori.
    """
    truncation = sig.truncation
    terms: dict[int, int] = {}
    for (u, v), c in x._terms.items():
        sign, mask = mul_masks(u, v, truncation)
        if sign:
            value = terms.get(mask, 0) + sign * c
            if value:
                terms[mask] = value
            else:
                del terms[mask]
    return AlgebraElement._canonical(sig, terms)
