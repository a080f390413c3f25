from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from algebra.exterior import AlgebraSignature, ExteriorMonomial
from algebra.tensor import TensorElement, multiply_tensor, zero_divisor
from utils.exceptions import CertificateFailure, InvalidGenerator
from utils.logger import get_logger

logger = get_logger(__name__)


def certificate_length(sig: AlgebraSignature) -> int:
    # k = min{n-1, 2r-2}: numero di fattori ē_i oltre a ē_0
    return min(sig.n - 1, 2 * sig.r - 2)


@dataclass(frozen=True)
class LowerBoundCertificate:
    """
    Certificato del limite inferiore: il prodotto π = ē_0 ∏_{i∈J} ē_i è non nullo,
    testimoniato dalla sua componente di bigrado (r, k+1-r).
    """
    sig: AlgebraSignature
    k: int
    J: tuple[int, ...]
    product: TensorElement = field(repr=False)
    component: TensorElement = field(repr=False)

    @property
    def factors(self) -> int:
        return self.k + 1

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.sig.r, self.k + 1 - self.sig.r

    @property
    def product_terms(self) -> int:
        return len(self.product)

    @property
    def component_terms(self) -> int:
        return len(self.component)

    @property
    def coefficients(self) -> set[int]:
        return self.component.coefficients()

    @property
    def sample_term(self) -> str:
        # Primo termine della componente in ordine canonico, es. "-e0e1⊗e2"
        (u, v), c = min(self.component.raw_terms.items())
        sign = "-" if c < 0 else ""
        magnitude = "" if abs(c) == 1 else f"{abs(c)}·"
        return f"{sign}{magnitude}{ExteriorMonomial(u)}⊗{ExteriorMonomial(v)}"

    def to_dict(self) -> dict:
        return {
            "n": self.sig.n,
            "r": self.sig.r,
            "k": self.k,
            "J": list(self.J),
            "factors": self.factors,
            "product_terms": self.product_terms,
            "bidegree": list(self.bidegree),
            "component_terms": self.component_terms,
            "coefficients": sorted(self.coefficients),
            "sample_term": self.sample_term,
            "component": str(self.component),
        }


def _check_subset(J: Iterable[int], sig: AlgebraSignature, k: int) -> tuple[int, ...]:
    chosen = tuple(sorted(set(J)))
    if len(chosen) != len(tuple(J)):
        raise InvalidGenerator("J contiene indici ripetuti")
    if any(not 1 <= j <= sig.n - 1 for j in chosen):
        raise InvalidGenerator(f"J deve essere un sottoinsieme di 1..{sig.n - 1}, ricevuto {list(chosen)}")
    if len(chosen) != k:
        raise InvalidGenerator(f"J deve avere esattamente k = min(n-1, 2r-2) = {k} elementi, ricevuti {len(chosen)}")
    return chosen


def lower_bound_certificate(sig: AlgebraSignature, J: Iterable[int] | None = None) -> LowerBoundCertificate:
    """
    Calcola π = ē_0 ∏_{i∈J} ē_i e verifica che non sia nullo estraendo la
    componente π_{r, k+1-r} = Σ ± e_0 e_I ⊗ e_{J∖I}, con I ⊂ J, |I| = r-1.

    Di default J = {1, ..., k}.
    """
    k = certificate_length(sig)
    chosen = tuple(range(1, k + 1)) if J is None else _check_subset(list(J), sig, k)

    product = zero_divisor(0, sig)
    for i in chosen:
        product = multiply_tensor(product, zero_divisor(i, sig), sig)

    s, t = sig.r, k + 1 - sig.r
    component = product.component(s, t)
    if product.is_zero or component.is_zero:
        raise CertificateFailure(f"il prodotto di zero-divisori si annulla per {sig} con J={list(chosen)}")

    certificate = LowerBoundCertificate(sig=sig, k=k, J=chosen, product=product, component=component)
    logger.info("certificato n=%d r=%d: k=%d, %d termini in pi, %d nel bigrado (%d, %d)",
                sig.n, sig.r, k, certificate.product_terms, certificate.component_terms, s, t)
    return certificate
