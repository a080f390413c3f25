from __future__ import annotations

from dataclasses import dataclass

from algebra.exterior import AlgebraSignature, ExteriorMonomial, basis_monomials
from algebra.tensor import TensorElement, bar_element, multiply_tensor, zero_divisor
from utils.exceptions import InstanceTooLarge, InvalidParameter
from utils.logger import get_logger
from utils.settings import brute_force_cap

logger = get_logger(__name__)


def predicted_zdcl(sig: AlgebraSignature) -> int:
    # Valore atteso min{n, 2r-1}, cioè TC(M) - 1
    return min(sig.n, 2 * sig.r - 1)


def _longest_product(factors: list[TensorElement], labels: list[str], degrees: list[int],
                     max_len: int, max_degree: int, repeat: bool) -> tuple[int, list[str]]:
    """
    Ricerca in profondità del prodotto non nullo più lungo tra i fattori dati.
    I fattori sono omogenei, quindi l'ordine cambia solo il segno: basta visitare
    sequenze di indici crescenti (non decrescenti se repeat è True).
    """
    best = 0
    witness: list[str] = []
    path: list[int] = []

    def extend(product: TensorElement, start: int, degree: int):
        nonlocal best, witness
        length = len(path)
        if length > best:
            best = length
            witness = [labels[i] for i in path]
        if length == max_len:
            return
        # Ogni fattore ha grado >= 1: il budget di grado limita la lunghezza raggiungibile
        reachable = min(max_len, length + (max_degree - degree))
        if not repeat:
            reachable = min(reachable, length + len(factors) - start)
        if reachable <= best:
            return
        for i in range(start, len(factors)):
            if degree + degrees[i] > max_degree:
                continue
            following = multiply_tensor(product, factors[i], product.sig)
            if following.is_zero:
                continue
            path.append(i)
            extend(following, i if repeat else i + 1, degree + degrees[i])
            path.pop()

    sig = factors[0].sig if factors else None
    if sig is not None:
        extend(TensorElement.one(sig), 0, 0)
    return best, witness


def zdcl_degree_one(sig: AlgebraSignature, max_len: int | None = None) -> int:
    """
    Lunghezza del prodotto non nullo più lungo di zero-divisori distinti ē_0, ..., ē_{n-1}.
    Un fattore ripetuto annulla il prodotto (ē_i² = 0), quindi bastano fattori distinti.
    """
    return degree_one_search(sig, max_len)[0]


def degree_one_search(sig: AlgebraSignature, max_len: int | None = None) -> tuple[int, list[str]]:
    if max_len is None:
        max_len = sig.n
    if max_len < 1:
        raise InvalidParameter(f"max_len deve essere almeno 1, ricevuto {max_len}")
    factors = [zero_divisor(i, sig) for i in range(sig.n)]
    labels = [f"ē{i}" for i in range(sig.n)]
    usable = [i for i, f in enumerate(factors) if not f.is_zero]
    return _longest_product([factors[i] for i in usable], [labels[i] for i in usable],
                            [1] * len(usable), max_len, 2 * sig.top_degree, repeat=False)


def brute_force_family(sig: AlgebraSignature) -> list[tuple[str, TensorElement]]:
    """
    Famiglia generatrice usata dalla ricerca esaustiva: ā = 1 ⊗ a - a ⊗ 1 per ogni
    monomio di base a ≠ 1 (include gli ē_i).
    """
    return [(f"bar({a})", bar_element(a, sig)) for a in basis_monomials(sig) if a != ExteriorMonomial.one()]


def brute_force_search(sig: AlgebraSignature, cap: int | None = None) -> tuple[int, list[str]]:
    cap = brute_force_cap() if cap is None else cap
    if sig.n > cap:
        raise InstanceTooLarge(f"la ricerca esaustiva (--brute) è limitata a n <= {cap}, ricevuto n={sig.n}")
    family = brute_force_family(sig)
    labels = [label for label, _ in family]
    factors = [element for _, element in family]
    degrees = [element.degree for element in factors]
    max_degree = 2 * sig.top_degree
    logger.debug("zdcl esaustiva n=%d r=%d su %d elementi generatori", sig.n, sig.r, len(factors))
    return _longest_product(factors, labels, degrees, max_degree, max_degree, repeat=True)


def zdcl_brute_force(sig: AlgebraSignature, cap: int | None = None) -> int:
    """
    Cup-length sulla famiglia {ā} con ripetizioni, limitata dal grado totale 2r.
    È un limite inferiore euristico della vera zero-divisor cup-length.
    """
    return brute_force_search(sig, cap)[0]


@dataclass(frozen=True)
class ZdclReport:
    sig: AlgebraSignature
    degree_one: int
    degree_one_witness: tuple[str, ...]
    tc: int
    brute_force: int | None = None
    brute_force_witness: tuple[str, ...] = ()

    @property
    def predicted(self) -> int:
        return predicted_zdcl(self.sig)

    @property
    def zdcl(self) -> int:
        return self.brute_force if self.brute_force is not None else self.degree_one

    @property
    def status(self) -> str:
        return "consistent" if self.zdcl + 1 == self.tc else "inconsistent"

    def to_dict(self) -> dict:
        return {
            "n": self.sig.n,
            "r": self.sig.r,
            "zdcl_degree_one": self.degree_one,
            "degree_one_witness": list(self.degree_one_witness),
            "zdcl_brute_force": self.brute_force,
            "brute_force_witness": list(self.brute_force_witness),
            "min_n_2r_minus_1": self.predicted,
            "tc": self.tc,
            "conjecture": self.status,
        }


def search_zdcl(sig: AlgebraSignature, tc: int, brute: bool = False, cap: int | None = None) -> ZdclReport:
    degree_one, witness = degree_one_search(sig)
    brute_value, brute_witness = (None, [])
    if brute:
        brute_value, brute_witness = brute_force_search(sig, cap)
    return ZdclReport(sig=sig, degree_one=degree_one, degree_one_witness=tuple(witness), tc=tc,
                      brute_force=brute_value, brute_force_witness=tuple(brute_witness))
