from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from algebra.exterior import AlgebraSignature
from planner.circle_rules import CircleRule, plan_circle, tau
from skeleton.torus_skeleton import SkeletonPoint, membership
from skeleton.turn import Turn
from utils.exceptions import InvalidCoordinates, InvalidEndpoint, InvalidParameter, InvalidTime


@dataclass(frozen=True)
class PlannerQuery:
    """
    Coppia ordinata di punti (u, u') dello scheletro, entrambi in M̄0 o entrambi in M0.
    """
    source: SkeletonPoint
    target: SkeletonPoint

    @property
    def is_product(self) -> bool:
        return self.source.is_product

    def to_json(self) -> dict:
        return {"from": self.source.to_json(), "to": self.target.to_json()}


@dataclass(frozen=True)
class AgreementSet:
    """
    J = {j : u_j = u'_j}, con indici 1-based j = 1, ..., n-1.
    """
    indices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.indices)

    def __contains__(self, j: int) -> bool:
        return j in self.indices

    def to_json(self) -> list[int]:
        return sorted(self.indices)


@dataclass(frozen=True)
class CoordinateValue:
    """
    Valore di una coordinata lungo il percorso: esatto nelle fasi di sosta,
    solo numerico (approx) durante il moto.
    """
    exact: Turn | None
    approx: float

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def is_basepoint(self) -> bool:
        return self.exact is not None and self.exact.is_basepoint

    def to_json(self):
        if self.exact is not None:
            return self.exact.to_json()
        return {"approx": self.approx}

    @classmethod
    def of(cls, turn: Turn) -> CoordinateValue:
        return cls(turn, float(turn))


@dataclass(frozen=True)
class ConstantRule:
    value: Turn

    def at(self, t: Fraction) -> CoordinateValue:
        return CoordinateValue.of(self.value)

    def to_json(self) -> dict:
        return {"constant": self.value.to_json()}


@dataclass(frozen=True)
class MovingRule:
    """
    Regola a tre fasi per j ∉ J:
      u_j                                           se 0 <= t < τ(u_j)
      ζ_{u_j,u'_j}((t - τ(u_j)) / (1 - τ(u_j) - τ(u'_j)))   se τ(u_j) <= t <= 1 - τ(u'_j)
      u'_j                                          se 1 - τ(u'_j) < t <= 1
    I tempi di fase sono Fraction esatte (i τ irrazionali sono convertiti esattamente dal float).
    """
    start: Turn
    end: Turn
    wait_start: Fraction
    wait_end: Fraction
    delta: Fraction
    _numeric: tuple[float, float, float, float] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        duration = self.wait_end - self.wait_start
        if duration <= 0:
            raise InvalidEndpoint(f"fase di moto vuota per {self.start} -> {self.end}")
        object.__setattr__(self, "_numeric", (float(self.start), float(self.wait_start),
                                              float(duration), float(self.delta)))

    def at(self, t: Fraction) -> CoordinateValue:
        if t < self.wait_start:
            return CoordinateValue.of(self.start)
        if t > self.wait_end:
            return CoordinateValue.of(self.end)
        # Ai bordi della fase centrale le due formule coincidono: valore esatto
        if t == self.wait_start:
            return CoordinateValue.of(self.start)
        if t == self.wait_end:
            return CoordinateValue.of(self.end)
        start, wait_start, duration, delta = self._numeric
        s = (float(t) - wait_start) / duration
        return CoordinateValue(None, (start + s * delta) % 1.0)

    def to_json(self) -> dict:
        return {"wait_start": str(self.wait_start), "wait_end": str(self.wait_end),
                "ccw_delta": str(self.delta)}


CoordinateRule = Union[ConstantRule, MovingRule]


@dataclass(frozen=True)
class EvaluatedPoint:
    t: Fraction
    coords: tuple[CoordinateValue, ...]
    circle: CoordinateValue | None = None

    @property
    def zero_count(self) -> int:
        # Solo le coordinate esattamente uguali al punto base contano
        return sum(1 for c in self.coords if c.is_basepoint)

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.coords) and (self.circle is None or self.circle.is_exact)

    def satisfies_membership(self, sig: AlgebraSignature) -> bool:
        return self.zero_count >= sig.n - sig.r

    def as_point(self) -> SkeletonPoint:
        """
        Il punto esatto, disponibile solo se tutte le coordinate sono esatte.
        """
        if not self.is_exact:
            raise InvalidTime(f"il punto a t={self.t} ha coordinate non esatte")
        return SkeletonPoint(tuple(c.exact for c in self.coords),
                             None if self.circle is None else self.circle.exact)

    def to_json(self) -> dict:
        record = {"t": _fraction_text(self.t), "coords": [c.to_json() for c in self.coords]}
        if self.circle is not None:
            record["circle"] = self.circle.to_json()
        return record


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class PlannerPath:
    """
    Percorso s_J (ed eventualmente il fattore S^1) per una query.
    domain è l'indice del dominio locale: i = |J| su M̄0, m = i + g su M0.
    """
    query: PlannerQuery
    agreement: AgreementSet
    skeleton_domain: int
    rules: tuple[CoordinateRule, ...]
    circle_rule: CircleRule | None = None

    @property
    def mode(self) -> str:
        return "product" if self.circle_rule is not None else "skeleton"

    @property
    def domain(self) -> int:
        if self.circle_rule is None:
            return self.skeleton_domain
        return self.skeleton_domain + self.circle_rule.index

    def evaluate(self, t: Fraction | int) -> EvaluatedPoint:
        return evaluate(self, t)

    def phase_boundaries(self) -> list[Fraction]:
        times = set()
        for rule in self.rules:
            if isinstance(rule, MovingRule):
                times.add(rule.wait_start)
                times.add(rule.wait_end)
        return sorted(times)

    def sample_times(self, steps: int) -> list[Fraction]:
        """
        Griglia {k/steps : k = 0..steps} più tutti i bordi di fase.
        """
        if steps < 1:
            raise InvalidParameter(f"steps deve essere almeno 1, ricevuto {steps}")
        times = {Fraction(k, steps) for k in range(steps + 1)}
        times.update(self.phase_boundaries())
        return sorted(times)

    def to_json(self) -> dict:
        record = {
            "mode": self.mode,
            "domain": self.domain,
            "agreement": self.agreement.to_json(),
            "rules": [rule.to_json() for rule in self.rules],
        }
        if self.circle_rule is not None:
            record["circle_rule"] = self.circle_rule.to_json()
        return record


def _check_query(q: PlannerQuery, sig: AlgebraSignature, require_membership: bool = True):
    if q.source.is_product != q.target.is_product:
        raise InvalidEndpoint("la coordinata del cerchio va data su entrambi gli estremi o su nessuno")
    for name, point in (("from", q.source), ("to", q.target)):
        try:
            result = membership(point, sig)
        except InvalidCoordinates as e:
            raise InvalidEndpoint(f"estremo {name}: {e}") from None
        if require_membership and not result.is_member:
            raise InvalidEndpoint(
                f"l'estremo {name} {point} non appartiene allo scheletro: il supporto {sorted(result.support)} "
                f"ha più di r-1 = {sig.r - 1} coordinate")


def classify(q: PlannerQuery, sig: AlgebraSignature) -> tuple[AgreementSet, int]:
    """
    Dominio locale della query: J per uguaglianza esatta delle coordinate, i = |J|.
    """
    _check_query(q, sig, require_membership=False)
    J = frozenset(j for j, (a, b) in enumerate(zip(q.source.base_coords, q.target.base_coords), start=1)
                  if a == b)
    return AgreementSet(J), len(J)


def _skeleton_rules(q: PlannerQuery, agreement: AgreementSet) -> tuple[CoordinateRule, ...]:
    rules = []
    for j, (u, v) in enumerate(zip(q.source.base_coords, q.target.base_coords), start=1):
        if j in agreement:
            rules.append(ConstantRule(u))
        else:
            rules.append(MovingRule(start=u, end=v,
                                    wait_start=Fraction(tau(u)),
                                    wait_end=1 - Fraction(tau(v)),
                                    delta=(v.value - u.value) % 1))
    return tuple(rules)


def plan_skeleton(q: PlannerQuery, sig: AlgebraSignature) -> PlannerPath:
    """
    Planner su M̄0 con n regole (domini F_0, ..., F_{n-1}).
    """
    if q.is_product or q.target.is_product:
        raise InvalidEndpoint("il planner sullo scheletro accetta punti di M̄0 (senza coordinata del cerchio); usare plan_product")
    _check_query(q, sig)
    agreement, i = classify(q, sig)
    return PlannerPath(query=q, agreement=agreement, skeleton_domain=i, rules=_skeleton_rules(q, agreement))


def plan_product(q: PlannerQuery, sig: AlgebraSignature) -> PlannerPath:
    """
    Planner su M0 = S^1 × M̄0 con n+1 regole: dominio combinato m = i + g,
    dove g ∈ {0, 1} è la regola del planner sul cerchio.
    """
    if q.source.circle_coord is None or q.target.circle_coord is None:
        raise InvalidEndpoint("il planner prodotto richiede la coordinata del cerchio su entrambi gli estremi")
    _check_query(q, sig)
    agreement, i = classify(q, sig)
    return PlannerPath(query=q, agreement=agreement, skeleton_domain=i, rules=_skeleton_rules(q, agreement),
                       circle_rule=plan_circle(q.source.circle_coord, q.target.circle_coord))


def evaluate(path: PlannerPath, t: Fraction | int) -> EvaluatedPoint:
    """
    Valuta il percorso al tempo razionale t ∈ [0, 1].
    """
    if isinstance(t, bool) or not isinstance(t, (int, Fraction)):
        raise InvalidTime(f"il tempo deve essere un razionale esatto, ricevuto {t!r}")
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise InvalidTime(f"il tempo deve stare in [0, 1], ricevuto {t}")
    coords = tuple(rule.at(t) for rule in path.rules)
    circle = None
    if path.circle_rule is not None:
        exact, approx = path.circle_rule.at(t)
        circle = CoordinateValue(exact, approx)
    return EvaluatedPoint(t=t, coords=coords, circle=circle)
