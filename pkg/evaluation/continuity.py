from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np

from planner.circle_rules import HALF
from planner.motion_planner import PlannerPath, PlannerQuery
from skeleton.torus_skeleton import SkeletonPoint
from skeleton.turn import BASEPOINT, Turn, circular_distance

# Passo della griglia delle perturbazioni: δ = ε·k/PERTURBATION_STEPS
PERTURBATION_STEPS = 1000


def query_distance(a: PlannerQuery, b: PlannerQuery) -> float:
    """
    Distanza nella metrica del massimo (in giri) tra due query.
    """
    pairs = list(zip(a.source.base_coords, b.source.base_coords)) + \
        list(zip(a.target.base_coords, b.target.base_coords))
    for x, y in ((a.source.circle_coord, b.source.circle_coord), (a.target.circle_coord, b.target.circle_coord)):
        if x is not None and y is not None:
            pairs.append((x, y))
    return max((circular_distance(float(x), float(y)) for x, y in pairs), default=0.0)


def path_distance(a: PlannerPath, b: PlannerPath, times: Iterable[Fraction]) -> float:
    """
    Distanza massima tra i due percorsi sui tempi dati, coordinata per coordinata.
    """
    worst = 0.0
    for t in times:
        pa, pb = a.evaluate(t), b.evaluate(t)
        values_a = np.array([c.approx for c in pa.coords] + ([pa.circle.approx] if pa.circle else []))
        values_b = np.array([c.approx for c in pb.coords] + ([pb.circle.approx] if pb.circle else []))
        if values_a.size:
            d = np.abs(values_a - values_b) % 1.0
            worst = max(worst, float(np.max(np.minimum(d, 1.0 - d))))
    return worst


def _shift(turn: Turn, delta: Fraction) -> Turn:
    return Turn.wrap(turn.value + delta)


def _draw_shift(rng: np.random.Generator, epsilon: Fraction) -> Fraction:
    # δ = ±ε·k/PERTURBATION_STEPS con k >= 1: ogni spostamento è non nullo
    k = int(rng.integers(1, PERTURBATION_STEPS + 1))
    sign = 1 if rng.integers(0, 2) else -1
    return epsilon * Fraction(sign * k, PERTURBATION_STEPS)


def _nudge(turn: Turn, rng: np.random.Generator, epsilon: Fraction, avoid: tuple[Turn, ...]) -> Turn:
    # Ogni spostamento vietato esclude un solo valore della griglia: il ciclo termina subito
    while True:
        moved = _shift(turn, _draw_shift(rng, epsilon))
        if moved not in avoid:
            return moved


def is_perturbable(q: PlannerQuery) -> bool:
    """
    True se la query ha almeno una coordinata che può muoversi restando nel dominio:
    una coordinata non nulla dello scheletro oppure il fattore S^1.
    """
    return bool(q.source.support or q.target.support or q.is_product)


def perturb_query(q: PlannerQuery, rng: np.random.Generator, epsilon: Fraction) -> PlannerQuery:
    """
    Perturba la query restando nello stesso dominio F_J e spostando ogni coordinata mobile
    di un passo non nullo di al più ε. Le coordinate nulle restano nulle, quelle non nulle
    non si annullano ma possono attraversare il punto base; per j ∈ J lo stesso spostamento
    si applica a entrambi gli estremi, per j ∉ J gli estremi restano distinti.
    Sul fattore S^1 la regola del cerchio non cambia: G1 sposta i due estremi insieme
    (restano antipodali), G0 li sposta in modo indipendente senza renderli antipodali.
    """
    source = list(q.source.base_coords)
    target = list(q.target.base_coords)
    for j, (u, v) in enumerate(zip(q.source.base_coords, q.target.base_coords)):
        if u == v:
            if not u.is_basepoint:
                source[j] = target[j] = _nudge(u, rng, epsilon, (BASEPOINT,))
            continue
        if not u.is_basepoint:
            source[j] = _nudge(u, rng, epsilon, (BASEPOINT, v))
        if not v.is_basepoint:
            target[j] = _nudge(v, rng, epsilon, (BASEPOINT, source[j]))

    circle_from, circle_to = q.source.circle_coord, q.target.circle_coord
    if circle_from is not None:
        if circle_to.value == (circle_from.value + HALF) % 1:
            delta = _draw_shift(rng, epsilon)
            circle_from, circle_to = _shift(circle_from, delta), _shift(circle_to, delta)
        else:
            circle_from = _nudge(circle_from, rng, epsilon, (Turn.wrap(circle_to.value + HALF),))
            circle_to = _nudge(circle_to, rng, epsilon, (Turn.wrap(circle_from.value + HALF),))

    return PlannerQuery(SkeletonPoint(tuple(source), circle_from),
                        SkeletonPoint(tuple(target), circle_to))


def pull_to_basepoint(q: PlannerQuery, rng: np.random.Generator, epsilon: Fraction) -> PlannerQuery:
    """
    Avvicina al punto base, entro ε e da entrambi i lati, le coordinate che possono
    farlo senza cambiare dominio: per j ∈ J entrambi gli estremi (stesso valore), per
    j ∉ J uno solo dei due estremi, scelto a caso, quando entrambi sono non nulli.
    L'altro estremo resta lontano dal punto base, così la fase di moto non degenera.
    Le perturbazioni successive attraversano spesso il punto base.
    """
    def near_basepoint() -> Turn:
        k = int(rng.integers(1, PERTURBATION_STEPS // 2 + 1))
        sign = 1 if rng.integers(0, 2) else -1
        return Turn.wrap(epsilon * Fraction(sign * k, PERTURBATION_STEPS))

    source = list(q.source.base_coords)
    target = list(q.target.base_coords)
    for j, (u, v) in enumerate(zip(q.source.base_coords, q.target.base_coords)):
        if u.is_basepoint or v.is_basepoint:
            continue
        if u == v:
            source[j] = target[j] = near_basepoint()
            continue
        w = near_basepoint()
        if rng.integers(0, 2):
            if w != v:
                source[j] = w
        elif w != u:
            target[j] = w
    return PlannerQuery(SkeletonPoint(tuple(source), q.source.circle_coord),
                        SkeletonPoint(tuple(target), q.target.circle_coord))


def continuity_ratio(path: PlannerPath, perturbed: PlannerPath, steps: int) -> float | None:
    """
    Rapporto tra la distanza dei percorsi e la distanza delle query; None se le query coincidono.
    """
    distance = query_distance(path.query, perturbed.query)
    if distance == 0.0:
        return None
    times = set(path.sample_times(steps)) | set(perturbed.sample_times(steps))
    return path_distance(path, perturbed, sorted(times)) / distance
