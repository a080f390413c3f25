from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from algebra.exterior import AlgebraSignature
from evaluation.continuity import continuity_ratio, is_perturbable, perturb_query, pull_to_basepoint
from planner.motion_planner import PlannerQuery
from planner.planning import Planning
from skeleton.torus_skeleton import sample, sample_partner
from utils.exceptions import InvalidParameter, InvariantViolation
from utils.logger import get_logger
from utils.settings import (CONTINUITY_EPSILON, DEFAULT_STEPS, continuity_constant,
                            denominator_bound as default_denominator_bound)

logger = get_logger(__name__)

# Tentativi per trovare una query perturbabile prima di rinunciare al test di continuità
CONTINUITY_ATTEMPTS = 64


@dataclass
class SimulationReport:
    """
    Esito della verifica randomizzata del planner per una segnatura.
    """
    n: int
    r: int
    mode: str
    queries: int
    steps: int
    seed: int
    histogram: dict[int, int]
    endpoint_violations: int = 0
    membership_violations: int = 0
    partition_violations: int = 0
    continuity_violations: int = 0
    continuity_checked: int = 0
    max_continuity_ratio: float = 0.0
    continuity_bound: float = 0.0
    wall_time: float = 0.0
    offending: dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not (self.endpoint_violations or self.membership_violations
                    or self.partition_violations or self.continuity_violations)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "mode": self.mode,
            "queries": self.queries,
            "steps": self.steps,
            "seed": self.seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "endpoint_violations": self.endpoint_violations,
            "membership_violations": self.membership_violations,
            "partition_violations": self.partition_violations,
            "continuity_violations": self.continuity_violations,
            "continuity_checked": self.continuity_checked,
            "max_continuity_ratio": self.max_continuity_ratio,
            "continuity_bound": self.continuity_bound,
            "wall_time": round(self.wall_time, 3),
            "ok": self.ok,
            "offending": list(self.offending.values()),
        }

    def raise_for_violations(self):
        if not self.ok:
            first = next(iter(self.offending.values()), {})
            raise InvariantViolation(
                f"invarianti del planner violati per n={self.n}, r={self.r} ({self.mode}): "
                f"endpoint={self.endpoint_violations} membership={self.membership_violations} "
                f"partition={self.partition_violations} continuity={self.continuity_violations}",
                record=first)


@dataclass(frozen=True)
class _QueryTask:
    n: int
    r: int
    mode: str
    steps: int
    index: int
    seed_sequence: np.random.SeedSequence
    denominator_bound: int
    check_continuity: bool
    epsilon: Fraction
    continuity_bound: float


def draw_query(sig: AlgebraSignature, rng: np.random.Generator, product: bool,
               denominator_bound: int) -> PlannerQuery:
    """
    Query casuale: 1/8 diagonali, 3/8 con estremo "partner", 1/2 indipendenti.
    """
    source = sample(sig, rng, denominator_bound, with_circle=product)
    kind = int(rng.integers(0, 8))
    if kind == 0:
        target = source
    elif kind <= 3:
        target = sample_partner(source, sig, rng, denominator_bound)
    else:
        target = sample(sig, rng, denominator_bound, with_circle=product)
    return PlannerQuery(source, target)


def _continuity_base(task: _QueryTask, sig: AlgebraSignature, rng: np.random.Generator,
                     product: bool) -> PlannerQuery | None:
    # Query di partenza per il test di continuità: deve avere qualcosa da perturbare.
    # Le task di indice dispari avvicinano le coordinate al punto base.
    for _ in range(CONTINUITY_ATTEMPTS):
        query = draw_query(sig, rng, product, task.denominator_bound)
        if task.index % 2:
            query = pull_to_basepoint(query, rng, task.epsilon)
        if is_perturbable(query):
            return query
    return None


def check_continuity(task: _QueryTask, planning: Planning, rng: np.random.Generator) -> dict | None:
    """
    Pianifica una query e una sua perturbazione nello stesso dominio e confronta i percorsi.
    None se la segnatura non ammette query perturbabili (r = 1 senza fattore S^1).
    """
    base = _continuity_base(task, planning.sig, rng, planning.is_product)
    if base is None:
        return None
    path = planning.plan(base)
    perturbed = planning.plan(perturb_query(base, rng, task.epsilon))
    if perturbed.domain != path.domain or perturbed.agreement != path.agreement:
        return {"query": base.to_json(), "ratio": None, "violations": ["partition"]}
    ratio = continuity_ratio(path, perturbed, task.steps)
    violations = ["continuity"] if ratio is not None and ratio > task.continuity_bound else []
    return {"query": base.to_json(), "ratio": ratio, "violations": violations}


def check_query(task: _QueryTask) -> dict:
    """
    Verifica tutti gli invarianti su una query casuale. Funzione di modulo così da
    poter essere eseguita in un processo separato.
    """
    sig = AlgebraSignature(task.n, task.r)
    planning = Planning(sig, task.mode)
    rng = np.random.default_rng(task.seed_sequence)
    query = draw_query(sig, rng, planning.is_product, task.denominator_bound)
    path = planning.plan(query)
    violations: list[str] = []

    # Partizione: un solo dominio, coerente con J e con la regola del cerchio
    J = {j for j, (a, b) in enumerate(zip(query.source.base_coords, query.target.base_coords), start=1) if a == b}
    expected = len(J)
    if path.circle_rule is not None:
        antipodal = query.target.circle_coord.value == (query.source.circle_coord.value + Fraction(1, 2)) % 1
        expected += 1 if antipodal else 0
    if set(path.agreement.indices) != J or path.domain != expected or path.domain not in planning.domains():
        violations.append("partition")

    # Estremi esatti
    start, end = path.evaluate(0), path.evaluate(1)
    if not (start.is_exact and end.is_exact and start.as_point() == query.source and end.as_point() == query.target):
        violations.append("endpoint")

    # Almeno n-r coordinate esattamente nel punto base a ogni tempo campionato
    for t in path.sample_times(task.steps):
        if not path.evaluate(t).satisfies_membership(sig):
            violations.append("membership")
            break

    continuity = check_continuity(task, planning, rng) if task.check_continuity else None
    if continuity is not None:
        violations.extend(continuity["violations"])

    return {
        "index": task.index,
        "domain": path.domain,
        "violations": sorted(set(violations)),
        "ratio": None if continuity is None else continuity["ratio"],
        "query": query.to_json(),
        "continuity_query": None if continuity is None or not continuity["violations"] else continuity["query"],
    }


class Simulation:

    # Classe che gestisce la verifica randomizzata del planner su Q query casuali:
    # genera le query, controlla gli invarianti e aggrega i risultati.

    def __init__(self, sig: AlgebraSignature, mode: str = "skeleton", queries: int = 1000,
                 steps: int = DEFAULT_STEPS, seed: int = 0, denominator_bound: int | None = None,
                 continuity_queries: int = 100, epsilon: Fraction = CONTINUITY_EPSILON,
                 continuity_bound: float | None = None, workers: int = 1):

        # :param queries: numero di query casuali (>= 1).
        # :param steps: numero di intervalli della griglia dei tempi (>= 1).
        # :param continuity_queries: quante query (le prime) ricevono anche il test di continuità.
        # :param workers: processi paralleli; il risultato non dipende da questo valore.

        if queries < 1:
            raise InvalidParameter(f"queries deve essere almeno 1, ricevuto {queries}")
        if steps < 1:
            raise InvalidParameter(f"steps deve essere almeno 1, ricevuto {steps}")
        if workers < 1:
            raise InvalidParameter(f"workers deve essere almeno 1, ricevuto {workers}")
        self.planning = Planning(sig, mode)
        self.sig = sig
        self.mode = mode
        self.queries = queries
        self.steps = steps
        self.seed = seed
        self.denominator_bound = default_denominator_bound() if denominator_bound is None else denominator_bound
        self.continuity_queries = continuity_queries
        self.epsilon = epsilon
        self.continuity_bound = continuity_constant() if continuity_bound is None else continuity_bound
        self.workers = workers

    def tasks(self) -> list[_QueryTask]:
        children = np.random.SeedSequence(self.seed).spawn(self.queries)
        return [
            _QueryTask(n=self.sig.n, r=self.sig.r, mode=self.mode, steps=self.steps, index=i,
                       seed_sequence=child, denominator_bound=self.denominator_bound,
                       check_continuity=i < self.continuity_queries, epsilon=self.epsilon,
                       continuity_bound=self.continuity_bound)
            for i, child in enumerate(children)
        ]

    def run(self) -> SimulationReport:
        logger.info("simulazione n=%d r=%d modalità=%s: %d query, %d intervalli, seme %d",
                    self.sig.n, self.sig.r, self.mode, self.queries, self.steps, self.seed)
        started = time.perf_counter()
        tasks = self.tasks()
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(check_query, tasks, chunksize=max(1, len(tasks) // (4 * self.workers))))
        else:
            results = [check_query(task) for task in tasks]

        domains = np.array([result["domain"] for result in results], dtype=int)
        counts = np.bincount(domains, minlength=len(self.planning.domains()))
        report = SimulationReport(n=self.sig.n, r=self.sig.r, mode=self.mode, queries=self.queries,
                                  steps=self.steps, seed=self.seed,
                                  histogram={i: int(c) for i, c in enumerate(counts)},
                                  continuity_bound=self.continuity_bound)

        ratios = [result["ratio"] for result in results if result["ratio"] is not None]
        report.continuity_checked = len(ratios)
        report.max_continuity_ratio = float(np.max(ratios)) if ratios else 0.0

        for result in results:
            for kind in result["violations"]:
                setattr(report, f"{kind}_violations", getattr(report, f"{kind}_violations") + 1)
            if result["violations"]:
                key = json.dumps(result["query"], sort_keys=True)
                record = {"query": result["query"], "violations": result["violations"]}
                if result.get("continuity_query") is not None:
                    record["continuity_query"] = result["continuity_query"]
                report.offending[key] = record
                logger.error("violazione degli invarianti %s sulla query %s", result["violations"], key)

        report.wall_time = time.perf_counter() - started
        logger.info("simulazione completata in %.2fs: istogramma %s, rapporto di continuità massimo %.3f",
                    report.wall_time, report.histogram, report.max_continuity_ratio)
        return report
