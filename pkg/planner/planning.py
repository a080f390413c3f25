from abc import ABC, abstractmethod

from algebra.exterior import AlgebraSignature
from planner.motion_planner import PlannerPath, PlannerQuery, plan_product, plan_skeleton
from utils.exceptions import InvalidParameter


class MotionPlanner(ABC):

    # Classe astratta per un generico motion planner, così da avere più scalabilità e genericità possibile.
    # I metodi plan e domains sono astratti, così da obbligare le classi derivate a implementarli

    def __init__(self, sig: AlgebraSignature):
        self.sig = sig

    @abstractmethod
    def plan(self, query: PlannerQuery) -> PlannerPath:
        # Restituisce il percorso della regola locale che contiene la query.
        pass

    @abstractmethod
    def domains(self) -> range:
        # Indici dei domini locali usati dal planner.
        pass

    @property
    def rule_count(self) -> int:
        return len(self.domains())


class SkeletonPlanner(MotionPlanner):

    # Planner esplicito su M̄0: n regole, domini F_0, ..., F_{n-1}

    def plan(self, query: PlannerQuery) -> PlannerPath:
        return plan_skeleton(query, self.sig)

    def domains(self) -> range:
        return range(self.sig.n)


class ProductPlanner(MotionPlanner):

    # Planner su M0 = S^1 × M̄0: n+1 regole, domini 0, ..., n

    def plan(self, query: PlannerQuery) -> PlannerPath:
        return plan_product(query, self.sig)

    def domains(self) -> range:
        return range(self.sig.n + 1)


class Planning:
    # Classe che gestisce la creazione del planner e la pianificazione delle query.
    # Permette di astrarre il processo dal tipo di spazio (M̄0 oppure M0).

    MODES = ("skeleton", "product")

    def __init__(self, sig: AlgebraSignature, mode: str = "skeleton"):

        # :param sig: segnatura (n, r).
        # :param mode: 'skeleton' per M̄0, 'product' per M0 = S^1 × M̄0.

        if mode == "skeleton":
            self.planner = SkeletonPlanner(sig)
        elif mode == "product":
            self.planner = ProductPlanner(sig)
        else:
            raise InvalidParameter(f"Modalità di pianificazione non supportata: {mode!r}. Usare una tra {list(self.MODES)}")
        self.sig = sig
        self.mode = mode

    @property
    def is_product(self) -> bool:
        return self.mode == "product"

    def plan(self, query: PlannerQuery) -> PlannerPath:
        return self.planner.plan(query)

    def domains(self) -> range:
        return self.planner.domains()

    def get_planner(self) -> MotionPlanner:
        return self.planner
