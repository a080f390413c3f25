import json
import logging
import sys

from algebra.certificate import lower_bound_certificate
from algebra.cup_length import search_zdcl
from algebra.exterior import AlgebraSignature
from bounds.tc_bounds import TABLE_COLUMNS, bounds_table, compute_bounds
from cli.parser import build_parser
from evaluation.simulation import Simulation
from evaluation.visualization import plot_domain_histogram, plot_path
from planner.motion_planner import PlannerQuery
from planner.planning import Planning
from skeleton.torus_skeleton import SkeletonPoint
from utils.exceptions import InvalidCoordinates, InvalidParameter
from utils.logger import configure_logging, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def cmd_tc(args) -> int:
    if args.grid is not None:
        if args.n is not None:
            raise InvalidParameter("indicare n r oppure --grid, non entrambi")
        signatures = args.grid
    else:
        if args.n is None or args.r is None:
            raise InvalidParameter("tc richiede n e r, oppure --grid")
        AlgebraSignature(args.n, args.r)
        signatures = [(args.n, args.r)]

    table = bounds_table(signatures)
    if args.json:
        print(table.to_json(orient="records", indent=2))
    elif args.csv == "-":
        print(table[TABLE_COLUMNS].to_csv(index=False), end="")
    elif args.csv:
        table[TABLE_COLUMNS].to_csv(args.csv, index=False)
        print(f"Tabella salvata in {args.csv} ({len(table)} righe)")
    else:
        print(table.to_string(index=False))
    return EXIT_OK


def cmd_verify_lower_bound(args) -> int:
    sig = AlgebraSignature(args.n, args.r)
    certificate = lower_bound_certificate(sig, args.J)
    if args.json:
        print(json.dumps(certificate.to_dict(), indent=2, ensure_ascii=False))
        return EXIT_OK

    s, t = certificate.bidegree
    print(f"n={sig.n} r={sig.r}: k={certificate.k}, J={list(certificate.J)}, {certificate.factors} fattori")
    print(f"termini del prodotto: {certificate.product_terms}")
    print(f"termini della componente ({s}, {t}): {certificate.component_terms}")
    print(f"coefficienti: {sorted(certificate.coefficients)}")
    print(f"termine di esempio: {certificate.sample_term}")
    print(f"limite inferiore: TC(M) >= {certificate.factors + 1}")
    return EXIT_OK


def _endpoint(turns, product: bool, name: str) -> SkeletonPoint:
    # In modalità prodotto la prima coordinata è quella del cerchio
    if not product:
        return SkeletonPoint(turns)
    if not turns:
        raise InvalidCoordinates(f"in modalità prodotto --{name} richiede come prima la coordinata del cerchio")
    return SkeletonPoint(turns[1:], turns[0])


def cmd_plan(args) -> int:
    sig = AlgebraSignature(args.n, args.r)
    planning = Planning(sig, "product" if args.product else "skeleton")
    query = PlannerQuery(_endpoint(args.source, args.product, "from"),
                         _endpoint(args.target, args.product, "to"))
    path = planning.plan(query)

    document = {
        "n": sig.n,
        "r": sig.r,
        "mode": path.mode,
        "domain": path.domain,
        "agreement": path.agreement.to_json(),
        "samples": [path.evaluate(t).to_json() for t in path.sample_times(args.steps)],
    }
    print(json.dumps(document, indent=2))
    if args.plot:
        plot_path(path, args.steps, args.plot)
        logger.info("grafico del percorso salvato in %s", args.plot)
    return EXIT_OK


def cmd_simulate(args) -> int:
    sig = AlgebraSignature(args.n, args.r)
    simulation = Simulation(sig, mode="product" if args.product else "skeleton", queries=args.queries,
                            steps=args.steps, seed=args.seed, workers=args.workers)
    report = simulation.run()
    print(json.dumps(report.to_dict(), indent=2))
    if args.plot:
        plot_domain_histogram(report, args.plot)
        logger.info("istogramma salvato in %s", args.plot)
    report.raise_for_violations()
    return EXIT_OK


def cmd_search_zdcl(args) -> int:
    sig = AlgebraSignature(args.n, args.r)
    report = search_zdcl(sig, compute_bounds(sig.n, sig.r).tc, brute=args.brute)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
        return EXIT_OK

    print(f"n={sig.n} r={sig.r}")
    print(f"zdcl (grado uno): {report.degree_one}  [{' '.join(report.degree_one_witness)}]")
    if report.brute_force is not None:
        print(f"zdcl (ricerca esaustiva): {report.brute_force}  [{' '.join(report.brute_force_witness)}]")
    print(f"min{{n, 2r-1}}: {report.predicted}")
    print(f"tc: {report.tc}")
    print(f"zdcl + 1 = tc: {report.status}")
    return EXIT_OK


COMMANDS = {
    "tc": cmd_tc,
    "verify-lower-bound": cmd_verify_lower_bound,
    "plan": cmd_plan,
    "simulate": cmd_simulate,
    "search-zdcl": cmd_search_zdcl,
}


def run(argv=None) -> int:
    """
    Esegue un sottocomando e restituisce il codice di uscita:
    0 successo, 1 verifica matematica fallita, 2 errore di input.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        configure_logging(logging.DEBUG if args.debug else logging.INFO if args.verbose else None)
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as e:
        print(f"errore: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as e:
        diagnostic = {"error": type(e).__name__, "message": str(e), "record": getattr(e, "record", None)}
        print(json.dumps(diagnostic, indent=2), file=sys.stderr)
        return EXIT_CHECK_FAILED
