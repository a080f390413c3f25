import argparse

from utils.input_parsing import get_valid_int, parse_grid, parse_index_set, parse_turn_list
from utils.settings import DEFAULT_QUERIES, DEFAULT_SEED, DEFAULT_STEPS


def _argument_type(convert, name: str):
    # argparse mostra solo "invalid <tipo> value": riportiamo il messaggio della conversione
    def parse(text: str):
        try:
            return convert(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e)) from None
    parse.__name__ = name
    return parse


positive_int = _argument_type(get_valid_int, "positive integer")
non_negative_int = _argument_type(lambda text: get_valid_int(text, min_value=0), "non-negative integer")
turn_list = _argument_type(parse_turn_list, "turn list")
index_set = _argument_type(parse_index_set, "index set")
grid = _argument_type(parse_grid, "grid")


def _add_signature(parser: argparse.ArgumentParser, optional: bool = False):
    nargs = "?" if optional else None
    parser.add_argument("n", type=positive_int, nargs=nargs, help="numero di iperpiani")
    parser.add_argument("r", type=positive_int, nargs=nargs, help="dimensione dello spazio ambiente C^r")


def build_parser() -> argparse.ArgumentParser:
    """
    Interfaccia a riga di comando: un sottocomando per ogni operazione.
    """
    parser = argparse.ArgumentParser(
        prog="tc-arrangements",
        description="Complessità topologica dei complementi di arrangiamenti generici di iperpiani: "
                    "TC(M) = min{n+1, 2r}.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="log di avanzamento a livello INFO")
    verbosity.add_argument("--debug", action="store_true", help="log dettagliati a livello DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    tc = subparsers.add_parser("tc", help="tabella dei limiti per una segnatura o una griglia")
    _add_signature(tc, optional=True)
    tc.add_argument("--grid", type=grid, help="griglia di segnature, ad esempio 'n=1..6,r=1..n'")
    output = tc.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="stampa la tabella come record JSON")
    output.add_argument("--csv", metavar="FILE", help="scrive la tabella in CSV ('-' per stdout)")

    verify = subparsers.add_parser("verify-lower-bound", help="certifica il prodotto di zero-divisori")
    _add_signature(verify)
    verify.add_argument("--set", dest="J", type=index_set, metavar="J",
                        help="indici dei fattori oltre a e0, ad esempio '1,3' (default 1..k)")
    verify.add_argument("--json", action="store_true", help="stampa il certificato in JSON")

    plan = subparsers.add_parser("plan", help="pianifica un percorso tra due punti dello scheletro")
    _add_signature(plan)
    plan.add_argument("--from", dest="source", type=turn_list, required=True,
                      help="origine come lista di giri 'p/q', ad esempio '0,1/4'")
    plan.add_argument("--to", dest="target", type=turn_list, required=True, help="giri della destinazione")
    plan.add_argument("--steps", type=positive_int, default=DEFAULT_STEPS, help="numero di intervalli della griglia dei tempi")
    plan.add_argument("--product", action="store_true",
                      help="pianifica su S^1 x scheletro; il primo giro di ogni lista è la coordinata del cerchio")
    plan.add_argument("--plot", metavar="FILE", help="salva un PNG delle coordinate in funzione del tempo")

    simulate = subparsers.add_parser("simulate", help="verifica randomizzata degli invarianti del planner")
    _add_signature(simulate)
    simulate.add_argument("--queries", type=positive_int, default=DEFAULT_QUERIES)
    simulate.add_argument("--steps", type=positive_int, default=DEFAULT_STEPS)
    simulate.add_argument("--seed", type=non_negative_int, default=DEFAULT_SEED)
    simulate.add_argument("--product", action="store_true", help="simula il planner a n+1 regole su S^1 x scheletro")
    simulate.add_argument("--workers", type=positive_int, default=1, help="processi paralleli")
    simulate.add_argument("--plot", metavar="FILE", help="salva un PNG dell'istogramma dei domini")

    search = subparsers.add_parser("search-zdcl", help="cerca la zero-divisor cup-length")
    _add_signature(search)
    search.add_argument("--brute", action="store_true", help="esegue anche la ricerca esaustiva (solo n piccoli)")
    search.add_argument("--json", action="store_true", help="stampa il report in JSON")

    return parser
