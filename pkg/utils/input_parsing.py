import re

from skeleton.turn import Turn
from utils.exceptions import InvalidParameter

_RANGE = re.compile(r"^\s*(n|r)\s*=\s*(\d+|n)\s*(?:\.\.\s*(\d+|n)\s*)?$")


def get_valid_int(text: str, min_value: int = 1) -> int:
    """
    Converte il testo in un intero valido maggiore o uguale a min_value.

    :param text: testo da convertire.
    :param min_value: valore minimo accettabile (default=1).
    :return: numero intero valido.
    """
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise InvalidParameter(f"atteso un numero intero, ricevuto {text!r}") from None
    if value < min_value:
        raise InvalidParameter(f"il valore deve essere almeno {min_value}, ricevuto {value}")
    return value


def parse_turn_list(text: str) -> tuple[Turn, ...]:
    """
    Legge una lista di giri separati da virgola, es. "0,1/4".
    La lista vuota ("" oppure "-") è ammessa per n = 1.
    """
    text = text.strip()
    if text in ("", "-"):
        return ()
    return tuple(Turn.parse(part) for part in text.split(","))


def parse_index_set(text: str) -> tuple[int, ...]:
    """
    Legge un insieme di indici separati da virgola, es. "1,3,4".
    """
    text = text.strip()
    if not text:
        return ()
    return tuple(get_valid_int(part.strip(), min_value=0) for part in text.split(","))


def parse_grid(text: str) -> list[tuple[int, int]]:
    """
    Legge una griglia di segnature, es. "n=1..6,r=1..n".
    Gli estremi di r possono riferirsi a n; le coppie con r > n o r < 1 vengono scartate.
    """
    ranges = {}
    for part in text.split(","):
        match = _RANGE.match(part)
        if not match:
            raise InvalidParameter(f"componente della griglia non valida {part!r}; atteso ad esempio 'n=1..6' o 'r=1..n'")
        name, low, high = match.group(1), match.group(2), match.group(3) or match.group(2)
        if name in ranges:
            raise InvalidParameter(f"variabile della griglia {name!r} indicata due volte")
        if name == "n" and "n" in (low, high):
            raise InvalidParameter("l'intervallo di n non può dipendere da n")
        ranges[name] = (low, high)
    if set(ranges) != {"n", "r"}:
        raise InvalidParameter("la griglia deve indicare gli intervalli sia di n sia di r")

    def bound(value: str, n: int) -> int:
        return n if value == "n" else int(value)

    n_low, n_high = (int(v) for v in ranges["n"])
    pairs = []
    for n in range(n_low, n_high + 1):
        r_low, r_high = (bound(v, n) for v in ranges["r"])
        pairs.extend((n, r) for r in range(r_low, r_high + 1) if 1 <= r <= n)
    if not pairs:
        raise InvalidParameter(f"la griglia {text!r} non contiene segnature valide")
    return pairs
