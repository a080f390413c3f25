class TcError(Exception):
    """
    Classe base per tutti gli errori del progetto.
    """


# Errori di input: sono anche ValueError, come gli errori di scelta non valida
class InvalidSignature(TcError, ValueError):
    pass


class InvalidGenerator(TcError, ValueError):
    pass


class InvalidTurn(TcError, ValueError):
    pass


class InvalidCoordinates(TcError, ValueError):
    pass


class InvalidEndpoint(TcError, ValueError):
    pass


class DegenerateArc(TcError, ValueError):
    pass


class InvalidTime(TcError, ValueError):
    pass


class InstanceTooLarge(TcError, ValueError):
    pass


# Parametro numerico o opzione fuori dal dominio ammesso
class InvalidParameter(TcError, ValueError):
    pass


# Errori che segnalano un bug dell'implementazione, mai un fallimento matematico
class CertificateFailure(TcError, RuntimeError):
    pass


class BoundMismatch(TcError, RuntimeError):
    pass


class InvariantViolation(TcError, RuntimeError):
    """
    Violazione di un invariante del planner durante la simulazione.
    Conserva il record serializzato della query che l'ha prodotta.
    """

    def __init__(self, message: str, record: dict | None = None):
        super().__init__(message)
        self.record = record or {}
