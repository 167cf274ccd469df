"""Errores de dominio del simulador."""


class DomainError(ValueError):
    """Argumento fuera del dominio de la operación."""


class BracketingError(DomainError):
    """Los extremos del intervalo no encierran un cambio de signo."""


class InfeasibleParametersError(DomainError):
    """No existe exponente de distancia que cumpla la condición de confiabilidad."""


class DegenerateBlockError(DomainError):
    """Bloque de coherencia de un solo uso: la forma de la señal no lleva información."""


class InsufficientBlockLengthError(DomainError):
    """El bloque no deja espacio para datos después del piloto."""


class DegenerateConstellationError(DomainError):
    """Constelación con menos de dos puntos."""


class DegenerateCombiningError(DomainError):
    """Estimación de canal nula: la combinación MRC no está definida."""
