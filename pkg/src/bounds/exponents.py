"""
Tabla de exponentes de escalamiento teóricos en N.

    coherent              min(eps, 1)
    noncoherent, pa       min(eps, (1+tau)/2, 1)
    noncoherent_fixed_l   min(eps, 1/2)
    em, oed               min(eps - tau, 1/2)
    fem                   min(eps, 1/2)
"""
from typing import Dict, Union

from src.models.bounds import ExponentPrediction, ExponentScheme
from src.utils.errors import DomainError


def predicted_exponent(scheme: Union[str, ExponentScheme], eps: float, tau: float) -> ExponentPrediction:
    """Exponente teórico del esquema para (eps, tau)."""
    try:
        scheme = ExponentScheme(scheme)
    except ValueError:
        raise DomainError(f"Esquema desconocido: {scheme}")
    if eps < 0 or tau < 0:
        raise DomainError(f"Los exponentes deben ser no negativos (eps={eps}, tau={tau})")

    if scheme == ExponentScheme.COHERENT:
        exponent = min(eps, 1.0)
    elif scheme in (ExponentScheme.NONCOHERENT, ExponentScheme.PA):
        exponent = min(eps, (1.0 + tau) / 2.0, 1.0)
    elif scheme == ExponentScheme.NONCOHERENT_FIXED_L:
        exponent = min(eps, 0.5)
    elif scheme in (ExponentScheme.EM, ExponentScheme.OED):
        exponent = min(eps - tau, 0.5)
    else:
        exponent = min(eps, 0.5)

    return ExponentPrediction(scheme=scheme, exponent=exponent)


def feasibility(eps: float, tau: float) -> Dict[str, bool]:
    """Condiciones de confiabilidad de cada esquema práctico."""
    return {
        'em': eps < 0.5 + tau,
        'fem': eps < 0.5,
        'pa': eps < (1.0 + tau) / 2.0,
    }
