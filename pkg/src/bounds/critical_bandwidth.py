"""Intervalo de ancho de banda crítico (sobre-expansión) con logaritmos naturales."""
import math
from typing import Tuple

from src.models.bounds import BandwidthRegime
from src.utils.errors import DomainError

LN_PI = math.log(math.pi)


def critical_bandwidth(P: float, N: int, L: int) -> Tuple[float, float]:
    """
    Extremos del intervalo que contiene B_crit.

        lo = 2P·sqrt(ln(pi)/(1+N) · L/ln(L))
        hi = 2P·sqrt((1+N)·ln(pi) · L/ln(L))
    """
    if L < 2:
        raise DomainError(f"El ancho de banda crítico requiere L >= 2 (L={L})")
    if P <= 0 or N < 1:
        raise DomainError(f"Parámetros inválidos: P={P}, N={N}")
    core = LN_PI * L / math.log(L)
    lo = 2.0 * P * math.sqrt(core / (1.0 + N))
    hi = 2.0 * P * math.sqrt((1.0 + N) * core)
    return lo, hi


def classify_bandwidth(B: int, lo: float, hi: float) -> BandwidthRegime:
    if B < lo:
        return BandwidthRegime.BELOW
    if B > hi:
        return BandwidthRegime.ABOVE
    return BandwidthRegime.INSIDE
