"""Tasas nominales y tasa confiable equivalente BSC."""
import math
from typing import Union

from src.models.sweep import Scheme
from src.numerics.entropy import binary_entropy
from src.utils.errors import DegenerateConstellationError, DomainError


def nominal_rate(scheme: Union[str, Scheme], M: int, L: int, K: int) -> float:
    """
    Bits por periodo de símbolo transmitidos sin considerar errores.

    EM: M·log2(K)/L; FEM: M·log2(K); PA: M·log2(K)·(L-1)/L.
    """
    if K < 2:
        raise DegenerateConstellationError(f"Se requieren al menos 2 niveles, K={K}")
    scheme = Scheme(scheme)
    bits = M * math.log2(K)
    if scheme == Scheme.EM:
        return bits / L
    if scheme == Scheme.FEM:
        return bits
    return bits * (L - 1) / L


def bsc_eq_rate(nominal: float, ber: float) -> float:
    """nominal·(1 - H(ber))."""
    if not (0.0 <= ber <= 1.0):
        raise DomainError(f"BER fuera de [0, 1]: {ber}")
    return nominal * (1.0 - binary_entropy(ber))
