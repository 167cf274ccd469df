"""Entropía binaria en bits."""
import numpy as np

from src.utils.errors import DomainError


def binary_entropy(p: float) -> float:
    """
    Calcula H(p) = -p·log2(p) - (1-p)·log2(1-p), con H(0) = H(1) = 0.

    Args:
        p: Probabilidad en [0, 1]

    Returns:
        Entropía en bits
    """
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"Probabilidad fuera de rango: {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return float(-p * np.log2(p) - (1.0 - p) * np.log2(1.0 - p))
