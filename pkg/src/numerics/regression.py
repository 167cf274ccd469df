"""Regresión lineal en escala log-log para estimar exponentes de escalamiento."""
from typing import Iterable, Tuple

import numpy as np

from src.utils.errors import DomainError


def loglog_slope(points: Iterable[Tuple[float, float]]) -> float:
    """
    Pendiente por mínimos cuadrados de log(y) contra log(x).

    Args:
        points: Pares (x, y) estrictamente positivos, al menos dos

    Returns:
        Pendiente estimada
    """
    pts = np.asarray(list(points), dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 2 or pts.shape[1] != 2:
        raise DomainError(f"Se requieren al menos 2 puntos (x, y); recibidos {len(pts)}")
    if np.any(~np.isfinite(pts)) or np.any(pts <= 0):
        raise DomainError("Todas las coordenadas deben ser finitas y estrictamente positivas")

    log_x = np.log(pts[:, 0])
    log_y = np.log(pts[:, 1])
    dx = log_x - log_x.mean()
    denom = float(np.dot(dx, dx))
    if denom == 0.0:
        raise DomainError("Los valores de x deben ser distintos")
    return float(np.dot(dx, log_y - log_y.mean()) / denom)
