"""Búsqueda de raíces por bisección."""
from typing import Callable

from loguru import logger

from src.utils.errors import BracketingError

DEFAULT_TOL = 1e-9


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                tol: float = DEFAULT_TOL, max_iter: int = 500) -> float:
    """
    Encuentra la raíz de una función continua por bisección.

    El intervalo se reduce a la mitad hasta que su ancho sea <= tol, o hasta que
    el punto medio ya no pueda separar los extremos en punto flotante.

    Args:
        f: Función continua en [lo, hi]
        lo: Extremo inferior
        hi: Extremo superior
        tol: Ancho máximo del intervalo final
        max_iter: Límite de iteraciones

    Returns:
        Punto medio del intervalo final
    """
    if lo > hi:
        lo, hi = hi, lo
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise BracketingError(
            f"f(lo)={f_lo:.3e} y f(hi)={f_hi:.3e} tienen el mismo signo en [{lo}, {hi}]"
        )

    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    else:
        logger.warning(f"Bisección sin converger tras {max_iter} iteraciones (ancho {hi - lo:.3e})")

    return 0.5 * (lo + hi)
