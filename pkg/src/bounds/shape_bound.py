"""
Cota superior de la capacidad no coherente por codificación de forma.

Para una energía de bloque a, la información mutua sobre la forma está acotada por
    Φ(a) = min(Φ1, Φ2),  Φ1 = a²/(1+a)·N·(1-1/L),  Φ2 = L·ln(1+aN)
en nats. a0 es el punto donde las dos ramas se igualan; el supremo sobre las
distribuciones de energía con media rho tiene forma cerrada a cada lado de a0.
La cota total se maximiza sobre el número de subcanales M ∈ {1..B}.
"""
import math
from typing import Tuple

import numpy as np
from loguru import logger
from scipy.optimize import minimize_scalar

from src.bounds.critical_bandwidth import classify_bandwidth, critical_bandwidth
from src.models.bounds import BoundReport
from src.models.system_config import SystemConfig
from src.numerics.root_finding import bisect_root
from src.utils.errors import BracketingError, DegenerateBlockError, DomainError

A0_TOL = 1e-12
A0_BRACKET_LO = 1e-9
A0_MAX_DOUBLINGS = 2000
EXHAUSTIVE_LIMIT = 4096
TIE_RTOL = 1e-12
LN2 = math.log(2.0)


def _check_block(L: int):
    if L < 2:
        raise DegenerateBlockError(f"L={L}: con un solo uso por bloque la forma no lleva información")


def phi_branches(a: float, N: int, L: int) -> Tuple[float, float]:
    """Las dos ramas (Φ1, Φ2) de la cota, en nats."""
    _check_block(L)
    if a < 0:
        raise DomainError(f"Energía negativa: {a}")
    phi1 = a * a / (1.0 + a) * N * (1.0 - 1.0 / L)
    phi2 = L * math.log1p(a * N)
    return phi1, phi2


def phi(a: float, N: int, L: int) -> float:
    """Φ(a) = min(Φ1, Φ2)."""
    return min(phi_branches(a, N, L))


def solve_a0(N: int, L: int, tol: float = A0_TOL) -> float:
    """
    Raíz de Φ1(a) = Φ2(a) con a > 0.

    Φ1 - Φ2 < 0 cerca de 0+ y > 0 para a grande; el extremo superior del
    intervalo parte de 1 y se duplica hasta encontrar el cambio de signo.
    """
    _check_block(L)
    if N < 1:
        raise DomainError(f"N debe ser >= 1: {N}")

    def gap(a: float) -> float:
        phi1, phi2 = phi_branches(a, N, L)
        return phi1 - phi2

    lo, hi = A0_BRACKET_LO, 1.0
    doublings = 0
    while gap(hi) <= 0:
        lo = hi
        hi *= 2.0
        doublings += 1
        if doublings > A0_MAX_DOUBLINGS:
            raise BracketingError(f"No se encontró cambio de signo para N={N}, L={L}")

    a0 = bisect_root(gap, lo, hi, tol=tol)
    logger.debug(f"a0(N={N}, L={L}) = {a0:.6g} (duplicaciones: {doublings})")
    return a0


def sup_phi(rho: float, N: int, L: int, a0: float = None) -> float:
    """
    sup E[Φ(a)] sobre distribuciones de energía con media rho, en nats.

    Si a0 >= rho: rho·a0/(1+a0)·N·(1-1/L); si no: L·ln(1+rho·N).
    """
    if rho <= 0:
        raise DomainError(f"rho debe ser positivo: {rho}")
    if a0 is None:
        a0 = solve_a0(N, L)
    if a0 >= rho:
        return rho * a0 / (1.0 + a0) * N * (1.0 - 1.0 / L)
    return L * math.log1p(rho * N)


def _objective(M: np.ndarray, N: int, L: int, P: float, a0: float) -> np.ndarray:
    """(M/L)·sup_phi(P·L/M) vectorizado, en nats."""
    M = np.asarray(M, dtype=float)
    rho = P * L / M
    case_low = rho * a0 / (1.0 + a0) * N * (1.0 - 1.0 / L)
    case_high = L * np.log1p(rho * N)
    return M / L * np.where(a0 >= rho, case_low, case_high)


def search_subchannels(N: int, L: int, B: int, P: float, a0: float = None) -> Tuple[float, int, float]:
    """
    Maximiza (M/L)·sup_phi(P·L/M, N, L) sobre M entero en 1..B.

    Búsqueda exhaustiva hasta EXHAUSTIVE_LIMIT subportadoras; por encima,
    minimize_scalar acotado sobre la relajación continua y revisión de los enteros vecinos.

    Returns:
        (valor en nats, m_star, a0)
    """
    _check_block(L)
    if B < 1 or P <= 0:
        raise DomainError(f"Parámetros inválidos: B={B}, P={P}")
    if a0 is None:
        a0 = solve_a0(N, L)

    if B <= EXHAUSTIVE_LIMIT:
        candidates = np.arange(1, B + 1)
        values = _objective(candidates, N, L, P, a0)
        best = float(values.max())
        m_star = int(candidates[np.argmax(values >= best - TIE_RTOL * abs(best))])
        return best, m_star, a0

    objective = lambda m: float(_objective(m, N, L, P, a0))
    result = minimize_scalar(lambda m: -objective(m), bounds=(1.0, float(B)), method='bounded',
                             options={'xatol': 0.25})
    m_cont = float(result.x)
    # ±1 entero alrededor del óptimo continuo; B cubre el caso de meseta hasta el borde
    neighbors = range(max(1, math.floor(m_cont) - 1), min(B, math.ceil(m_cont) + 1) + 1)
    m_best = max([*neighbors, B], key=objective)
    best = objective(m_best)

    # Objetivo no decreciente hasta el máximo: menor M que alcanza el mismo valor
    lo, hi = 1, m_best
    while lo < hi:
        mid = (lo + hi) // 2
        if objective(mid) >= best - TIE_RTOL * abs(best):
            hi = mid
        else:
            lo = mid + 1
    return best, lo, a0


def bound_report(N: int, L: int, B: int, P: float) -> BoundReport:
    """Reporte completo: a0, supremo, cota en bits, m_star e intervalo crítico."""
    value, m_star, a0 = search_subchannels(N, L, B, P)
    bcrit_lo, bcrit_hi = critical_bandwidth(P, N, L)
    return BoundReport(
        N=N,
        L=L,
        B=B,
        P=P,
        a0=a0,
        sup_phi=sup_phi(P * L / m_star, N, L, a0=a0),
        cs_upper=value / LN2,
        m_star=m_star,
        bcrit_lo=bcrit_lo,
        bcrit_hi=bcrit_hi,
        bandwidth_regime=classify_bandwidth(B, bcrit_lo, bcrit_hi),
    )


def shape_capacity_ub(cfg: SystemConfig) -> BoundReport:
    """Cota de capacidad por codificación de forma para la configuración dada."""
    _check_block(cfg.L)
    report = bound_report(cfg.N, cfg.L, cfg.B, cfg.P)
    logger.debug(f"Cota de forma N={cfg.N}: {report.cs_upper:.4g} bits, m*={report.m_star}")
    return report
