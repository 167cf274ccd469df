"""
Modulación de energía (EM).

Un símbolo de energía por bloque de coherencia y subcanal, repetido L veces.
El receptor promedia cada antena sobre el bloque y decide sobre la energía
normalizada u = v/N - 1/L.
"""
import numpy as np
from loguru import logger

from src.models.modems import EmParams, EnergyConstellation
from src.models.sweep import SimulationMode
from src.models.system_config import SystemConfig, ceil_power
from src.modems.constellation import nearest_level_index
from src.utils.errors import DegenerateConstellationError, DomainError, InfeasibleParametersError


def em_select_params(cfg: SystemConfig, mode: SimulationMode, K: int = 2) -> EmParams:
    """
    Elige el número de subcanales activos y el exponente de distancia.

    Args:
        cfg: Configuración del sistema
        mode: THEORETICAL usa M = min(B, ceil(N^min(eps, 1/2+tau))); ALL_SUBCARRIERS usa M = B
        K: Tamaño de la constelación

    Returns:
        EmParams con M, t (punto medio de (eps, 1/2+tau) si es factible), d y K
    """
    if K < 2:
        raise DegenerateConstellationError(f"Se requieren al menos 2 niveles, K={K}")
    mode = SimulationMode(mode)
    upper = 0.5 + cfg.tau
    feasible = cfg.eps < upper
    t = 0.5 * (cfg.eps + upper) if feasible else None

    if mode == SimulationMode.THEORETICAL:
        if not feasible:
            raise InfeasibleParametersError(
                f"EM requiere eps < 1/2 + tau (eps={cfg.eps}, tau={cfg.tau})"
            )
        M = min(cfg.B, ceil_power(cfg.N, min(cfg.eps, upper)))
    else:
        M = cfg.B

    d = cfg.P / (2.0 * M * (K - 1))
    logger.debug(f"EM: N={cfg.N}, M={M}, t={t}, d={d:.4g}, K={K}")
    return EmParams(M=M, t=t, d=d, K=K)


def em_constellation(params: EmParams, P: float) -> EnergyConstellation:
    """Constelación de energía escalada al presupuesto de potencia."""
    return EnergyConstellation.for_power(params.M, P, params.K)


def em_modulate(a: float, L: int) -> np.ndarray:
    """Vector constante sqrt(a)·1_L; energía del bloque a·L."""
    if a < 0:
        raise DomainError(f"Energía negativa: {a}")
    return np.full(int(L), np.sqrt(a), dtype=complex)


def em_statistic(Y: np.ndarray) -> np.ndarray:
    """
    v = sum_n |(1/L) sum_l y_{n,l}|^2.

    Acepta una matriz N×L o un lote (bloques, N, L).
    """
    Y = np.asarray(Y)
    block_mean = Y.mean(axis=-1)
    return np.sum(np.abs(block_mean) ** 2, axis=-1)


def em_detect_index(Y: np.ndarray, constellation: EnergyConstellation, L: int, N: int) -> np.ndarray:
    """Índice del nivel decidido para cada bloque."""
    u = em_statistic(Y) / N - 1.0 / L
    return nearest_level_index(u, constellation)


def em_detect(Y: np.ndarray, constellation: EnergyConstellation, L: int, N: int) -> float:
    """Nivel de energía decidido para un bloque N×L."""
    index = em_detect_index(Y, constellation, L, N)
    return float(constellation.levels[int(index)])
