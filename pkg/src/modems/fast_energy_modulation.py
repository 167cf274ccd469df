"""
Modulación de energía rápida (FEM).

L símbolos de energía independientes por bloque; cada uso se decide por
separado con u_l = v_l/N - 1. El decodificador símbolo a símbolo es subóptimo
y se mantiene así.
"""
from typing import List, Sequence

import numpy as np
from loguru import logger

from src.models.modems import EnergyConstellation, FemParams
from src.models.sweep import SimulationMode
from src.models.system_config import SystemConfig, ceil_power
from src.modems.constellation import nearest_level_index
from src.utils.errors import DegenerateConstellationError, DomainError, InfeasibleParametersError


def fem_select_params(cfg: SystemConfig, mode: SimulationMode, K: int = 2) -> FemParams:
    """M = min(B, ceil(N^min(eps, 1/2))) en modo teórico; M = B con todas las subportadoras."""
    if K < 2:
        raise DegenerateConstellationError(f"Se requieren al menos 2 niveles, K={K}")
    mode = SimulationMode(mode)
    feasible = cfg.eps < 0.5
    t = 0.5 * (cfg.eps + 0.5) if feasible else None

    if mode == SimulationMode.THEORETICAL:
        if not feasible:
            raise InfeasibleParametersError(f"FEM requiere eps < 1/2 (eps={cfg.eps})")
        M = min(cfg.B, ceil_power(cfg.N, min(cfg.eps, 0.5)))
    else:
        M = cfg.B

    logger.debug(f"FEM: N={cfg.N}, M={M}, t={t}, K={K}")
    return FemParams(M=M, t=t, K=K)


def fem_constellation(params: FemParams, P: float) -> EnergyConstellation:
    return EnergyConstellation.for_power(params.M, P, params.K)


def fem_modulate(a_seq: Sequence[float]) -> np.ndarray:
    """x_l = sqrt(a_l) elemento a elemento."""
    a = np.asarray(a_seq, dtype=float)
    if np.any(a < 0):
        raise DomainError("Energías negativas en la secuencia FEM")
    return np.sqrt(a).astype(complex)


def fem_statistic(Y: np.ndarray) -> np.ndarray:
    """v_l = sum_n |y_{n,l}|^2 por columna; acepta N×L o (bloques, N, L)."""
    return np.sum(np.abs(np.asarray(Y)) ** 2, axis=-2)


def fem_detect_index(Y: np.ndarray, constellation: EnergyConstellation, N: int) -> np.ndarray:
    u = fem_statistic(Y) / N - 1.0
    return nearest_level_index(u, constellation)


def fem_detect(Y: np.ndarray, constellation: EnergyConstellation, N: int) -> List[float]:
    """Niveles decididos para cada uno de los L usos del bloque."""
    indices = fem_detect_index(Y, constellation, N)
    levels = constellation.as_array()
    return [float(levels[i]) for i in np.atleast_1d(indices)]
