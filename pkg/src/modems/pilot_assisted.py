"""
Esquema asistido por piloto (PA).

Un piloto por bloque de coherencia y subcanal, estimación MMSE por antena,
combinación MRC tratando la estimación como canal verdadero y decisión por
vecino más cercano sobre BPSK escalada.

Reparto de energía por subcanal y bloque (rho = P·L/M):
    piloto:  |x_p|^2 = alpha·rho
    datos:   (1-alpha)·rho/(L-1) por símbolo
"""
from typing import Tuple

import numpy as np
from loguru import logger

from src.models.modems import PaFrame, PaPowerSplit
from src.models.sweep import SimulationMode
from src.models.system_config import SystemConfig, ceil_power
from src.numerics.streams import SeededStream
from src.utils.errors import DegenerateCombiningError, DomainError, InsufficientBlockLengthError

# Tamaño de la constelación BPSK escalada
PA_CONSTELLATION_SIZE = 2


def pa_select_m(cfg: SystemConfig, mode: SimulationMode) -> int:
    """
    Subcanales activos: min(B, ceil(N^((1+tau)/2))) en modo teórico
    (límite de sobre-expansión sqrt(N·L)), B con todas las subportadoras.
    """
    mode = SimulationMode(mode)
    if mode == SimulationMode.THEORETICAL:
        return min(cfg.B, ceil_power(cfg.N, (1.0 + cfg.tau) / 2.0))
    return cfg.B


def pa_gamma(alpha: float, C1: float) -> float:
    """Factor de SNR percibida gamma(alpha) = (alpha - alpha^2) / (alpha·C1 + 1)."""
    return (alpha - alpha * alpha) / (alpha * C1 + 1.0)


def pa_alpha_star(rho: float, L: int) -> PaPowerSplit:
    """
    Fracción óptima de energía para el piloto.

    Args:
        rho: Energía por subcanal y bloque
        L: Longitud del bloque de coherencia

    Returns:
        PaPowerSplit con kappa, C1, C2, alpha* y la varianza del error MMSE
    """
    if L < 2:
        raise InsufficientBlockLengthError(f"PA requiere L >= 2 (L={L})")
    if rho <= 0:
        raise DomainError(f"rho debe ser positivo: {rho}")

    kappa = rho / (L - 1)
    C1 = (rho - kappa) / (1.0 + kappa)
    C2 = float(np.sqrt(1.0 + C1))
    # 1/(C2+1) equivale a (sqrt(1+C1)-1)/C1 y da el límite 1/2 cuando C1 = 0
    alpha_star = 1.0 / (C2 + 1.0)
    est_err_var = 1.0 / (1.0 + alpha_star * rho)
    return PaPowerSplit(
        rho=rho,
        kappa=kappa,
        C1=C1,
        C2=C2,
        alpha_star=alpha_star,
        est_err_var=est_err_var,
        L=int(L),
    )


def alpha_star_forms(rho: float, L: int) -> Tuple[float, float, float]:
    """Las tres formas algebraicas de alpha* (requieren C1 > 0)."""
    split = pa_alpha_star(rho, L)
    C1 = split.C1
    if C1 <= 0:
        raise DomainError("Las formas alternativas requieren C1 > 0 (L > 2)")
    first = (np.sqrt(1.0 + C1) - 1.0) / C1
    second = 1.0 / (split.C2 + 1.0)
    third = 1.0 / (np.sqrt((1.0 + rho) / (1.0 + split.kappa)) + 1.0)
    return float(first), float(second), float(third)


def pa_effective_snr(N: int, split: PaPowerSplit) -> float:
    """SNR percibida por el decisor en alpha*: N·kappa·rho / (sqrt(1+rho) + sqrt(1+kappa))^2."""
    rho, kappa = split.rho, split.kappa
    return float(N * kappa * rho / (np.sqrt(1.0 + rho) + np.sqrt(1.0 + kappa)) ** 2)


def pa_rate(N: int, M: int, L: int, split: PaPowerSplit) -> float:
    """Tasa alcanzable (L-1)/L · M · log2(1 + SNR efectiva), con ||h||^2 ≈ N."""
    if L < 2:
        raise InsufficientBlockLengthError(f"PA requiere L >= 2 (L={L})")
    return float((L - 1) / L * M * np.log2(1.0 + pa_effective_snr(N, split)))


def pa_rate_at_alpha(N: int, M: int, L: int, rho: float, alpha: float,
                     h_norm2=None):
    """
    Tasa alcanzable para una fracción de piloto arbitraria.

    Ruido efectivo 1 + err·(1-alpha)·rho/(L-1); señal efectiva
    (1-alpha)·rho/(L-1)·||h||^2·(1-err), con err = 1/(1+alpha·rho).

    Args:
        h_norm2: ||h||^2 muestreado (escalar o arreglo); por defecto N
    """
    if L < 2:
        raise InsufficientBlockLengthError(f"PA requiere L >= 2 (L={L})")
    if not (0.0 <= alpha <= 1.0):
        raise DomainError(f"alpha fuera de [0, 1]: {alpha}")
    norm2 = float(N) if h_norm2 is None else np.asarray(h_norm2, dtype=float)
    err = 1.0 / (1.0 + alpha * rho)
    data_energy = (1.0 - alpha) * rho / (L - 1)
    snr = data_energy * norm2 * (1.0 - err) / (1.0 + err * data_energy)
    return (L - 1) / L * M * np.log2(1.0 + snr)


def pa_rate_sampled(cfg: SystemConfig, M: int, split: PaPowerSplit,
                    stream: SeededStream, trials: int = 10_000) -> float:
    """Promedio Monte Carlo de la tasa PA usando ||h||^2 muestreado (Gamma(N, 1))."""
    if trials < 1:
        raise DomainError(f"trials debe ser >= 1: {trials}")
    norms = stream.rng.gamma(shape=cfg.N, scale=1.0, size=trials)
    rates = pa_rate_at_alpha(cfg.N, M, split.L, split.rho, split.alpha_star, h_norm2=norms)
    return float(np.mean(rates))


def pa_estimate(y_p: np.ndarray, x_p: complex) -> np.ndarray:
    """
    Estimación MMSE elemento a elemento: conj(x_p)/(|x_p|^2 + 1) · y_p.

    El canal transmite h·conj(x), así que el piloto debe ser real: con fase no
    nula la estimación quedaría rotada por conj(x_p)^2/|x_p|^2.
    """
    x_p = complex(x_p)
    if x_p.imag != 0.0:
        raise DomainError(f"El piloto debe ser real: {x_p}")
    return np.conj(x_p) / (abs(x_p) ** 2 + 1.0) * np.asarray(y_p, dtype=complex)


def pa_build_frame(split: PaPowerSplit, data_signs: np.ndarray) -> PaFrame:
    """Trama con piloto real sqrt(alpha*·rho) y datos ±sqrt((1-alpha*)·rho/(L-1))."""
    signs = np.asarray(data_signs, dtype=float)
    if signs.shape != (split.L - 1,):
        raise DomainError(f"Se esperaban {split.L - 1} símbolos de datos, recibidos {signs.shape}")
    pilot = complex(np.sqrt(split.pilot_energy))
    data = np.sqrt(split.data_symbol_energy) * signs.astype(complex)
    return PaFrame(pilot=pilot, data=data)


def pa_combine(Y_data: np.ndarray, h_hat: np.ndarray) -> np.ndarray:
    """
    MRC r_l = h_hat^H y_l.

    Acepta Y_data N×(L-1) con h_hat de longitud N, o lotes (bloques, N, L-1)
    con h_hat (bloques, N).
    """
    Y_data = np.asarray(Y_data, dtype=complex)
    h_hat = np.asarray(h_hat, dtype=complex)
    return np.einsum('...n,...nl->...l', np.conj(h_hat), Y_data)


def pa_detect(Y_data: np.ndarray, h_hat: np.ndarray, amplitude: float = 1.0) -> np.ndarray:
    """
    Decisiones BPSK escaladas (signo de la parte real de r_l).

    Args:
        Y_data: Matriz N×(L-1) de usos de datos
        h_hat: Estimación de canal de longitud N
        amplitude: Amplitud de los símbolos ±s

    Returns:
        Arreglo de símbolos decididos ±amplitude
    """
    h_hat = np.asarray(h_hat, dtype=complex)
    if not np.any(h_hat):
        raise DegenerateCombiningError("Estimación de canal nula: la decisión no está definida")
    r = pa_combine(Y_data, h_hat)
    return np.where(r.real >= 0.0, amplitude, -amplitude)


def pa_detect_batch(Y_data: np.ndarray, h_hat: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Decisiones para un lote de bloques.

    Returns:
        (signos decididos (bloques, L-1), máscara de bloques degenerados)
    """
    h_hat = np.asarray(h_hat, dtype=complex)
    degenerate = ~np.any(h_hat != 0, axis=-1)
    if np.any(degenerate):
        logger.warning(f"{int(degenerate.sum())} bloques con estimación nula; se cuentan como error")
    r = pa_combine(Y_data, h_hat)
    decided = np.where(r.real >= 0.0, 1.0, -1.0)
    return decided, degenerate
