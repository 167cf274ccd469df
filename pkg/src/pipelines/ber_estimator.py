"""
Estimación Monte Carlo de la tasa de error de bit (BER) por esquema.

Cada símbolo ocupa un par (subcanal, bloque de coherencia) con su propio
canal: como los coeficientes son i.i.d. entre subportadoras y bloques, basta
muestrear un vector h por bloque simulado. El ruido se redibuja en cada uso.

Los bloques se procesan en lotes limitados por número de elementos complejos;
el lote k usa el sub-flujo stream.child(k), así que el resultado depende sólo
de (semilla, flujo, tamaño de lote) y no del orden de ejecución ni del número
de trabajadores.
"""
from typing import Union

import numpy as np
from loguru import logger

from config.settings import settings
from src.channel.block_fading import apply_subchannel_batch
from src.models.modems import EmParams, FemParams, PaPowerSplit
from src.models.sweep import Scheme
from src.models.system_config import SystemConfig
from src.modems.constellation import bit_errors
from src.modems.energy_modulation import em_constellation, em_detect_index
from src.modems.fast_energy_modulation import fem_constellation, fem_detect_index
from src.modems.pilot_assisted import pa_build_frame, pa_detect_batch, pa_estimate
from src.numerics.streams import SeededStream, sample_cn01_array
from src.utils.errors import DomainError

SchemeParams = Union[EmParams, FemParams, PaPowerSplit]


def _blocks_per_chunk(N: int, L: int, chunk_elements: int) -> int:
    return max(1, int(chunk_elements) // (N * L))


def _em_chunk(cfg: SystemConfig, params: EmParams, n_blocks: int, chunk: SeededStream,
              noiseless: bool) -> np.ndarray:
    constellation = em_constellation(params, cfg.P)
    levels = constellation.as_array()
    L = cfg.L

    sent = chunk.rng.integers(0, constellation.K, size=n_blocks)
    h = sample_cn01_array(chunk, (n_blocks, cfg.N))
    x = np.repeat(np.sqrt(levels[sent])[:, None], L, axis=1)
    Y = apply_subchannel_batch(h, x, chunk, noiseless=noiseless)

    decided = em_detect_index(Y, constellation, L, cfg.N)
    return bit_errors(sent, decided)


def _fem_chunk(cfg: SystemConfig, params: FemParams, n_blocks: int, chunk: SeededStream,
               noiseless: bool) -> np.ndarray:
    constellation = fem_constellation(params, cfg.P)
    levels = constellation.as_array()
    L = cfg.L

    sent = chunk.rng.integers(0, constellation.K, size=(n_blocks, L))
    h = sample_cn01_array(chunk, (n_blocks, cfg.N))
    x = np.sqrt(levels[sent])
    Y = apply_subchannel_batch(h, x, chunk, noiseless=noiseless)

    decided = fem_detect_index(Y, constellation, cfg.N)
    return bit_errors(sent, decided).reshape(-1)


def _pa_chunk(cfg: SystemConfig, split: PaPowerSplit, n_blocks: int, chunk: SeededStream,
              noiseless: bool, perfect_csi: bool) -> np.ndarray:
    data_len = split.L - 1
    reference = pa_build_frame(split, np.ones(data_len))
    amplitude = float(reference.data.real[0])

    sent = chunk.rng.integers(0, 2, size=(n_blocks, data_len))
    signs = 2.0 * sent - 1.0
    h = sample_cn01_array(chunk, (n_blocks, cfg.N))
    x = np.empty((n_blocks, split.L), dtype=complex)
    x[:, 0] = reference.pilot
    x[:, 1:] = amplitude * signs
    Y = apply_subchannel_batch(h, x, chunk, noiseless=noiseless)

    h_hat = h if perfect_csi else pa_estimate(Y[:, :, 0], reference.pilot)
    decided, degenerate = pa_detect_batch(Y[:, :, 1:], h_hat)
    errors = decided != signs
    errors[degenerate, :] = True
    return errors.reshape(-1).astype(np.int64)


def estimate_ber(scheme: Union[str, Scheme], cfg: SystemConfig, params: SchemeParams,
                 n_symbols: int, stream: SeededStream, chunk_elements: int = None,
                 perfect_csi: bool = False, noiseless: bool = False) -> float:
    """
    Fracción de bits errados sobre n_symbols símbolos transmitidos.

    Args:
        scheme: em, fem o pa
        cfg: Configuración del sistema (N, L, P)
        params: EmParams, FemParams o PaPowerSplit según el esquema
        n_symbols: Número de símbolos de datos transmitidos
        stream: Flujo del punto de la grilla
        chunk_elements: Elementos complejos por lote (por defecto SIM_CHUNK_ELEMENTS)
        perfect_csi: PA decide con el canal verdadero en lugar de la estimación MMSE
        noiseless: Suprime el ruido (solo para pruebas)

    Returns:
        BER en [0, 1]
    """
    if n_symbols < 1:
        raise DomainError(f"n_symbols debe ser >= 1: {n_symbols}")
    scheme = Scheme(scheme)
    chunk_elements = chunk_elements or settings.chunk_elements

    if scheme == Scheme.PA:
        symbols_per_block = params.L - 1
        L = params.L
        bits_per_symbol = 1
    else:
        symbols_per_block = 1 if scheme == Scheme.EM else cfg.L
        L = cfg.L
        build = em_constellation if scheme == Scheme.EM else fem_constellation
        bits_per_symbol = build(params, cfg.P).bits_per_symbol

    total_blocks = -(-n_symbols // symbols_per_block)
    per_chunk = _blocks_per_chunk(cfg.N, L, chunk_elements)

    errors = 0
    pending = n_symbols
    k = 0
    remaining = total_blocks
    while remaining > 0:
        n_blocks = min(per_chunk, remaining)
        chunk = stream.child(k)
        if scheme == Scheme.EM:
            symbol_errors = _em_chunk(cfg, params, n_blocks, chunk, noiseless)
        elif scheme == Scheme.FEM:
            symbol_errors = _fem_chunk(cfg, params, n_blocks, chunk, noiseless)
        else:
            symbol_errors = _pa_chunk(cfg, params, n_blocks, chunk, noiseless, perfect_csi)
        # El último bloque puede llevar símbolos de más
        errors += int(symbol_errors[:pending].sum())
        pending -= min(pending, symbol_errors.size)
        remaining -= n_blocks
        k += 1

    ber = errors / (n_symbols * bits_per_symbol)
    logger.debug(
        f"BER {scheme.value} N={cfg.N}: {ber:.4g} ({errors} bits errados, {n_symbols} símbolos, {k} lotes)"
    )
    return float(ber)
