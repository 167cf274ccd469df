"""
Canal SIMO de banda ancha con desvanecimiento Rayleigh por bloques.

Cada subportadora b tiene un coeficiente plano h_n[b] ~ CN(0,1) por antena,
constante durante los L usos del bloque de coherencia. El ruido se genera al
aplicar el canal y no se almacena.
"""
from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.models.system_config import SystemConfig
from src.numerics.streams import SeededStream, sample_cn01_array


@dataclass(frozen=True)
class ChannelBlock:
    """Matriz de canal H (N×B) de un bloque de coherencia."""
    H: np.ndarray

    def __post_init__(self):
        self.H.setflags(write=False)

    @property
    def N(self) -> int:
        return self.H.shape[0]

    @property
    def B(self) -> int:
        return self.H.shape[1]

    def subchannel(self, b: int) -> np.ndarray:
        """Vector de canal de longitud N de la subportadora b."""
        return self.H[:, b]


@dataclass(frozen=True)
class SubchannelFrame:
    """Trama de una subportadora: vector transmitido X (L) y recibido Y (N×L)."""
    X: np.ndarray
    Y: np.ndarray


def sample_channel(cfg: SystemConfig, stream: SeededStream) -> ChannelBlock:
    """Muestrea la matriz N×B de coeficientes i.i.d. CN(0,1)."""
    H = sample_cn01_array(stream, (cfg.N, cfg.B))
    logger.debug(f"Canal muestreado: N={cfg.N}, B={cfg.B}")
    return ChannelBlock(H=H)


def apply_subchannel(h: np.ndarray, x: np.ndarray, stream: SeededStream,
                     noiseless: bool = False) -> np.ndarray:
    """
    Aplica el canal de una subportadora a un bloque: Y = h·x^H + Z.

    Args:
        h: Vector de canal de longitud N
        x: Vector transmitido de longitud L
        stream: Flujo del que se toma el ruido Z ~ CN(0,1)
        noiseless: Fuerza Z = 0 (uso en pruebas)

    Returns:
        Matriz recibida N×L
    """
    h = np.asarray(h, dtype=complex).reshape(-1)
    x = np.asarray(x, dtype=complex).reshape(-1)
    if not (np.all(np.isfinite(h)) and np.all(np.isfinite(x))):
        raise ValueError("El canal y la señal transmitida deben ser finitos")
    Y = np.outer(h, np.conj(x))
    if not noiseless:
        Y = Y + sample_cn01_array(stream, Y.shape)
    return Y


def apply_subchannel_batch(h_batch: np.ndarray, x_batch: np.ndarray, stream: SeededStream,
                           noiseless: bool = False) -> np.ndarray:
    """
    Versión vectorizada de apply_subchannel para varios bloques independientes.

    Args:
        h_batch: Canales, forma (bloques, N)
        x_batch: Señales, forma (bloques, L)
        stream: Flujo del ruido
        noiseless: Fuerza Z = 0

    Returns:
        Arreglo (bloques, N, L)
    """
    h_batch = np.asarray(h_batch, dtype=complex)
    x_batch = np.asarray(x_batch, dtype=complex)
    Y = h_batch[:, :, None] * np.conj(x_batch)[:, None, :]
    if not noiseless:
        Y = Y + sample_cn01_array(stream, Y.shape)
    return Y


def subchannel_frame(h: np.ndarray, x: np.ndarray, stream: SeededStream) -> SubchannelFrame:
    """Empaqueta transmisión y recepción de una subportadora."""
    x = np.asarray(x, dtype=complex).reshape(-1)
    return SubchannelFrame(X=x, Y=apply_subchannel(h, x, stream))
