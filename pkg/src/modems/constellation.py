"""Decisión por vecino más cercano y etiquetado Gray de niveles de energía."""
import numpy as np

from src.models.modems import EnergyConstellation
from src.utils.errors import DegenerateConstellationError


def nearest_level_index(u, constellation: EnergyConstellation) -> np.ndarray:
    """
    Índice del nivel más cercano a cada estadístico u.

    Los empates se resuelven hacia el nivel menor (argmin devuelve el primer
    índice y los niveles están ordenados de forma creciente).
    """
    if constellation is None or constellation.K == 0:
        raise DegenerateConstellationError("Constelación vacía")
    levels = constellation.as_array()
    u = np.asarray(u, dtype=float)
    distances = np.abs(u[..., None] - levels)
    return np.argmin(distances, axis=-1)


def gray_code(index) -> np.ndarray:
    """Etiqueta Gray del índice de nivel."""
    index = np.asarray(index, dtype=np.int64)
    return index ^ (index >> 1)


def bit_errors(sent_index, decided_index) -> np.ndarray:
    """Bits distintos entre las etiquetas Gray de los índices enviados y decididos."""
    diff = gray_code(sent_index) ^ gray_code(decided_index)
    counts = np.zeros(diff.shape, dtype=np.int64)
    while np.any(diff):
        counts += diff & 1
        diff = diff >> 1
    return counts
