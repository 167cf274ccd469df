"""
Tipos de los transceptores: constelación de energía, parámetros EM/FEM y
reparto de potencia del esquema con piloto.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.utils.errors import DegenerateConstellationError, DomainError


@dataclass(frozen=True)
class EnergyConstellation:
    """Niveles de energía no negativos uniformemente espaciados {0, Δ, ..., (K-1)Δ}."""
    levels: Tuple[float, ...]
    spacing: float
    K: int
    M: int

    def __post_init__(self):
        if self.K < 1 or len(self.levels) != self.K:
            raise DomainError(f"Constelación inconsistente: K={self.K}, niveles={len(self.levels)}")
        if self.spacing <= 0:
            raise DomainError(f"Espaciamiento no positivo: {self.spacing}")
        if any(b <= a for a, b in zip(self.levels, self.levels[1:])) or self.levels[0] < 0:
            raise DomainError("Los niveles deben ser no negativos y estrictamente crecientes")

    @classmethod
    def for_power(cls, M: int, P: float, K: int = 2) -> 'EnergyConstellation':
        """
        Construye la constelación con espaciamiento Δ = P / (M (K-1)).

        Con P=2 y K=2 se obtiene el conjunto binario {0, 2/M}; la energía media
        con símbolos uniformes es P/(2M), dentro del presupuesto P/M por subcanal.
        """
        if K < 2:
            raise DegenerateConstellationError(f"Se requieren al menos 2 niveles, K={K}")
        if M < 1 or P <= 0:
            raise DomainError(f"Parámetros inválidos para la constelación: M={M}, P={P}")
        spacing = P / (M * (K - 1))
        levels = tuple(float(k * spacing) for k in range(K))
        return cls(levels=levels, spacing=spacing, K=K, M=M)

    @property
    def mean_energy(self) -> float:
        """Energía media con símbolos equiprobables."""
        return (self.K - 1) * self.spacing / 2.0

    @property
    def bits_per_symbol(self) -> int:
        """Bits etiquetados por símbolo (K potencia de 2)."""
        return max(1, int(self.K).bit_length() - 1)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.levels, dtype=float)


@dataclass(frozen=True)
class EmParams:
    """Parámetros de modulación de energía (EM)."""
    M: int
    t: Optional[float]
    d: float
    K: int


@dataclass(frozen=True)
class FemParams:
    """Parámetros de modulación de energía rápida (FEM)."""
    M: int
    t: Optional[float]
    K: int


@dataclass(frozen=True)
class PaPowerSplit:
    """Reparto de energía entre piloto y datos en un bloque de un subcanal."""
    rho: float
    kappa: float
    C1: float
    C2: float
    alpha_star: float
    est_err_var: float
    L: int

    @property
    def pilot_energy(self) -> float:
        return self.alpha_star * self.rho

    @property
    def data_symbol_energy(self) -> float:
        """Energía de cada símbolo de datos: (1-α*)ρ/(L-1)."""
        return (1.0 - self.alpha_star) * self.rho / (self.L - 1)


@dataclass(frozen=True)
class PaFrame:
    """Trama de un bloque: piloto de amplitud constante y L-1 símbolos de datos."""
    pilot: complex
    data: np.ndarray

    @property
    def energy(self) -> float:
        return float(abs(self.pilot) ** 2 + np.sum(np.abs(self.data) ** 2))

    def as_vector(self) -> np.ndarray:
        """Vector de transmisión de longitud L (piloto primero)."""
        return np.concatenate(([self.pilot], np.asarray(self.data, dtype=complex)))
