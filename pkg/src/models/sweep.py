"""
Modelos del barrido de simulación: configuración y registros de resultados.
"""
import math
from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.numerics.entropy import binary_entropy


class Scheme(str, Enum):
    """Esquemas de transmisión simulados."""
    EM = "em"
    FEM = "fem"
    PA = "pa"


class SimulationMode(str, Enum):
    """Criterio para elegir el número de subcanales activos M."""
    THEORETICAL = "theoretical"
    ALL_SUBCARRIERS = "all-subcarriers"


# Códigos estables usados para derivar el stream_id de cada punto de la grilla
SCHEME_CODES = {
    Scheme.EM: 1,
    Scheme.FEM: 2,
    Scheme.PA: 3,
}

RESULT_COLUMNS = [
    'scheme', 'N', 'B', 'L', 'M', 'K', 'ber', 'nominal_rate', 'bsc_eq_rate', 'seed'
]


def default_n_grid() -> List[int]:
    """Grilla geométrica por defecto: 2^4 .. 2^12."""
    return [2 ** k for k in range(4, 13)]


class SweepConfig(BaseModel):
    """Configuración de un barrido en N para un par (eps, tau)."""
    model_config = ConfigDict(frozen=True)

    eps: float = Field(..., ge=0.0, description="Exponente de ancho de banda")
    tau: float = Field(..., ge=0.0, description="Exponente de longitud de bloque")
    n_grid: List[int] = Field(default_factory=default_n_grid, description="Valores de N")
    symbols_per_point: int = Field(10_000, ge=1_000, description="Bits transmitidos por punto")
    P: float = Field(2.0, gt=0.0, description="Potencia normalizada")
    seed: int = Field(0, description="Semilla maestra")
    schemes: List[Scheme] = Field(
        default_factory=lambda: [Scheme.EM, Scheme.FEM, Scheme.PA],
        description="Esquemas a simular"
    )
    mode: SimulationMode = Field(SimulationMode.ALL_SUBCARRIERS, description="Selección de M")
    k_levels: int = Field(2, ge=2, description="Tamaño de la constelación de energía EM/FEM")

    @field_validator('n_grid')
    @classmethod
    def _check_grid(cls, values: List[int]) -> List[int]:
        if not values:
            raise ValueError("La grilla de N no puede estar vacía")
        if any(n < 1 for n in values):
            raise ValueError("Todos los N deben ser >= 1")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("La grilla de N debe ser estrictamente creciente")
        return values

    @field_validator('schemes')
    @classmethod
    def _check_schemes(cls, values: List[Scheme]) -> List[Scheme]:
        if not values:
            raise ValueError("Se requiere al menos un esquema")
        if len(set(values)) != len(values):
            raise ValueError("Esquemas repetidos")
        return values

    @field_validator('k_levels')
    @classmethod
    def _check_levels(cls, value: int) -> int:
        # Etiquetado Gray: cada nivel lleva un número entero de bits
        if value & (value - 1):
            raise ValueError(f"k_levels debe ser potencia de 2: {value}")
        return value


class SweepRecord(BaseModel):
    """Una medición (esquema, N) del barrido."""
    model_config = ConfigDict(frozen=True)

    scheme: Scheme
    N: int = Field(..., ge=1)
    B: int = Field(..., ge=1)
    L: int = Field(..., ge=1)
    M: int = Field(..., ge=1)
    K: int = Field(..., ge=2)
    ber: float = Field(..., ge=0.0, le=1.0, description="Tasa de error de bit medida")
    nominal_rate: float = Field(..., ge=0.0, description="Bits por periodo de símbolo")
    bsc_eq_rate: float = Field(..., ge=0.0, description="Tasa confiable equivalente BSC")
    seed: int

    @model_validator(mode='after')
    def _check_bsc_identity(self) -> 'SweepRecord':
        expected = self.nominal_rate * (1.0 - binary_entropy(self.ber))
        if not math.isclose(self.bsc_eq_rate, expected, rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError(
                f"bsc_eq_rate={self.bsc_eq_rate} no coincide con nominal·(1-H(ber))={expected}"
            )
        return self
