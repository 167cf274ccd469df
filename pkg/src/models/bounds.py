"""Modelos de los reportes de cotas y exponentes."""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ExponentScheme(str, Enum):
    """Esquemas con exponente de escalamiento conocido."""
    COHERENT = "coherent"
    NONCOHERENT = "noncoherent"
    NONCOHERENT_FIXED_L = "noncoherent_fixed_l"
    EM = "em"
    FEM = "fem"
    OED = "oed"
    PA = "pa"


class BandwidthRegime(str, Enum):
    """Posición de B respecto al intervalo de ancho de banda crítico."""
    BELOW = "below"
    INSIDE = "inside"
    ABOVE = "above"


class ExponentPrediction(BaseModel):
    """Exponente teórico de escalamiento en N para un esquema."""
    model_config = ConfigDict(frozen=True)

    scheme: ExponentScheme
    exponent: float


class BoundReport(BaseModel):
    """Evaluación numérica de la cota de forma y del ancho de banda crítico."""
    model_config = ConfigDict(frozen=True)

    N: int = Field(..., ge=1)
    L: int = Field(..., ge=2)
    B: int = Field(..., ge=1)
    P: float = Field(..., gt=0.0)
    a0: float = Field(..., gt=0.0, description="Energía donde las dos ramas de Φ se igualan")
    sup_phi: float = Field(..., description="sup E[Φ(a)] en el M óptimo, en nats")
    cs_upper: float = Field(..., description="Cota superior de capacidad, bits por periodo de símbolo")
    m_star: int = Field(..., ge=1, description="Número de subcanales que maximiza la cota")
    bcrit_lo: float
    bcrit_hi: float
    bandwidth_regime: BandwidthRegime

    @model_validator(mode='after')
    def _check_consistency(self) -> 'BoundReport':
        if self.bcrit_lo > self.bcrit_hi:
            raise ValueError("bcrit_lo debe ser <= bcrit_hi")
        if self.m_star > self.B:
            raise ValueError(f"m_star={self.m_star} fuera de 1..{self.B}")
        return self
