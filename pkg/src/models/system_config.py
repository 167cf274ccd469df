"""
Configuración del sistema: la única fuente de verdad dimensional.

B (subportadoras) y L (símbolos por bloque de coherencia) no se almacenan;
se recalculan siempre a partir de (N, eps, tau).
"""
import math

from pydantic import BaseModel, ConfigDict, Field, computed_field

# Tolerancia para absorber errores de redondeo de N**exp antes del techo
# (por ejemplo 1024**0.3 debe dar exactamente 8 subportadoras).
CEIL_SNAP = 1e-9


def ceil_power(n: int, exponent: float) -> int:
    """Calcula ceil(n**exponent), tolerante a errores de punto flotante."""
    value = float(n) ** float(exponent)
    nearest = round(value)
    if abs(value - nearest) <= CEIL_SNAP * max(1.0, value):
        return max(1, int(nearest))
    return max(1, math.ceil(value))


class SystemConfig(BaseModel):
    """Parámetros de la grilla: antenas, exponentes de banda y bloque, potencia y semilla."""
    model_config = ConfigDict(frozen=True)

    N: int = Field(..., ge=1, description="Número de antenas receptoras")
    eps: float = Field(..., ge=0.0, description="Exponente de ancho de banda ε")
    tau: float = Field(..., ge=0.0, description="Exponente de longitud de bloque τ")
    P: float = Field(2.0, gt=0.0, description="Potencia promedio normalizada")
    seed: int = Field(0, description="Semilla maestra de 64 bits")

    @computed_field
    @property
    def B(self) -> int:
        """Subportadoras: ceil(N^eps)."""
        return ceil_power(self.N, self.eps)

    @computed_field
    @property
    def L(self) -> int:
        """Símbolos por bloque de coherencia: ceil(N^tau)."""
        return ceil_power(self.N, self.tau)

    @property
    def snr_per_antenna(self) -> float:
        """SNR promedio por antena y subportadora, P/B."""
        return self.P / self.B
