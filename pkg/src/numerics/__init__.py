"""Utilidades numéricas compartidas: muestreo con semilla, entropía, raíces y regresión."""
from src.numerics.streams import SeededStream, sample_cn01, sample_cn01_array
from src.numerics.entropy import binary_entropy
from src.numerics.root_finding import bisect_root
from src.numerics.regression import loglog_slope

__all__ = [
    'SeededStream',
    'sample_cn01',
    'sample_cn01_array',
    'binary_entropy',
    'bisect_root',
    'loglog_slope',
]
