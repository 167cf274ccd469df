"""
Estimación empírica de exponentes de escalamiento a partir de los registros del barrido.
"""
from typing import Dict, List, Sequence

import pandas as pd
from loguru import logger

from src.bounds.exponents import predicted_exponent
from src.models.sweep import RESULT_COLUMNS, SweepRecord
from src.numerics.regression import loglog_slope
from src.utils.errors import DomainError

MIN_GRID_POINTS = 3


def records_to_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
    """DataFrame con las columnas del archivo de resultados."""
    rows = [record.model_dump(mode='json') for record in records]
    return pd.DataFrame(rows, columns=RESULT_COLUMNS)


def empirical_exponents(records: Sequence[SweepRecord]) -> Dict[str, float]:
    """
    Pendiente log-log de bsc_eq_rate contra N por esquema.

    Se usa la mitad superior de la grilla de cada esquema (régimen asintótico).
    Puntos con tasa nula no entran en la regresión.
    """
    df = records_to_frame(records)
    if df.empty:
        raise DomainError("No hay registros para estimar exponentes")

    exponents = {}
    for scheme, group in df.groupby('scheme', sort=True):
        group = group.sort_values('N')
        if len(group) < MIN_GRID_POINTS:
            raise DomainError(
                f"Esquema {scheme}: se requieren al menos {MIN_GRID_POINTS} puntos, hay {len(group)}"
            )
        upper = group.iloc[len(group) // 2:]
        positive = upper[upper['bsc_eq_rate'] > 0]
        dropped = len(upper) - len(positive)
        if dropped:
            logger.warning(f"Esquema {scheme}: {dropped} puntos con tasa nula excluidos de la regresión")
        exponents[scheme] = loglog_slope(zip(positive['N'], positive['bsc_eq_rate']))
        logger.debug(f"Exponente empírico {scheme}: {exponents[scheme]:.4f}")
    return exponents


def compare_exponents(records: Sequence[SweepRecord], eps: float, tau: float) -> pd.DataFrame:
    """Tabla esquema / pendiente empírica / exponente teórico / diferencia."""
    empirical = empirical_exponents(records)
    rows: List[dict] = []
    for scheme, slope in empirical.items():
        predicted = predicted_exponent(scheme, eps, tau).exponent
        rows.append({
            'scheme': scheme,
            'empirical': slope,
            'predicted': predicted,
            'difference': slope - predicted,
        })
    return pd.DataFrame(rows, columns=['scheme', 'empirical', 'predicted', 'difference'])
