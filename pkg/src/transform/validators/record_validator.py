"""Validador de filas de resultados antes de graficar o analizar."""
import numpy as np
import pandas as pd
from loguru import logger

from src.models.sweep import Scheme
from src.numerics.entropy import binary_entropy

IDENTITY_RTOL = 1e-12


class RecordValidator:
    """Marca cada fila con es_valido y el detalle en errores_validacion."""

    def __init__(self):
        self.valid_count = 0
        self.invalid_count = 0

    def validate(self, df: pd.DataFrame) -> pd.DataFrame:
        """Ejecuta todas las validaciones y marca registros."""
        logger.info(f"Iniciando validación de {len(df)} registros")

        df_val = df.copy()
        df_val['es_valido'] = True
        df_val['errores_validacion'] = ''

        df_val = self._validate_schemes(df_val)
        df_val = self._validate_dimensions(df_val)
        df_val = self._validate_rates(df_val)

        self.valid_count = int(df_val['es_valido'].sum())
        self.invalid_count = len(df_val) - self.valid_count
        logger.info(f"Validación completada: {self.valid_count} válidos, {self.invalid_count} inválidos")
        return df_val

    def _mark(self, df: pd.DataFrame, mask: pd.Series, message: str):
        df.loc[mask, 'es_valido'] = False
        df.loc[mask, 'errores_validacion'] += message

    def _validate_schemes(self, df: pd.DataFrame) -> pd.DataFrame:
        known = {s.value for s in Scheme}
        self._mark(df, ~df['scheme'].isin(known), 'Esquema desconocido; ')
        return df

    def _validate_dimensions(self, df: pd.DataFrame) -> pd.DataFrame:
        for col in ['N', 'B', 'L', 'M']:
            self._mark(df, ~(df[col] >= 1), f'{col} < 1; ')
        self._mark(df, ~(df['K'] >= 2), 'K < 2; ')
        self._mark(df, df['M'] > df['B'], 'M > B; ')
        return df

    def _validate_rates(self, df: pd.DataFrame) -> pd.DataFrame:
        ber_ok = (df['ber'] >= 0) & (df['ber'] <= 1)
        self._mark(df, ~ber_ok, 'BER fuera de [0, 1]; ')

        entropy = df['ber'].where(ber_ok, 0.5).map(binary_entropy)
        expected = df['nominal_rate'] * (1.0 - entropy)
        identity_ok = np.isclose(df['bsc_eq_rate'], expected, rtol=IDENTITY_RTOL, atol=1e-15)
        self._mark(df, ber_ok & ~identity_ok, 'bsc_eq_rate != nominal·(1-H(ber)); ')
        self._mark(df, df['bsc_eq_rate'] > df['nominal_rate'], 'bsc_eq_rate > nominal_rate; ')
        return df
