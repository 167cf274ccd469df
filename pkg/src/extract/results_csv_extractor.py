"""Extractor del archivo CSV de resultados de un barrido."""
from typing import List

import pandas as pd
from loguru import logger

from src.models.sweep import RESULT_COLUMNS, SweepRecord
from src.utils.errors import DomainError

NUMERIC_COLUMNS = [col for col in RESULT_COLUMNS if col != 'scheme']


class ResultsCSVExtractor:
    """Lee resultados conservando los flotantes exactos (round trip)."""

    def __init__(self):
        self.total_rows = 0

    def extract(self, csv_path: str) -> pd.DataFrame:
        """
        Lee el CSV completo.

        Raises:
            DomainError: Archivo vacío, sin las columnas esperadas o con campos no numéricos
        """
        logger.info(f"Extrayendo resultados: {csv_path}")
        try:
            df = pd.read_csv(csv_path, float_precision='round_trip')
        except pd.errors.EmptyDataError:
            raise DomainError(f"Archivo de resultados vacío: {csv_path}")

        missing = [col for col in RESULT_COLUMNS if col not in df.columns]
        if missing:
            raise DomainError(f"Columnas faltantes en {csv_path}: {missing}")
        if df.empty:
            raise DomainError(f"Archivo de resultados sin registros: {csv_path}")

        df = df[RESULT_COLUMNS].copy()
        for col in NUMERIC_COLUMNS:
            values = pd.to_numeric(df[col], errors='coerce')
            bad = values.isna()
            if bad.any():
                rows = [int(i) + 2 for i in df.index[bad][:5]]
                raise DomainError(f"Columna {col} con valores no numéricos en {csv_path} (líneas {rows})")
            df[col] = values

        self.total_rows = len(df)
        logger.info(f"Total de registros extraídos: {self.total_rows}")
        return df

    def extract_records(self, csv_path: str) -> List[SweepRecord]:
        """Registros validados con el modelo SweepRecord."""
        df = self.extract(csv_path)
        return [SweepRecord(**row) for row in df.to_dict(orient='records')]
