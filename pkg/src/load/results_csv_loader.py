"""Carga de los registros del barrido a un archivo CSV."""
from pathlib import Path
from typing import Sequence

from loguru import logger

from src.models.sweep import SweepRecord
from src.pipelines.exponent_analysis import records_to_frame


class ResultsCSVLoader:
    """
    Escribe una fila por registro con el encabezado fijo de resultados.

    Los flotantes se escriben en su forma decimal más corta que conserva el
    valor, y las líneas terminan en '\\n', así que dos corridas iguales
    producen archivos idénticos byte a byte.
    """

    def __init__(self):
        self.rows_written = 0

    def load(self, records: Sequence[SweepRecord], csv_path: str) -> Path:
        path = Path(csv_path)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)

        df = records_to_frame(records)
        try:
            df.to_csv(path, index=False, lineterminator='\n')
        except Exception as e:
            logger.error(f"Error escribiendo resultados en {path}: {e}")
            raise

        self.rows_written = len(df)
        logger.info(f"{self.rows_written} registros escritos en {path}")
        return path
