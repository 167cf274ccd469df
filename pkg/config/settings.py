import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


class SimulationSettings:
    def __init__(self):
        self.seed = int(os.getenv('SIM_SEED', '0'))
        self.symbols_per_point = int(os.getenv('SIM_SYMBOLS', '10000'))
        self.power = float(os.getenv('SIM_POWER', '2.0'))
        self.workers = int(os.getenv('SIM_WORKERS', '1'))
        # Elementos complejos por lote de Monte Carlo (memoria ~ 48 bytes por elemento)
        self.chunk_elements = int(os.getenv('SIM_CHUNK_ELEMENTS', str(1 << 22)))
        self.log_dir = os.getenv('LOG_DIR')
        self.results_dir = os.getenv('RESULTS_DIR', 'data/results')

    def log_file(self, prefix: str) -> Optional[Path]:
        """Ruta del archivo de log si LOG_DIR está definido."""
        if not self.log_dir:
            return None
        from datetime import datetime

        log_dir = Path(self.log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        return log_dir / f"{prefix}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"

    def results_path(self, filename: str) -> Path:
        """Ruta de un archivo de resultados dentro de RESULTS_DIR."""
        return Path(self.results_dir) / filename

    def describe(self) -> dict:
        return {
            'seed': self.seed,
            'symbols_per_point': self.symbols_per_point,
            'power': self.power,
            'workers': self.workers,
            'chunk_elements': self.chunk_elements,
            'log_dir': self.log_dir,
            'results_dir': self.results_dir,
        }


settings = SimulationSettings()
