"""Emisión de gráficas SVG a partir de resultados de barrido."""
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402
from loguru import logger  # noqa: E402

from src.utils.errors import DomainError  # noqa: E402

METRICS = ('ber', 'nominal_rate', 'bsc_eq_rate')
METRIC_LABELS = {
    'ber': 'BER',
    'nominal_rate': 'Tasa nominal [bits/símbolo]',
    'bsc_eq_rate': 'Tasa equivalente BSC [bits/símbolo]',
}
# Sal fija para que los identificadores internos del SVG no cambien entre corridas
SVG_HASH_SALT = 'escalamiento-simo'


class SvgChartLoader:
    """Una serie por esquema; log-log para tasas y log-lineal para BER."""

    def __init__(self, symbols_per_point: int):
        if symbols_per_point < 1:
            raise DomainError(f"symbols_per_point debe ser >= 1: {symbols_per_point}")
        self.symbols_per_point = symbols_per_point

    @property
    def ber_floor(self) -> float:
        """Piso para BER = 0 en escala logarítmica: 1/(2·símbolos)."""
        return 1.0 / (2.0 * self.symbols_per_point)

    def load(self, df: pd.DataFrame, metric: str, svg_path: str) -> Path:
        if metric not in METRICS:
            raise DomainError(f"Métrica desconocida '{metric}'; opciones: {', '.join(METRICS)}")
        if df.empty:
            raise DomainError("No hay registros para graficar")

        plt.rcParams['svg.hashsalt'] = SVG_HASH_SALT
        fig, ax = plt.subplots(figsize=(7.0, 4.8))
        clamped_total = 0
        try:
            for scheme, group in df.groupby('scheme', sort=True):
                group = group.sort_values('N')
                values = group[metric].astype(float)
                label = scheme
                if metric == 'ber':
                    clamped = int((values <= 0).sum())
                    if clamped:
                        values = values.clip(lower=self.ber_floor)
                        label = f"{scheme} ({clamped} en piso)"
                        clamped_total += clamped
                else:
                    values = values.where(values > 0)
                ax.plot(group['N'], values, marker='o', label=label)

            ax.set_xlabel('N (antenas)')
            ax.set_ylabel(METRIC_LABELS[metric])
            ax.set_yscale('log')
            if metric != 'ber':
                ax.set_xscale('log')
            if clamped_total:
                ax.plot([], [], ' ', label=f"BER=0 graficado en 1/(2·{self.symbols_per_point})")
            ax.grid(True, which='both', alpha=0.3)
            ax.legend()

            path = Path(svg_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(path, format='svg', metadata={'Date': None})
        finally:
            plt.close(fig)

        logger.info(f"Gráfica {metric} escrita en {path}")
        return path
