"""
Pipeline del barrido en N: BER Monte Carlo, tasas nominales y tasa equivalente BSC
para cada par (esquema, N) de la grilla.
"""
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime
from typing import Any, Dict, List, Tuple

from loguru import logger
from tqdm import tqdm

from config.settings import settings
from src.models.sweep import SCHEME_CODES, Scheme, SweepConfig, SweepRecord
from src.models.system_config import SystemConfig
from src.modems.energy_modulation import em_select_params
from src.modems.fast_energy_modulation import fem_select_params
from src.modems.pilot_assisted import PA_CONSTELLATION_SIZE, pa_alpha_star, pa_select_m
from src.numerics.streams import SeededStream
from src.pipelines.ber_estimator import estimate_ber
from src.pipelines.rates import bsc_eq_rate, nominal_rate

# Longitud mínima de bloque para PA: un piloto y un símbolo de datos
PA_MIN_BLOCK = 2


def point_stream(seed: int, scheme: Scheme, N: int) -> SeededStream:
    """Flujo propio de un punto (esquema, N) de la grilla."""
    return SeededStream(seed, (SCHEME_CODES[Scheme(scheme)] << 32) | int(N))


def simulate_point(sweep: SweepConfig, scheme: Scheme, N: int,
                   chunk_elements: int = None) -> SweepRecord:
    """
    Simula un punto de la grilla y construye su registro.

    PA con L=1 usa un bloque de dos usos; el registro informa la L efectiva.
    """
    scheme = Scheme(scheme)
    cfg = SystemConfig(N=N, eps=sweep.eps, tau=sweep.tau, P=sweep.P, seed=sweep.seed)
    stream = point_stream(sweep.seed, scheme, N)

    if scheme == Scheme.EM:
        params = em_select_params(cfg, sweep.mode, sweep.k_levels)
        M, L, K = params.M, cfg.L, params.K
    elif scheme == Scheme.FEM:
        params = fem_select_params(cfg, sweep.mode, sweep.k_levels)
        M, L, K = params.M, cfg.L, params.K
    else:
        M = pa_select_m(cfg, sweep.mode)
        L = max(cfg.L, PA_MIN_BLOCK)
        K = PA_CONSTELLATION_SIZE
        params = pa_alpha_star(cfg.P * L / M, L)

    ber = estimate_ber(scheme, cfg, params, sweep.symbols_per_point, stream,
                       chunk_elements=chunk_elements)
    nominal = nominal_rate(scheme, M, L, K)
    return SweepRecord(
        scheme=scheme,
        N=N,
        B=cfg.B,
        L=L,
        M=M,
        K=K,
        ber=ber,
        nominal_rate=nominal,
        bsc_eq_rate=bsc_eq_rate(nominal, ber),
        seed=sweep.seed,
    )


class SweepPipeline:
    """Ejecuta un barrido completo y acumula estadísticas de la corrida."""

    def __init__(self, workers: int = None, chunk_elements: int = None, progress: bool = True):
        """
        Args:
            workers: Hilos de trabajo (por defecto SIM_WORKERS)
            chunk_elements: Elementos complejos por lote Monte Carlo
            progress: Muestra barra de progreso con tqdm
        """
        self.workers = max(1, workers or settings.workers)
        self.chunk_elements = chunk_elements or settings.chunk_elements
        self.progress = progress

        self.stats = {
            'start_time': None,
            'end_time': None,
            'total_points': 0,
            'points_done': 0,
            'records_by_scheme': {},
        }

    def _work_items(self, sweep: SweepConfig) -> List[Tuple[Scheme, int]]:
        return [(scheme, N) for scheme in sweep.schemes for N in sweep.n_grid]

    def run(self, sweep: SweepConfig) -> List[SweepRecord]:
        """
        Ejecuta el barrido.

        Returns:
            Registros ordenados por (esquema, N); idénticos para cualquier número de hilos
        """
        logger.info("=== Iniciando barrido ===")
        logger.info(f"eps={sweep.eps}, tau={sweep.tau}, modo={sweep.mode.value}, semilla={sweep.seed}")
        logger.info(f"Grilla N: {sweep.n_grid}")
        logger.info(f"Esquemas: {[s.value for s in sweep.schemes]}, símbolos por punto: {sweep.symbols_per_point}")

        self.stats['start_time'] = datetime.now()
        items = self._work_items(sweep)
        self.stats['total_points'] = len(items)
        results: Dict[Tuple[str, int], SweepRecord] = {}

        try:
            with tqdm(total=len(items), desc="Barrido", unit="punto", disable=not self.progress) as bar:
                if self.workers == 1:
                    for scheme, N in items:
                        results[(scheme.value, N)] = simulate_point(sweep, scheme, N, self.chunk_elements)
                        self.stats['points_done'] += 1
                        bar.update(1)
                else:
                    with ThreadPoolExecutor(max_workers=self.workers) as executor:
                        futures = {
                            executor.submit(simulate_point, sweep, scheme, N, self.chunk_elements): (scheme, N)
                            for scheme, N in items
                        }
                        for future in as_completed(futures):
                            scheme, N = futures[future]
                            results[(scheme.value, N)] = future.result()
                            self.stats['points_done'] += 1
                            bar.update(1)

        except Exception as e:
            logger.error(f"Error en el barrido: {e}")
            raise

        finally:
            self.stats['end_time'] = datetime.now()
            duration = (self.stats['end_time'] - self.stats['start_time']).total_seconds()
            logger.info("=== Barrido completado ===")
            logger.info(f"Duración: {duration:.2f} segundos")
            logger.info(f"Puntos simulados: {self.stats['points_done']}/{self.stats['total_points']}")

        records = [results[key] for key in sorted(results)]
        for record in records:
            counts = self.stats['records_by_scheme']
            counts[record.scheme.value] = counts.get(record.scheme.value, 0) + 1
        return records

    def get_statistics(self) -> Dict[str, Any]:
        return dict(self.stats)


def run_sweep(sweep: SweepConfig, workers: int = 1, progress: bool = False) -> List[SweepRecord]:
    """Una fila por (esquema, N), en orden (esquema, N)."""
    return SweepPipeline(workers=workers, progress=progress).run(sweep)
