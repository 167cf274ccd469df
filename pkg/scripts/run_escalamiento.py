#!/usr/bin/env python3
"""
Simulador de escalamiento del canal SIMO no coherente.

Subcomandos:
    sweep    barrido Monte Carlo en N y archivo CSV de resultados
    bounds   cota de forma y ancho de banda crítico
    predict  exponentes teóricos de escalamiento
    plot     gráfica SVG a partir de un CSV de resultados

Códigos de salida: 0 éxito, 1 error de ejecución, 2 error de uso.
"""

import sys
import os
import math
from pathlib import Path

# Agregar el directorio raíz al path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import click
import numpy as np
import pandas as pd
from loguru import logger

from config.settings import settings
from src.bounds.exponents import feasibility, predicted_exponent
from src.bounds.critical_bandwidth import critical_bandwidth
from src.bounds.shape_bound import bound_report
from src.extract.results_csv_extractor import ResultsCSVExtractor
from src.extract.scenario_catalog import ScenarioCatalog
from src.extract.sweep_config_reader import SweepConfigReader
from src.load.results_csv_loader import ResultsCSVLoader
from src.load.svg_chart_loader import METRICS, SvgChartLoader
from src.models.bounds import ExponentScheme
from src.models.sweep import SimulationMode, SweepConfig
from src.models.system_config import ceil_power
from src.pipelines.exponent_analysis import compare_exponents
from src.pipelines.sweep_pipeline import SweepPipeline
from src.transform.validators.record_validator import RecordValidator
from src.utils.errors import DomainError, InfeasibleParametersError

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {message}"

DEFAULT_NMIN = 16
DEFAULT_NMAX = 4096
DEFAULT_POINTS = 9


def configure_logging(quiet: bool, log_file: str = None):
    """stderr siempre; archivo sólo con --log-file o LOG_DIR."""
    logger.remove()
    # El sink resuelve sys.stderr en cada mensaje
    logger.add(lambda message: sys.stderr.write(message), format=LOG_FORMAT,
               level="WARNING" if quiet else "INFO")
    target = Path(log_file) if log_file else settings.log_file("escalamiento")
    if target is not None:
        target.parent.mkdir(parents=True, exist_ok=True)
        logger.add(target, format=LOG_FORMAT, level="DEBUG")


def geometric_grid(nmin: int, nmax: int, points: int) -> list:
    """Grilla geométrica de enteros estrictamente creciente entre nmin y nmax."""
    if nmax < nmin:
        raise DomainError(f"--nmax ({nmax}) debe ser >= --nmin ({nmin})")
    if nmin == nmax:
        return [int(nmin)]
    grid = np.unique(np.rint(np.geomspace(nmin, nmax, points)).astype(int))
    return [int(n) for n in grid]


def resolve_exponents(eps, tau, scenario):
    """(eps, tau) desde las opciones o el catálogo de escenarios."""
    if scenario:
        values = ScenarioCatalog().get(scenario)
        eps = values['eps'] if eps is None else eps
        tau = values['tau'] if tau is None else tau
    return eps, tau


@click.group()
@click.option('--quiet', is_flag=True, help='Sólo advertencias y errores; sin barra de progreso')
@click.option('--log-file', type=click.Path(dir_okay=False), default=None,
              help='Archivo de log adicional')
@click.pass_context
def cli(ctx, quiet: bool, log_file: str):
    """Simulador y evaluador de cotas para el canal SIMO con desvanecimiento por bloques."""
    ctx.ensure_object(dict)
    ctx.obj['quiet'] = quiet
    configure_logging(quiet, log_file)


@cli.command()
@click.option('--eps', type=click.FloatRange(min=0.0), default=None, help='Exponente de ancho de banda')
@click.option('--tau', type=click.FloatRange(min=0.0), default=None, help='Exponente de longitud de bloque')
@click.option('--scenario', default=None, help='Escenario del catálogo (banda_estrecha, banda_ancha, bloque_largo)')
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Archivo de barrido clave = valor')
@click.option('--nmin', type=click.IntRange(min=1), default=None, help='N mínimo de la grilla')
@click.option('--nmax', type=click.IntRange(min=1), default=None, help='N máximo de la grilla')
@click.option('--points', type=click.IntRange(min=1), default=None, help='Puntos de la grilla geométrica')
@click.option('--symbols', type=click.IntRange(min=1000), default=None, help='Símbolos por punto')
@click.option('--seed', type=int, default=None, help='Semilla maestra')
@click.option('--power', type=click.FloatRange(min=0.0, min_open=True), default=None, help='Potencia P')
@click.option('--schemes', default=None, help='Esquemas separados por comas (em,fem,pa)')
@click.option('--mode', type=click.Choice([m.value for m in SimulationMode]), default=None,
              help='Selección de subcanales activos')
@click.option('--k-levels', type=click.IntRange(min=2), default=None, help='Niveles de energía EM/FEM')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Hilos de trabajo')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None, help='CSV de resultados')
@click.pass_context
def sweep(ctx, eps, tau, scenario, config_path, nmin, nmax, points, symbols, seed, power,
          schemes, mode, k_levels, workers, out_path):
    """Barrido Monte Carlo en N para un par (eps, tau)."""
    try:
        eps, tau = resolve_exponents(eps, tau, scenario)
        overrides = {
            'eps': eps,
            'tau': tau,
            'symbols_per_point': symbols,
            'P': power,
            'seed': seed,
            'mode': mode,
            'k_levels': k_levels,
            'schemes': [s.strip() for s in schemes.split(',') if s.strip()] if schemes else None,
        }
        if nmin is not None or nmax is not None or points is not None or config_path is None:
            overrides['n_grid'] = geometric_grid(
                nmin or DEFAULT_NMIN, nmax or DEFAULT_NMAX, points or DEFAULT_POINTS
            )

        if config_path:
            sweep_cfg = SweepConfigReader().read(config_path, **overrides)
        else:
            if eps is None or tau is None:
                raise click.UsageError("Se requieren --eps y --tau (o --scenario / --config)")
            defaults = {'symbols_per_point': settings.symbols_per_point, 'P': settings.power,
                        'seed': settings.seed}
            values = {k: v for k, v in overrides.items() if v is not None}
            sweep_cfg = SweepConfig(**{**defaults, **values})
    except click.ClickException:
        raise
    except (ValueError, FileNotFoundError) as e:
        raise click.UsageError(str(e))

    out = Path(out_path) if out_path else settings.results_path('barrido.csv')
    progress = not ctx.obj['quiet'] and sys.stderr.isatty()

    logger.info(f"Entorno: {settings.describe()}")
    try:
        pipeline = SweepPipeline(workers=workers or settings.workers, progress=progress)
        records = pipeline.run(sweep_cfg)
        ResultsCSVLoader().load(records, str(out))
    except InfeasibleParametersError as e:
        raise click.UsageError(str(e))
    except Exception as e:
        logger.error(f"Error crítico: {e}")
        logger.exception("Detalle del error:")
        sys.exit(1)

    try:
        table = compare_exponents(records, sweep_cfg.eps, sweep_cfg.tau)
        logger.info("Exponentes empíricos vs teóricos:\n" + table.to_string(index=False))
    except DomainError as e:
        logger.warning(f"Exponentes empíricos no disponibles: {e}")

    click.echo(f"{len(records)} registros escritos en {out}")


@cli.command()
@click.option('--n', 'n_antennas', type=click.IntRange(min=1), required=True, help='Antenas N')
@click.option('--l', 'block_length', type=click.IntRange(min=1), required=True, help='Longitud de bloque L')
@click.option('--p', 'power', type=click.FloatRange(min=0.0, min_open=True), default=None, help='Potencia P')
@click.option('--b', 'bandwidth', type=click.IntRange(min=1), default=None, help='Subportadoras B')
@click.option('--eps', type=click.FloatRange(min=0.0), default=None, help='B = ceil(N^eps) si no se da --b')
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None, help='CSV con el reporte')
def bounds(n_antennas, block_length, power, bandwidth, eps, csv_path):
    """Cota de capacidad por codificación de forma e intervalo de ancho de banda crítico."""
    power = settings.power if power is None else power
    try:
        if bandwidth is not None:
            B = bandwidth
        elif eps is not None:
            B = ceil_power(n_antennas, eps)
        else:
            B = max(1, math.ceil(critical_bandwidth(power, n_antennas, block_length)[1]))
        report = bound_report(n_antennas, block_length, B, power)
    except ValueError as e:
        raise click.UsageError(str(e))

    for key in ['N', 'L', 'B', 'P', 'a0', 'sup_phi', 'cs_upper', 'm_star', 'bcrit_lo', 'bcrit_hi']:
        value = getattr(report, key)
        click.echo(f"{key} = {value:.6g}" if isinstance(value, float) else f"{key} = {value}")
    click.echo(f"bandwidth_regime = {report.bandwidth_regime.value}")

    if csv_path:
        path = Path(csv_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        pd.DataFrame([report.model_dump(mode='json')]).to_csv(path, index=False, lineterminator='\n')
        logger.info(f"Reporte de cotas escrito en {path}")


@cli.command()
@click.option('--eps', type=click.FloatRange(min=0.0), default=None, help='Exponente de ancho de banda')
@click.option('--tau', type=click.FloatRange(min=0.0), default=None, help='Exponente de longitud de bloque')
@click.option('--scenario', default=None, help='Escenario del catálogo')
def predict(eps, tau, scenario):
    """Exponentes teóricos de escalamiento en N por esquema."""
    try:
        eps, tau = resolve_exponents(eps, tau, scenario)
    except DomainError as e:
        raise click.UsageError(str(e))
    if eps is None or tau is None:
        raise click.UsageError("Se requieren --eps y --tau (o --scenario)")

    for scheme in ExponentScheme:
        prediction = predicted_exponent(scheme, eps, tau)
        click.echo(f"{scheme.value} {prediction.exponent:.12g}")
    for scheme, holds in feasibility(eps, tau).items():
        click.echo(f"# {scheme} confiable: {'sí' if holds else 'no'}")


@cli.command()
@click.option('--in', 'in_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='CSV de resultados')
@click.option('--metric', type=click.Choice(list(METRICS)), required=True, help='Métrica a graficar')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), required=True, help='Archivo SVG')
@click.option('--symbols', type=click.IntRange(min=1), default=None,
              help='Símbolos por punto usados en el barrido (piso de BER)')
def plot(in_path, metric, out_path, symbols):
    """Gráfica SVG de una métrica contra N, una serie por esquema."""
    try:
        df = ResultsCSVExtractor().extract(in_path)
    except ValueError as e:
        raise click.UsageError(str(e))

    validator = RecordValidator()
    df_val = validator.validate(df)
    if validator.invalid_count:
        for _, row in df_val[~df_val['es_valido']].iterrows():
            logger.warning(f"Fila descartada ({row['scheme']}, N={row['N']}): {row['errores_validacion']}")
    df_ok = df_val[df_val['es_valido']]
    if df_ok.empty:
        raise click.UsageError(f"{in_path} no tiene registros válidos")

    try:
        path = SvgChartLoader(symbols or settings.symbols_per_point).load(df_ok, metric, out_path)
    except Exception as e:
        logger.error(f"Error generando la gráfica: {e}")
        logger.exception("Detalle del error:")
        sys.exit(1)
    click.echo(f"Gráfica escrita en {path}")


if __name__ == '__main__':
    cli()
