#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas del arnés de simulación: estimación de BER, tasas, barrido, análisis
de exponentes y la capa de archivos (configuración, catálogo y CSV).
"""

import sys
sys.path.append('.')

import math

import pandas as pd
import pytest
from pydantic import ValidationError

from config.settings import settings
from src.bounds.coherent import coherent_capacity_stats
from src.bounds.shape_bound import shape_capacity_ub
from src.extract.results_csv_extractor import ResultsCSVExtractor
from src.extract.scenario_catalog import ScenarioCatalog
from src.extract.sweep_config_reader import SweepConfigReader
from src.load.results_csv_loader import ResultsCSVLoader
from src.models.sweep import RESULT_COLUMNS, Scheme, SimulationMode, SweepConfig, SweepRecord
from src.models.system_config import SystemConfig
from src.modems.energy_modulation import em_constellation, em_select_params
from src.modems.pilot_assisted import pa_alpha_star
from src.numerics.entropy import binary_entropy
from src.numerics.streams import SeededStream
from src.pipelines.ber_estimator import estimate_ber
from src.pipelines.exponent_analysis import compare_exponents, empirical_exponents, records_to_frame
from src.pipelines.rates import bsc_eq_rate, nominal_rate
from src.pipelines.sweep_pipeline import SweepPipeline, point_stream, run_sweep, simulate_point
from src.transform.validators.record_validator import RecordValidator
from src.utils.errors import (
    DegenerateConstellationError,
    DomainError,
    InfeasibleParametersError,
)

SMALL_GRID = [16, 32, 64, 128, 256]


@pytest.fixture(scope='module')
def small_sweep() -> SweepConfig:
    return SweepConfig(eps=0.6, tau=0.3, n_grid=SMALL_GRID, symbols_per_point=1000, seed=7)


@pytest.fixture(scope='module')
def small_records(small_sweep):
    return run_sweep(small_sweep, workers=1)


def _record(**overrides) -> SweepRecord:
    values = {
        'scheme': 'pa', 'N': 16, 'B': 6, 'L': 3, 'M': 6, 'K': 2,
        'ber': 0.11, 'nominal_rate': 4.0, 'seed': 0,
    }
    values.update(overrides)
    values.setdefault('bsc_eq_rate', values['nominal_rate'] * (1.0 - binary_entropy(values['ber'])))
    return SweepRecord(**values)


# ---------------------------------------------------------------------------
# Tasas
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("scheme, M, L, K, expected", [
    ("em", 6, 1, 2, 6.0),
    ("em", 16, 4, 4, 8.0),
    ("fem", 16, 4, 4, 32.0),
    ("pa", 5, 2, 2, 2.5),
    ("pa", 6, 3, 2, 4.0),
])
def test_tasa_nominal(scheme, M, L, K, expected):
    assert nominal_rate(scheme, M, L, K) == pytest.approx(expected)


def test_tasa_nominal_constelacion_degenerada():
    with pytest.raises(DegenerateConstellationError):
        nominal_rate("em", 4, 1, 1)


@pytest.mark.parametrize("nominal, ber, expected", [
    (5.0, 0.11, 2.50),
    (5.0, 0.5, 0.0),
    (5.0, 0.0, 5.0),
    (5.0, 1.0, 5.0),
])
def test_tasa_equivalente_bsc(nominal, ber, expected):
    assert bsc_eq_rate(nominal, ber) == pytest.approx(expected, abs=0.01)


def test_tasa_equivalente_fuera_de_rango():
    with pytest.raises(DomainError):
        bsc_eq_rate(5.0, 1.2)


# ---------------------------------------------------------------------------
# Estimación de BER
# ---------------------------------------------------------------------------

def test_pa_sin_ruido_con_canal_perfecto():
    cfg = SystemConfig(N=16, eps=0.6, tau=0.3)
    split = pa_alpha_star(cfg.P * cfg.L / cfg.B, cfg.L)
    ber = estimate_ber("pa", cfg, split, 2000, SeededStream(0, 1), perfect_csi=True, noiseless=True)
    assert ber == 0.0


def test_ber_determinista():
    cfg = SystemConfig(N=32, eps=0.6, tau=0.3)
    params = em_select_params(cfg, SimulationMode.ALL_SUBCARRIERS)
    a = estimate_ber("em", cfg, params, 3000, SeededStream(1, 2), chunk_elements=10_000)
    b = estimate_ber("em", cfg, params, 3000, SeededStream(1, 2), chunk_elements=10_000)
    assert a == b
    assert 0.0 <= a <= 1.0


def test_ber_simbolos_invalidos():
    cfg = SystemConfig(N=16, eps=0.6, tau=0.3)
    with pytest.raises(DomainError):
        estimate_ber("em", cfg, em_select_params(cfg, SimulationMode.ALL_SUBCARRIERS), 0, SeededStream(0, 1))


def test_ber_em_decrece_con_n():
    """A (eps=0.3, tau=0) la BER de EM cae con el número de antenas."""
    bers = {}
    for N in (16, 4096):
        cfg = SystemConfig(N=N, eps=0.3, tau=0.0)
        params = em_select_params(cfg, SimulationMode.ALL_SUBCARRIERS)
        bers[N] = estimate_ber("em", cfg, params, 20_000, point_stream(0, Scheme.EM, N),
                               chunk_elements=1 << 20)
    assert bers[16] > 0.05
    assert bers[4096] < bers[16] / 10.0


def test_ber_em_cuatro_niveles():
    """Con K = 4 cada símbolo lleva 2 bits Gray; con N grande los niveles se separan sin error."""
    cfg = SystemConfig(N=4096, eps=0.0, tau=0.0)
    params = em_select_params(cfg, SimulationMode.ALL_SUBCARRIERS, K=4)
    assert em_constellation(params, cfg.P).bits_per_symbol == 2
    ber = estimate_ber("em", cfg, params, 2000, SeededStream(4, 1), chunk_elements=1 << 20)
    assert ber < 1e-3
    noisy = SystemConfig(N=2, eps=0.0, tau=0.0)
    ber = estimate_ber("em", noisy, em_select_params(noisy, SimulationMode.ALL_SUBCARRIERS, K=4),
                       2000, SeededStream(4, 2))
    assert 0.0 < ber <= 1.0


# ---------------------------------------------------------------------------
# Barrido
# ---------------------------------------------------------------------------

def test_cardinalidad_y_orden(small_records):
    assert len(small_records) == 3 * len(SMALL_GRID)
    keys = [(r.scheme.value, r.N) for r in small_records]
    assert keys == sorted(keys)
    assert {r.scheme for r in small_records} == {Scheme.EM, Scheme.FEM, Scheme.PA}


def test_identidad_de_los_registros(small_records):
    for record in small_records:
        assert record.M <= record.B
        assert record.nominal_rate == pytest.approx(nominal_rate(record.scheme, record.M, record.L, record.K))
        assert record.bsc_eq_rate == pytest.approx(
            record.nominal_rate * (1.0 - binary_entropy(record.ber)), rel=1e-12
        )
        assert record.seed == 7


def test_pa_informa_bloque_efectivo():
    sweep = SweepConfig(eps=0.6, tau=0.0, n_grid=[16], symbols_per_point=1000, schemes=['pa'])
    record = simulate_point(sweep, Scheme.PA, 16)
    assert record.L == 2
    assert record.nominal_rate == pytest.approx(record.M / 2.0)


def test_determinismo_entre_hilos(small_sweep, small_records):
    assert run_sweep(small_sweep, workers=3) == small_records


def test_determinismo_entre_corridas(small_sweep, small_records):
    assert run_sweep(small_sweep, workers=1) == small_records


def test_semilla_distinta_cambia_resultados(small_sweep, small_records):
    other = run_sweep(small_sweep.model_copy(update={'seed': 8}), workers=1)
    assert [r.ber for r in other] != [r.ber for r in small_records]


def test_estadisticas_del_pipeline(small_sweep):
    pipeline = SweepPipeline(workers=2, progress=False)
    pipeline.run(small_sweep)
    stats = pipeline.get_statistics()
    assert stats['total_points'] == 15
    assert stats['points_done'] == 15
    assert stats['records_by_scheme'] == {'em': 5, 'fem': 5, 'pa': 5}
    assert stats['end_time'] >= stats['start_time']


def test_modo_teorico_infactible():
    sweep = SweepConfig(eps=0.6, tau=0.0, n_grid=[16, 32], symbols_per_point=1000,
                        schemes=['em'], mode='theoretical')
    with pytest.raises(InfeasibleParametersError):
        run_sweep(sweep)


@pytest.mark.parametrize("kwargs", [
    {'n_grid': []},
    {'n_grid': [32, 16]},
    {'symbols_per_point': 999},
    {'schemes': ['em', 'em']},
    {'k_levels': 3},
])
def test_configuracion_de_barrido_invalida(kwargs):
    with pytest.raises(ValidationError):
        SweepConfig(eps=0.3, tau=0.0, **kwargs)


# ---------------------------------------------------------------------------
# Exponentes empíricos
# ---------------------------------------------------------------------------

def test_exponentes_requieren_tres_puntos():
    records = [_record(N=16), _record(N=32)]
    with pytest.raises(DomainError):
        empirical_exponents(records)


def test_exponentes_sin_registros():
    with pytest.raises(DomainError):
        empirical_exponents([])


def test_exponente_de_una_ley_de_potencia():
    records = [_record(N=N, ber=0.0, nominal_rate=3.0 * N ** 0.4) for N in (16, 64, 256, 1024)]
    assert empirical_exponents(records)['pa'] == pytest.approx(0.4, abs=1e-12)


def test_exponentes_ignoran_tasa_nula():
    records = [_record(N=N, ber=0.0, nominal_rate=float(N) ** 0.5) for N in (16, 64, 256, 1024)]
    records.append(_record(N=4096, ber=0.5, nominal_rate=64.0))
    assert empirical_exponents(records)['pa'] == pytest.approx(0.5, abs=1e-12)


def test_comparacion_con_la_tabla(small_records):
    table = compare_exponents(small_records, 0.6, 0.3)
    assert list(table.columns) == ['scheme', 'empirical', 'predicted', 'difference']
    assert set(table['scheme']) == {'em', 'fem', 'pa'}
    predicted = dict(zip(table['scheme'], table['predicted']))
    assert predicted == pytest.approx({'em': 0.3, 'fem': 0.5, 'pa': 0.6})
    assert (table['difference'] == table['empirical'] - table['predicted']).all()


# ---------------------------------------------------------------------------
# Archivos de resultados
# ---------------------------------------------------------------------------

def test_csv_ida_y_vuelta(tmp_path, small_records):
    path = tmp_path / 'resultados' / 'barrido.csv'
    ResultsCSVLoader().load(small_records, str(path))
    assert ResultsCSVExtractor().extract_records(str(path)) == small_records


def test_csv_identico_byte_a_byte(tmp_path, small_records):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    ResultsCSVLoader().load(small_records, str(first))
    ResultsCSVLoader().load(small_records, str(second))
    assert first.read_bytes() == second.read_bytes()
    header = first.read_text(encoding='utf-8').splitlines()[0]
    assert header == ','.join(RESULT_COLUMNS)


def test_csv_vacio(tmp_path):
    path = tmp_path / 'vacio.csv'
    path.write_text('', encoding='utf-8')
    with pytest.raises(DomainError):
        ResultsCSVExtractor().extract(str(path))


def test_csv_solo_encabezado(tmp_path):
    path = tmp_path / 'encabezado.csv'
    path.write_text(','.join(RESULT_COLUMNS) + '\n', encoding='utf-8')
    with pytest.raises(DomainError):
        ResultsCSVExtractor().extract(str(path))


def test_csv_columnas_faltantes(tmp_path):
    path = tmp_path / 'incompleto.csv'
    path.write_text('scheme,N\npa,16\n', encoding='utf-8')
    with pytest.raises(DomainError):
        ResultsCSVExtractor().extract(str(path))


def test_csv_campo_no_numerico(tmp_path):
    path = tmp_path / 'texto.csv'
    path.write_text(','.join(RESULT_COLUMNS) + '\npa,abc,6,3,6,2,0.05,3.0,2.0,0\n', encoding='utf-8')
    with pytest.raises(DomainError, match='Columna N '):
        ResultsCSVExtractor().extract(str(path))


def test_validador_de_registros(small_records):
    df = records_to_frame(small_records[:3])
    bad = pd.DataFrame([
        {**df.iloc[0].to_dict(), 'scheme': 'qam'},
        {**df.iloc[1].to_dict(), 'M': 10_000},
        {**df.iloc[2].to_dict(), 'ber': 1.5},
        {**df.iloc[0].to_dict(), 'bsc_eq_rate': df.iloc[0]['bsc_eq_rate'] + 1.0},
    ])
    validator = RecordValidator()
    result = validator.validate(pd.concat([df, bad], ignore_index=True))

    assert list(result['es_valido']) == [True, True, True, False, False, False, False]
    assert validator.valid_count == 3
    assert validator.invalid_count == 4
    assert 'Esquema desconocido' in result.loc[3, 'errores_validacion']
    assert 'M > B' in result.loc[4, 'errores_validacion']
    assert 'BER fuera de [0, 1]' in result.loc[5, 'errores_validacion']
    assert 'bsc_eq_rate' in result.loc[6, 'errores_validacion']


# ---------------------------------------------------------------------------
# Configuración y catálogo
# ---------------------------------------------------------------------------

CONFIG_TEXT = """\
# barrido de prueba
eps = 0.6
tau = 0.3          # bloque largo
n_grid = 16, 32, 64
schemes = em, pa
symbols_per_point = 2000
"""


def test_lector_de_configuracion(tmp_path):
    path = tmp_path / 'barrido.cfg'
    path.write_text(CONFIG_TEXT, encoding='utf-8')
    sweep = SweepConfigReader().read(str(path))
    assert sweep.eps == 0.6 and sweep.tau == 0.3
    assert sweep.n_grid == [16, 32, 64]
    assert sweep.schemes == [Scheme.EM, Scheme.PA]
    assert sweep.symbols_per_point == 2000


def test_configuracion_con_valores_explicitos(tmp_path):
    path = tmp_path / 'barrido.cfg'
    path.write_text(CONFIG_TEXT, encoding='utf-8')
    sweep = SweepConfigReader().read(str(path), symbols_per_point=5000, seed=None)
    assert sweep.symbols_per_point == 5000
    assert sweep.seed == 0


@pytest.mark.parametrize("text", [
    "eps = 0.3\ncolor = azul\n",
    "eps = 0.3\ntau\n",
    "eps = 0.3\neps = 0.4\n",
])
def test_configuracion_mal_formada(tmp_path, text):
    path = tmp_path / 'malo.cfg'
    path.write_text(text, encoding='utf-8')
    with pytest.raises(DomainError):
        SweepConfigReader().read_values(str(path))


def test_configuracion_inexistente(tmp_path):
    with pytest.raises(FileNotFoundError):
        SweepConfigReader().read(str(tmp_path / 'no_existe.cfg'))


def test_catalogo_de_escenarios():
    catalog = ScenarioCatalog()
    assert catalog.names() == ['banda_ancha', 'banda_estrecha', 'bloque_largo']
    assert catalog.get('bloque_largo') == {'eps': 0.6, 'tau': 0.3}
    assert catalog.get(' BANDA_ESTRECHA ') == {'eps': 0.3, 'tau': 0.0}


def test_catalogo_embebido(tmp_path):
    catalog = ScenarioCatalog(str(tmp_path / 'no_existe.json'))
    assert catalog.get('banda_ancha') == {'eps': 0.6, 'tau': 0.0}


def test_escenario_desconocido():
    with pytest.raises(DomainError):
        ScenarioCatalog().get('banda_media')


def test_archivo_de_log_opcional(monkeypatch, tmp_path):
    monkeypatch.setattr(settings, 'log_dir', None)
    assert settings.log_file('barrido') is None
    monkeypatch.setattr(settings, 'log_dir', str(tmp_path / 'logs'))
    path = settings.log_file('barrido')
    assert path.parent == tmp_path / 'logs'
    assert path.name.startswith('barrido_') and path.suffix == '.log'


# ---------------------------------------------------------------------------
# Escenarios completos (lentos)
# ---------------------------------------------------------------------------

FULL_GRID = [2 ** k for k in range(4, 13)]


def _by_scheme(records, scheme):
    return {r.N: r for r in records if r.scheme == Scheme(scheme)}


def _assert_coherent_dominance(records, eps, tau):
    """Ningún esquema supera la capacidad coherente (con margen de 3 errores estándar)."""
    for N in FULL_GRID:
        cfg = SystemConfig(N=N, eps=eps, tau=tau)
        coherent, stderr = coherent_capacity_stats(cfg, 20_000, SeededStream(0, N))
        for record in records:
            if record.N == N:
                assert record.bsc_eq_rate <= coherent + 3.0 * stderr


@pytest.mark.slow
def test_escenario_banda_estrecha():
    """Con eps = 0.3 los tres esquemas son confiables y escalan como N^0.3."""
    records = run_sweep(SweepConfig(eps=0.3, tau=0.0, n_grid=FULL_GRID), workers=settings.workers)
    exponents = empirical_exponents(records)
    for scheme in ('em', 'fem', 'pa'):
        points = _by_scheme(records, scheme)
        assert points[4096].ber <= points[16].ber / 10.0, scheme
        assert exponents[scheme] == pytest.approx(0.3, abs=0.1), scheme
    _assert_coherent_dominance(records, 0.3, 0.0)


@pytest.mark.slow
def test_escenario_banda_ancha():
    """Con eps = 0.6 y tau = 0 ningún esquema es confiable, aunque la tasa crece como N^0.5."""
    records = run_sweep(SweepConfig(eps=0.6, tau=0.0, n_grid=FULL_GRID), workers=settings.workers)
    exponents = empirical_exponents(records)
    for scheme in ('em', 'fem', 'pa'):
        assert exponents[scheme] == pytest.approx(0.5, abs=0.15), scheme
        assert _by_scheme(records, scheme)[4096].ber >= 1e-2, scheme
    _assert_coherent_dominance(records, 0.6, 0.0)


@pytest.mark.slow
def test_escenario_bloque_largo():
    """
    EM confiable con exponente cercano a 0.3, FEM sin confiabilidad y PA con el
    mayor exponente. Con 10^4 símbolos la BER de PA a N=2^12 ronda 1e-2.
    """
    records = run_sweep(SweepConfig(eps=0.6, tau=0.3, n_grid=FULL_GRID), workers=settings.workers)
    exponents = empirical_exponents(records)
    assert exponents['em'] == pytest.approx(0.3, abs=0.15)
    assert exponents['pa'] == pytest.approx(0.6, abs=0.15)
    assert exponents['fem'] == pytest.approx(0.5, abs=0.15)
    assert exponents['pa'] > exponents['em']

    assert _by_scheme(records, 'em')[4096].ber < 1e-2
    assert _by_scheme(records, 'fem')[4096].ber > 1e-1
    pa = _by_scheme(records, 'pa')
    assert pa[4096].ber < pa[16].ber

    for N, record in _by_scheme(records, 'pa').items():
        cfg = SystemConfig(N=N, eps=0.6, tau=0.3)
        assert shape_capacity_ub(cfg).cs_upper >= record.bsc_eq_rate
        coherent, stderr = coherent_capacity_stats(cfg, 20_000, SeededStream(0, N))
        assert coherent >= record.bsc_eq_rate - 3.0 * stderr
        assert not math.isnan(record.ber)
