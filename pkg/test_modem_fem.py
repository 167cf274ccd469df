#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas de la modulación de energía rápida (FEM): L símbolos independientes
por bloque y decisión símbolo a símbolo.
"""

import sys
sys.path.append('.')

import numpy as np
import pytest

from src.channel import apply_subchannel_batch
from src.models.modems import EnergyConstellation
from src.models.sweep import SimulationMode
from src.models.system_config import SystemConfig
from src.modems.fast_energy_modulation import (
    fem_constellation,
    fem_detect,
    fem_detect_index,
    fem_modulate,
    fem_select_params,
    fem_statistic,
)
from src.numerics.streams import SeededStream, sample_cn01_array
from src.utils.errors import DegenerateConstellationError, DomainError, InfeasibleParametersError


def test_parametros_modo_teorico():
    params = fem_select_params(SystemConfig(N=10_000, eps=0.3, tau=0.0), SimulationMode.THEORETICAL)
    assert params.M == 16
    assert params.t == pytest.approx(0.4)


def test_parametros_infactibles():
    with pytest.raises(InfeasibleParametersError):
        fem_select_params(SystemConfig(N=100, eps=0.6, tau=0.3), SimulationMode.THEORETICAL)


def test_todas_las_subportadoras():
    params = fem_select_params(SystemConfig(N=100, eps=0.6, tau=0.0), SimulationMode.ALL_SUBCARRIERS)
    assert params.M == 16
    assert params.t is None


def test_modo_teorico_limitado_por_b():
    """Con eps < 1/2 el límite N^min(eps, 1/2) coincide con B."""
    cfg = SystemConfig(N=4096, eps=0.3, tau=0.3)
    params = fem_select_params(cfg, SimulationMode.THEORETICAL)
    assert params.M == cfg.B


def test_menos_de_dos_niveles():
    with pytest.raises(DegenerateConstellationError):
        fem_select_params(SystemConfig(N=16, eps=0.3, tau=0.0), SimulationMode.ALL_SUBCARRIERS, K=1)


def test_constelacion_por_uso():
    params = fem_select_params(SystemConfig(N=100, eps=0.6, tau=0.0), SimulationMode.ALL_SUBCARRIERS)
    constellation = fem_constellation(params, 2.0)
    assert constellation.levels == pytest.approx((0.0, 0.125))
    assert constellation.mean_energy <= 2.0 / params.M


def test_modulacion_nula():
    assert np.array_equal(fem_modulate([0.0, 0.0, 0.0]), np.zeros(3))


def test_modulacion_elemento_a_elemento():
    assert np.allclose(fem_modulate([4.0, 0.0, 1.0]), [2.0, 0.0, 1.0])


def test_energia_de_la_secuencia():
    x = fem_modulate([0.5, 0.5])
    assert np.sum(np.abs(x) ** 2) == pytest.approx(1.0)


def test_energia_negativa():
    with pytest.raises(DomainError):
        fem_modulate([1.0, -0.2])


def test_decision_sintetica_sin_ruido():
    """Columna sqrt(a)·1_N sin ruido: u = a - 1."""
    N = 6
    constellation = EnergyConstellation.for_power(1, 2.0, 2)  # {0, 2}
    energies = np.array([2.5, 0.5, 4.0])
    Y = np.tile(np.sqrt(energies), (N, 1)).astype(complex)
    assert np.allclose(fem_statistic(Y), N * energies)
    assert fem_detect(Y, constellation, N) == [2.0, 0.0, 2.0]


def test_decisiones_conmutan_con_permutaciones():
    rng = np.random.default_rng(3)
    N, L = 5, 7
    Y = rng.normal(size=(N, L)) + 1j * rng.normal(size=(N, L))
    constellation = EnergyConstellation.for_power(1, 2.0, 4)
    perm = rng.permutation(L)
    base = fem_detect_index(Y, constellation, N)
    assert np.array_equal(fem_detect_index(Y[:, perm], constellation, N), base[perm])


def test_media_del_estadistico():
    """E[v_l] = N(a + 1) sobre 1e5 realizaciones."""
    N, L, a, trials = 8, 1, 0.5, 100_000
    stream = SeededStream(12, 1)
    h = sample_cn01_array(stream.child(0), (trials, N))
    x = np.tile(fem_modulate([a] * L), (trials, 1))
    Y = apply_subchannel_batch(h, x, stream.child(1))
    v = fem_statistic(Y)[:, 0]
    se = v.std(ddof=1) / np.sqrt(trials)
    assert abs(v.mean() - N * (a + 1.0)) <= 3.0 * se
