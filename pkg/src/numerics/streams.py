"""
Flujos aleatorios reproducibles.

Cada flujo se identifica por (semilla maestra, stream_id, ruta). La ruta permite
derivar sub-flujos (por ejemplo un lote de símbolos dentro de un punto de la
grilla) sin depender del orden en que se ejecutan los trabajos.
"""
from dataclasses import dataclass, field
from numbers import Integral
from typing import Tuple

import numpy as np

MASK_64 = (1 << 64) - 1


@dataclass
class SeededStream:
    """Flujo de números aleatorios determinista a partir de (master_seed, stream_id)."""
    master_seed: int
    stream_id: int
    path: Tuple[int, ...] = ()
    _rng: np.random.Generator = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.stream_id < 0:
            raise ValueError(f"stream_id debe ser no negativo: {self.stream_id}")
        if any(p < 0 for p in self.path):
            raise ValueError(f"Ruta de sub-flujo inválida: {self.path}")

    @property
    def rng(self) -> np.random.Generator:
        """Generador PCG64 sembrado con SeedSequence; se crea en el primer uso."""
        if self._rng is None:
            seq = np.random.SeedSequence(
                entropy=self.master_seed & MASK_64,
                spawn_key=(self.stream_id,) + tuple(self.path),
            )
            self._rng = np.random.Generator(np.random.PCG64(seq))
        return self._rng

    def child(self, index: int) -> 'SeededStream':
        """Sub-flujo independiente identificado por su índice."""
        return SeededStream(self.master_seed, self.stream_id, self.path + (index,))


def sample_cn01_array(stream: SeededStream, shape) -> np.ndarray:
    """Arreglo de muestras CN(0,1): componentes reales e imaginarias con varianza 1/2."""
    shape = (int(shape),) if isinstance(shape, Integral) else tuple(int(s) for s in shape)
    draws = stream.rng.standard_normal(size=shape + (2,))
    return (draws[..., 0] + 1j * draws[..., 1]) * np.sqrt(0.5)


def sample_cn01(stream: SeededStream) -> complex:
    """Una muestra gaussiana compleja circular de media cero y varianza total 1."""
    draws = stream.rng.standard_normal(2)
    return complex(draws[0], draws[1]) * np.sqrt(0.5)
