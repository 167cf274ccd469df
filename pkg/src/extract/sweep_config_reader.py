"""Lector de archivos de configuración de barrido en formato plano `clave = valor`."""
from pathlib import Path
from typing import Any, Dict

from loguru import logger

from src.models.sweep import SweepConfig
from src.utils.errors import DomainError

CONFIG_KEYS = set(SweepConfig.model_fields)
LIST_KEYS = {'n_grid', 'schemes'}


class SweepConfigReader:
    """Lee un archivo de barrido; `#` inicia un comentario y las claves desconocidas se rechazan."""

    def read_values(self, path: str) -> Dict[str, Any]:
        """
        Valores crudos del archivo, con n_grid y schemes ya separados por comas.

        Raises:
            DomainError: Línea mal formada, clave desconocida o repetida
        """
        config_path = Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Archivo de configuración no encontrado: {path}")

        values: Dict[str, Any] = {}
        with open(config_path, 'r', encoding='utf-8') as f:
            for line_number, raw in enumerate(f, start=1):
                line = raw.split('#', 1)[0].strip()
                if not line:
                    continue
                if '=' not in line:
                    raise DomainError(f"{path}:{line_number}: se esperaba 'clave = valor'")
                key, value = (part.strip() for part in line.split('=', 1))
                if key not in CONFIG_KEYS:
                    raise DomainError(f"{path}:{line_number}: clave desconocida '{key}'")
                if key in values:
                    raise DomainError(f"{path}:{line_number}: clave repetida '{key}'")
                if key in LIST_KEYS:
                    values[key] = [item.strip() for item in value.split(',') if item.strip()]
                else:
                    values[key] = value

        logger.debug(f"Configuración de barrido leída de {path}: {sorted(values)}")
        return values

    def read(self, path: str, **overrides: Any) -> SweepConfig:
        """SweepConfig del archivo; los valores explícitos de `overrides` tienen prioridad."""
        values = self.read_values(path)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SweepConfig(**values)
