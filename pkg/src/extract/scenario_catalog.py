"""
Catálogo de escenarios de barrido con nombre.
Asocia un nombre corto a un par (eps, tau) de referencia.
"""
import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger

from src.utils.errors import DomainError


class ScenarioCatalog:
    """
    Escenarios de referencia para los barridos.

    Se leen de config/catalogs/escenarios.json; si el archivo no existe o no
    se puede leer, se usa el catálogo embebido.
    """

    def __init__(self, catalog_path: Optional[str] = None):
        """
        Args:
            catalog_path: Ruta al archivo de catálogo. Si no se especifica,
                         usa el catálogo por defecto.
        """
        self.catalog_path = catalog_path or self._get_default_catalog_path()
        self.scenarios = self._load_catalog()

    def _get_default_catalog_path(self) -> str:
        project_root = Path(__file__).parent.parent.parent
        return str(project_root / "config" / "catalogs" / "escenarios.json")

    def _load_catalog(self) -> Dict[str, Dict[str, Any]]:
        try:
            if os.path.exists(self.catalog_path):
                with open(self.catalog_path, 'r', encoding='utf-8') as f:
                    catalog = json.load(f)
                logger.debug(f"Catálogo de escenarios cargado desde {self.catalog_path}")
                return catalog
            logger.warning(f"Archivo de catálogo no encontrado: {self.catalog_path}")
        except Exception as e:
            logger.error(f"Error cargando catálogo de escenarios: {e}")

        logger.info("Usando catálogo de escenarios embebido")
        return {
            'banda_estrecha': {'eps': 0.3, 'tau': 0.0},
            'banda_ancha': {'eps': 0.6, 'tau': 0.0},
            'bloque_largo': {'eps': 0.6, 'tau': 0.3},
        }

    def names(self) -> List[str]:
        return sorted(self.scenarios)

    def get(self, name: str) -> Dict[str, float]:
        """
        Devuelve {'eps': ..., 'tau': ...} del escenario.

        Raises:
            DomainError: Si el nombre no existe en el catálogo
        """
        key = (name or '').strip().lower()
        if key not in self.scenarios:
            raise DomainError(f"Escenario desconocido '{name}'. Disponibles: {', '.join(self.names())}")
        entry = self.scenarios[key]
        return {'eps': float(entry['eps']), 'tau': float(entry['tau'])}
