"""Cotas de capacidad, ancho de banda crítico y exponentes de escalamiento."""
