"""Transceptores: modulación de energía (EM, FEM) y esquema con piloto (PA)."""
