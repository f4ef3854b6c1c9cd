# src/spectra/reports/__init__.py
"""
Saídas dos subcomandos: CSV com metadados, figuras SVG e as tabelas
publicadas usadas como referência.
"""

from .csv_writer import format_number, read_csv, write_csv
from .reference import ANNULUS_TABLE, CYLINDER_TABLE, QuotedValue, lookup

__all__ = ['ANNULUS_TABLE', 'CYLINDER_TABLE', 'QuotedValue', 'format_number', 'lookup', 'read_csv', 'write_csv']
