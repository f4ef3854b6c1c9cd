# src/spectra/utils/__init__.py
from .config_manager import RUN_PARAMETERS, RunConfig, load_config_file, parse_value
from .log_config import get_logger, setup_logging

__all__ = ['RUN_PARAMETERS', 'RunConfig', 'get_logger', 'load_config_file', 'parse_value', 'setup_logging']
