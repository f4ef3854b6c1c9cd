# src/spectra/utils/log_config.py
import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

from config import Config

# Tema com cores por categoria
custom_theme = Theme({
    "info": "green",
    "warning": "yellow",
    "error": "bold red",
    "critical": "bold white on red",
    "solver": "magenta",
    "bessel": "blue",
    "annulus": "cyan",
    "fd": "dark_orange",
    "flow": "purple",
})

console = Console(theme=custom_theme, stderr=True)

# Categoria inferida do nome do logger
CATEGORY_KEYWORDS = (
    ("linalg", "SOLVER"),
    ("solver", "SOLVER"),
    ("bessel", "BESSEL"),
    ("annulus", "ANNULUS"),
    ("cylinder", "FD"),
    ("flow", "FLOW"),
    ("cli", "CLI"),
    ("report", "CLI"),
    ("plot", "CLI"),
)

_session_file: Optional[Path] = None


def category_for(name: str) -> str:
    lowered = name.lower()
    for keyword, category in CATEGORY_KEYWORDS:
        if keyword in lowered:
            return category
    return "SYSTEM"


class CategoryFilter(logging.Filter):
    """Anexa a categoria ao registro quando ela não veio em `extra`."""

    def filter(self, record):
        if not hasattr(record, "category"):
            record.category = category_for(record.name)
        return True


class CategoryFormatter(logging.Formatter):
    """Formato do arquivo de sessão, com a categoria nos níveis INFO e DEBUG."""

    FORMATS = {
        logging.DEBUG: "%(asctime)s - [DEBUG/%(category)s] %(name)s: %(message)s",
        logging.INFO: "%(asctime)s - [%(category)s] %(message)s",
        logging.WARNING: "%(asctime)s - [WARN] %(name)s: %(message)s",
        logging.ERROR: "%(asctime)s - [ERROR] %(name)s: %(message)s",
        logging.CRITICAL: "%(asctime)s - [CRITICAL] %(name)s: %(message)s",
    }

    def format(self, record):
        if not hasattr(record, "category"):
            record.category = category_for(record.name)
        formatter = logging.Formatter(self.FORMATS.get(record.levelno))
        return formatter.format(record)


def setup_logging(level: Optional[str] = None, log_dir: Optional[str] = None, to_file: bool = True) -> Optional[Path]:
    """
    Configura o logging: console com rich e, opcionalmente, arquivo de sessão.

    Args:
        level: Nível do console (padrão Config.LOG_LEVEL)
        log_dir: Diretório do arquivo de sessão (padrão Config.LOG_DIR)
        to_file: Se False, só o console

    Returns:
        Optional[Path]: Caminho do arquivo de sessão
    """
    global _session_file

    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        handler.close()

    console_handler = RichHandler(console=console, rich_tracebacks=True, show_path=False)
    console_handler.setLevel((level or Config.LOG_LEVEL).upper())
    console_handler.addFilter(CategoryFilter())
    root_logger.addHandler(console_handler)
    root_logger.setLevel(logging.DEBUG if to_file else console_handler.level)

    _session_file = None
    if to_file:
        directory = Path(log_dir or Config.LOG_DIR)
        directory.mkdir(parents=True, exist_ok=True)
        current_time = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        _session_file = directory / f"spectra_session_{current_time}.log"
        file_handler = logging.FileHandler(_session_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(CategoryFormatter())
        root_logger.addHandler(file_handler)
        logging.info(f"Log sendo salvo em: {_session_file}", extra={"category": "SYSTEM"})

    return _session_file


def get_logger(name: str, category: Optional[str] = None) -> logging.LoggerAdapter:
    """Logger cujos registros carregam a categoria (inferida do nome se omitida)."""
    return logging.LoggerAdapter(logging.getLogger(name), {"category": category or category_for(name)})
