"""
Configuração do projeto.

Este módulo expõe os padrões globais lidos do ambiente (log, diretórios,
semente, tolerâncias), usados como base pelos parâmetros de execução.

Attributes:
    Config: Classe de configuração do projeto

Example:
    >>> from config import Config
    >>> Config.PRECISION
    6
"""

from .config import Config

__all__ = ['Config']
