# src/spectra/main.py
"""
main.py

Ponto de entrada da CLI `spectra`.

Subcomandos:
- annulus-table: tabela do anel (E, D, √D, λ_ann, λ_cyl) por raio externo;
- cylinder-sweep: varredura em ε no cilindro perturbado;
- verify: identidades de Topping e Hadamard ao longo do CSF;
- gap: lacuna λ(A) - λ_cyl(h) e regime de déficit.

Códigos de saída: 0 = ok, 1 = falha de banda numérica, 2 = configuração
inválida, 3 = falha de convergência de solver.
"""

import argparse
import logging
import sys
from typing import List, Optional

from spectra import __version__
from spectra.errors import SpectraError
from spectra.reports.commands import COMMANDS
from spectra.utils.config_manager import RUN_PARAMETERS, RunConfig
from spectra.utils.log_config import setup_logging

logger = logging.getLogger("CLI")

HELP = {
    "annulus-table": "Tabela do anel com a = 1 e diagnósticos de Bessel",
    "cylinder-sweep": "Varredura em ε do cilindro com perturbação conforme",
    "verify": "Resíduos das identidades variacionais ao longo do CSF",
    "gap": "Lacuna espectral e regime de déficit por anel",
}


def _flag(key: str) -> str:
    return "--" + key.replace("_", "-")


def _add_parameters(parser: argparse.ArgumentParser, command: str):
    for key, schema in RUN_PARAMETERS.items():
        if command not in schema["commands"]:
            continue
        help_text = f"{schema['description']} (padrão: {schema['default']})"
        if schema["type"] == "bool":
            parser.add_argument(_flag(key), dest=key, action=argparse.BooleanOptionalAction, default=None,
                                help=help_text)
        elif schema["type"] == "select":
            parser.add_argument(_flag(key), dest=key, choices=schema["options"], default=None, help=help_text)
        else:
            # validação fica no esquema, para que arquivo e flag falhem igual
            parser.add_argument(_flag(key), dest=key, default=None, metavar=key.upper(), help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra",
        description="Autovalores de Dirichlet, capacidade e déficit de Hessiana em anéis e cilindros",
    )
    parser.add_argument("--version", action="version", version=f"spectra {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        sub = subparsers.add_parser(command, help=HELP[command], description=HELP[command])
        sub.add_argument("--config", help="Arquivo chave = valor (ou um CSV do spectra) com os parâmetros")
        sub.add_argument("--log-level", default=None, help="Nível do log no console (padrão: SPECTRA_LOG_LEVEL)")
        sub.add_argument("--no-log-file", action="store_true", help="Não grava o arquivo de sessão em logs/")
        _add_parameters(sub, command)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Executa a CLI e devolve o código de saída sem encerrar o processo.

    Args:
        argv: Argumentos (padrão sys.argv[1:])

    Returns:
        int: 0, 1, 2 ou 3
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse usa 2 para erro de uso, o mesmo código de configuração inválida
        return int(e.code or 0)

    setup_logging(level=args.log_level, to_file=not args.no_log_file)

    overrides = {key: getattr(args, key) for key, schema in RUN_PARAMETERS.items()
                 if args.command in schema["commands"]}
    try:
        run_config = RunConfig.from_sources(args.command, config_file=args.config, overrides=overrides)
        logger.info(f"spectra {__version__} {args.command}: "
                    + ", ".join(f"{key}={value}" for key, value in run_config.to_metadata()))
        code = COMMANDS[args.command](run_config)
    except SpectraError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except KeyboardInterrupt:
        logger.warning("Interrompido pelo usuário")
        return 130

    logger.info(f"{args.command} finalizado com código {code}")
    return code


def main(argv: Optional[List[str]] = None):
    """Função principal para execução como script (console script `spectra`)."""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
