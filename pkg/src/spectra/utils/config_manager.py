# src/spectra/utils/config_manager.py
"""
Parâmetros de execução dos subcomandos.

A configuração efetiva é montada em camadas: padrões do esquema (que por sua
vez partem de `config.Config`), depois um arquivo plano `chave = valor`, depois
as flags da linha de comando. Cada valor é validado contra o esquema
`RUN_PARAMETERS` e o resultado é ecoado no cabeçalho de toda saída.

Example:
    >>> run = RunConfig.from_sources("annulus-table", overrides={"b_values": "5,10"})
    >>> run["b_values"]
    [5.0, 10.0]
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from config import Config
from spectra.errors import ConfigError

logger = logging.getLogger("ConfigManager")

TABLE_B_VALUES = "5,10,20,50,100,200,500,1000"
SWEEP_EPSILONS = "0.0001,0.0002,0.0005,0.001,0.002,0.005"

COMMANDS = ("annulus-table", "cylinder-sweep", "verify", "gap")
ALL = COMMANDS

# Parâmetros aceitos por subcomando (arquivo de configuração e flags)
RUN_PARAMETERS = {
    "out_dir": {
        "type": "text",
        "description": "Diretório das saídas CSV/SVG",
        "default": Config.OUT_DIR,
        "commands": ALL,
    },
    "csv": {
        "type": "bool",
        "description": "Gerar CSV",
        "default": True,
        "commands": ALL,
    },
    "svg": {
        "type": "bool",
        "description": "Gerar figuras SVG",
        "default": False,
        "commands": ALL,
    },
    "seed": {
        "type": "int",
        "min": 0,
        "max": 2 ** 64 - 1,
        "description": "Semente do vetor inicial do autossolver",
        "default": Config.SEED,
        "commands": ALL,
    },
    "precision": {
        "type": "int",
        "min": 1,
        "max": 15,
        "description": "Casas decimais nos campos numéricos do CSV",
        "default": Config.PRECISION,
        "commands": ALL,
    },
    "workers": {
        "type": "int",
        "min": 1,
        "max": 64,
        "description": "Threads do pool de linhas",
        "default": Config.WORKERS,
        "commands": ALL,
    },
    "a": {
        "type": "float",
        "gt": 0.0,
        "description": "Raio interno dos anéis da tabela",
        "default": 1.0,
        "commands": ("annulus-table", "gap"),
    },
    "b_values": {
        "type": "float_list",
        "description": "Raios externos (separados por vírgula)",
        "default": TABLE_B_VALUES,
        "commands": ("annulus-table", "gap"),
    },
    "n_max": {
        "type": "int",
        "min": 0,
        "max": 50,
        "description": "Maior índice angular na busca do mínimo",
        "default": 5,
        "commands": ("annulus-table",),
    },
    "s_max": {
        "type": "int",
        "min": 1,
        "max": 20,
        "description": "Ramos radiais por índice angular",
        "default": 2,
        "commands": ("annulus-table",),
    },
    "modes": {
        "type": "bool",
        "description": "Emitir também a tabela do espectro baixo com multiplicidade",
        "default": False,
        "commands": ("annulus-table",),
    },
    "h": {
        "type": "float",
        "gt": 0.0,
        "description": "Altura do cilindro",
        "default": 1.0,
        "commands": ("cylinder-sweep",),
    },
    "n_x": {
        "type": "int",
        "min": 3,
        "max": 2000,
        "description": "Pontos interiores em x (grade calibrada: 36)",
        "default": 36,
        "commands": ("cylinder-sweep",),
    },
    "n_theta": {
        "type": "int",
        "min": 4,
        "max": 2000,
        "description": "Pontos em θ (grade calibrada: 48)",
        "default": 48,
        "commands": ("cylinder-sweep",),
    },
    "epsilons": {
        "type": "float_list",
        "min": 0.0,
        "description": "Amplitudes ε da perturbação conforme",
        "default": SWEEP_EPSILONS,
        "commands": ("cylinder-sweep",),
    },
    "profile_k": {
        "type": "int",
        "min": 0,
        "max": 50,
        "description": "Frequência angular k do perfil sen(πx/h)cos(kθ)",
        "default": 1,
        "commands": ("cylinder-sweep",),
    },
    "eigen_count": {
        "type": "int",
        "min": 1,
        "max": 20,
        "description": "Autovalores discretos por linha (comparados ao espectro exato)",
        "default": 1,
        "commands": ("cylinder-sweep",),
    },
    "eigen_tol": {
        "type": "float",
        "gt": 0.0,
        "max": 1e-4,
        "description": "Tolerância de resíduo do autossolver",
        "default": Config.EIGEN_TOL,
        "commands": ("cylinder-sweep",),
    },
    "a0": {
        "type": "float",
        "gt": 0.0,
        "description": "Raio interno inicial",
        "default": 1.0,
        "commands": ("verify",),
    },
    "b0": {
        "type": "float",
        "gt": 0.0,
        "description": "Raio externo inicial",
        "default": 5.0,
        "commands": ("verify",),
    },
    "t_end": {
        "type": "float",
        "gt": 0.0,
        "description": "Tempo final da trajetória (< a0²/2)",
        "default": 0.4,
        "commands": ("verify",),
    },
    "steps": {
        "type": "int",
        "min": 1,
        "max": 10000,
        "description": "Intervalos da grade temporal",
        "default": 8,
        "commands": ("verify",),
    },
    "fd_step": {
        "type": "float",
        "gt": 0.0,
        "max": 1e-1,
        "description": "Passo das diferenças finitas em t",
        "default": Config.FD_STEP,
        "commands": ("verify",),
    },
    "richardson": {
        "type": "bool",
        "description": "Extrapolação de Richardson nas derivadas em t",
        "default": False,
        "commands": ("verify",),
    },
    "motion": {
        "type": "select",
        "options": ["csf", "frozen", "outer_expansion"],
        "description": "Movimento de fronteira na verificação de Hadamard",
        "default": "csf",
        "commands": ("verify",),
    },
    "epsilon0": {
        "type": "float",
        "gt": 0.0,
        "description": "Limiar de pequeno déficit (classificação do regime)",
        "default": 1e-2,
        "commands": ("gap",),
    },
}


# (menor, maior) validados depois de aplicar todas as fontes
ORDERED_PAIRS = (("a0", "b0"),)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return ",".join(_format_value(v) for v in value)
    return str(value)


def parse_value(key: str, raw: Any) -> Any:
    """
    Converte e valida um valor segundo o esquema.

    Raises:
        ConfigError: Chave desconhecida, tipo errado ou fora dos limites
    """
    if key not in RUN_PARAMETERS:
        raise ConfigError(f"Parâmetro desconhecido: {key}")
    schema = RUN_PARAMETERS[key]
    kind = schema["type"]

    try:
        if kind == "float":
            value = float(raw)
        elif kind == "int":
            value = int(raw)
        elif kind == "bool":
            value = raw if isinstance(raw, bool) else str(raw).strip().lower() in ("true", "1", "t", "yes", "y")
        elif kind == "float_list":
            items = raw if isinstance(raw, (list, tuple)) else [p for p in str(raw).split(",") if p.strip()]
            value = [float(item) for item in items]
            if not value:
                raise ConfigError(f"{key}: lista vazia")
        elif kind == "select":
            value = str(raw).strip()
            if value not in schema["options"]:
                raise ConfigError(f"{key}: {value!r} não está em {schema['options']}")
        else:
            value = str(raw).strip()
    except (TypeError, ValueError) as e:
        raise ConfigError(f"{key}: valor inválido {raw!r} ({e})") from e

    for item in value if isinstance(value, list) else [value]:
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            continue
        if item != item or item in (float("inf"), float("-inf")):
            raise ConfigError(f"{key}: valor não finito {item}")
        if "min" in schema and item < schema["min"]:
            raise ConfigError(f"{key}: {item} abaixo do mínimo {schema['min']}")
        if "gt" in schema and not item > schema["gt"]:
            raise ConfigError(f"{key}: {item} deve ser > {schema['gt']}")
        if "max" in schema and item > schema["max"]:
            raise ConfigError(f"{key}: {item} acima do máximo {schema['max']}")
    return value


def load_config_file(path, embedded: bool = False) -> Dict[str, str]:
    """
    Lê um arquivo plano `chave = valor` (linhas com # são comentários).

    Com `embedded=True` lê as linhas `# chave = valor` do cabeçalho de um CSV
    gerado pelo spectra, parando no cabeçalho das colunas; chaves que não são
    parâmetros (versão, subcomando) são ignoradas.
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Arquivo de configuração não encontrado: {path}")

    values: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            line = line.strip()
            if embedded:
                if not line.startswith("#"):
                    break
                line = line.lstrip("#").strip()
                if "=" not in line:
                    continue
                key, raw = (part.strip() for part in line.split("=", 1))
                if key in RUN_PARAMETERS:
                    values[key] = raw
                continue
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{number}: linha sem '=': {line!r}")
            key, raw = (part.strip() for part in line.split("=", 1))
            if key not in RUN_PARAMETERS:
                raise ConfigError(f"{path}:{number}: parâmetro desconhecido {key!r}")
            values[key] = raw

    logger.info(f"Configuração carregada de {path} ({len(values)} parâmetros)")
    return values


@dataclass
class RunConfig:
    """
    Configuração efetiva de uma execução.

    Attributes:
        subcommand: Nome do subcomando
        values: Valores validados dos parâmetros do subcomando
        sources: Origem de cada valor ("default", "file" ou "cli")
    """
    subcommand: str
    values: Dict[str, Any] = field(default_factory=dict)
    sources: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.subcommand not in COMMANDS:
            raise ConfigError(f"Subcomando desconhecido: {self.subcommand}")
        for key in self.parameter_names():
            if key not in self.values:
                self.values[key] = parse_value(key, RUN_PARAMETERS[key]["default"])
                self.sources[key] = "default"

    def parameter_names(self) -> List[str]:
        return [key for key, schema in RUN_PARAMETERS.items() if self.subcommand in schema["commands"]]

    def set(self, key: str, raw: Any, source: str = "cli"):
        if key not in self.parameter_names():
            raise ConfigError(f"Parâmetro {key!r} não se aplica a '{self.subcommand}'")
        self.values[key] = parse_value(key, raw)
        self.sources[key] = source

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    def get(self, key: str, default=None):
        return self.values.get(key, default)

    @classmethod
    def from_sources(cls, subcommand: str, config_file: Optional[str] = None,
                     overrides: Optional[Dict[str, Any]] = None) -> "RunConfig":
        """
        Padrões, depois arquivo (um CSV do spectra também serve), depois flags.

        Raises:
            ConfigError: Qualquer valor inválido
        """
        run = cls(subcommand)
        if config_file:
            embedded = Path(config_file).suffix.lower() == ".csv"
            for key, raw in load_config_file(config_file, embedded=embedded).items():
                if key in run.parameter_names():
                    run.set(key, raw, source="file")
                else:
                    logger.debug(f"Parâmetro {key} ignorado para '{subcommand}'")
        for key, raw in (overrides or {}).items():
            if raw is not None:
                run.set(key, raw, source="cli")
        run.check_ordering()
        return run

    def check_ordering(self) -> None:
        """Pares que precisam de ordem estrita, como a0 < b0."""
        for lower, upper in ORDERED_PAIRS:
            if lower in self.values and upper in self.values and not self.values[lower] < self.values[upper]:
                raise ConfigError(f"{lower} = {self.values[lower]} deve ser menor que {upper} = {self.values[upper]}")

    def to_metadata(self) -> List[Tuple[str, str]]:
        """Pares (chave, valor) da configuração efetiva, na ordem do esquema."""
        return [(key, _format_value(self.values[key])) for key in self.parameter_names()]
