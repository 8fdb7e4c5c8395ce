import os
import yaml
from pathlib import Path
from typing import Any

from cerberus import Validator
from dotenv import load_dotenv

from config.schema_pipeline.run_schema import run_schema
from src.submodulos.walks.core_math import WalkSpec, binom
from src.submodulos.walks.dense_sim import N_MAX_EXHAUSTIVO
from src.submodulos.walks.measured import N_MAX_PROYECTIVO
from src.submodulos.walks.oracle import N_MAX_ORACULO
from src.submodulos.walks.verify import SUITES, resolver_tope


ENVPATHS = Path(__file__).parent / "envpaths.yaml"


class RunConfigError(ValueError):
    """Configuración de corrida inválida: el CLI termina con código 2 sin calcular nada."""


def cargar_envars(dotenv_path: str | None = None) -> dict[str, str]:
    """
        Exporta como variables de entorno las rutas del entorno `RUNNING_ENV`
        (por defecto "local") definidas en envpaths.yaml.

        Primero se lee `.env` con python-dotenv; ni sus valores ni los que ya
        estén en el entorno se sobrescriben, así que un `path_resultados`
        exportado a mano gana sobre el YAML.

        Returns:
        -----
            dict: Las variables efectivas de ese entorno.

        Raises:
        ------
            ValueError: Si `RUNNING_ENV` no está definido en envpaths.yaml.
    """
    load_dotenv(dotenv_path, override=False)

    with open(ENVPATHS, "r", encoding="utf-8") as f:
        entornos = (yaml.safe_load(f) or {}).get("paths", {})

    running_env = os.getenv("RUNNING_ENV", "local")
    if running_env not in entornos:
        raise ValueError(f"RUNNING_ENV='{running_env}' no existe en {ENVPATHS.name}: {sorted(entornos)}")

    return {clave: os.environ.setdefault(clave, str(ruta)) for clave, ruta in entornos[running_env].items()}


def validate_file_path(path: str, extensions: tuple) -> Path:
    """Ruta absoluta de `path`; debe existir y terminar en alguna de `extensions`."""
    ruta = Path(path).expanduser().resolve()
    if ruta.suffix not in extensions:
        raise ValueError(f"'{ruta.name}' no tiene una extensión válida {extensions}")
    if not ruta.is_file():
        raise FileNotFoundError(f"El archivo no fue encontrado: {ruta}")
    return ruta


def _spec(cfg: dict) -> WalkSpec:
    try:
        return WalkSpec(cfg["n"], cfg["s"])
    except ValueError as e:
        raise RunConfigError(str(e)) from e


def validar_run_config(args: dict[str, Any]) -> dict[str, Any]:
    """
        Valida la configuración de corrida de un subcomando: primero la forma
        con Cerberus (`run_schema`) y luego las reglas del dominio que cruzan
        campos.

        Args:
        -----
            args (dict): Argumentos del CLI; las claves con valor None se ignoran.

        Returns:
        -----
            dict: Configuración normalizada.

        Raises:
        ------
            RunConfigError: Ante cualquier violación, antes de calcular nada.
    """
    cfg = {k: v for k, v in args.items() if v is not None}
    subcomando = cfg.get("subcommand")
    if subcomando not in run_schema:
        raise RunConfigError(f"Subcomando desconocido: {subcomando}")

    validator = Validator(run_schema[subcomando])
    if not validator.validate(cfg):
        raise RunConfigError(f"Configuración inválida para '{subcomando}': {validator.errors}")
    cfg = validator.document

    if subcomando == "verify":
        desconocidas = [s for s in cfg["suite"] if s != "all" and s not in SUITES]
        if desconocidas:
            raise RunConfigError(f"Suites desconocidas: {desconocidas}. Disponibles: {', '.join(SUITES)}")
        if "all" not in cfg["suite"]:
            for nombre in cfg["suite"]:
                try:
                    resolver_tope(nombre, cfg.get("n_max"))
                except ValueError as e:
                    raise RunConfigError(str(e)) from e
        return cfg

    spec = _spec(cfg)

    if subcomando == "predict":
        beta = cfg.get("beta")
        if beta is not None and not 0.25 < beta < 0.5:
            raise RunConfigError(f"beta debe estar en (1/4, 1/2), se recibió {beta}")

    elif subcomando == "oracle":
        if spec.n > N_MAX_ORACULO:
            raise RunConfigError(f"El oráculo se materializa completo, se requiere n <= {N_MAX_ORACULO}")
        if 6 * spec.s >= spec.n and cfg.get("strict", True):
            raise RunConfigError(
                f"Se requiere s < n/6 para que el vértice antipodal sea único (n={spec.n}, s={spec.s}); "
                "use --no-strict para grafos chicos"
            )
        if cfg["mode"] == "quantum" and "t" not in cfg and binom(spec.n - 1, spec.s - 1) % 2 == 0:
            raise RunConfigError(
                f"Sin --t, el modo cuántico usa HitAtHalfPiM, que requiere C(n-1,s-1) impar "
                f"(n={spec.n}, s={spec.s})"
            )
        if "replay" in cfg and "transcript" in cfg:
            raise RunConfigError("--replay y --transcript son excluyentes")

    elif subcomando == "measured":
        if spec.s % 2 == 0:
            raise RunConfigError(f"El paseo medido se define para s impar, se recibió s={spec.s}")
        if cfg["t0"] % 2 != 0:
            raise RunConfigError(f"T0 debe ser par, se recibió {cfg['t0']}")
        if "t_p" in cfg and not cfg["t0"] <= cfg["t_p"] < cfg["t"]:
            raise RunConfigError(f"Se requiere T0 <= T_p < T, se recibió T0={cfg['t0']}, T_p={cfg['t_p']}, T={cfg['t']}")
        if cfg.get("fuente") == "projective" and spec.n > N_MAX_PROYECTIVO:
            raise RunConfigError(f"La fuente proyectiva requiere n <= {N_MAX_PROYECTIVO}")
        if "c" in cfg and cfg["c"] <= 0:
            raise RunConfigError(f"c debe ser > 0, se recibió {cfg['c']}")
        if cfg.get("gap") and cfg["t"] < 2:
            raise RunConfigError("--gap requiere T >= 2")

    elif subcomando == "dense":
        if spec.n > N_MAX_EXHAUSTIVO:
            raise RunConfigError(f"La simulación densa requiere n <= {N_MAX_EXHAUSTIVO}")
        if cfg.get("vertex", 0) >= 1 << spec.n:
            raise RunConfigError(f"El vértice debe ser < 2^n = {1 << spec.n}")

    return cfg
