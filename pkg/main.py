import os
import sys
import time
import argparse

import yaml

from config.logging_utils import Logger
from config.load_config import RunConfigError, cargar_envars, validar_run_config, validate_file_path
from src.pipeline_engine.pipeline_loader import PipelineLoader

EXIT_OK = 0
EXIT_FALLO = 1
EXIT_USO = 2


def _comunes(p: argparse.ArgumentParser, con_grafo: bool = True) -> None:
    if con_grafo:
        p.add_argument("--n", type=int, required=True, help="Dimensión del cubo Z_2^n")
        p.add_argument("--s", type=int, required=True, help="Peso de los generadores")
    p.add_argument("--format", choices=["csv", "json"], default="csv", help="Formato de exportación")
    p.add_argument("--out", type=str, default="-", help="Archivo de salida ('-' para stdout)")
    p.add_argument("--ver-cli", action="store_true", help="Para ejecutar logs en cli (stderr)")


def build_parser() -> argparse.ArgumentParser:
    """
    Parser con un subcomando por operación. Los subcomandos de cálculo
    arman un pipeline nodo de cálculo → nodo de exportación; `pipeline`
    ejecuta un YAML arbitrario.
    """
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Caminatas cuánticas con moneda de Grover sobre Cay(Z_2^n, S)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("spectrum", help="Tabla espectral (k, d_k, kravchuk, cos, omega, paridad)")
    _comunes(p)
    p.add_argument("--reporte", choices=["tabla", "cota", "pesos"], default="tabla")

    p = sub.add_parser("curve", help="Probabilidades de retorno y llegada por t")
    _comunes(p)
    p.add_argument("--t-max", "--t", dest="t_max", type=int, required=True)
    p.add_argument("--t-min", dest="t_min", type=int, default=None)

    p = sub.add_parser("predict", help="Tiempo predicho de retorno o llegada")
    _comunes(p)
    p.add_argument("--kind", choices=["ReturnAtPiM", "ReturnAtHalfPiM", "HitAtHalfPiM"], required=True)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--epsilon", type=int, default=None)

    p = sub.add_parser("verify", help="Suites de verificación de invariantes")
    _comunes(p, con_grafo=False)
    p.add_argument("--suite", action="append", required=True, help="Nombre de suite o 'all' (repetible)")
    p.add_argument("--n-max", dest="n_max", type=int, default=None)

    p = sub.add_parser("oracle", help="Búsqueda del vértice antipodal con oráculo de nombres")
    _comunes(p)
    p.add_argument("--mode", choices=["classical", "quantum"], default="classical")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--t", type=int, default=None, help="Pasos del paseo cuántico")
    p.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--transcript", type=str, default=None, help="Guarda el transcript del ensayo 0")
    p.add_argument("--replay", type=str, default=None, help="Repite un transcript contra el oráculo de --seed")
    p.add_argument("--reporte", choices=["resumen", "ensayos"], default="resumen")

    p = sub.add_parser("measured", help="Paseo medido en 0^n desde T0")
    _comunes(p)
    p.add_argument("--t0", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--t-p", dest="t_p", type=int, default=None, help="Con T_p se reporta la cota de absorción")
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--fuente", choices=["spectral", "projective"], default="spectral")
    p.add_argument("--gap", action="store_true", help="Reporta la brecha entre alphas pares")

    p = sub.add_parser("layers", help="Relaciones entre capas de peso")
    _comunes(p)
    p.add_argument("--reporte", choices=["vecinos", "k", "comunes", "tamanos"], default="vecinos")

    p = sub.add_parser("dense", help="Simulación densa del paseo")
    _comunes(p)
    p.add_argument("--t-max", "--t", dest="t_max", type=int, required=True)
    p.add_argument("--vertex", type=int, default=None)
    p.add_argument("--modo", choices=["proyecciones", "capas", "distribucion", "estado"], default="proyecciones")

    p = sub.add_parser("pipeline", help="Ejecuta un archivo YAML de pipeline")
    p.add_argument("--yaml", type=str, required=True, help="Ruta hacia el archivo YAML")
    p.add_argument("--entry", type=str, required=False, help="Nodo desde el que se inicia la ejecución")
    p.add_argument("--validate-only", action="store_true", help="Solo valida el YAML sin ejecutarlo")
    p.add_argument("--ver-cli", action="store_true", help="Para ejecutar logs en cli (stderr)")

    return parser


def _nodo_calculo(cfg: dict) -> tuple[str, dict]:
    """Tipo y config del nodo de cálculo para un subcomando ya validado."""
    grafo = {"n": cfg.get("n"), "s": cfg.get("s")}
    sub = cfg["subcommand"]

    if sub == "spectrum":
        return "SpectrumNode", {**grafo, "reporte": cfg.get("reporte", "tabla")}
    if sub == "curve":
        return "CurveNode", {**grafo, "t_max": cfg["t_max"], "t_min": cfg.get("t_min", 0)}
    if sub == "predict":
        conf = {**grafo, "kind": cfg["kind"], "epsilon": cfg.get("epsilon")}
        if "beta" in cfg:
            conf["beta"] = cfg["beta"]
        return "PredictTimeNode", conf
    if sub == "verify":
        suites = "all" if "all" in cfg["suite"] else cfg["suite"]
        return "VerifySuiteNode", {"suites": suites, "n_max": cfg.get("n_max")}
    if sub == "oracle":
        if "replay" in cfg:
            return "TranscriptReplayNode", {
                **grafo,
                "seed": cfg["seed"],
                "transcript_path": cfg["replay"],
                "strict": cfg.get("strict", True),
            }
        return "OracleSearchNode", {
            **grafo,
            "mode": cfg["mode"],
            "seed": cfg["seed"],
            "trials": cfg.get("trials", 1),
            "T": cfg.get("t"),
            "strict": cfg.get("strict", True),
            "max_workers": cfg.get("workers", 4),
            "transcript_path": cfg.get("transcript"),
            "reporte": cfg.get("reporte", "resumen"),
        }
    if sub == "measured":
        if "t_p" in cfg:
            return "AbsorptionCheckNode", {
                **grafo, "T0": cfg["t0"], "T_p": cfg["t_p"], "T": cfg["t"], "c": cfg.get("c", 1.0),
            }
        if cfg.get("gap"):
            return "EvenGapNode", {**grafo, "t_max": cfg["t"]}
        return "MeasuredTraceNode", {**grafo, "T0": cfg["t0"], "T": cfg["t"], "fuente": cfg.get("fuente", "spectral")}
    if sub == "layers":
        return "LayersNode", {**grafo, "reporte": cfg.get("reporte", "vecinos")}
    if sub == "dense":
        return "DenseEvolutionNode", {
            **grafo, "t_max": cfg["t_max"], "vertex": cfg.get("vertex", 0), "modo": cfg.get("modo", "proyecciones"),
        }
    raise RunConfigError(f"Subcomando sin nodo de cálculo: {sub}")


def pipeline_for(cfg: dict) -> dict:
    """
    Pipeline en memoria, con la misma forma que un YAML: nodo de cálculo
    conectado al escritor del formato pedido.
    """
    tipo, conf = _nodo_calculo(cfg)
    escritor = "JSONWriterNode" if cfg.get("format") == "json" else "CSVWriterNode"
    return {
        "pipeline": {
            "name": f"cli_{cfg['subcommand']}",
            "entrypoint": "Calculo",
            "nodes": [
                {
                    "name": "Calculo",
                    "type": tipo,
                    "params": {"config": {k: v for k, v in conf.items() if v is not None}},
                    "outputs": ["Exportar"],
                },
                {
                    "name": "Exportar",
                    "type": escritor,
                    "params": {"config": {"file_path": cfg.get("out", "-")}},
                },
            ],
        }
    }


def main(argv: list[str] | None = None) -> int:
    """
    Punto de entrada principal.

    - Parsea y valida argumentos (errores de uso: código 2, sin calcular nada).
    - Construye el pipeline del subcomando, o carga el YAML de `pipeline`.
    - Ejecuta y devuelve 1 si algún nodo reporta fallos o hay un error
      inesperado, 0 en otro caso.
    """
    start_time = time.time()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USO if e.code else EXIT_OK

    cargar_envars()
    logger = Logger(os.getenv("log_dir", None), args.ver_cli).get_logger()
    loader = PipelineLoader(logger)

    try:
        if args.subcommand == "pipeline":
            yaml_path = validate_file_path(args.yaml, (".yaml", ".yml"))
            engine, default_entry, name = loader.build_pipeline_from_yaml(yaml_path)
            logger.info(f"[START] Se inicializa pipeline {name} con YAML: {yaml_path}")
        else:
            cfg = validar_run_config(vars(args))
            engine, default_entry, name = loader.build_pipeline_from_dict(pipeline_for(cfg))
            logger.info(f"[START] Subcomando {args.subcommand}: {cfg}")
    except (RunConfigError, FileNotFoundError, ValueError, TypeError, yaml.YAMLError) as e:
        logger.error(f"[USAGE] {e}")
        print(f"qwalk: error: {e}", file=sys.stderr)
        return EXIT_USO

    if getattr(args, "validate_only", False):
        logger.info("[VALIDATE] Validación exitosa del YAML. Ejecución omitida por --validate-only.")
        return EXIT_OK

    entry_node = getattr(args, "entry", None) or default_entry
    engine.logger = logger

    try:
        logger.info(f"[RUN] Iniciando desde nodo: {entry_node}")
        engine.run(entry_node)
    except Exception as e:
        logger.exception(f"[ERROR] Error inesperado, detalle técnico: {e}")
        print(f"qwalk: error: {e}", file=sys.stderr)
        return EXIT_FALLO

    fallos = engine.total_fallos
    elapsed_time = time.time() - start_time
    logger.info(f"[COMPLETE] Pipeline {name} finalizado en {elapsed_time:.2f} segundos, fallos={fallos}")
    return EXIT_FALLO if fallos else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
