from typing import Any, Dict

from src.modulos.Export_Module import escribir_atomico
from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks import oracle, spectral
from src.submodulos.walks.formatos import entero, requerir, tabla, walk_spec

MODOS = ("classical", "quantum")
REPORTES = ("resumen", "ensayos")


class OracleSearchNode(BaseNode):
    """
    OracleSearchNode corre búsquedas del vértice antipodal contra oráculos
    de nombres ocultos, una por ensayo, y agrega los resultados.

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - mode : str
        "classical" (escalera por capas) o "quantum" (paseo de T pasos).
    - seed : int
        Obligatoria; las semillas por ensayo se derivan de ella.
    - trials : int (Opcional, 1)
    - T : int (Opcional)
        Pasos del paseo cuántico; si falta se usa HitAtHalfPiM.
    - strict : bool (Opcional, True)
        Con False se permite s >= n/6 en grafos chicos.
    - max_workers : int (Opcional, 4)
    - transcript_path : str (Opcional)
        Guarda el transcript del primer ensayo.
    - reporte : str (Opcional, "resumen")
        "resumen" (una fila) o "ensayos" (una fila por ensayo).
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def _tiempo(self, spec, mode: str) -> int | None:
        if mode != "quantum":
            return None
        if self.config.get("T") is not None:
            return entero(self.config, "T", self.name, minimo=0)
        try:
            return spectral.predict_time(spec, spectral.TimeKind.HIT_AT_HALF_PI_M).T
        except ValueError as e:
            raise ValueError(f"[{self.name}] Sin 'T' explícito: {e}") from e

    def run(self, data: Any = None):
        salida = self.salida
        reporte = self.config.get("reporte", "resumen")
        mode = self.config.get("mode")
        strict = self.config.get("strict", True)
        transcript_path = self.config.get("transcript_path")

        requerir(self.config, ["mode", "seed"], self.name)
        if mode not in MODOS:
            raise ValueError(f"[{self.name}] Modo no soportado: '{mode}'. Opciones: {MODOS}")
        if reporte not in REPORTES:
            raise ValueError(f"[{self.name}] Reporte no soportado: '{reporte}'. Opciones: {REPORTES}")
        spec = walk_spec(self.config, self.name)
        seed = entero(self.config, "seed", self.name, minimo=0)
        trials = entero(self.config, "trials", self.name, defecto=1, minimo=1)
        max_workers = entero(self.config, "max_workers", self.name, defecto=4, minimo=1)
        T = self._tiempo(spec, mode)

        try:
            resumen = oracle.run_trials(
                spec.n,
                spec.s,
                mode,
                seed=seed,
                trials=trials,
                T=T,
                strict=strict,
                max_workers=max_workers,
                logger=self.logger,
                keep_transcript=bool(transcript_path),
            )
        except ValueError as e:
            raise ValueError(f"[{self.name}] {e}") from e

        if transcript_path:
            destino = escribir_atomico(resumen.first_transcript, transcript_path)
            self.logger and self.logger.info(f"[{self.name}] Transcript del ensayo 0 en {destino}")

        if reporte == "ensayos":
            filas = [
                {
                    "trial": r.index,
                    "start_name": r.start_name,
                    "answer": r.answer,
                    "queries": r.queries,
                    "success": r.success,
                    "success_probability": r.success_probability,
                }
                for r in resumen.records
            ]
        else:
            filas = [{
                "n": resumen.n,
                "s": resumen.s,
                "m": resumen.m,
                "mode": resumen.mode,
                "trials": resumen.trials,
                "T": resumen.T,
                "success_rate": resumen.success_rate,
                "mean_queries": resumen.mean_queries,
                "max_queries": resumen.max_queries,
                "mean_success_probability": resumen.mean_success_probability,
            }]
        return {salida: tabla(filas)}


class TranscriptReplayNode(BaseNode):
    """
    TranscriptReplayNode reconstruye el oráculo con la misma semilla y
    repite las consultas de un transcript. Deja en `self.fallos` la cantidad
    de respuestas que no coinciden.

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - seed : int
        Semilla de la corrida que generó el transcript (se reconstruye el
        oráculo de su ensayo 0).
    - transcript_path : str
    - strict : bool (Opcional, True)
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        salida = self.salida
        requerir(self.config, ["transcript_path", "seed"], self.name)
        spec = walk_spec(self.config, self.name)
        seed = entero(self.config, "seed", self.name, minimo=0)

        try:
            orc = oracle.make_oracle(
                spec.n, spec.s, oracle_seed(seed), strict=self.config.get("strict", True), logger=self.logger
            )
            filas = oracle.replay_transcript(orc, self.config["transcript_path"])
        except FileNotFoundError as e:
            raise RuntimeError(f"[{self.name}] No se encontró el transcript: {e}")
        except ValueError as e:
            raise ValueError(f"[{self.name}] {e}") from e

        self.fallos = sum(not f["match"] for f in filas)
        if self.logger:
            nivel = self.logger.info if not self.fallos else self.logger.error
            nivel(f"[{self.name}] {len(filas)} consultas repetidas, {self.fallos} discrepancias")
        return {salida: tabla(filas, ["index", "query_name", "k", "expected", "reply", "match"])}


def oracle_seed(seed: int):
    """Semilla del oráculo del ensayo 0 de `run_trials(seed=seed)`."""
    return oracle.trial_seeds(seed, 1)[0][0]
