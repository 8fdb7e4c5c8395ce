import logging
import os
import re
from typing import Any

import yaml
from cerberus import Validator

from config.logging_utils import LOGGER_NAME
from config.schema_pipeline.pipeline_schema import pipeline_schema
from src.pipeline_engine.NodesRegistry import available_nodes, get_node_class
from src.pipeline_engine.PipelineEngine import PipelineEngine

_PLACEHOLDER = re.compile(r"\$\{(\w+)\}")


class PipelineLoader:
    """
    Arma un PipelineEngine a partir de un YAML o de un dict con la misma forma.

    Pasos: resolver `${VAR}` con el entorno, validar con Cerberus, instanciar
    los nodos, conectar salidas, comprobar que cada conexión entrega la clave
    que el hijo espera y que el grafo no tiene ciclos.
    """

    def __init__(self, logger: logging.Logger | None = None):
        self.logger = logger or logging.getLogger(LOGGER_NAME)

    def resolve_env_vars(self, obj: Any) -> Any:
        """
            Sustituye recursivamente cada `${VAR}` por el valor de la variable de entorno.

            Raises:
                ValueError: Lista todas las variables referenciadas que no están definidas.
        """
        faltantes = set()

        def _sustituir(match: re.Match) -> str:
            valor = os.environ.get(match.group(1))
            if valor is None:
                faltantes.add(match.group(1))
                return match.group(0)
            return valor

        def _recorrer(valor: Any) -> Any:
            if isinstance(valor, dict):
                return {k: _recorrer(v) for k, v in valor.items()}
            if isinstance(valor, list):
                return [_recorrer(v) for v in valor]
            if isinstance(valor, str):
                return _PLACEHOLDER.sub(_sustituir, valor)
            return valor

        resuelto = _recorrer(obj)
        if faltantes:
            self.logger.error(f"[ENV] Variables de entorno no definidas: {sorted(faltantes)}")
            raise ValueError(f"Variable de entorno no definida: {', '.join(sorted(faltantes))}")
        return resuelto

    def validate_pipeline_schema(self, config: dict) -> None:
        validator = Validator(pipeline_schema)
        if not validator.validate(config):
            self.logger.error(f"[SCHEMA] Configuración inválida del pipeline {validator.errors}")
            raise ValueError(f"Configuración inválida del pipeline: {validator.errors}")

    def validar_claves(self, origen, destino) -> None:
        """
            Comprueba que `destino` pueda consumir lo que entrega `origen`: si el
            destino declara `required_inputs`, la clave de salida del origen
            (`salida`, "data" por defecto) tiene que estar entre ellas.

            Raises:
                ValueError: Si la clave no coincide.
        """
        required = getattr(destino, "required_inputs", None)
        clave = getattr(origen, "salida", None)
        if not required or clave is None:
            return
        if clave not in required:
            self.logger.error(f"[LINK] {origen.name} entrega '{clave}', {destino.name} espera {required}")
            raise ValueError(
                f"El nodo '{origen.name}' entrega la clave '{clave}' pero '{destino.name}' espera {required}"
            )

    def _verificar_aciclico(self, node_map: dict) -> None:
        estado = {}  # 1 = en recorrido, 2 = terminado

        def _visitar(nodo, camino):
            estado[nodo.name] = 1
            for hijo in nodo.outputs:
                if estado.get(hijo.name) == 1:
                    ciclo = " → ".join([*camino, nodo.name, hijo.name])
                    raise ValueError(f"El pipeline tiene un ciclo: {ciclo}")
                if hijo.name not in estado:
                    _visitar(hijo, [*camino, nodo.name])
            estado[nodo.name] = 2

        for nodo in node_map.values():
            if nodo.name not in estado:
                _visitar(nodo, [])

    def instantiate_nodes(self, pipeline_config: dict) -> tuple[PipelineEngine, dict]:
        """
            Crea los nodos y sus conexiones.

            Returns:
                tuple[PipelineEngine, dict]: el motor y un diccionario nombre -> nodo.

            Raises:
                ValueError: Tipos desconocidos, nombres repetidos, salidas hacia
                    nodos inexistentes, claves incompatibles o ciclos.
        """
        nodos_conf = pipeline_config["nodes"]

        desconocidos = sorted({c["type"] for c in nodos_conf} - set(available_nodes()))
        if desconocidos:
            self.logger.error(f"[NODE] Tipos no soportados: {desconocidos}")
            raise ValueError(f"Tipo de nodo no soportado: {', '.join(desconocidos)}")

        engine = PipelineEngine()
        node_map = {}
        for conf in nodos_conf:
            if conf["name"] in node_map:
                raise ValueError(f"Nombre de nodo repetido en el pipeline: '{conf['name']}'")
            node = get_node_class(conf["type"])(conf["name"], **conf.get("params", {}))
            node_map[node.name] = node
            engine.add_node(node)
            self.logger.debug(f"[NODE] Instanciado nodo: {node.name} ({conf['type']})")

        for conf in nodos_conf:
            node = node_map[conf["name"]]
            for destino in conf.get("outputs", []):
                if destino not in node_map:
                    self.logger.error(f"[LINK] {node.name} → '{destino}' no existe")
                    raise ValueError(f"El nodo '{node.name}' apunta a un nodo inexistente: '{destino}'")
                self.validar_claves(node, node_map[destino])
                node.add_output(node_map[destino])
                self.logger.debug(f"[LINK] {node.name} → {destino}")

        self._verificar_aciclico(node_map)
        return engine, node_map

    def _alcanzables(self, entrada) -> set[str]:
        vistos, pila = set(), [entrada]
        while pila:
            nodo = pila.pop()
            if nodo.name not in vistos:
                vistos.add(nodo.name)
                pila.extend(nodo.outputs)
        return vistos

    def build_pipeline_from_dict(self, config: dict) -> tuple[PipelineEngine, str, str]:
        """
            Construye un pipeline a partir de un diccionario con la misma forma
            que el YAML (clave raíz 'pipeline'). Lo usa el CLI para armar sus
            flujos nodo de cálculo → nodo de exportación.

            Returns:
                tuple[PipelineEngine, str, str]: motor, nodo de entrada y nombre.
        """
        config = self.resolve_env_vars(config)
        self.validate_pipeline_schema(config)

        pipeline = config["pipeline"]
        engine, node_map = self.instantiate_nodes(pipeline)
        entrypoint, name = pipeline["entrypoint"], pipeline["name"]

        if entrypoint not in node_map:
            self.logger.error(f"[ENTRYPOINT] Nodo de entrada inválido: '{entrypoint}'")
            raise ValueError(f"El nodo de entrada '{entrypoint}' no está definido en el pipeline")

        sueltos = sorted(set(node_map) - self._alcanzables(node_map[entrypoint]))
        if sueltos:
            self.logger.warning(f"[BUILD] Nodos no alcanzables desde '{entrypoint}': {sueltos}")

        self.logger.info(f"[BUILD] Pipeline '{name}' cargado con {len(node_map)} nodos: {list(node_map)}")
        return engine, entrypoint, name

    def build_pipeline_from_yaml(self, yaml_path: str) -> tuple[PipelineEngine, str, str]:
        with open(yaml_path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)

        if not isinstance(config, dict):
            raise ValueError(f"El YAML {yaml_path} no contiene un pipeline")

        return self.build_pipeline_from_dict(config)
