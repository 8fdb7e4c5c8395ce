import importlib
import inspect
import pkgutil
from functools import cache
from typing import Type

from src.pipeline_engine.NodesEngine import BaseNode

# Paquetes donde se buscan nodos; nada se importa hasta el primer uso
PACKAGES = ("src.modulos",)


@cache
def _descubrir(packages: tuple[str, ...] = PACKAGES) -> dict[str, Type[BaseNode]]:
    """
    Recorre los módulos de `packages` y devuelve {NombreClase: clase} con
    cada subclase concreta de BaseNode definida en ellos:

        {
            "SpectrumNode"     : src.modulos.Spectrum_Module.SpectrumNode,
            "CSVWriterNode"    : src.modulos.Export_Module.CSVWriterNode,
            "OracleSearchNode" : src.modulos.Oracle_Module.OracleSearchNode,
            ...
        }
    """
    clases = {}
    for package in packages:
        paquete = importlib.import_module(package)
        for info in pkgutil.walk_packages(paquete.__path__, package + "."):
            if info.ispkg:
                continue
            modulo = importlib.import_module(info.name)
            for nombre, obj in inspect.getmembers(modulo, inspect.isclass):
                # solo clases propias del módulo, no las importadas
                if obj.__module__ != info.name or not issubclass(obj, BaseNode):
                    continue
                if inspect.isabstract(obj):
                    continue
                if nombre in clases:
                    raise TypeError(f"Nodo '{nombre}' definido dos veces: {clases[nombre].__module__} y {info.name}")
                clases[nombre] = obj
    return clases


def available_nodes() -> list[str]:
    return sorted(_descubrir())


def get_node_class(node_type: str) -> Type[BaseNode]:
    """Devuelve la clase registrada para `node_type` (p. ej. "CurveNode")."""
    try:
        return _descubrir()[node_type]
    except KeyError:
        raise ValueError(f"Tipo de nodo no soportado: {node_type}") from None
