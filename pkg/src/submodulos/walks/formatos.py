"""
Conversión de registros del dominio a tablas de polars y lectura de
parámetros comunes de los nodos.
"""
from typing import Any

import polars as pl

from src.submodulos.walks.core_math import WalkSpec

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _columna(nombre: str, valores: list) -> pl.Series:
    enteros = [v for v in valores if isinstance(v, int) and not isinstance(v, bool)]
    # binomiales grandes no caben en Int64: se exportan como texto decimal
    if any(not INT64_MIN <= v <= INT64_MAX for v in enteros):
        return pl.Series(nombre, [None if v is None else str(v) for v in valores], dtype=pl.String)
    return pl.Series(nombre, valores, strict=False)


def tabla(registros: list[dict], columnas: list[str] | None = None) -> pl.DataFrame:
    """
    DataFrame a partir de una lista de diccionarios, respetando el orden de
    `columnas` (o el del primer registro).
    """
    if not registros:
        return pl.DataFrame({c: [] for c in columnas or []})
    columnas = columnas or list(registros[0])
    return pl.DataFrame([_columna(c, [r.get(c) for r in registros]) for c in columnas])


def requerir(config: dict, claves: list[str], nodo: str) -> None:
    for clave in claves:
        if config.get(clave) is None:
            raise ValueError(f"[{nodo}] Falta '{clave}' en config.")


def walk_spec(config: dict, nodo: str) -> WalkSpec:
    """WalkSpec desde las claves `n` y `s` de la configuración de un nodo."""
    requerir(config, ["n", "s"], nodo)
    try:
        return WalkSpec(config["n"], config["s"])
    except (TypeError, ValueError) as e:
        raise ValueError(f"[{nodo}] {e}") from e


def entero(config: dict, clave: str, nodo: str, defecto: Any = None, minimo: int | None = None) -> int:
    valor = config.get(clave, defecto)
    if valor is None:
        raise ValueError(f"[{nodo}] Falta '{clave}' en config.")
    if isinstance(valor, bool) or not isinstance(valor, int):
        raise TypeError(f"[{nodo}] '{clave}' debe ser entero, se recibió {type(valor).__name__}")
    if minimo is not None and valor < minimo:
        raise ValueError(f"[{nodo}] '{clave}' debe ser >= {minimo}, se recibió {valor}")
    return valor
