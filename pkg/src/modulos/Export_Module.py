import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict

import polars as pl

from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks.formatos import tabla

STDOUT = "-"
DIGITOS = 17


def escribir_atomico(texto: str, destino: str) -> str:
    """
    Escribe `texto` en `destino` a través de un temporal en el mismo
    directorio y `os.replace`, de modo que un error nunca deja un archivo a
    medio escribir. Con destino "-" escribe en stdout.

    Returns:
        str: ruta final escrita (o "-").
    """
    if destino == STDOUT:
        sys.stdout.write(texto)
        sys.stdout.flush()
        return STDOUT

    ruta = Path(destino).resolve()
    ruta.parent.mkdir(parents=True, exist_ok=True)
    fd, temporal = tempfile.mkstemp(dir=ruta.parent, prefix=f".{ruta.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(texto)
        os.replace(temporal, ruta)
    except BaseException:
        Path(temporal).unlink(missing_ok=True)
        raise
    return str(ruta)


def _como_dataframe(data: Any, nombre: str) -> pl.DataFrame:
    if isinstance(data, pl.DataFrame):
        return data
    if isinstance(data, pl.LazyFrame):
        return data.collect()
    if isinstance(data, list):
        return tabla(data)
    if isinstance(data, dict):
        return tabla([data])
    raise TypeError(f"[{nombre}] Tipo de entrada no soportado: {type(data)}")


def floats_como_texto(df: pl.DataFrame, digitos: int = DIGITOS) -> pl.DataFrame:
    """Columnas Float64/Float32 renderizadas con `digitos` cifras significativas."""
    columnas = [c for c, dtype in df.schema.items() if dtype in (pl.Float64, pl.Float32)]
    if not columnas:
        return df
    return df.with_columns([
        pl.col(c).map_elements(lambda v: format(v, f".{digitos}g"), return_dtype=pl.String)
        for c in columnas
    ])


class CSVWriterNode(BaseNode):
    """
    CSVWriterNode (Polars) escribe la tabla recibida como CSV.

    Los floats se escriben con 17 cifras significativas para que los
    archivos sirvan como líneas base de regresión byte a byte.

    Parámetros YAML esperados:
    --------------------------
    - file_path : str
        Ruta de salida; "-" escribe en stdout. Se agrega ".csv" si falta.
    - sep : str (Opcional, ",")
    - header : bool (Opcional, True)

    Ejemplo de uso en YAML:
    -----------------------
    - name: GuardarEspectro
      type: CSVWriterNode
      params:
        config:
            file_path: ${path_resultados}/espectro_n12_s3.csv
    """
    required_inputs = ["data"]

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any):
        file_path = self.config.get("file_path")
        sep = self.config.get("sep", ",")
        header = self.config.get("header", True)

        data = data["data"]

        if not file_path:
            raise ValueError(f"[{self.name}] Falta 'file_path' en configuración")

        if file_path != STDOUT and not file_path.endswith(".csv"):
            file_path += ".csv"

        df = _como_dataframe(data, self.name)

        try:
            texto = floats_como_texto(df).write_csv(separator=sep, include_header=header)
            destino = escribir_atomico(texto, file_path)

            if self.logger:
                self.logger.info(f"[{self.name}] CSV escrito en {destino} ({df.height} filas)")

            return {"output_path": destino}

        except Exception as e:
            if self.logger:
                self.logger.exception(f"[{self.name}] Error al escribir CSV: {e}")
            raise RuntimeError(f"[{self.name}] [Error] escribiendo archivo CSV: {e}")


class JSONWriterNode(BaseNode):
    """
    JSONWriterNode escribe la tabla recibida como una lista JSON de registros,
    los mismos que produciría CSVWriterNode.

    Parámetros YAML esperados:
    --------------------------
    - file_path : str
        Ruta de salida; "-" escribe en stdout. Se agrega ".json" si falta.
    """
    required_inputs = ["data"]

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any):
        file_path = self.config.get("file_path")
        data = data["data"]

        if not file_path:
            raise ValueError(f"[{self.name}] Falta 'file_path' en configuración")

        if file_path != STDOUT and not file_path.endswith(".json"):
            file_path += ".json"

        df = _como_dataframe(data, self.name)

        try:
            texto = df.write_json() + "\n"
            destino = escribir_atomico(texto, file_path)

            if self.logger:
                self.logger.info(f"[{self.name}] JSON escrito en {destino} ({df.height} filas)")

            return {"output_path": destino}

        except Exception as e:
            if self.logger:
                self.logger.exception(f"[{self.name}] Error al escribir JSON: {e}")
            raise RuntimeError(f"[{self.name}] [Error] escribiendo archivo JSON: {e}")
