import polars as pl
from typing import Dict, Any

from src.pipeline_engine.NodesEngine import BaseNode


def _expresion(texto: str, nombre: str) -> pl.Expr:
    # Solo se expone `pl` al evaluar la condición
    expr = eval(texto, {"__builtins__": {}, "pl": pl})
    if not isinstance(expr, pl.Expr):
        raise ValueError(f"[{nombre}] '{texto}' no es una expresión de Polars.")
    return expr


class FilterNode(BaseNode):
    """
    FilterNode recorta la tabla recibida: filtra filas con una condición de
    Polars, deja solo algunas columnas y opcionalmente ordena y se queda con
    las primeras filas. Sirve, por ejemplo, para extraer los picos de una
    curva de llegada o los k con |cos ω_k| más grande.

    Parámetros YAML esperados:
    --------------------------
    - condition : str (Opcional si se usa `limite`)
        Expresión lógica en formato Polars.
        Ejemplo: 'pl.col("hit_prob") > 0.5'
    - columnas : list (Opcional)
        Columnas a conservar, en ese orden.
    - ordenar_por : str (Opcional)
    - descendente : bool (Opcional, False)
    - limite : int (Opcional)
        Cantidad máxima de filas después de ordenar.
    - salida : str (Opcional, "data")

    Ejemplo de uso en YAML:
    -----------------------
    - name: Picos_de_llegada
      type: FilterNode
      params:
        config:
            condition: 'pl.col("hit_prob") > 0.5'
            columnas: [t, hit_prob]
            ordenar_por: hit_prob
            descendente: true
            limite: 10
    """
    required_inputs = ["data"]

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        condition = self.config.get("condition")
        limite = self.config.get("limite")
        if not condition and limite is None:
            raise ValueError(f"[{self.name}] Falta 'condition' o 'limite' en config.")
        if limite is not None and (not isinstance(limite, int) or limite < 0):
            raise ValueError(f"[{self.name}] 'limite' debe ser un entero >= 0, no {limite!r}.")

    def run(self, data: Any):
        tabla = data["data"]
        if isinstance(tabla, pl.LazyFrame):
            tabla = tabla.collect()
        if not isinstance(tabla, pl.DataFrame):
            raise TypeError(f"[{self.name}] Se esperaba un DataFrame de Polars, no {type(tabla)}.")

        condition = self.config.get("condition")
        columnas = self.config.get("columnas")
        orden = self.config.get("ordenar_por")
        limite = self.config.get("limite")

        faltantes = [c for c in [*(columnas or []), *([orden] if orden else [])] if c not in tabla.columns]
        if faltantes:
            raise ValueError(f"[{self.name}] Columnas inexistentes {faltantes}; disponibles: {tabla.columns}")

        try:
            if condition:
                tabla = tabla.filter(_expresion(condition, self.name))
            if orden:
                tabla = tabla.sort(orden, descending=bool(self.config.get("descendente", False)), maintain_order=True)
            if limite is not None:
                tabla = tabla.head(limite)
            if columnas:
                tabla = tabla.select(columnas)
        except Exception as e:
            msg = f"[{self.name}] Error aplicando '{condition}': {e}"
            self.logger and self.logger.error(msg)
            raise RuntimeError(msg) from e

        self.logger and self.logger.debug(f"[{self.name}] {tabla.height} filas después del filtro")
        return {self.salida: tabla}
