from typing import Any, Dict

from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks.formatos import tabla, walk_spec
from src.submodulos.walks.layers import LayerRelation

REPORTES = ("vecinos", "k", "comunes", "tamanos")


class LayersNode(BaseNode):
    """
    LayersNode tabula las relaciones entre capas de peso de G(s).

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - reporte : str (Opcional, "vecinos")
        "vecinos": (l, t, count) vecinos en L_t de un vértice de L_l.
        "k": (l, k_value, hypothesis_ok, strictly_decreasing).
        "comunes": (l, t, x) capas de vecinos comunes para cada par válido.
        "tamanos": (l, size, empty).
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        reporte = self.config.get("reporte", "vecinos")
        salida = self.salida

        if reporte not in REPORTES:
            raise ValueError(f"[{self.name}] Reporte no soportado: '{reporte}'. Opciones: {REPORTES}")
        spec = walk_spec(self.config, self.name)
        rel = LayerRelation(spec.n, spec.s)
        capas = range(spec.n + 1)

        if reporte == "vecinos":
            filas = [
                {"l": l, "t": t, "count": rel.count(l, t)}
                for l in capas
                for t in sorted(rel.neighbors(l))
            ]
        elif reporte == "k":
            seq = rel.k_sequence()
            filas = [
                {
                    "l": 2 * i,
                    "k_value": valor,
                    "hypothesis_ok": seq.hypothesis_ok,
                    "strictly_decreasing": seq.strictly_decreasing,
                }
                for i, valor in enumerate(seq.values)
            ]
            if not seq.hypothesis_ok and self.logger:
                self.logger.warning(f"[{self.name}] 6s > n: la secuencia k se reporta fuera de hipótesis")
        elif reporte == "comunes":
            filas = []
            for l in capas:
                for t in capas:
                    if (l - t) % 2 or abs(l - t) > 2 * spec.s or (l == t and l in (0, spec.n)):
                        continue
                    filas.extend({"l": l, "t": t, "x": x} for x in sorted(rel.common(l, t)))
        else:
            filas = [
                {"l": l, "size": rel.layer_size(l), "empty": rel.is_empty_layer(l)}
                for l in capas
            ]

        if self.logger:
            self.logger.info(f"[{self.name}] Reporte '{reporte}' n={spec.n}, s={spec.s}: {len(filas)} filas")
        return {salida: tabla(filas)}
