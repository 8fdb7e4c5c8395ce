from typing import Any, Dict

from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks.formatos import tabla
from src.submodulos.walks.verify import SUITES, resolver_tope, run_suite


class VerifySuiteNode(BaseNode):
    """
    VerifySuiteNode corre una o varias suites de verificación y emite un
    registro por contraejemplo (o uno de resumen por suite aprobada). La
    cantidad total de fallos queda en `self.fallos`.

    Parámetros YAML esperados:
    --------------------------
    - suites : str | list
        Nombre de suite, lista de nombres o "all".
    - n_max : int (Opcional)
        Tope de tamaño; si falta cada suite usa el suyo. Debe caer en el
        rango de cada suite pedida; con "all" se recorta a ese rango.
    - salida : str (Opcional, "data")

    Ejemplo de uso en YAML:
    -----------------------
    - name: Identidades
      type: VerifySuiteNode
      params:
        config:
            suites: [kravchuk-identity, parity]
            n_max: 30
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def _suites(self) -> list[str]:
        suites = self.config.get("suites")
        if not suites:
            raise ValueError(f"[{self.name}] Falta 'suites' en config.")
        if suites == "all":
            return list(SUITES)
        if isinstance(suites, str):
            suites = [suites]
        desconocidas = [s for s in suites if s not in SUITES]
        if desconocidas:
            raise ValueError(f"[{self.name}] Suites desconocidas: {desconocidas}. Disponibles: {list(SUITES)}")
        return list(suites)

    def run(self, data: Any = None):
        salida = self.salida
        n_max = self.config.get("n_max")
        suites = self._suites()
        todas = self.config.get("suites") == "all"

        if n_max is not None and (isinstance(n_max, bool) or not isinstance(n_max, int) or n_max < 1):
            raise ValueError(f"[{self.name}] n_max debe ser un entero >= 1, se recibió {n_max}")
        if not todas:
            for nombre in suites:
                try:
                    resolver_tope(nombre, n_max)
                except ValueError as e:
                    raise ValueError(f"[{self.name}] {e}") from e

        filas = []
        self.fallos = 0
        for nombre in suites:
            # con "all" el tope se lleva al rango de cada suite
            reporte = run_suite(nombre, n_max, logger=self.logger, recortar=todas)
            self.fallos += len(reporte.failures) if reporte.checks else 1
            filas.extend(reporte.records())

        return {salida: tabla(filas, ["suite", "case", "detail"])}
