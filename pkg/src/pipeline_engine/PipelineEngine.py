import threading
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor, as_completed


class PipelineEngine:
    """
    Motor de ejecución de pipelines tipo DAG.

    La ejecución avanza por oleadas: se corre el nodo de entrada, sus
    resultados se reparten a los hijos y en la siguiente oleada se corren en
    paralelo todos los hijos que ya tienen sus `required_inputs` completos.
    Así, una curva que alimenta a un escritor CSV y a un filtro ejecuta ambas
    ramas a la vez.

    - El nodo de entrada recibe None.
    - Un nodo sin `required_inputs` recibe None apenas llega cualquier clave.
    - Un resultado None detiene la rama; cualquier otro resultado debe ser dict.
    - Las excepciones de los nodos se guardan, las demás ramas siguen y la
      primera se relanza al terminar `run`.

    Atributos:
        nodes (dict): nombre -> nodo.
        results (dict): nombre -> último resultado de cada nodo ejecutado.
        tiempos (dict): nombre -> segundos de la última ejecución.
        errors (list): excepciones de la última corrida.
    """
    def __init__(self, max_workers: int = 4):
        self.nodes = {}
        self.max_workers = max_workers
        self.logger = None
        self.lock = threading.Lock()
        self._buffer = defaultdict(dict)
        self.results = {}
        self.tiempos = {}
        self.errors = []

    def add_node(self, node):
        if node.name in self.nodes:
            raise ValueError(f"Ya existe un nodo llamado '{node.name}' en el pipeline")
        self.nodes[node.name] = node

    @property
    def total_fallos(self) -> int:
        """Suma de `fallos` (contraejemplos, discrepancias) sobre todos los nodos."""
        return sum(getattr(nodo, "fallos", 0) for nodo in self.nodes.values())

    def _ejecutar_nodo(self, node, entradas):
        self.logger and self.logger.info(f"[NODE_START] Ejecutando nodo: {node.name}")
        if entradas is not None:
            self.logger and self.logger.debug(f"[NODE_INPUT - {node.name}]: {list(entradas)}")

        inicio = time.perf_counter()
        result = node.run(entradas)
        segundos = time.perf_counter() - inicio

        with self.lock:
            self.results[node.name] = result
            self.tiempos[node.name] = segundos

        self.logger and self.logger.debug(f"[NODE_OUTPUT - {node.name}] {segundos:.3f}s: {result}")
        return result

    def _propagar(self, node, result) -> list:
        """Reparte el resultado de `node` a sus hijos y devuelve los que quedaron listos."""
        if result is None:
            self.logger and self.logger.info(f"[{node.name}] No devolvió resultados. Rama detenida.")
            return []

        if not isinstance(result, dict):
            raise TypeError(f"[{node.name}] Un nodo debe devolver dict o None, no {type(result).__name__}")

        listos = []
        with self.lock:
            for hijo in node.outputs:
                required = getattr(hijo, "required_inputs", None)
                buffer = self._buffer[hijo.name]
                buffer.update(result)

                if not required:
                    buffer.clear()
                    listos.append((hijo, None))
                elif all(k in buffer for k in required):
                    entradas = {k: buffer[k] for k in required}
                    buffer.clear()
                    listos.append((hijo, entradas))
        return listos

    def run(self, entry_name: str):
        """
        Ejecuta el pipeline desde `entry_name` y espera a que terminen todas las ramas.

        Raises:
            ValueError: Si el nodo de entrada no existe.
            Exception: La primera excepción lanzada por algún nodo.
        """
        if entry_name not in self.nodes:
            raise ValueError(f"El nodo de entrada '{entry_name}' no existe en el pipeline")

        for nodo in self.nodes.values():
            nodo.logger = self.logger

        self.errors = []
        self.results = {}
        self.tiempos = {}
        self._buffer.clear()

        self.logger and self.logger.info(f"[RUN_START] Flujo iniciado desde nodo: {entry_name}")

        pendientes = [(self.nodes[entry_name], None)]
        with ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix="nodo") as executor:
            while pendientes:
                futuros = {executor.submit(self._ejecutar_nodo, nodo, entradas): nodo for nodo, entradas in pendientes}
                pendientes = []
                for futuro in as_completed(futuros):
                    nodo = futuros[futuro]
                    try:
                        pendientes.extend(self._propagar(nodo, futuro.result()))
                    except Exception as e:
                        self.errors.append(e)
                        self.logger and self.logger.error(f"[NODE_ERROR - {nodo.name}]: {e}")

        incompletos = [nombre for nombre, buffer in self._buffer.items() if buffer]
        if incompletos and self.logger:
            self.logger.warning(f"[RUN] Nodos que no recibieron todas sus entradas: {incompletos}")

        if self.errors:
            raise self.errors[0]

        self.logger and self.logger.info("[RUN_COMPLETE] Ejecución del pipeline completada")
