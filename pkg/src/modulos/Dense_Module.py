from typing import Any, Dict

import numpy as np

from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks import dense_sim
from src.submodulos.walks.formatos import entero, tabla, walk_spec

MODOS = ("proyecciones", "capas", "distribucion", "estado")


class DenseEvolutionNode(BaseNode):
    """
    DenseEvolutionNode simula el paseo con moneda de Grover sobre el vector
    completo de 2^n * m amplitudes.

    Parámetros YAML esperados:
    --------------------------
    - n : int
    - s : int, o bien elements : list
        `elements` define un conjunto generador arbitrario (enteros o
        cadenas de n bits); si falta se usa G(s).
    - t_max : int
    - vertex : int (Opcional, 0)
    - modo : str (Opcional, "proyecciones")
        "proyecciones": (t, return_amp, hit_amp, norm) con las magnitudes
            de la proyección sobre el inicio y su antipodal.
        "capas": (t, layer, prob) probabilidad acumulada por peso de Hamming.
        "distribucion": (t, vertex, prob) por vértice.
        "estado": (coin_index, vertex, re, im) del estado final en t_max.
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def _generadores(self) -> dense_sim.GeneratingSet:
        elementos = self.config.get("elements")
        if elementos:
            n = entero(self.config, "n", self.name, minimo=1)
            return dense_sim.from_elements(n, elementos)
        spec = walk_spec(self.config, self.name)
        if spec.n > dense_sim.N_MAX_EXHAUSTIVO:
            raise ValueError(f"[{self.name}] La simulación densa requiere n <= {dense_sim.N_MAX_EXHAUSTIVO}")
        return dense_sim.symmetric_generating_set(spec.n, spec.s)

    def run(self, data: Any = None):
        modo = self.config.get("modo", "proyecciones")
        salida = self.salida

        if modo not in MODOS:
            raise ValueError(f"[{self.name}] Modo no soportado: '{modo}'. Opciones: {MODOS}")
        t_max = entero(self.config, "t_max", self.name, minimo=0)
        genset = self._generadores()
        vertex = entero(self.config, "vertex", self.name, defecto=0, minimo=0)

        psi0 = dense_sim.symmetric_initial_state(genset, vertex)
        antipoda = vertex ^ (genset.size - 1)
        pesos = np.bitwise_count(np.arange(genset.size)).astype(np.int64)

        if self.logger:
            self.logger.info(f"[{self.name}] Evolución densa n={genset.n}, m={genset.m}, t_max={t_max}, modo={modo}")

        try:
            filas = []
            if modo == "estado":
                final = dense_sim.evolve(psi0, t_max)
                filas = [
                    {"coin_index": b, "vertex": v, "re": re, "im": im}
                    for b, v, re, im in dense_sim.export_records(final)
                ]
            else:
                for t, estado in dense_sim.iter_evolution(psi0, t_max):
                    if modo == "proyecciones":
                        filas.append({
                            "t": t,
                            "return_amp": abs(dense_sim.overlap(estado, psi0)),
                            "hit_amp": abs(dense_sim.projection_amplitude(estado, antipoda)),
                            "norm": estado.norm(),
                        })
                        continue
                    dist = dense_sim.vertex_distribution(estado)
                    if modo == "capas":
                        por_capa = np.bincount(pesos, weights=dist, minlength=genset.n + 1)
                        filas.extend({"t": t, "layer": l, "prob": float(p)} for l, p in enumerate(por_capa))
                    else:
                        filas.extend(
                            {"t": t, "vertex": dense_sim.bits(v, genset.n), "prob": float(p)}
                            for v, p in enumerate(dist)
                        )
        except Exception as e:
            msg = f"[{self.name}] Error en la simulación densa: {e}"
            if self.logger:
                self.logger.error(msg)
            raise RuntimeError(msg)

        self.logger and self.logger.debug(f"[{self.name}] {len(filas)} registros generados")
        return {salida: tabla(filas)}
