from typing import Any, Dict

from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks import measured
from src.submodulos.walks.formatos import entero, tabla, walk_spec


class MeasuredTraceNode(BaseNode):
    """
    MeasuredTraceNode produce las series del paseo medido en 0^n desde T0:
    (t, alpha, beta, q, p).

    Parámetros YAML esperados:
    --------------------------
    - n, s : int (s impar)
    - T0 : int (par)
    - T : int
    - fuente : str (Opcional, "spectral")
        "spectral" usa la recursión sobre alpha; "projective" simula la
        medición sobre el vector denso (n <= 12).
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        salida = self.salida
        fuente = self.config.get("fuente", "spectral")
        spec = walk_spec(self.config, self.name)
        T0 = entero(self.config, "T0", self.name, minimo=0)
        T = entero(self.config, "T", self.name, minimo=0)

        try:
            traza = measured.build_trace(spec, T0, T, fuente)
        except ValueError as e:
            raise ValueError(f"[{self.name}] {e}") from e

        if self.logger:
            extra = f", residuo={traza.residual_norm2:.6g}" if traza.residual_norm2 is not None else ""
            self.logger.info(f"[{self.name}] Traza {fuente} n={spec.n}, s={spec.s}, T0={T0}, T={T}: p_T={traza.p_T:.6g}{extra}")
        return {salida: tabla(traza.records(), ["t", "alpha", "beta", "q", "p"])}


class AbsorptionCheckNode(BaseNode):
    """
    AbsorptionCheckNode compara p_T con la cota c n / (eps (T - T_p)^2) y
    reporta la razón p_T / (n / (eps (T - T_p)^2)).

    Parámetros YAML esperados:
    --------------------------
    - n, s : int (s impar)
    - T0, T_p, T : int, con T0 <= T_p < T
    - c : float (Opcional, 1.0)
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        salida = self.salida
        c = self.config.get("c", 1.0)
        spec = walk_spec(self.config, self.name)
        T0 = entero(self.config, "T0", self.name, minimo=0)
        T_p = entero(self.config, "T_p", self.name, minimo=0)
        T = entero(self.config, "T", self.name, minimo=0)

        try:
            rep = measured.absorption_bound_check(spec, T0, T_p, T, c=float(c))
        except ValueError as e:
            raise ValueError(f"[{self.name}] {e}") from e

        if self.logger:
            self.logger.info(f"[{self.name}] p_T={rep.p_T:.6g}, cota={rep.bound:.6g}, razón={rep.ratio:.6g}")
        return {salida: tabla([{
            "n": spec.n,
            "s": spec.s,
            "T0": rep.T0,
            "T_p": rep.T_p,
            "T": rep.T,
            "c": rep.c,
            "epsilon": rep.epsilon,
            "p_T": rep.p_T,
            "bound": rep.bound,
            "ratio": rep.ratio,
            "satisfied": rep.satisfied,
        }])}


class EvenGapNode(BaseNode):
    """
    EvenGapNode reporta max |alpha_{2t} - alpha_{2t+2}| hasta t_max y la
    constante C que lo ubica en la escala C/n.

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - t_max : int (>= 2)
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        salida = self.salida
        spec = walk_spec(self.config, self.name)
        t_max = entero(self.config, "t_max", self.name, minimo=2)

        rep = measured.even_gap_report(spec, t_max)
        self.logger and self.logger.info(f"[{self.name}] brecha máxima {rep.max_gap:.6g} en t={rep.argmax_t}")
        return {salida: tabla([{
            "n": spec.n,
            "s": spec.s,
            "t_max": rep.t_max,
            "max_gap": rep.max_gap,
            "argmax_t": rep.argmax_t,
            "fitted_constant": rep.fitted_constant,
        }])}
