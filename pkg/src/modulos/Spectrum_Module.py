from typing import Any, Dict

from src.pipeline_engine.NodesEngine import BaseNode
from src.submodulos.walks import core_math, spectral
from src.submodulos.walks.formatos import entero, tabla, walk_spec

REPORTES_ESPECTRO = ("tabla", "cota", "pesos")


class SpectrumNode(BaseNode):
    """
    SpectrumNode genera la tabla espectral de G(s) y reportes derivados.

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - reporte : str (Opcional, "tabla")
        "tabla": filas (k, d_k, kravchuk, cos_omega, omega, d_parity).
        "cota":  cota de magnitud de Kravchuk sobre la ventana delta.
        "pesos": coeficientes de peso W_0..W_m predichos por el espectro.
    - salida : str (Opcional, "data")

    Ejemplo de uso en YAML:
    -----------------------
    - name: Espectro
      type: SpectrumNode
      params:
        config:
            n: 12
            s: 3
      outputs: [GuardarEspectro]
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        reporte = self.config.get("reporte", "tabla")
        salida = self.salida

        if reporte not in REPORTES_ESPECTRO:
            raise ValueError(f"[{self.name}] Reporte no soportado: '{reporte}'. Opciones: {REPORTES_ESPECTRO}")
        spec = walk_spec(self.config, self.name)

        if self.logger:
            self.logger.info(f"[{self.name}] Reporte '{reporte}' para n={spec.n}, s={spec.s}, m={spec.m}")

        try:
            if reporte == "tabla":
                filas = [
                    {
                        "k": r.k,
                        "d_k": r.d_k,
                        "kravchuk": r.kravchuk,
                        "cos_omega": r.cos_omega,
                        "omega": r.omega,
                        "d_parity": r.d_parity,
                    }
                    for r in core_math.spectral_table(spec).rows
                ]
            elif reporte == "cota":
                f_of_n = self.config.get("f_of_n")
                filas = []
                for k in core_math.delta_window(spec.n, f_of_n):
                    cota = core_math.kravchuk_bound(spec, k, f_of_n)
                    filas.append({
                        "k": cota.k,
                        "delta": cota.delta,
                        "lhs": cota.lhs,
                        "rhs": cota.rhs,
                        "rhs_printed": cota.rhs_printed,
                        "satisfied": cota.satisfied,
                    })
            else:
                filas = [
                    {"weight": w, "count": c}
                    for w, c in enumerate(core_math.weight_enumerator_from_spectrum(spec))
                ]
        except Exception as e:
            msg = f"[{self.name}] Error calculando el reporte '{reporte}': {e}"
            if self.logger:
                self.logger.error(msg)
            raise RuntimeError(msg)

        return {salida: tabla(filas)}


class CurveNode(BaseNode):
    """
    CurveNode calcula las probabilidades de retorno y llegada para
    t = t_min..t_max a partir de la suma espectral.

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - t_max : int
    - t_min : int (Opcional, 0)
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        salida = self.salida
        spec = walk_spec(self.config, self.name)
        t_max = entero(self.config, "t_max", self.name, minimo=0)
        t_min = entero(self.config, "t_min", self.name, defecto=0, minimo=0)

        if t_min > t_max:
            raise ValueError(f"[{self.name}] Se requiere t_min <= t_max, se recibió {t_min} > {t_max}")

        self.logger and self.logger.debug(f"[{self.name}] Curva n={spec.n}, s={spec.s}, t={t_min}..{t_max}")
        curva = spectral.probability_curve(spec, range(t_min, t_max + 1))
        filas = [{"t": t, "return_prob": r, "hit_prob": h} for t, r, h in curva]
        return {salida: tabla(filas)}


class PredictTimeNode(BaseNode):
    """
    PredictTimeNode devuelve el tiempo predicho de retorno o llegada y las
    probabilidades espectrales en ese instante.

    Parámetros YAML esperados:
    --------------------------
    - n, s : int
    - kind : str
        "ReturnAtPiM", "ReturnAtHalfPiM" o "HitAtHalfPiM".
    - beta : float (Opcional, 0.3)
    - epsilon : int (Opcional)
        Desplazamiento explícito; 0 da el centro corregido por paridad.
    - salida : str (Opcional, "data")
    """

    def __init__(self, name: str, config: Dict[str, Any] = None):
        super().__init__(name, config)
        self.logger = None

    def run(self, data: Any = None):
        salida = self.salida
        kind = self.config.get("kind")
        beta = self.config.get("beta", spectral.BETA_DEFECTO)
        epsilon = self.config.get("epsilon")

        if not kind:
            raise ValueError(f"[{self.name}] Falta 'kind' en config.")
        spec = walk_spec(self.config, self.name)

        try:
            pred = spectral.predict_time(spec, kind, beta=beta, epsilon=epsilon)
        except ValueError as e:
            raise ValueError(f"[{self.name}] {e}") from e

        fila = {
            "n": spec.n,
            "s": spec.s,
            "m": spec.m,
            "kind": pred.kind.value,
            "T": pred.T,
            "T_center": pred.T_center,
            "epsilon": pred.epsilon,
            "beta": pred.beta,
            "parity_ok": pred.parity_ok,
            "side_condition_ok": pred.side_condition_ok,
            "return_prob": spectral.return_amplitude(spec, pred.T) ** 2,
            "hit_prob": spectral.hit_amplitude(spec, pred.T) ** 2,
        }
        if self.logger:
            self.logger.info(f"[{self.name}] {pred.kind.value}: T={pred.T} (centro {pred.T_center})")
        return {salida: tabla([fila])}
