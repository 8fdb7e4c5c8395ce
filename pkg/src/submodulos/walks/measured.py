"""
Paseo medido en 0^n (absorbente) a partir de T0.

Para t > T0 el estado evoluciona como psi_t = Q (I - Pi_0) psi_{t-1}; la
probabilidad de parada en el paso t es q_t = |Pi_0 psi_{t-1}|^2.
Con beta_dt = <psi_0 | psi_{T0+dt}> resulta q_{T0+dt+1} = beta_dt^2 y

    beta_k = alpha_{T0+k} - sum_{j=1..k} beta_{k-j} alpha_j,

donde alpha_t = <psi_0 | Q^t | psi_0> sin medición.
"""
import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from src.submodulos.walks import dense_sim
from src.submodulos.walks.core_math import WalkSpec
from src.submodulos.walks.spectral import return_amplitudes

N_MAX_PROYECTIVO = 12

Fuente = Literal["spectral", "projective"]


@dataclass(frozen=True)
class MeasuredTrace:
    """
    Series del paseo medido. `alpha` y `q`/`p` van indexadas por t = 0..T;
    `beta` por dt = 0..T-T0 (vacía si T0 > T).
    """
    spec: WalkSpec
    T0: int
    T: int
    alpha: np.ndarray = field(compare=False)
    beta: np.ndarray = field(compare=False)
    q: np.ndarray = field(compare=False)
    p: np.ndarray = field(compare=False)
    source: str = "spectral"
    residual_norm2: float | None = None

    @property
    def p_T(self) -> float:
        return float(self.p[-1])

    def records(self) -> list[dict]:
        """Registros columnares (t, alpha, beta, q, p); beta es None antes de T0."""
        filas = []
        for t in range(self.T + 1):
            dt = t - self.T0
            filas.append({
                "t": t,
                "alpha": float(self.alpha[t]),
                "beta": float(self.beta[dt]) if 0 <= dt < self.beta.size else None,
                "q": float(self.q[t]),
                "p": float(self.p[t]),
            })
        return filas


@dataclass(frozen=True)
class AbsorptionReport:
    spec: WalkSpec
    T0: int
    T_p: int
    T: int
    c: float
    epsilon: float
    p_T: float
    bound: float
    ratio: float

    @property
    def satisfied(self) -> bool:
        return self.p_T >= self.bound


@dataclass(frozen=True)
class EvenGapReport:
    spec: WalkSpec
    t_max: int
    max_gap: float
    argmax_t: int
    fitted_constant: float


def _validar(spec: WalkSpec, T0: int, T: int) -> None:
    if spec.s % 2 == 0:
        raise ValueError(f"El paseo medido se define para s impar, se recibió s={spec.s}")
    if T0 < 0 or T0 % 2 != 0:
        raise ValueError(f"T0 debe ser par y no negativo, se recibió {T0}")
    if T < 0:
        raise ValueError(f"T debe ser no negativo, se recibió {T}")


def alpha_series(spec: WalkSpec, T: int) -> np.ndarray:
    """alpha_0..alpha_T desde la suma espectral completa k = 0..n."""
    if T < 0:
        raise ValueError(f"T debe ser no negativo, se recibió {T}")
    return return_amplitudes(spec, range(T + 1))


def beta_recursion(alpha: np.ndarray, T0: int, dt_max: int) -> np.ndarray:
    """
    beta_0..beta_{dt_max} por la recursión convolucional.

    Raises:
        ValueError: si alpha no cubre los índices 0..T0+dt_max.
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    if T0 < 0 or dt_max < 0:
        raise ValueError("T0 y dt_max deben ser no negativos")
    if alpha.size < T0 + dt_max + 1:
        raise ValueError(f"alpha cubre {alpha.size} índices, se requieren {T0 + dt_max + 1}")
    beta = np.zeros(dt_max + 1, dtype=np.float64)
    for k in range(dt_max + 1):
        # sum_{j=1..k} beta_{k-j} alpha_j
        beta[k] = alpha[T0 + k] - np.dot(beta[:k][::-1], alpha[1:k + 1])
    return beta


def _acumular(q: np.ndarray) -> np.ndarray:
    return np.asarray([math.fsum(q[: t + 1].tolist()) for t in range(q.size)], dtype=np.float64)


def measured_trace(spec: WalkSpec, T0: int, T: int) -> MeasuredTrace:
    """Traza por la vía espectral: alpha de la suma cerrada y beta por recursión."""
    _validar(spec, T0, T)
    alpha = alpha_series(spec, T)
    q = np.zeros(T + 1, dtype=np.float64)
    if T0 <= T:
        beta = beta_recursion(alpha, T0, T - T0)
        q[T0 + 1:] = beta[: T - T0] ** 2
    else:
        beta = np.zeros(0, dtype=np.float64)
    return MeasuredTrace(spec=spec, T0=T0, T=T, alpha=alpha, beta=beta, q=q, p=_acumular(q))


def projective_simulation(spec: WalkSpec, T0: int, T: int) -> MeasuredTrace:
    """
    Evolución densa con la proyección (I - Pi_0) aplicada antes de cada paso
    posterior a T0. Registra q_t = |Pi_0 psi_{t-1}|^2 y la norma residual.
    """
    _validar(spec, T0, T)
    if spec.n > N_MAX_PROYECTIVO:
        raise ValueError(f"La simulación proyectiva es densa, se requiere n <= {N_MAX_PROYECTIVO}")
    genset = dense_sim.symmetric_generating_set(spec.n, spec.s)
    psi0 = dense_sim.symmetric_initial_state(genset)

    alpha = np.zeros(T + 1, dtype=np.float64)
    beta = np.zeros(max(T - T0 + 1, 0), dtype=np.float64)
    q = np.zeros(T + 1, dtype=np.float64)

    libre = psi0
    medido = psi0.copy()
    for t in range(T + 1):
        alpha[t] = dense_sim.overlap(libre, psi0).real
        if t >= T0:
            beta[t - T0] = dense_sim.overlap(medido, psi0).real
        if t == T:
            break
        if t >= T0:
            q[t + 1] = float(np.sum(np.abs(medido.amplitudes[:, 0]) ** 2))
            medido.amplitudes[:, 0] = 0.0
        libre = dense_sim.step(libre)
        medido = dense_sim.step(medido)

    return MeasuredTrace(
        spec=spec,
        T0=T0,
        T=T,
        alpha=alpha,
        beta=beta,
        q=q,
        p=_acumular(q),
        source="projective",
        residual_norm2=medido.norm() ** 2,
    )


def build_trace(spec: WalkSpec, T0: int, T: int, source: Fuente = "spectral") -> MeasuredTrace:
    if source == "spectral":
        return measured_trace(spec, T0, T)
    if source == "projective":
        return projective_simulation(spec, T0, T)
    raise ValueError(f"Fuente no soportada: {source}")


def alpha_identity_residual(trace: MeasuredTrace) -> float:
    """
    Máximo de |alpha_{T0+2t-2} - sum_{j<t} beta_{2(t-j-1)} alpha_{2j}| sobre
    los prefijos disponibles (s impar).
    """
    alpha, beta, T0 = trace.alpha, trace.beta, trace.T0
    peor = 0.0
    t = 1
    while T0 + 2 * t - 2 <= trace.T and 2 * t - 2 < beta.size:
        suma = math.fsum(beta[2 * (t - j - 1)] * alpha[2 * j] for j in range(t))
        peor = max(peor, abs(alpha[T0 + 2 * t - 2] - suma))
        t += 1
    return peor


def absorption_bound_check(
    spec: WalkSpec,
    T0: int,
    T_p: int,
    T: int,
    c: float = 1.0,
) -> AbsorptionReport:
    """
    p_T por la recursión frente a la cota c n / (eps (T - T_p)^2), con
    eps = max(|T_p - T/2|, 1). `ratio` = p_T / (n / (eps (T - T_p)^2)).

    Raises:
        ValueError: si s es par o no se cumple T0 <= T_p < T.
    """
    _validar(spec, T0, T)
    if not T0 <= T_p < T:
        raise ValueError(f"Se requiere T0 <= T_p < T, se recibió T0={T0}, T_p={T_p}, T={T}")
    if c <= 0:
        raise ValueError(f"La constante c debe ser positiva, se recibió {c}")
    eps = max(abs(T_p - T / 2), 1.0)
    referencia = spec.n / (eps * (T - T_p) ** 2)
    p_T = measured_trace(spec, T0, T).p_T
    return AbsorptionReport(
        spec=spec,
        T0=T0,
        T_p=T_p,
        T=T,
        c=c,
        epsilon=eps,
        p_T=p_T,
        bound=c * referencia,
        ratio=p_T / referencia,
    )


def even_gap_report(spec: WalkSpec, t_max: int) -> EvenGapReport:
    """
    max |alpha_{2t} - alpha_{2t+2}| para 2t + 2 <= t_max y la constante
    C = n * max que lo ubica en la escala C/n.
    """
    if t_max < 2:
        raise ValueError(f"t_max debe ser >= 2, se recibió {t_max}")
    alpha = alpha_series(spec, t_max)
    pares = alpha[0::2]
    saltos = np.abs(np.diff(pares))
    i = int(np.argmax(saltos))
    return EvenGapReport(
        spec=spec,
        t_max=t_max,
        max_gap=float(saltos[i]),
        argmax_t=2 * i,
        fitted_constant=float(saltos[i]) * spec.n,
    )
