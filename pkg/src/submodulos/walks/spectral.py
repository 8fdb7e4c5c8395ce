"""
Amplitudes de retorno y de llegada en forma cerrada y predicción de tiempos.

A(t) = sum_k 2^-n C(n,k) cos(w_k t)            (retorno a 0^n)
H(t) = sum_k 2^-n (-1)^k C(n,k) cos(w_k t)     (llegada a 1^n)

Las probabilidades son A(t)^2 y H(t)^2.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from src.submodulos.walks.core_math import WalkSpec, binom, eigenphase

# Por debajo de este n los pesos binomiales se calculan como racionales exactos
N_PESOS_EXACTOS = 64
BETA_DEFECTO = 0.3


class Target(str, Enum):
    ORIGIN = "origin"
    ANTIPODE = "antipode"


class TimeKind(str, Enum):
    RETURN_AT_PI_M = "ReturnAtPiM"
    RETURN_AT_HALF_PI_M = "ReturnAtHalfPiM"
    HIT_AT_HALF_PI_M = "HitAtHalfPiM"

    @property
    def factor(self) -> float:
        return math.pi if self is TimeKind.RETURN_AT_PI_M else math.pi / 2


@dataclass(frozen=True)
class ProbabilityQuery:
    spec: WalkSpec
    t: int
    target: Target = Target.ORIGIN

    def __post_init__(self):
        if self.t < 0:
            raise ValueError(f"t debe ser no negativo, se recibió {self.t}")

    def amplitude(self) -> float:
        if self.target is Target.ORIGIN:
            return return_amplitude(self.spec, self.t)
        return hit_amplitude(self.spec, self.t)

    def probability(self) -> float:
        return self.amplitude() ** 2


@dataclass(frozen=True)
class TimePrediction:
    """
    Tiempo predicho T = round(c m) + epsilon, corregido en +1 si hace falta
    para que 2 | (T - m). `T_center` es el mismo cálculo con epsilon = 0.
    """
    spec: WalkSpec
    T: int
    T_center: int
    epsilon: int
    beta: float
    kind: TimeKind
    parity_ok: bool
    side_condition_ok: bool


def _ajustar_paridad(t: int, m: int) -> int:
    return t if (t - m) % 2 == 0 else t + 1


@lru_cache(maxsize=256)
def binomial_weights(spec: WalkSpec) -> np.ndarray:
    """
    Pesos 2^-n C(n,k), k = 0..n. Exactos para n <= 64; en dominio
    logarítmico por encima, donde 2^-n C(n,k) se iría a cero.
    """
    n = spec.n
    if n <= N_PESOS_EXACTOS:
        pesos = [float(Fraction(binom(n, k), 2 ** n)) for k in range(n + 1)]
    else:
        log2 = math.log(2.0)
        pesos = [
            math.exp(math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1) - n * log2)
            for k in range(n + 1)
        ]
    arr = np.asarray(pesos, dtype=np.float64)
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=256)
def _omegas(spec: WalkSpec) -> np.ndarray:
    arr = np.asarray([eigenphase(spec, k)[1] for k in range(spec.n + 1)], dtype=np.float64)
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=256)
def _signos(spec: WalkSpec) -> np.ndarray:
    arr = np.where(np.arange(spec.n + 1) % 2 == 0, 1.0, -1.0)
    arr.flags.writeable = False
    return arr


def _suma(spec: WalkSpec, t: int, alternada: bool) -> float:
    if t < 0:
        raise ValueError(f"t debe ser no negativo, se recibió {t}")
    pesos = binomial_weights(spec)
    if alternada:
        pesos = pesos * _signos(spec)
    terminos = pesos * np.cos(_omegas(spec) * t)
    return math.fsum(terminos.tolist())


def return_amplitude(spec: WalkSpec, t: int) -> float:
    """A(t) = <psi_0 | Q^t | psi_0>, suma compensada (math.fsum)."""
    return _suma(spec, t, alternada=False)


def hit_amplitude(spec: WalkSpec, t: int) -> float:
    """H(t) = <Psi, 1^n | Q^t | psi_0>."""
    return _suma(spec, t, alternada=True)


def _sumas(spec: WalkSpec, ts: Sequence[int], alternada: bool) -> np.ndarray:
    ts = np.asarray(list(ts), dtype=np.int64)
    if ts.size and ts.min() < 0:
        raise ValueError("Todos los t deben ser no negativos")
    pesos = binomial_weights(spec)
    if alternada:
        pesos = pesos * _signos(spec)
    terminos = np.cos(np.outer(ts.astype(np.float64), _omegas(spec))) * pesos
    return np.asarray([math.fsum(fila.tolist()) for fila in terminos], dtype=np.float64)


def return_amplitudes(spec: WalkSpec, ts: Iterable[int]) -> np.ndarray:
    return _sumas(spec, list(ts), alternada=False)


def hit_amplitudes(spec: WalkSpec, ts: Iterable[int]) -> np.ndarray:
    return _sumas(spec, list(ts), alternada=True)


def predict_time(
    spec: WalkSpec,
    kind: TimeKind | str,
    beta: float = BETA_DEFECTO,
    epsilon: int | None = None,
) -> TimePrediction:
    """
    Tiempo de retorno o de llegada predicho.

    Args:
        spec (WalkSpec): par (n, s).
        kind (TimeKind): ReturnAtPiM, ReturnAtHalfPiM o HitAtHalfPiM.
        beta (float): exponente en (1/4, 1/2); epsilon = round(n^(beta s)).
        epsilon (int | None): desplazamiento explícito; 0 da el centro
            round(c m) corregido por paridad.

    Returns:
        TimePrediction

    Raises:
        ValueError: beta fuera de (1/4, 1/2), epsilon negativo o congruencia
            C(n-1, s-1) incompatible con el tipo pedido.
    """
    kind = TimeKind(kind)
    if not 0.25 < beta < 0.5:
        raise ValueError(f"beta debe estar en (1/4, 1/2), se recibió {beta}")

    c1 = binom(spec.n - 1, spec.s - 1)
    if kind is TimeKind.HIT_AT_HALF_PI_M and c1 % 2 == 0:
        raise ValueError(
            f"HitAtHalfPiM requiere m*s/n = C(n-1,s-1) ≡ 1 (mod 2); C({spec.n - 1},{spec.s - 1}) es par"
        )
    if kind is TimeKind.RETURN_AT_HALF_PI_M and c1 % 2 == 1:
        raise ValueError(
            f"ReturnAtHalfPiM requiere m*s/n = C(n-1,s-1) ≡ 0 (mod 2); C({spec.n - 1},{spec.s - 1}) es impar"
        )

    if epsilon is None:
        epsilon = round(spec.n ** (beta * spec.s))
    elif epsilon < 0:
        raise ValueError(f"epsilon debe ser no negativo, se recibió {epsilon}")

    centro = round(kind.factor * spec.m)
    T = _ajustar_paridad(centro + epsilon, spec.m)
    return TimePrediction(
        spec=spec,
        T=T,
        T_center=_ajustar_paridad(centro, spec.m),
        epsilon=epsilon,
        beta=beta,
        kind=kind,
        parity_ok=(T - spec.m) % 2 == 0,
        side_condition_ok=math.factorial(spec.s) <= spec.n ** (spec.s / 8),
    )


def probability_curve(spec: WalkSpec, t_range: Iterable[int]) -> list[tuple[int, float, float]]:
    """Lista de (t, prob_retorno, prob_llegada) para cada t pedido."""
    ts = list(t_range)
    if not ts:
        raise ValueError("t_range no puede estar vacío")
    retorno = return_amplitudes(spec, ts) ** 2
    llegada = hit_amplitudes(spec, ts) ** 2
    return [(int(t), float(r), float(h)) for t, r, h in zip(ts, retorno, llegada)]
