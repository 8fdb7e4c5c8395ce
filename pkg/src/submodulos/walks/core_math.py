"""
Combinatoria exacta de la familia G(s): binomiales, característica de peso
d_k^s, coeficientes de Kravchuk, paridades y fases propias.

Todas las cantidades enteras son enteros de Python (precisión arbitraria);
la única división por m ocurre al convertir un racional exacto a float.
"""
import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class WalkSpec:
    """
    Par (n, s) que define Cay(Z_2^n, S) con S = {e : |e| = s}.

    Atributos:
        n (int): dimensión del cubo Z_2^n.
        s (int): peso de los generadores, 1 <= s < n.
        m (int): grado del grafo y dimensión de la moneda, C(n, s).
    """
    n: int
    s: int
    m: int = field(init=False)

    def __post_init__(self):
        try:
            object.__setattr__(self, "n", operator.index(self.n))
            object.__setattr__(self, "s", operator.index(self.s))
        except TypeError:
            raise TypeError(f"n y s deben ser enteros, se recibió n={self.n!r}, s={self.s!r}") from None
        if not 1 <= self.s < self.n:
            raise ValueError(f"Se requiere 1 <= s < n, se recibió n={self.n}, s={self.s}")
        object.__setattr__(self, "m", math.comb(self.n, self.s))


@dataclass(frozen=True)
class SpectralRow:
    k: int
    d_k: int
    kravchuk: int
    cos_omega: float
    omega: float
    d_parity: int


@dataclass(frozen=True)
class SpectralTable:
    spec: WalkSpec
    rows: tuple[SpectralRow, ...]

    def __getitem__(self, k: int) -> SpectralRow:
        return self.rows[k]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class KravchukBound:
    """
    Resultado de `kravchuk_bound`.

    `rhs` usa el exponente delta^s de la cadena explícita; `rhs_printed`
    conserva la variante delta^(s/2) solo para comparación.
    """
    k: int
    delta: float
    lhs: float
    rhs: float
    rhs_printed: float

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs


def binom(n: int, k: int) -> int:
    """C(n, k) exacto, 0 fuera de rango."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _validar_k(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"El peso k debe cumplir 0 <= k <= {n}, se recibió {k}")


def weight_characteristic(spec: WalkSpec, k: int) -> int:
    """
    d_k^s: cantidad de generadores con producto interno impar contra un
    vértice fijo de peso k.

    Args:
        spec (WalkSpec): par (n, s).
        k (int): peso del vértice, 0..n.

    Returns:
        int: sum_{l impar} C(k, l) C(n-k, s-l).
    """
    _validar_k(spec.n, k)
    return sum(binom(k, l) * binom(spec.n - k, spec.s - l) for l in range(1, spec.s + 1, 2))


def kravchuk(n: int, k: int, s: int) -> int:
    """phi_{k,n}(s) = sum_l (-1)^l C(k,l) C(n-k,s-l)."""
    _validar_k(n, k)
    if not 0 <= s <= n:
        raise ValueError(f"s debe cumplir 0 <= s <= {n}, se recibió {s}")
    return sum((-1) ** l * binom(k, l) * binom(n - k, s - l) for l in range(s + 1))


def _multiplicar(p: list[int], q: list[int]) -> list[int]:
    res = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            res[i + j] += a * b
    return res


def kravchuk_via_generating_function(n: int, k: int) -> list[int]:
    """
    Coeficientes de (1-x)^k (1+x)^(n-k) por multiplicación exacta de
    polinomios; el coeficiente s coincide con kravchuk(n, k, s).
    """
    _validar_k(n, k)
    poly = [1]
    for _ in range(k):
        poly = _multiplicar(poly, [1, -1])
    for _ in range(n - k):
        poly = _multiplicar(poly, [1, 1])
    return poly


def d_parity(spec: WalkSpec, k: int) -> int:
    """
    Paridad de d_k^s sin evaluar d_k^s: 0 para k par, C(n-1, s-1) mod 2
    para k impar (C(n-1, s-1) = m s / n).
    """
    _validar_k(spec.n, k)
    if k % 2 == 0:
        return 0
    return binom(spec.n - 1, spec.s - 1) % 2


def cos_omega_exact(spec: WalkSpec, k: int) -> Fraction:
    return Fraction(spec.m - 2 * weight_characteristic(spec, k), spec.m)


def eigenphase(spec: WalkSpec, k: int) -> tuple[float, float]:
    """
    (cos w_k, w_k) con cos w_k = 1 - 2 d_k^s / m redondeado una sola vez
    desde el racional exacto, y w_k = arccos(cos w_k) en [0, pi].
    """
    cos_omega = float(cos_omega_exact(spec, k))
    return cos_omega, math.acos(max(-1.0, min(1.0, cos_omega)))


def chernoff_delta(n: int, f_of_n: float | None = None) -> float:
    """delta = sqrt(2 f(n) / n), con f(n) = ln n por defecto."""
    if n < 2:
        raise ValueError(f"chernoff_delta requiere n >= 2, se recibió {n}")
    f = math.log(n) if f_of_n is None else f_of_n
    if f <= 0:
        raise ValueError(f"f_of_n debe ser positivo, se recibió {f}")
    return math.sqrt(2.0 * f / n)


def in_delta_window(n: int, k: int, delta: float) -> bool:
    return abs(k - n / 2) <= (n / 2) * delta


def kravchuk_bound(spec: WalkSpec, k: int, f_of_n: float | None = None) -> KravchukBound:
    """
    Compara |cos w_k| con la cota 2 (1 - s/n)^(-s) (s+1)! delta^s.

    Raises:
        ValueError: si k cae fuera de la ventana |k - n/2| <= (n/2) delta.
    """
    n, s = spec.n, spec.s
    delta = chernoff_delta(n, f_of_n)
    if not in_delta_window(n, k, delta):
        raise ValueError(
            f"k={k} fuera de la ventana |k - n/2| <= (n/2)*delta con delta={delta:.6g}"
        )
    constante = 2.0 * (1.0 - s / n) ** (-s) * math.factorial(s + 1)
    lhs = abs(float(cos_omega_exact(spec, k)))
    return KravchukBound(
        k=k,
        delta=delta,
        lhs=lhs,
        rhs=constante * delta ** s,
        rhs_printed=constante * delta ** (s / 2),
    )


def delta_window(n: int, f_of_n: float | None = None) -> range:
    """Pesos k dentro de la ventana de Chernoff."""
    delta = chernoff_delta(n, f_of_n)
    return range(
        math.ceil(n / 2 - (n / 2) * delta),
        math.floor(n / 2 + (n / 2) * delta) + 1,
    )


def spectral_table(spec: WalkSpec) -> SpectralTable:
    rows = []
    for k in range(spec.n + 1):
        d = weight_characteristic(spec, k)
        cos_omega, omega = eigenphase(spec, k)
        rows.append(SpectralRow(
            k=k,
            d_k=d,
            kravchuk=spec.m - 2 * d,
            cos_omega=cos_omega,
            omega=omega,
            d_parity=d_parity(spec, k),
        ))
    return SpectralTable(spec=spec, rows=tuple(rows))


def weight_enumerator_from_spectrum(spec: WalkSpec) -> list[int]:
    """
    Coeficientes de peso W_0..W_m del código del grafo predichos por el
    espectro: W_{d_k} acumula C(n, k).
    """
    pesos = [0] * (spec.m + 1)
    for k in range(spec.n + 1):
        pesos[weight_characteristic(spec, k)] += binom(spec.n, k)
    return pesos


def arcsin_linearization_gap(spec: WalkSpec, k: int) -> tuple[float, float]:
    """
    Devuelve (|(pi/2 - w_k) - x|, |x|^3) con x = 1 - 2 d_k/m; la primera
    no supera a la segunda cuando |x| <= 0.5.
    """
    x, omega = eigenphase(spec, k)
    return abs((math.pi / 2 - omega) - x), abs(x) ** 3
