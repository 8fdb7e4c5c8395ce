"""
Simulador denso del paseo con moneda sobre Cay(Z_2^n, S).

El estado es una matriz compleja de forma (m, 2^n): fila b = dirección
(generador e_b), columna v = vértice (valor entero del vector de bits).
El operador nunca se materializa: la moneda de Grover es una actualización
de rango uno por vértice y el desplazamiento es una permutación por XOR.
"""
import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from src.submodulos.walks.core_math import WalkSpec

N_MAX_EXHAUSTIVO = 20
TOL_CENSO = 1e-9


@dataclass(frozen=True)
class GeneratingSet:
    """
    Conjunto generador S de Z_2^n, ordenado. Cada elemento es su propio
    inverso, así que S^-1 = S siempre.
    """
    n: int
    elements: tuple[int, ...]
    _tabla: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n debe ser positivo, se recibió {self.n}")
        elems = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise ValueError("El conjunto generador no puede estar vacío")
        if len(set(elems)) != len(elems):
            raise ValueError("El conjunto generador tiene elementos repetidos")
        if any(e == 0 for e in elems):
            raise ValueError("El vector cero no puede ser generador (el grafo tendría lazos)")
        if any(e < 0 or e >= 1 << self.n for e in elems):
            raise ValueError(f"Todos los generadores deben ser vectores de {self.n} bits")

    @property
    def m(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return 1 << self.n

    def as_array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)

    def shift_table(self) -> np.ndarray:
        """tabla[b, v] = v XOR e_b; se calcula una vez por conjunto."""
        if "shift" not in self._tabla:
            vertices = np.arange(self.size, dtype=np.int64)
            tabla = vertices[None, :] ^ self.as_array()[:, None]
            tabla.flags.writeable = False
            self._tabla["shift"] = tabla
        return self._tabla["shift"]

    def is_permutation_invariant(self) -> bool:
        """True si S es exactamente la capa completa de algún peso s."""
        pesos = {e.bit_count() for e in self.elements}
        return len(pesos) == 1 and self.m == math.comb(self.n, pesos.pop())


def bits(v: int, n: int) -> str:
    return format(v, f"0{n}b")


def symmetric_generating_set(n: int, s: int) -> GeneratingSet:
    """
    Todos los vectores de peso s en orden lexicográfico descendente de la
    cadena de bits: para (3, 1) da 100, 010, 001.
    """
    WalkSpec(n, s)
    elementos = tuple(
        sum(1 << (n - 1 - i) for i in posiciones)
        for posiciones in itertools.combinations(range(n), s)
    )
    return GeneratingSet(n=n, elements=elementos)


def from_elements(n: int, elements: Sequence[int | str]) -> GeneratingSet:
    """Acepta enteros o cadenas de bits de largo n."""
    convertidos = []
    for e in elements:
        if isinstance(e, str):
            if len(e) != n or set(e) - {"0", "1"}:
                raise ValueError(f"'{e}' no es una cadena de {n} bits")
            convertidos.append(int(e, 2))
        else:
            convertidos.append(int(e))
    return GeneratingSet(n=n, elements=tuple(convertidos))


@dataclass
class DenseState:
    """
    Vector de amplitudes sobre la base |b, v>, guardado como matriz (m, 2^n).
    """
    genset: GeneratingSet
    amplitudes: np.ndarray

    def __post_init__(self):
        forma = (self.genset.m, self.genset.size)
        if self.amplitudes.shape != forma:
            raise ValueError(f"Las amplitudes deben tener forma {forma}, se recibió {self.amplitudes.shape}")

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "DenseState":
        return DenseState(self.genset, self.amplitudes.copy())


def symmetric_initial_state(genset: GeneratingSet, vertex: int = 0) -> DenseState:
    """|Psi> (x) |vertex>, con Psi la superposición uniforme de direcciones."""
    if not 0 <= vertex < genset.size:
        raise ValueError(f"Vértice fuera de rango: {vertex}")
    amps = np.zeros((genset.m, genset.size), dtype=np.complex128)
    amps[:, vertex] = 1.0 / math.sqrt(genset.m)
    return DenseState(genset, amps)


def grover_coin(amplitudes: np.ndarray) -> np.ndarray:
    """G = 2|Psi><Psi| - I aplicado a la columna de cada vértice."""
    return 2.0 * amplitudes.mean(axis=0, keepdims=True) - amplitudes


def step(state: DenseState) -> DenseState:
    """Un paso Q = S (G (x) I): moneda y luego |b, v> -> |b, v XOR e_b>."""
    monedas = grover_coin(state.amplitudes)
    # El XOR es involutivo: new[b, w] = monedas[b, w XOR e_b]
    nuevas = np.take_along_axis(monedas, state.genset.shift_table(), axis=1)
    return DenseState(state.genset, nuevas)


def evolve(state: DenseState, t: int) -> DenseState:
    if t < 0:
        raise ValueError(f"t debe ser no negativo, se recibió {t}")
    for _ in range(t):
        state = step(state)
    return state


def iter_evolution(state: DenseState, t_max: int) -> Iterator[tuple[int, DenseState]]:
    """Genera (t, psi_t) para t = 0..t_max."""
    if t_max < 0:
        raise ValueError(f"t_max debe ser no negativo, se recibió {t_max}")
    yield 0, state
    for t in range(1, t_max + 1):
        state = step(state)
        yield t, state


def vertex_distribution(state: DenseState) -> np.ndarray:
    """Probabilidad por vértice: ||Pi_x psi||^2."""
    return np.sum(np.abs(state.amplitudes) ** 2, axis=0)


def overlap(state: DenseState, other: DenseState) -> complex:
    """<other | state>."""
    return complex(np.vdot(other.amplitudes, state.amplitudes))


def projection_amplitude(state: DenseState, vertex: int) -> complex:
    """<Psi, vertex | state>."""
    return complex(state.amplitudes[:, vertex].sum() / math.sqrt(state.genset.m))


def export_records(state: DenseState) -> list[tuple[int, str, float, float]]:
    """Registros planos (coin_index, vertex_bits, re, im); coin_index desde 1."""
    n = state.genset.n
    registros = []
    for b in range(state.genset.m):
        fila = state.amplitudes[b]
        for v in range(state.genset.size):
            registros.append((b + 1, bits(v, n), float(fila[v].real), float(fila[v].imag)))
    return registros


########################## Espectro de la moneda ##########################

@dataclass(frozen=True)
class CoinEigensystem:
    """
    Descomposición de Gamma_d = D G, con D la diagonal que niega las
    últimas d direcciones.

    `census` cuenta los autovalores +1 y -1 encontrados numéricamente;
    `expected` es el censo verdadero de la moneda de Grover.
    """
    m: int
    d: int
    eigenvalues: np.ndarray = field(compare=False)
    eigenvectors: np.ndarray = field(compare=False)
    nontrivial_pair: tuple[complex, complex] | None
    census: dict
    expected: dict

    @property
    def matches(self) -> bool:
        return self.census == self.expected


def coin_matrix(m: int, d: int) -> np.ndarray:
    if m < 1 or not 0 <= d <= m:
        raise ValueError(f"Se requiere m >= 1 y 0 <= d <= m, se recibió m={m}, d={d}")
    grover = np.full((m, m), 2.0 / m) - np.eye(m)
    signos = np.ones(m)
    signos[m - d:] = -1.0
    return signos[:, None] * grover


def _censo_esperado(m: int, d: int) -> dict:
    if d == 0:
        return {"+1": 1, "-1": m - 1, "pair": 0}
    if d == m:
        return {"+1": m - 1, "-1": 1, "pair": 0}
    return {"+1": d - 1, "-1": m - d - 1, "pair": 2}


def coin_eigensystem(m: int, d: int) -> CoinEigensystem:
    """
    Diagonaliza Gamma_d numéricamente. Para 1 <= d <= m-1 el par no
    trivial es lambda_d = 1 - 2d/m + (2i/m) sqrt(d(m-d)) y su conjugado.
    """
    gamma = coin_matrix(m, d)
    valores, vectores = np.linalg.eig(gamma)

    uno = np.abs(valores - 1.0) < TOL_CENSO
    menos_uno = np.abs(valores + 1.0) < TOL_CENSO
    resto = valores[~(uno | menos_uno)]

    par = None
    if 0 < d < m:
        lam = complex(1 - 2 * d / m, 2 * math.sqrt(d * (m - d)) / m)
        par = (lam, lam.conjugate())

    census = {"+1": int(uno.sum()), "-1": int(menos_uno.sum()), "pair": int(resto.size)}
    if par is not None and resto.size == 2:
        # el par debe coincidir con la fórmula, en cualquier orden
        ordenados = sorted(resto.tolist(), key=lambda z: z.imag)
        esperado = sorted(par, key=lambda z: z.imag)
        if max(abs(a - b) for a, b in zip(ordenados, esperado)) >= TOL_CENSO:
            census["pair"] = -1
    return CoinEigensystem(
        m=m,
        d=d,
        eigenvalues=valores,
        eigenvectors=vectores,
        nontrivial_pair=par,
        census=census,
        expected=_censo_esperado(m, d),
    )


########################## Estructura del grafo ##########################

@dataclass(frozen=True)
class ComponentCensus:
    count: int
    labels: np.ndarray = field(compare=False)

    def sizes(self) -> list[int]:
        return np.bincount(self.labels, minlength=self.count).tolist()


def connected_components(genset: GeneratingSet) -> ComponentCensus:
    """BFS por fronteras completas sobre los 2^n vértices."""
    if genset.n > N_MAX_EXHAUSTIVO:
        raise ValueError(f"BFS exhaustivo limitado a n <= {N_MAX_EXHAUSTIVO}, se recibió {genset.n}")
    etiquetas = np.full(genset.size, -1, dtype=np.int64)
    elems = genset.as_array()
    componente = 0
    while True:
        libres = np.flatnonzero(etiquetas < 0)
        if libres.size == 0:
            break
        frontera = libres[:1]
        etiquetas[frontera] = componente
        while frontera.size:
            vecinos = (frontera[:, None] ^ elems[None, :]).ravel()
            vecinos = np.unique(vecinos[etiquetas[vecinos] < 0])
            etiquetas[vecinos] = componente
            frontera = vecinos
        componente += 1
    return ComponentCensus(count=componente, labels=etiquetas)


def code_weight_coefficients(genset: GeneratingSet, chunk: int = 1 << 16) -> list[int]:
    """
    W_k = #{v : |Av| = k}, con (Av)_i = <e_i, v> mod 2, recorriendo los 2^n
    mensajes por bloques.
    """
    if genset.n > N_MAX_EXHAUSTIVO:
        raise ValueError(f"Enumeración exhaustiva limitada a n <= {N_MAX_EXHAUSTIVO}, se recibió {genset.n}")
    elems = genset.as_array().astype(np.uint64)
    conteo = np.zeros(genset.m + 1, dtype=np.int64)
    for inicio in range(0, genset.size, chunk):
        v = np.arange(inicio, min(inicio + chunk, genset.size), dtype=np.uint64)
        peso = np.zeros(v.size, dtype=np.int64)
        for e in elems:
            peso += np.bitwise_count(v & e) & 1
        conteo += np.bincount(peso, minlength=genset.m + 1)
    return conteo.tolist()


def layer_adjacency_census(genset: GeneratingSet) -> dict[tuple[int, int], set[int]]:
    """
    Para cada par de capas (l, t) el conjunto de cantidades de vecinos en L_t
    observadas sobre los vértices de L_l. Un conjunto unitario indica que el
    conteo es el mismo para toda la capa.
    """
    if genset.n > N_MAX_EXHAUSTIVO:
        raise ValueError(f"Censo exhaustivo limitado a n <= {N_MAX_EXHAUSTIVO}, se recibió {genset.n}")
    n = genset.n
    vertices = np.arange(genset.size, dtype=np.int64)
    pesos = np.bitwise_count(vertices).astype(np.int64)
    conteos = np.zeros((genset.size, n + 1), dtype=np.int64)
    for e in genset.as_array():
        np.add.at(conteos, (vertices, np.bitwise_count(vertices ^ e).astype(np.int64)), 1)

    censo: dict[tuple[int, int], set[int]] = {}
    for l in range(n + 1):
        filas = conteos[pesos == l]
        if filas.size == 0:
            continue
        for t in range(n + 1):
            valores = set(np.unique(filas[:, t]).tolist())
            if valores != {0}:
                censo[(l, t)] = valores
    return censo


def common_layers_census(genset: GeneratingSet, l: int) -> dict[int, set[int]]:
    """
    Capas x de vecinos comunes w de un v en L_l y algún q != v, agrupadas por
    la capa t de q. Usa el representante v = 1^l 0^(n-l), válido porque las
    permutaciones de coordenadas preservan las capas y al conjunto S.
    """
    if not genset.is_permutation_invariant():
        raise ValueError("El censo por representante requiere un conjunto generador simétrico")
    n = genset.n
    if not 0 <= l <= n:
        raise ValueError(f"Capa fuera de rango: {l}")
    elems = genset.as_array()
    v = ((1 << l) - 1) << (n - l)
    w = v ^ elems
    q = (w[:, None] ^ elems[None, :]).ravel()
    capa_w = np.repeat(np.bitwise_count(w).astype(np.int64), genset.m)
    capa_q = np.bitwise_count(q).astype(np.int64)
    distinto = q != v

    resultado: dict[int, set[int]] = defaultdict(set)
    for t, x in set(zip(capa_q[distinto].tolist(), capa_w[distinto].tolist())):
        resultado[t].add(x)
    return dict(resultado)
