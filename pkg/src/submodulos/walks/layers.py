"""
Estructura de capas de G(s): L_l = vértices de peso l.

Las fórmulas de este módulo se contrastan contra los censos exhaustivos de
`dense_sim` en los tests y en la suite de verificación `layers`.
"""
from dataclasses import dataclass

from src.submodulos.walks.core_math import WalkSpec, binom


@dataclass(frozen=True)
class KSequence:
    """k(0), k(2), ..., k(2(s-1)) y si se cumple la hipótesis 6s <= n."""
    values: tuple[int, ...]
    hypothesis_ok: bool

    @property
    def strictly_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.values, self.values[1:]))


@dataclass(frozen=True)
class LayerRelation:
    """Relaciones entre capas para un par (n, s) fijo."""
    n: int
    s: int

    def __post_init__(self):
        WalkSpec(self.n, self.s)

    def _validar_capa(self, l: int) -> None:
        if not 0 <= l <= self.n:
            raise ValueError(f"La capa debe cumplir 0 <= l <= {self.n}, se recibió {l}")

    def layer_size(self, l: int) -> int:
        self._validar_capa(l)
        return binom(self.n, l)

    def is_empty_layer(self, l: int) -> bool:
        """Capa fuera de la componente del origen: peso impar con s par."""
        self._validar_capa(l)
        return self.s % 2 == 0 and l % 2 == 1

    def neighbors(self, l: int) -> set[int]:
        self._validar_capa(l)
        inferior = abs(l - self.s)
        superior = min(l + self.s, 2 * self.n - l - self.s)
        return {t for t in range(inferior, superior + 1) if (t - inferior) % 2 == 0}

    def count(self, l: int, t: int) -> int:
        """
        Vecinos en L_t de un vértice fijo de L_l:
        C(l, (s+l)/2 - t/2) C(n-l, (s+t)/2 - l/2).

        Raises:
            ValueError: si las capas no son adyacentes.
        """
        if t not in self.neighbors(l):
            raise ValueError(f"Las capas {l} y {t} no son adyacentes para n={self.n}, s={self.s}")
        # l + s + t es par para capas adyacentes
        return binom(l, (self.s + l - t) // 2) * binom(self.n - l, (self.s + t - l) // 2)

    def k_sequence(self) -> KSequence:
        valores = tuple(self.count(l, self.s) for l in range(0, 2 * self.s - 1, 2))
        return KSequence(values=valores, hypothesis_ok=6 * self.s <= self.n)

    def common(self, l: int, t: int) -> set[int]:
        """
        Capas x que contienen un vecino común de algún v en L_l y algún
        q != v en L_t. Es la intersección de ambos conjuntos de vecinos:
        {x in [A, B] : x ≡ |l - s| (mod 2)} con
        A = max(|l-s|, |t-s|) y B = min(min(l+s, 2n-l-s), min(t+s, 2n-t-s)).

        Raises:
            ValueError: si l y t no forman un par alcanzable en dos pasos.
        """
        self._validar_capa(l)
        self._validar_capa(t)
        if (l - t) % 2 != 0 or abs(l - t) > 2 * self.s:
            raise ValueError(f"Las capas {l} y {t} no están a distancia par <= 2s")
        if l == t and l in (0, self.n):
            raise ValueError(f"La capa {l} tiene un único vértice, no hay pares v != q")
        minimo = max(abs(l - self.s), abs(t - self.s))
        maximo = min(l + self.s, 2 * self.n - l - self.s, t + self.s, 2 * self.n - t - self.s)
        return {x for x in range(minimo, maximo + 1) if (x - minimo) % 2 == 0}

    def weight_inverse_map(self) -> dict[int, int]:
        """
        Inversa de l -> (vecinos en L_s de un vértice de L_l) sobre las capas
        vecinas de L_s; es lo que usa la búsqueda clásica para deducir pesos.

        Raises:
            ValueError: si dos capas comparten conteo y la inversa no existe.
        """
        inversa: dict[int, int] = {}
        for l in sorted(self.neighbors(self.s)):
            x = self.count(l, self.s)
            if x in inversa:
                raise ValueError(
                    f"Los conteos hacia L_s no son inyectivos para n={self.n}, s={self.s}: "
                    f"capas {inversa[x]} y {l} comparten {x}"
                )
            inversa[x] = l
        return inversa


def layer_neighbors(l: int, n: int, s: int) -> set[int]:
    return LayerRelation(n, s).neighbors(l)


def connection_count(l: int, t: int, n: int, s: int) -> int:
    return LayerRelation(n, s).count(l, t)


def k_sequence(n: int, s: int) -> KSequence:
    return LayerRelation(n, s).k_sequence()


def local_common_layers(l: int, t: int, n: int, s: int) -> set[int]:
    return LayerRelation(n, s).common(l, t)


def layer_sizes(n: int) -> list[int]:
    return [binom(n, l) for l in range(n + 1)]


def is_empty_layer(l: int, n: int, s: int) -> bool:
    return LayerRelation(n, s).is_empty_layer(l)


def weight_inverse_map(n: int, s: int) -> dict[int, int]:
    return LayerRelation(n, s).weight_inverse_map()
