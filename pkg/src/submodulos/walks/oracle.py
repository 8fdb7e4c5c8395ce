"""
Problema del vértice antipodal con oráculo de nombres.

El grafo G(s) se oculta detrás de un mapeo inyectivo f: vértice -> nombre de
N = 2n bits (en hexadecimal de ancho fijo). El algoritmo solo puede preguntar
`query(nombre, k)` y recibe el nombre del k-ésimo vecino, o "" si el nombre o
el índice no son válidos. Cada consulta se cuenta.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from src.submodulos.walks import dense_sim
from src.submodulos.walks.core_math import WalkSpec
from src.submodulos.walks.layers import LayerRelation

N_MAX_ORACULO = 20
SIN_RESPUESTA = "-"

Semilla = int | np.random.SeedSequence | np.random.Generator


@dataclass(eq=False)
class OracleGraph:
    """
    Oráculo de consultas sobre G(s) con nombres ocultos.

    La numeración de vecinos h es el índice del generador, por lo que es
    recíproca: si u es el k-ésimo vecino de v, v es el k-ésimo vecino de u.
    Los atributos con guion bajo son la verdad oculta; solo los usan los
    tests y las comprobaciones de éxito, nunca los algoritmos de búsqueda.
    """
    n: int
    s: int
    name_bits: int
    _genset: dense_sim.GeneratingSet = field(repr=False)
    _names: np.ndarray = field(repr=False)
    query_counter: int = 0
    record_transcript: bool = True
    transcript: list[tuple[str, int, str]] = field(default_factory=list, repr=False)
    logger: Any = field(default=None, repr=False)
    _index: dict[int, int] = field(default_factory=dict, repr=False)
    _tabla_rangos: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self._index = {int(nombre): v for v, nombre in enumerate(self._names.tolist())}

    @property
    def m(self) -> int:
        return self._genset.m

    @property
    def hex_width(self) -> int:
        return math.ceil(self.name_bits / 4)

    def _formatear(self, valor: int) -> str:
        return format(valor, f"0{self.hex_width}x")

    def _vertice(self, nombre: str) -> int | None:
        if not isinstance(nombre, str) or len(nombre) != self.hex_width:
            return None
        try:
            return self._index.get(int(nombre, 16))
        except ValueError:
            return None

    def query(self, nombre: str, k: int) -> str:
        """
        Nombre del k-ésimo vecino (k = 1..m) del vértice llamado `nombre`.
        Devuelve "" si el nombre no corresponde a un vértice o k es inválido.
        """
        self.query_counter += 1
        respuesta = ""
        v = self._vertice(nombre)
        if v is not None and isinstance(k, int) and 1 <= k <= self.m:
            respuesta = self._formatear(int(self._names[v ^ self._genset.elements[k - 1]]))
        if self.record_transcript:
            self.transcript.append((nombre, k, respuesta))
        return respuesta

    def neighbors(self, nombre: str) -> list[str]:
        """Las m respuestas de `nombre`; cuesta m consultas."""
        return [self.query(nombre, k) for k in range(1, self.m + 1)]

    def valid_names(self) -> list[str]:
        """Base ordenada del subespacio de nombres válidos L."""
        return [self._formatear(int(x)) for x in np.sort(self._names)]

    def apply_shift(self, amplitudes: np.ndarray) -> np.ndarray:
        """
        Desplazamiento cuántico sobre C^m (x) L, con L indexado por
        `valid_names()`. Cuenta como una consulta.
        """
        if self._tabla_rangos is None:
            orden = np.argsort(self._names)
            rango_de_vertice = np.empty_like(orden)
            rango_de_vertice[orden] = np.arange(orden.size)
            # tabla[b, r] = rango del vecino b del vértice de rango r
            self._tabla_rangos = rango_de_vertice[self._genset.shift_table()[:, orden]]
        self.query_counter += 1
        return np.take_along_axis(amplitudes, self._tabla_rangos, axis=1)

    def reset_counter(self) -> None:
        self.query_counter = 0
        self.transcript.clear()

    def export_transcript(self) -> str:
        """Registros 'consulta indice respuesta' separados por saltos de línea."""
        return "".join(
            f"{nombre} {k} {respuesta or SIN_RESPUESTA}\n" for nombre, k, respuesta in self.transcript
        )

    ####### Verdad oculta, solo para validación #######

    def name_of(self, vertex: int) -> str:
        return self._formatear(int(self._names[vertex]))

    def vertex_of(self, nombre: str) -> int | None:
        return self._vertice(nombre)

    def antipode_name(self, nombre: str) -> str:
        v = self._vertice(nombre)
        if v is None:
            raise ValueError(f"'{nombre}' no es un nombre válido")
        return self.name_of(v ^ ((1 << self.n) - 1))

    def hidden_weight(self, origen: str, nombre: str) -> int:
        return (self._vertice(origen) ^ self._vertice(nombre)).bit_count()


@dataclass(frozen=True)
class SearchResult:
    answer: str
    queries: int
    success: bool
    inferences: dict[str, int] = field(default_factory=dict, compare=False, repr=False)


@dataclass(frozen=True)
class QuantumSearchResult:
    answer: str
    queries: int
    success_probability: float
    distribution: dict[str, float] = field(compare=False, repr=False)


def make_oracle(
    n: int,
    s: int,
    seed: Semilla,
    strict: bool = True,
    logger: Any = None,
    record_transcript: bool = True,
) -> OracleGraph:
    """
    Construye el oráculo con f muestreado uniformemente e inyectivo sobre
    nombres de 2n bits.

    Raises:
        ValueError: si s >= n/6 en modo estricto (el antipodal deja de estar
            garantizado) o si n no es materializable.
    """
    WalkSpec(n, s)
    if n > N_MAX_ORACULO:
        raise ValueError(f"El oráculo se materializa completo, se requiere n <= {N_MAX_ORACULO}")
    if 6 * s >= n:
        if strict:
            raise ValueError(
                f"Se requiere s < n/6 para garantizar un único vértice antipodal (n={n}, s={s})"
            )
        if logger:
            logger.warning(f"[ORACLE] s={s} >= n/6 con n={n}: fuera de la premisa de antipodalidad")

    name_bits = 2 * n
    rng = np.random.default_rng(seed)
    nombres = rng.choice(1 << name_bits, size=1 << n, replace=False)
    oracle = OracleGraph(
        n=n,
        s=s,
        name_bits=name_bits,
        _genset=dense_sim.symmetric_generating_set(n, s),
        _names=np.asarray(nombres, dtype=np.int64),
        record_transcript=record_transcript,
        logger=logger,
    )
    if logger:
        logger.debug(f"[ORACLE] Oráculo creado n={n}, s={s}, m={oracle.m}, nombres de {name_bits} bits")
    return oracle


def classical_search(
    oracle: OracleGraph,
    start_name: str,
    seed: Semilla = 0,
) -> SearchResult:
    """
    Escalera clásica por capas.

    1. m consultas dan f(L_s) = N(v0); v1 = menor nombre de N(v0).
    2. Para cada u en N(v1) distinto de v0, m consultas y |N(u) ∩ f(L_s)|
       invertido con `weight_inverse_map` da el peso de u.
    3. Mientras (t+1)s <= n: v_{t+1} en N(v_t) con peso (t+1)s; para cada u
       en N(v_{t+1}) distinto de v_t, |u| = j(u) + s con j(u) el menor peso
       en N(u) ∩ N(v_t).
    4. Si s | n la cima es el antipodal. Si no, desde el escalón más alto
       con un vecino de peso n - s se pregunta un vecino al azar de ese
       vecino (éxito 1/m).
    """
    n, s, m = oracle.n, oracle.s, oracle.m
    logger = oracle.logger
    rng = np.random.default_rng(seed)
    inicio = oracle.query_counter

    inversa = LayerRelation(n, s).weight_inverse_map()

    vecinos: dict[str, list[str]] = {start_name: oracle.neighbors(start_name)}
    capa_s = set(vecinos[start_name])
    pesos: dict[str, int] = {start_name: 0}
    pesos.update({u: s for u in capa_s})

    v_actual = min(capa_s)
    vecinos[v_actual] = oracle.neighbors(v_actual)
    for u in vecinos[v_actual]:
        if u == start_name:
            continue
        vecinos[u] = oracle.neighbors(u)
        pesos[u] = inversa[len(capa_s.intersection(vecinos[u]))]

    escalera = [v_actual]
    t = 1
    while (t + 1) * s <= n:
        candidatos = [u for u in vecinos[v_actual] if pesos[u] == (t + 1) * s]
        v_siguiente = min(candidatos)
        vecinos_previos = set(vecinos[v_actual])
        vecinos[v_siguiente] = oracle.neighbors(v_siguiente)
        for u in vecinos[v_siguiente]:
            if u == v_actual:
                continue
            vecinos[u] = oracle.neighbors(u)
            comunes = vecinos_previos.intersection(vecinos[u])
            pesos[u] = min(pesos[w] for w in comunes) + s
        v_actual = v_siguiente
        escalera.append(v_actual)
        t += 1
        if logger:
            logger.debug(f"[ORACLE] Escalón {t}: peso {t * s}, consultas {oracle.query_counter - inicio}")

    if t * s == n:
        respuesta = v_actual
    else:
        objetivo = n - s
        escalon = next(
            (v for v in reversed(escalera) if any(pesos[u] == objetivo for u in vecinos[v])),
            None,
        )
        if escalon is None:
            # Con s par y n impar la capa n - s no es alcanzable: 1^n está en la otra componente
            if logger:
                logger.warning(f"[ORACLE] Capa {objetivo} inalcanzable desde la escalera (n={n}, s={s})")
            escalon = v_actual
            candidato = max(vecinos[v_actual], key=lambda u: (pesos[u], u))
        else:
            candidato = min(u for u in vecinos[escalon] if pesos[u] == objetivo)
        k = int(rng.integers(1, m + 1))
        respuesta = oracle.query(candidato, k)

    consultas = oracle.query_counter - inicio
    exito = respuesta == oracle.antipode_name(start_name)
    if logger:
        logger.info(f"[ORACLE] Búsqueda clásica n={n}, s={s}: consultas={consultas}, éxito={exito}")
    return SearchResult(answer=respuesta, queries=consultas, success=exito, inferences=pesos)


def quantum_search(oracle: OracleGraph, start_name: str, T: int) -> QuantumSearchResult:
    """
    Paseo |psi_t> = S (G (x) I) |psi_{t-1}> sobre C^m (x) L, partiendo de
    |Psi> (x) |start_name>. Cada paso cuesta una consulta cuántica.
    """
    if T < 0:
        raise ValueError(f"T debe ser no negativo, se recibió {T}")
    base = oracle.valid_names()
    try:
        r0 = base.index(start_name)
    except ValueError:
        raise ValueError(f"'{start_name}' no es un nombre válido") from None

    inicio = oracle.query_counter
    amps = np.zeros((oracle.m, len(base)), dtype=np.complex128)
    amps[:, r0] = 1.0 / math.sqrt(oracle.m)
    for _ in range(T):
        amps = oracle.apply_shift(dense_sim.grover_coin(amps))

    probs = np.sum(np.abs(amps) ** 2, axis=0)
    distribucion = {base[r]: float(probs[r]) for r in np.flatnonzero(probs > 0.0)}
    antipodal = oracle.antipode_name(start_name)
    respuesta = base[int(np.argmax(probs))]
    if oracle.logger:
        oracle.logger.info(f"[ORACLE] Búsqueda cuántica T={T}: P(antipodal)={distribucion.get(antipodal, 0.0):.6g}")
    return QuantumSearchResult(
        answer=respuesta,
        queries=oracle.query_counter - inicio,
        success_probability=distribucion.get(antipodal, 0.0),
        distribution=distribucion,
    )


def parse_transcript(texto: str) -> list[tuple[str, int, str]]:
    registros = []
    for numero, linea in enumerate(texto.splitlines(), start=1):
        if not linea.strip():
            continue
        partes = linea.split()
        if len(partes) != 3:
            raise ValueError(f"Línea {numero} del transcript mal formada: '{linea}'")
        nombre, k, respuesta = partes
        registros.append((nombre, int(k), "" if respuesta == SIN_RESPUESTA else respuesta))
    return registros


def replay_transcript(oracle: OracleGraph, path: str | Path) -> list[dict]:
    """
    Repite las consultas de un transcript contra `oracle` y devuelve una fila
    por consulta con la respuesta esperada, la obtenida y si coinciden.
    """
    registros = parse_transcript(Path(path).read_text(encoding="utf-8"))
    filas = []
    for i, (nombre, k, esperada) in enumerate(registros):
        obtenida = oracle.query(nombre, k)
        filas.append({
            "index": i,
            "query_name": nombre,
            "k": k,
            "expected": esperada,
            "reply": obtenida,
            "match": obtenida == esperada,
        })
    return filas


@dataclass(frozen=True)
class TrialRecord:
    index: int
    start_name: str
    answer: str
    queries: int
    success: bool
    success_probability: float


@dataclass(frozen=True)
class TrialSummary:
    n: int
    s: int
    m: int
    mode: str
    trials: int
    T: int | None
    success_rate: float
    mean_queries: float
    max_queries: int
    mean_success_probability: float
    records: tuple[TrialRecord, ...] = field(repr=False)
    first_transcript: str = field(default="", repr=False)


def trial_seeds(seed: int, trials: int) -> list[tuple[np.random.SeedSequence, np.random.SeedSequence]]:
    """(semilla del oráculo, semilla de la búsqueda) de cada ensayo."""
    return [tuple(hija.spawn(2)) for hija in np.random.SeedSequence(seed).spawn(trials)]


def _un_ensayo(
    indice: int,
    semillas: tuple[np.random.SeedSequence, np.random.SeedSequence],
    n: int,
    s: int,
    modo: str,
    T: int | None,
    strict: bool,
    guardar_transcript: bool,
) -> tuple[TrialRecord, str]:
    semilla_oraculo, semilla_busqueda = semillas
    oracle = make_oracle(n, s, semilla_oraculo, strict=strict, record_transcript=guardar_transcript)
    # v0 se elige al azar: el algoritmo solo conoce su nombre
    rng = np.random.default_rng(semilla_busqueda)
    inicio = oracle.name_of(int(rng.integers(0, 1 << n)))
    if modo == "classical":
        res = classical_search(oracle, inicio, seed=rng)
        registro = TrialRecord(indice, inicio, res.answer, res.queries, res.success, float(res.success))
    else:
        res = quantum_search(oracle, inicio, T)
        registro = TrialRecord(
            indice, inicio, res.answer, res.queries,
            res.answer == oracle.antipode_name(inicio), res.success_probability,
        )
    return registro, oracle.export_transcript() if guardar_transcript else ""


def run_trials(
    n: int,
    s: int,
    mode: str,
    seed: int,
    trials: int,
    T: int | None = None,
    strict: bool = True,
    max_workers: int = 4,
    logger: Any = None,
    keep_transcript: bool = False,
) -> TrialSummary:
    """
    Corre `trials` búsquedas independientes, cada una con su oráculo. Las
    semillas por ensayo salen de `trial_seeds`, así que el resultado no
    depende del orden de ejecución.
    """
    if mode not in ("classical", "quantum"):
        raise ValueError(f"Modo no soportado: {mode}")
    if trials < 1:
        raise ValueError(f"trials debe ser >= 1, se recibió {trials}")
    if mode == "quantum" and (T is None or T < 0):
        raise ValueError("El modo cuántico requiere T >= 0")
    # valida (n, s) y la premisa s < n/6 antes de lanzar hilos
    make_oracle(n, s, seed, strict=strict, logger=logger, record_transcript=False)

    semillas = trial_seeds(seed, trials)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futuros = [
            executor.submit(_un_ensayo, i, sem, n, s, mode, T, strict, keep_transcript and i == 0)
            for i, sem in enumerate(semillas)
        ]
        resultados = [f.result() for f in futuros]

    registros = tuple(sorted((r for r, _ in resultados), key=lambda r: r.index))
    consultas = [r.queries for r in registros]
    resumen = TrialSummary(
        n=n,
        s=s,
        m=math.comb(n, s),
        mode=mode,
        trials=trials,
        T=T,
        success_rate=sum(r.success for r in registros) / trials,
        mean_queries=sum(consultas) / trials,
        max_queries=max(consultas),
        mean_success_probability=math.fsum(r.success_probability for r in registros) / trials,
        records=registros,
        first_transcript=resultados[0][1],
    )
    if logger:
        logger.info(
            f"[ORACLE] {mode} n={n}, s={s}, ensayos={trials}: tasa={resumen.success_rate:.6g}, "
            f"consultas medias={resumen.mean_queries:.6g}"
        )
    return resumen
