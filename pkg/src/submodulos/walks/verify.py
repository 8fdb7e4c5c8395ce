"""
Suites de verificación: cada una recorre un invariante sobre un rango de
tamaños y devuelve los contraejemplos como registros planos.
"""
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

import numpy as np

from src.submodulos.walks import core_math, dense_sim, layers, measured, oracle, spectral
from src.submodulos.walks.core_math import WalkSpec

TOL_DENSO = 1e-9
TOL_NORMA = 1e-10
TOL_DISTRIBUCION = 1e-12


@dataclass
class VerifyReport:
    suite: str
    n_max: int
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def check(self, ok: bool, caso: str, **detalle: Any) -> None:
        self.checks += 1
        if not ok:
            self.failures.append({"suite": self.suite, "case": caso, **detalle})

    def records(self) -> list[dict]:
        """Una fila por fallo; si no hay fallos, una fila resumen."""
        if not self.checks:
            return [{"suite": self.suite, "case": "empty", "detail": f"sin comprobaciones n_max={self.n_max}"}]
        if self.failures:
            return [
                {"suite": f["suite"], "case": f["case"], "detail": _detalle(f)} for f in self.failures
            ]
        return [{"suite": self.suite, "case": "all", "detail": f"ok checks={self.checks}"}]


def _detalle(fallo: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in fallo.items() if k not in ("suite", "case"))


def _pares(n_min: int, n_max: int, s_max: int | None = None) -> Iterator[WalkSpec]:
    for n in range(max(n_min, 2), n_max + 1):
        for s in range(1, n if s_max is None else min(n, s_max + 1)):
            yield WalkSpec(n, s)


########################## core-math ##########################

def _suite_kravchuk_identity(rep: VerifyReport) -> None:
    for spec in _pares(2, rep.n_max):
        for k in range(spec.n + 1):
            d = core_math.weight_characteristic(spec, k)
            phi = core_math.kravchuk(spec.n, k, spec.s)
            rep.check(spec.m - 2 * d == phi, "m-2d=phi", n=spec.n, s=spec.s, k=k, d=d, phi=phi)
    for n in range(1, rep.n_max + 1):
        for k in range(n + 1):
            coefs = core_math.kravchuk_via_generating_function(n, k)
            directo = [core_math.kravchuk(n, k, s) for s in range(n + 1)]
            rep.check(coefs == directo, "generating-function", n=n, k=k)


def _suite_generating_function(rep: VerifyReport) -> None:
    for n in range(1, rep.n_max + 1):
        for k in range(n + 1):
            coefs = core_math.kravchuk_via_generating_function(n, k)
            rep.check(len(coefs) == n + 1, "length", n=n, k=k)
            rep.check(coefs[0] == 1, "s=0", n=n, k=k)
            if n % 2 == 0 and k == n // 2:
                for s in range(n + 1):
                    esperado = 0 if s % 2 else (-1) ** (s // 2) * core_math.binom(n // 2, s // 2)
                    rep.check(coefs[s] == esperado, "k=n/2", n=n, s=s, got=coefs[s], expected=esperado)


def _suite_parity(rep: VerifyReport) -> None:
    for spec in _pares(2, rep.n_max):
        for k in range(spec.n + 1):
            d = core_math.weight_characteristic(spec, k)
            rep.check(core_math.d_parity(spec, k) == d % 2, "d_parity", n=spec.n, s=spec.s, k=k)
            # d_{n-k} = d_k para s par, m - d_k para s impar
            simetrico = d if spec.s % 2 == 0 else spec.m - d
            rep.check(core_math.weight_characteristic(spec, spec.n - k) == simetrico,
                      "symmetry", n=spec.n, s=spec.s, k=k)
            if k + 2 <= spec.n:
                salto = core_math.kravchuk(spec.n, k + 2, spec.s) - core_math.kravchuk(spec.n, k, spec.s)
                rep.check(salto % 4 == 0, "mod4", n=spec.n, s=spec.s, k=k, diff=salto)


def _suite_kravchuk_bound(rep: VerifyReport) -> None:
    for n in (50, 100, 200, 400):
        if n > rep.n_max:
            continue
        for s in (1, 2, 3):
            spec = WalkSpec(n, s)
            for k in core_math.delta_window(n):
                cota = core_math.kravchuk_bound(spec, k)
                rep.check(cota.satisfied, "bound", n=n, s=s, k=k, lhs=cota.lhs, rhs=cota.rhs)


def _suite_arcsin(rep: VerifyReport) -> None:
    for spec in _pares(2, rep.n_max):
        for k in range(spec.n + 1):
            x, _ = core_math.eigenphase(spec, k)
            if abs(x) <= 0.5:
                gap, cubo = core_math.arcsin_linearization_gap(spec, k)
                rep.check(gap <= cubo + 1e-15, "arcsin", n=spec.n, s=spec.s, k=k, gap=gap, cube=cubo)


########################## spectral / dense-sim ##########################

def _suite_spectral_vs_dense(rep: VerifyReport, t_max: int = 100) -> None:
    for spec in _pares(2, rep.n_max, s_max=4):
        genset = dense_sim.symmetric_generating_set(spec.n, spec.s)
        psi0 = dense_sim.symmetric_initial_state(genset)
        antipoda = genset.size - 1
        retorno = spectral.return_amplitudes(spec, range(t_max + 1))
        llegada = spectral.hit_amplitudes(spec, range(t_max + 1))
        for t, estado in dense_sim.iter_evolution(psi0, t_max):
            a = abs(dense_sim.overlap(estado, psi0))
            h = abs(dense_sim.projection_amplitude(estado, antipoda))
            rep.check(abs(a - abs(retorno[t])) <= TOL_DENSO, "return", n=spec.n, s=spec.s, t=t,
                      dense=a, spectral=retorno[t])
            rep.check(abs(h - abs(llegada[t])) <= TOL_DENSO, "hit", n=spec.n, s=spec.s, t=t,
                      dense=h, spectral=llegada[t])


def _suite_unitarity(rep: VerifyReport) -> None:
    if rep.n_max >= 8:
        genset = dense_sim.symmetric_generating_set(8, 3)
        estado = dense_sim.symmetric_initial_state(genset)
        peor = 0.0
        for _, estado in dense_sim.iter_evolution(estado, 1000):
            peor = max(peor, abs(estado.norm() - 1.0))
        rep.check(peor < TOL_NORMA, "norm-drift", n=8, s=3, drift=peor)

    for spec in _pares(2, min(rep.n_max, 8)):
        genset = dense_sim.symmetric_generating_set(spec.n, spec.s)
        pesos = np.bitwise_count(np.arange(genset.size)).astype(np.int64)
        intermedio = (pesos > 0) & (pesos < spec.n)
        for t, estado in dense_sim.iter_evolution(dense_sim.symmetric_initial_state(genset), 50):
            dist = dense_sim.vertex_distribution(estado)
            rep.check(abs(dist.sum() - 1.0) <= TOL_DISTRIBUCION, "sum", n=spec.n, s=spec.s, t=t)
            tope = float(dist[intermedio].max()) if intermedio.any() else 0.0
            rep.check(tope <= 1 / spec.n + TOL_DISTRIBUCION, "intermediate-cap",
                      n=spec.n, s=spec.s, t=t, max=tope)
            for l in range(spec.n + 1):
                capa = dist[pesos == l]
                rep.check(float(np.ptp(capa)) <= TOL_DISTRIBUCION, "layer-uniform",
                          n=spec.n, s=spec.s, t=t, l=l)


def _suite_coin_spectrum(rep: VerifyReport) -> None:
    for m in range(1, rep.n_max + 1):
        for d in range(m + 1):
            sistema = dense_sim.coin_eigensystem(m, d)
            rep.check(sistema.matches, "census", m=m, d=d, got=sistema.census, expected=sistema.expected)


def _suite_connectivity(rep: VerifyReport) -> None:
    for spec in _pares(2, rep.n_max):
        genset = dense_sim.symmetric_generating_set(spec.n, spec.s)
        censo = dense_sim.connected_components(genset)
        esperado = 2 if spec.s % 2 == 0 else 1
        rep.check(censo.count == esperado, "components", n=spec.n, s=spec.s, got=censo.count)
        if esperado == 2:
            paridad = np.bitwise_count(np.arange(genset.size)) % 2
            rep.check(bool(np.all(censo.labels == paridad)), "parity-split", n=spec.n, s=spec.s)


def _suite_code_weights(rep: VerifyReport) -> None:
    for spec in _pares(2, rep.n_max):
        genset = dense_sim.symmetric_generating_set(spec.n, spec.s)
        exhaustivo = dense_sim.code_weight_coefficients(genset)
        predicho = core_math.weight_enumerator_from_spectrum(spec)
        rep.check(exhaustivo == predicho, "weights", n=spec.n, s=spec.s)


########################## layers ##########################

def _suite_layers(rep: VerifyReport) -> None:
    for spec in _pares(2, min(rep.n_max, 10)):
        rel = layers.LayerRelation(spec.n, spec.s)
        censo = dense_sim.layer_adjacency_census(dense_sim.symmetric_generating_set(spec.n, spec.s))
        for l in range(spec.n + 1):
            observados = {t for (a, t) in censo if a == l}
            rep.check(observados == rel.neighbors(l), "neighbors", n=spec.n, s=spec.s, l=l)
            for t in rel.neighbors(l):
                rep.check(censo.get((l, t)) == {rel.count(l, t)}, "count", n=spec.n, s=spec.s, l=l, t=t)

    for spec in _pares(2, min(rep.n_max, 12), s_max=4):
        rel = layers.LayerRelation(spec.n, spec.s)
        genset = dense_sim.symmetric_generating_set(spec.n, spec.s)
        for l in range(spec.n + 1):
            bruto = dense_sim.common_layers_census(genset, l)
            for t in range(spec.n + 1):
                if (l - t) % 2 or abs(l - t) > 2 * spec.s or (l == t and l in (0, spec.n)):
                    continue
                rep.check(bruto.get(t, set()) == rel.common(l, t), "common", n=spec.n, s=spec.s, l=l, t=t)

    for spec in _pares(2, min(rep.n_max, 30)):
        rel = layers.LayerRelation(spec.n, spec.s)
        for l in range(spec.n + 1):
            vecinos = rel.neighbors(l)
            if spec.n <= 20:
                rep.check(sum(rel.count(l, t) for t in vecinos) == spec.m, "sum=m", n=spec.n, s=spec.s, l=l)
            for t in vecinos:
                rep.check(rel.layer_size(l) * rel.count(l, t) == rel.layer_size(t) * rel.count(t, l),
                          "handshake", n=spec.n, s=spec.s, l=l, t=t)

    for n in range(6, min(rep.n_max, 60) + 1):
        for s in range(1, n // 6 + 1):
            seq = layers.k_sequence(n, s)
            rep.check(seq.strictly_decreasing, "k-monotone", n=n, s=s, values=seq.values)


########################## hit / return ##########################

def _dichotomy_pairs(n_max: int) -> Iterator[WalkSpec]:
    for s in (2, 3):
        for n in range(100, n_max + 1):
            spec = WalkSpec(n, s)
            if core_math.binom(n - 1, s - 1) % 2 == 0 and math.factorial(s) <= n ** (s / 8):
                yield spec


def _suite_hit_return(rep: VerifyReport) -> None:
    if rep.n_max >= 100:
        cubo = WalkSpec(100, 1)
        t_hit = spectral.predict_time(cubo, spectral.TimeKind.HIT_AT_HALF_PI_M, epsilon=0).T
        t_ret = spectral.predict_time(cubo, spectral.TimeKind.RETURN_AT_PI_M, epsilon=0).T
        hit = spectral.hit_amplitude(cubo, t_hit) ** 2
        ret = spectral.return_amplitude(cubo, t_ret) ** 2
        rep.check(hit > 0.9, "hypercube-hit", n=100, T=t_hit, prob=hit)
        rep.check(ret > 0.9, "hypercube-return", n=100, T=t_ret, prob=ret)

    for spec in _dichotomy_pairs(rep.n_max):
        T = spectral.predict_time(spec, spectral.TimeKind.RETURN_AT_HALF_PI_M, epsilon=0).T
        hit = spectral.hit_amplitude(spec, T) ** 2
        ret = spectral.return_amplitude(spec, T) ** 2
        rep.check(hit < 0.1, "dichotomy-hit", n=spec.n, s=spec.s, T=T, prob=hit)
        rep.check(ret > 0.9, "dichotomy-return", n=spec.n, s=spec.s, T=T, prob=ret)

    for spec in _pares(2, min(rep.n_max, 40)):
        for t in range(0, 4 * spec.n):
            r = spectral.return_amplitude(spec, t) ** 2
            h = spectral.hit_amplitude(spec, t) ** 2
            rep.check(r + h <= 1 + 1e-12, "sum<=1", n=spec.n, s=spec.s, t=t)
            if spec.s % 2 == 1 and t % 2 == 1:
                rep.check(abs(math.sqrt(r)) <= 1e-12, "odd-return", n=spec.n, s=spec.s, t=t)


########################## measured ##########################

def _suite_measured(rep: VerifyReport, T: int = 200) -> None:
    for n in range(2, min(rep.n_max, 8) + 1):
        for s in (1, 3):
            if s >= n:
                continue
            spec = WalkSpec(n, s)
            for T0 in (0, 2, 10):
                espectral = measured.measured_trace(spec, T0, T)
                denso = measured.projective_simulation(spec, T0, T)
                peor = float(np.max(np.abs(espectral.q - denso.q)))
                rep.check(peor <= TOL_DENSO, "q", n=n, s=s, T0=T0, max_diff=peor)
                rep.check(abs(denso.p_T + denso.residual_norm2 - 1.0) <= TOL_DENSO, "p+residual",
                          n=n, s=s, T0=T0)
                rep.check(bool(np.all(np.diff(espectral.p) >= -1e-15)) and espectral.p_T <= 1 + 1e-10,
                          "p-monotone", n=n, s=s, T0=T0)
                residuo = measured.alpha_identity_residual(espectral)
                rep.check(residuo <= 1e-10, "alpha-identity", n=n, s=s, T0=T0, residual=residuo)


########################## oracle ##########################

def _suite_oracle_classical(rep: VerifyReport, semillas: int = 20) -> None:
    # (s, n tope propio): s | n y s < n/6
    for s, tope in ((1, 12), (2, 16)):
        for n in range(6 * s + 1, min(rep.n_max, tope) + 1):
            if n % s:
                continue
            resumen = oracle.run_trials(n, s, "classical", seed=n, trials=semillas)
            rep.check(resumen.success_rate == 1.0, "s|n", n=n, s=s, rate=resumen.success_rate)
            cota = (resumen.m ** 2 + resumen.m) * (n // s)
            rep.check(resumen.max_queries <= cota, "budget", n=n, s=s, max=resumen.max_queries, budget=cota)

    if rep.n_max >= 8:
        spec = WalkSpec(8, 1)
        T = spectral.predict_time(spec, spectral.TimeKind.HIT_AT_HALF_PI_M).T
        orc = oracle.make_oracle(8, 1, seed=7)
        inicio = orc.name_of(0)
        res = oracle.quantum_search(orc, inicio, T)
        esperado = spectral.hit_amplitude(spec, T) ** 2
        rep.check(abs(res.success_probability - esperado) <= TOL_DENSO, "quantum",
                  n=8, s=1, T=T, got=res.success_probability, expected=esperado)


@dataclass(frozen=True)
class Suite:
    """Suite registrada: `n_min` es el menor tope con comprobaciones, `n_max` el mayor que se acepta."""
    funcion: Callable[[VerifyReport], None]
    n_min: int
    n_default: int
    n_max: int


SUITES: dict[str, Suite] = {
    "kravchuk-identity": Suite(_suite_kravchuk_identity, 1, 40, 60),
    "generating-function": Suite(_suite_generating_function, 1, 30, 100),
    "parity": Suite(_suite_parity, 2, 40, 60),
    "kravchuk-bound": Suite(_suite_kravchuk_bound, 50, 400, 400),
    "arcsin": Suite(_suite_arcsin, 2, 40, 100),
    "spectral-vs-dense": Suite(_suite_spectral_vs_dense, 2, 9, 12),
    "unitarity": Suite(_suite_unitarity, 2, 8, 8),
    "coin-spectrum": Suite(_suite_coin_spectrum, 1, 12, 48),
    "connectivity": Suite(_suite_connectivity, 2, 12, 12),
    "code-weights": Suite(_suite_code_weights, 2, 12, 12),
    "layers": Suite(_suite_layers, 2, 30, 60),
    "hit-return": Suite(_suite_hit_return, 2, 300, 600),
    "measured": Suite(_suite_measured, 2, 8, 8),
    "oracle-classical": Suite(_suite_oracle_classical, 7, 16, 16),
}


def resolver_tope(name: str, n_max: int | None = None, recortar: bool = False) -> int:
    """
    Tope efectivo de la suite `name`. Sin `n_max` se usa el tope por defecto;
    con `recortar` (suite "all") se lleva al rango de la suite en vez de fallar.

    Raises:
        ValueError: suite desconocida o n_max fuera de [n_min, n_max] de la suite.
    """
    if name not in SUITES:
        raise ValueError(f"Suite desconocida: '{name}'. Disponibles: {', '.join(SUITES)}")
    suite = SUITES[name]
    if n_max is None:
        return suite.n_default
    if recortar:
        return min(max(n_max, suite.n_min), suite.n_max)
    if not suite.n_min <= n_max <= suite.n_max:
        raise ValueError(
            f"n_max={n_max} fuera de rango para la suite '{name}': se acepta [{suite.n_min}, {suite.n_max}]"
        )
    return n_max


def run_suite(name: str, n_max: int | None = None, logger: Any = None, recortar: bool = False) -> VerifyReport:
    """
    Corre la suite `name` con tope de tamaño `n_max` (o el tope por defecto).
    Una suite que no llega a comprobar nada no cuenta como aprobada.

    Raises:
        ValueError: suite desconocida o n_max fuera del rango de la suite.
    """
    n_max = resolver_tope(name, n_max, recortar)

    rep = VerifyReport(suite=name, n_max=n_max)
    if logger:
        logger.info(f"[VERIFY] Suite '{name}' con n_max={n_max}")
    SUITES[name].funcion(rep)
    if logger:
        nivel = logger.info if rep.passed else logger.error
        nivel(f"[VERIFY] Suite '{name}': {rep.checks} comprobaciones, {len(rep.failures)} fallos")
    return rep
