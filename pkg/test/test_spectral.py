import math

import pytest

from src.submodulos.walks import spectral
from src.submodulos.walks.core_math import WalkSpec
from src.submodulos.walks.spectral import ProbabilityQuery, Target, TimeKind


################### TESTS de amplitudes ###################

@pytest.mark.parametrize("n, s", [(4, 1), (7, 2), (12, 3)])
def test_retorno_en_t0_es_uno(n, s):
    assert spectral.return_amplitude(WalkSpec(n, s), 0) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n, s", [(4, 1), (7, 2), (12, 3)])
def test_llegada_en_t0_es_cero(n, s):
    assert spectral.hit_amplitude(WalkSpec(n, s), 0) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n", [3, 6, 11])
def test_hipercubo_no_retorna_en_un_paso(n):
    assert spectral.return_amplitude(WalkSpec(n, 1), 1) == pytest.approx(0.0, abs=1e-12)


def test_llegada_imposible_antes_de_n_sobre_s():
    spec = WalkSpec(12, 3)
    for t in range(4):
        assert spectral.hit_amplitude(spec, t) == pytest.approx(0.0, abs=1e-12)


def test_retorno_en_t_impar_se_anula_con_s_impar():
    spec = WalkSpec(9, 3)
    for t in range(1, 40, 2):
        assert spectral.return_amplitude(spec, t) == pytest.approx(0.0, abs=1e-12)


def test_amplitudes_vectorizadas_coinciden():
    spec = WalkSpec(10, 2)
    ts = list(range(30))
    retorno = spectral.return_amplitudes(spec, ts)
    llegada = spectral.hit_amplitudes(spec, ts)
    for t in ts:
        assert retorno[t] == pytest.approx(spectral.return_amplitude(spec, t), abs=1e-12)
        assert llegada[t] == pytest.approx(spectral.hit_amplitude(spec, t), abs=1e-12)


def test_pesos_binomiales_suman_uno():
    for n in (5, 30, 100):
        assert spectral.binomial_weights(WalkSpec(n, 1)).sum() == pytest.approx(1.0, abs=1e-12)


def test_probability_query():
    spec = WalkSpec(6, 1)
    q = ProbabilityQuery(spec, 6, Target.ANTIPODE)
    assert q.probability() == pytest.approx(spectral.hit_amplitude(spec, 6) ** 2)
    with pytest.raises(ValueError, match="no negativo"):
        ProbabilityQuery(spec, -1)


def test_probability_curve():
    curva = spectral.probability_curve(WalkSpec(8, 1), range(5))
    assert [t for t, _, _ in curva] == [0, 1, 2, 3, 4]
    assert curva[0][1] == pytest.approx(1.0)
    assert all(0.0 <= r <= 1.0 + 1e-12 and 0.0 <= h <= 1.0 + 1e-12 for _, r, h in curva)


def test_probability_curve_vacia():
    with pytest.raises(ValueError, match="vacío"):
        spectral.probability_curve(WalkSpec(8, 1), [])


################### TESTS de predicción de tiempos ###################

def test_predict_time_paridad():
    for n in range(8, 40):
        for s in (1, 2, 3):
            spec = WalkSpec(n, s)
            kind = TimeKind.RETURN_AT_PI_M
            pred = spectral.predict_time(spec, kind)
            assert (pred.T - spec.m) % 2 == 0
            assert pred.parity_ok


def test_predict_time_epsilon_cero_es_centro():
    spec = WalkSpec(100, 1)
    pred = spectral.predict_time(spec, "HitAtHalfPiM", epsilon=0)
    assert pred.T == pred.T_center
    assert pred.T == 158
    assert pred.epsilon == 0


def test_predict_time_epsilon_por_defecto():
    spec = WalkSpec(101, 2)
    pred = spectral.predict_time(spec, TimeKind.RETURN_AT_HALF_PI_M, beta=0.3)
    assert pred.epsilon == round(101 ** 0.6)
    assert pred.T >= pred.T_center


def test_predict_time_congruencia_incompatible():
    # C(100, 1) = 100 es par
    with pytest.raises(ValueError, match="HitAtHalfPiM"):
        spectral.predict_time(WalkSpec(101, 2), TimeKind.HIT_AT_HALF_PI_M)
    # C(99, 0) = 1 es impar
    with pytest.raises(ValueError, match="ReturnAtHalfPiM"):
        spectral.predict_time(WalkSpec(100, 1), TimeKind.RETURN_AT_HALF_PI_M)


@pytest.mark.parametrize("beta", [0.25, 0.5, 0.1])
def test_predict_time_beta_invalido(beta):
    with pytest.raises(ValueError, match="beta"):
        spectral.predict_time(WalkSpec(20, 1), TimeKind.RETURN_AT_PI_M, beta=beta)


def test_predict_time_epsilon_negativo():
    with pytest.raises(ValueError, match="epsilon"):
        spectral.predict_time(WalkSpec(20, 1), TimeKind.RETURN_AT_PI_M, epsilon=-1)


def test_factor_del_tipo():
    assert TimeKind.RETURN_AT_PI_M.factor == math.pi
    assert TimeKind.HIT_AT_HALF_PI_M.factor == math.pi / 2


################### TESTS de la dicotomía llegada/retorno ###################

def test_hipercubo_n100_llega_y_retorna():
    spec = WalkSpec(100, 1)
    llegada = spectral.predict_time(spec, TimeKind.HIT_AT_HALF_PI_M, epsilon=0)
    retorno = spectral.predict_time(spec, TimeKind.RETURN_AT_PI_M, epsilon=0)
    assert spectral.hit_amplitude(spec, llegada.T) ** 2 > 0.9
    assert spectral.return_amplitude(spec, retorno.T) ** 2 > 0.9


def test_s2_n101_retorna_en_medio_pi_m():
    spec = WalkSpec(101, 2)
    pred = spectral.predict_time(spec, TimeKind.RETURN_AT_HALF_PI_M, epsilon=0)
    assert spectral.return_amplitude(spec, pred.T) ** 2 > 0.9
