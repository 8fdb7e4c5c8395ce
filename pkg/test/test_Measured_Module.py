import pytest
from src.modulos.Measured_Module import AbsorptionCheckNode, EvenGapNode, MeasuredTraceNode


class DummyLogger:
    def info(self, *args): pass
    def debug(self, *args): pass


################### TESTS de MeasuredTraceNode ###################

def test_traza_columnas_y_beta_nula_antes_de_t0():
    node = MeasuredTraceNode("Medido", {"n": 9, "s": 3, "T0": 4, "T": 20})
    node.logger = DummyLogger()
    df = node.run()["data"]
    assert df.columns == ["t", "alpha", "beta", "q", "p"]
    assert df.height == 21
    assert df["beta"][:4].null_count() == 4
    assert df["beta"][4] is not None


def test_traza_t0_igual_t():
    df = MeasuredTraceNode("Medido", {"n": 9, "s": 3, "T0": 10, "T": 10}).run()["data"]
    assert df["p"][-1] == 0.0


def test_traza_proyectiva_coincide():
    base = {"n": 6, "s": 1, "T0": 2, "T": 30}
    espectral = MeasuredTraceNode("A", base).run()["data"]
    proyectiva = MeasuredTraceNode("B", {**base, "fuente": "projective"}).run()["data"]
    diferencias = (espectral["q"] - proyectiva["q"]).abs()
    assert diferencias.max() <= 1e-9


def test_traza_s_par():
    with pytest.raises(ValueError, match=r"\[Medido\].*s impar"):
        MeasuredTraceNode("Medido", {"n": 9, "s": 2, "T0": 0, "T": 10}).run()


def test_traza_falta_t0():
    with pytest.raises(ValueError, match="Falta 'T0'"):
        MeasuredTraceNode("Medido", {"n": 9, "s": 3, "T": 10}).run()


################### TESTS de AbsorptionCheckNode ###################

def test_absorcion_una_fila():
    config = {"n": 9, "s": 1, "T0": 0, "T_p": 30, "T": 100, "c": 2}
    node = AbsorptionCheckNode("Absorcion", config)
    node.logger = DummyLogger()
    fila = node.run()["data"].row(0, named=True)
    assert fila["epsilon"] == 20.0
    assert fila["c"] == 2.0
    assert fila["bound"] == pytest.approx(2 * 9 / (20 * 70 ** 2))
    assert fila["satisfied"] == (fila["p_T"] >= fila["bound"])


def test_absorcion_orden_invalido():
    with pytest.raises(ValueError, match="T0 <= T_p < T"):
        AbsorptionCheckNode("Absorcion", {"n": 9, "s": 1, "T0": 4, "T_p": 2, "T": 10}).run()


################### TESTS de EvenGapNode ###################

def test_brecha_par():
    node = EvenGapNode("Brecha", {"n": 30, "s": 1, "t_max": 100})
    node.logger = DummyLogger()
    fila = node.run()["data"].row(0, named=True)
    assert fila["fitted_constant"] == pytest.approx(30 * fila["max_gap"])
    assert fila["argmax_t"] % 2 == 0


def test_brecha_t_max_chico():
    with pytest.raises(ValueError, match=">= 2"):
        EvenGapNode("Brecha", {"n": 30, "s": 1, "t_max": 1}).run()
