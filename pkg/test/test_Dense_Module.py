import pytest
from src.modulos.Dense_Module import DenseEvolutionNode
from src.submodulos.walks import spectral
from src.submodulos.walks.core_math import WalkSpec


class DummyLogger:
    def info(self, *args): pass
    def debug(self, *args): pass
    def error(self, *args): pass


def test_proyecciones_coinciden_con_espectro():
    node = DenseEvolutionNode("Denso", {"n": 6, "s": 2, "t_max": 8})
    node.logger = DummyLogger()
    df = node.run()["data"]
    assert df.columns == ["t", "return_amp", "hit_amp", "norm"]
    spec = WalkSpec(6, 2)
    for fila in df.iter_rows(named=True):
        assert fila["return_amp"] == pytest.approx(abs(spectral.return_amplitude(spec, fila["t"])), abs=1e-10)
        assert fila["hit_amp"] == pytest.approx(abs(spectral.hit_amplitude(spec, fila["t"])), abs=1e-10)
        assert fila["norm"] == pytest.approx(1.0)


def test_capas_suman_uno():
    df = DenseEvolutionNode("Capas", {"n": 5, "s": 1, "t_max": 3, "modo": "capas"}).run()["data"]
    assert df.height == 4 * 6
    for t in range(4):
        assert df.filter(df["t"] == t)["prob"].sum() == pytest.approx(1.0)


def test_distribucion_con_vertice_inicial():
    config = {"n": 4, "s": 1, "t_max": 0, "vertex": 5, "modo": "distribucion"}
    df = DenseEvolutionNode("Dist", config).run()["data"]
    assert df.height == 16
    fila = df.filter(df["prob"] > 0.5).row(0, named=True)
    assert fila["vertex"] == "0101"


def test_estado_final():
    df = DenseEvolutionNode("Estado", {"n": 3, "s": 1, "t_max": 2, "modo": "estado"}).run()["data"]
    assert df.columns == ["coin_index", "vertex", "re", "im"]
    assert df.height == 3 * 8
    assert ((df["re"] ** 2 + df["im"] ** 2).sum()) == pytest.approx(1.0)


def test_conjunto_generador_arbitrario():
    config = {"n": 3, "elements": ["100", "010", "001"], "t_max": 3}
    df = DenseEvolutionNode("Libre", config).run()["data"]
    spec = WalkSpec(3, 1)
    assert df["return_amp"][3] == pytest.approx(abs(spectral.return_amplitude(spec, 3)), abs=1e-10)


def test_modo_invalido():
    with pytest.raises(ValueError, match="Modo no soportado"):
        DenseEvolutionNode("Denso", {"n": 4, "s": 1, "t_max": 2, "modo": "otro"}).run()


def test_n_demasiado_grande():
    with pytest.raises(ValueError, match="n <= 20"):
        DenseEvolutionNode("Denso", {"n": 21, "s": 1, "t_max": 2}).run()


def test_vertice_fuera_de_rango():
    with pytest.raises(ValueError, match="fuera de rango"):
        DenseEvolutionNode("Denso", {"n": 4, "s": 1, "t_max": 2, "vertex": 16}).run()
