import pytest
from src.modulos.Layers_Module import LayersNode


class DummyLogger:
    def __init__(self):
        self.advertencias = []

    def info(self, *args): pass
    def debug(self, *args): pass

    def warning(self, msg):
        self.advertencias.append(msg)


def test_vecinos():
    df = LayersNode("Capas", {"n": 6, "s": 2}).run()["data"]
    assert df.columns == ["l", "t", "count"]
    fila0 = df.filter(df["l"] == 0)
    assert fila0["t"].to_list() == [2]
    assert fila0["count"].to_list() == [15]
    assert df.filter(df["l"] == 1)["t"].to_list() == [1, 3]


def test_k_con_hipotesis():
    df = LayersNode("K", {"n": 24, "s": 4, "reporte": "k"}).run()["data"]
    assert df["l"].to_list() == [0, 2, 4, 6]
    assert df["hypothesis_ok"].all()
    assert df["strictly_decreasing"].all()


def test_k_sin_hipotesis_advierte():
    logger = DummyLogger()
    node = LayersNode("K", {"n": 10, "s": 2, "reporte": "k"})
    node.logger = logger
    df = node.run()["data"]
    assert not df["hypothesis_ok"].any()
    assert len(logger.advertencias) == 1


def test_comunes():
    df = LayersNode("Comunes", {"n": 6, "s": 2, "reporte": "comunes"}).run()["data"]
    assert df.columns == ["l", "t", "x"]
    assert df.filter((df["l"] == 0) & (df["t"] == 0)).height == 0
    assert df.filter((df["l"] == 0) & (df["t"] == 2))["x"].to_list() == [2]


def test_tamanos():
    df = LayersNode("Tamanos", {"n": 4, "s": 2, "reporte": "tamanos"}).run()["data"]
    assert df["size"].to_list() == [1, 4, 6, 4, 1]
    assert df["empty"].to_list() == [False, True, False, True, False]


def test_reporte_invalido():
    with pytest.raises(ValueError, match="Reporte no soportado"):
        LayersNode("Capas", {"n": 6, "s": 2, "reporte": "otro"}).run()
