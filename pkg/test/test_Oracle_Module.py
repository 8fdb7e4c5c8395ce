import pytest
from src.modulos.Oracle_Module import OracleSearchNode, TranscriptReplayNode
from src.submodulos.walks import spectral
from src.submodulos.walks.core_math import WalkSpec


class DummyLogger:
    def info(self, *args): pass
    def debug(self, *args): pass
    def warning(self, *args): pass
    def error(self, *args): pass


################### TESTS de OracleSearchNode ###################

def test_resumen_clasico():
    node = OracleSearchNode("Busqueda", {"n": 12, "s": 1, "mode": "classical", "seed": 5, "trials": 4})
    node.logger = DummyLogger()
    fila = node.run()["data"].row(0, named=True)
    assert fila["success_rate"] == 1.0
    assert fila["trials"] == 4
    assert fila["T"] is None


def test_ensayos_una_fila_por_ensayo():
    config = {"n": 8, "s": 1, "mode": "classical", "seed": 5, "trials": 3, "reporte": "ensayos"}
    df = OracleSearchNode("Busqueda", config).run()["data"]
    assert df["trial"].to_list() == [0, 1, 2]
    assert df.columns == ["trial", "start_name", "answer", "queries", "success", "success_probability"]


def test_cuantico_con_tiempo_predicho():
    fila = OracleSearchNode("Cuantica", {"n": 8, "s": 1, "mode": "quantum", "seed": 1}).run()["data"].row(0, named=True)
    T = spectral.predict_time(WalkSpec(8, 1), spectral.TimeKind.HIT_AT_HALF_PI_M).T
    assert fila["T"] == T
    assert fila["mean_queries"] == T


def test_cuantico_sin_tiempo_y_congruencia_par():
    config = {"n": 13, "s": 2, "mode": "quantum", "seed": 1}
    with pytest.raises(ValueError, match="Sin 'T'"):
        OracleSearchNode("Cuantica", config).run()


def test_falta_semilla():
    with pytest.raises(ValueError, match="Falta 'seed'"):
        OracleSearchNode("Busqueda", {"n": 8, "s": 1, "mode": "classical"}).run()


def test_modo_invalido():
    with pytest.raises(ValueError, match="Modo no soportado"):
        OracleSearchNode("Busqueda", {"n": 8, "s": 1, "mode": "otro", "seed": 1}).run()


def test_estricto_rechaza_s_grande():
    with pytest.raises(ValueError, match=r"\[Busqueda\].*n/6"):
        OracleSearchNode("Busqueda", {"n": 8, "s": 3, "mode": "classical", "seed": 1}).run()


################### TESTS de transcript y replay ###################

def test_transcript_y_replay(tmp_path):
    ruta = tmp_path / "transcripts" / "t0.txt"
    config = {"n": 9, "s": 1, "mode": "classical", "seed": 77, "transcript_path": str(ruta)}
    OracleSearchNode("Busqueda", config).run()
    assert ruta.exists()

    replay = TranscriptReplayNode("Replay", {"n": 9, "s": 1, "seed": 77, "transcript_path": str(ruta)})
    replay.logger = DummyLogger()
    df = replay.run()["data"]
    assert df.columns == ["index", "query_name", "k", "expected", "reply", "match"]
    assert df["match"].all()
    assert replay.fallos == 0


def test_replay_con_otra_semilla_cuenta_fallos(tmp_path):
    ruta = tmp_path / "t0.txt"
    OracleSearchNode("Busqueda", {"n": 9, "s": 1, "mode": "classical", "seed": 77, "transcript_path": str(ruta)}).run()

    replay = TranscriptReplayNode("Replay", {"n": 9, "s": 1, "seed": 78, "transcript_path": str(ruta)})
    replay.run()
    assert replay.fallos > 0


def test_replay_transcript_inexistente(tmp_path):
    replay = TranscriptReplayNode("Replay", {"n": 9, "s": 1, "seed": 1, "transcript_path": str(tmp_path / "no.txt")})
    with pytest.raises(RuntimeError, match="No se encontró"):
        replay.run()
