import pytest

from src.submodulos.walks import oracle, spectral
from src.submodulos.walks.core_math import WalkSpec


@pytest.fixture
def mock_logger():
    """Logger dummy para silenciar logs en test."""
    class DummyLogger:
        def info(self, msg): pass
        def debug(self, msg): pass
        def warning(self, msg): pass
        def exception(self, msg): pass
    return DummyLogger()


@pytest.fixture
def oraculo_8_1():
    return oracle.make_oracle(8, 1, seed=11)


################### TESTS del oráculo ###################

def test_nombres_hex_de_ancho_fijo(oraculo_8_1):
    nombres = oraculo_8_1.valid_names()
    assert len(nombres) == 256
    assert len(set(nombres)) == 256
    assert all(len(x) == 4 for x in nombres)
    assert nombres == sorted(nombres)


def test_query_nombre_invalido_devuelve_vacio(oraculo_8_1):
    assert oraculo_8_1.query("zzzz", 1) == ""
    assert oraculo_8_1.query("0", 1) == ""


def test_query_indice_invalido_devuelve_vacio(oraculo_8_1):
    v0 = oraculo_8_1.name_of(0)
    assert oraculo_8_1.query(v0, 0) == ""
    assert oraculo_8_1.query(v0, oraculo_8_1.m + 1) == ""


def test_query_cuenta_todas_las_consultas(oraculo_8_1):
    v0 = oraculo_8_1.name_of(0)
    oraculo_8_1.query(v0, 1)
    oraculo_8_1.query("zzzz", 1)
    oraculo_8_1.neighbors(v0)
    assert oraculo_8_1.query_counter == 2 + 8
    oraculo_8_1.reset_counter()
    assert oraculo_8_1.query_counter == 0
    assert oraculo_8_1.transcript == []


def test_numeracion_de_vecinos_reciproca(oraculo_8_1):
    v0 = oraculo_8_1.name_of(5)
    for k in range(1, oraculo_8_1.m + 1):
        u = oraculo_8_1.query(v0, k)
        assert oraculo_8_1.query(u, k) == v0


def test_vecinos_son_la_capa_s(oraculo_8_1):
    v0 = oraculo_8_1.name_of(0)
    assert all(oraculo_8_1.hidden_weight(v0, u) == 1 for u in oraculo_8_1.neighbors(v0))
    assert oraculo_8_1.hidden_weight(v0, oraculo_8_1.antipode_name(v0)) == 8


def test_misma_semilla_mismo_oraculo():
    a = oracle.make_oracle(9, 1, seed=3)
    b = oracle.make_oracle(9, 1, seed=3)
    assert a.valid_names() == b.valid_names()
    assert a.name_of(17) == b.name_of(17)


def test_modo_estricto_rechaza_s_grande():
    with pytest.raises(ValueError, match="s < n/6"):
        oracle.make_oracle(8, 3, seed=0)


def test_modo_no_estricto_advierte(mock_logger):
    orc = oracle.make_oracle(8, 3, seed=0, strict=False, logger=mock_logger)
    assert orc.m == 56


def test_n_demasiado_grande():
    with pytest.raises(ValueError, match="n <= 20"):
        oracle.make_oracle(21, 1, seed=0)


def test_transcript_usa_guion_para_respuesta_vacia(oraculo_8_1):
    v0 = oraculo_8_1.name_of(0)
    oraculo_8_1.query(v0, 99)
    oraculo_8_1.query(v0, 1)
    lineas = oraculo_8_1.export_transcript().splitlines()
    assert lineas[0] == f"{v0} 99 -"
    assert lineas[1].split()[2] == oraculo_8_1.name_of(0 ^ 0b10000000)


################### TESTS de búsqueda clásica ###################

def test_busqueda_clasica_s_divide_n():
    orc = oracle.make_oracle(12, 1, seed=5)
    inicio = orc.name_of(1234)
    res = oracle.classical_search(orc, inicio, seed=1)
    assert res.success
    assert res.answer == orc.antipode_name(inicio)
    assert res.queries <= (12 ** 2 + 12) * 12


def test_busqueda_clasica_s_par():
    orc = oracle.make_oracle(14, 2, seed=8)
    inicio = orc.name_of(0)
    res = oracle.classical_search(orc, inicio, seed=2)
    assert res.success
    assert res.inferences[inicio] == 0
    assert all(res.inferences[u] == 2 for u in orc.neighbors(inicio))


def test_run_trials_n12_s1_siempre_acierta():
    resumen = oracle.run_trials(12, 1, "classical", seed=20241, trials=10)
    assert resumen.success_rate == 1.0
    assert resumen.trials == 10
    assert [r.index for r in resumen.records] == list(range(10))


def test_run_trials_determinista():
    a = oracle.run_trials(9, 1, "classical", seed=4, trials=6, max_workers=1)
    b = oracle.run_trials(9, 1, "classical", seed=4, trials=6, max_workers=4)
    assert a.records == b.records


def test_run_trials_antipodal_en_otra_componente():
    # s par con n impar: 1^n no es alcanzable desde v0
    resumen = oracle.run_trials(13, 2, "classical", seed=1, trials=4)
    assert resumen.success_rate == 0.0


@pytest.mark.slow
@pytest.mark.parametrize("n, s, strict", [(12, 1, True), (14, 2, True), (9, 3, False)])
def test_s_divide_n_acierta_en_cien_ensayos(n, s, strict):
    resumen = oracle.run_trials(n, s, "classical", seed=n * 100 + s, trials=100, strict=strict)
    assert resumen.trials == 100
    assert resumen.success_rate == 1.0
    assert resumen.max_queries <= (resumen.m ** 2 + resumen.m) * (n // s)


@pytest.mark.slow
def test_tasa_de_exito_uno_sobre_m():
    # 8 no es múltiplo de 3: el último paso acierta con probabilidad 1/m, m = 56
    N, p = 10 ** 4, 1 / 56
    resumen = oracle.run_trials(8, 3, "classical", seed=99, trials=N, strict=False)
    assert resumen.success_rate == pytest.approx(p, abs=3 * (p * (1 - p) / N) ** 0.5)


@pytest.mark.parametrize("argumentos, mensaje", [
    ({"mode": "otro"}, "Modo"),
    ({"trials": 0}, "trials"),
    ({"mode": "quantum", "T": None}, "T >= 0"),
])
def test_run_trials_invalido(argumentos, mensaje):
    base = {"n": 8, "s": 1, "mode": "classical", "seed": 0, "trials": 1}
    with pytest.raises(ValueError, match=mensaje):
        oracle.run_trials(**{**base, **argumentos})


def test_transcript_del_primer_ensayo():
    resumen = oracle.run_trials(8, 1, "classical", seed=3, trials=3, keep_transcript=True)
    lineas = resumen.first_transcript.splitlines()
    assert len(lineas) == resumen.records[0].queries


################### TESTS de búsqueda cuántica ###################

def test_busqueda_cuantica_coincide_con_llegada():
    spec = WalkSpec(8, 1)
    T = spectral.predict_time(spec, spectral.TimeKind.HIT_AT_HALF_PI_M).T
    orc = oracle.make_oracle(8, 1, seed=7)
    res = oracle.quantum_search(orc, orc.name_of(0), T)
    assert res.queries == T
    assert res.success_probability == pytest.approx(spectral.hit_amplitude(spec, T) ** 2, abs=1e-9)
    assert sum(res.distribution.values()) == pytest.approx(1.0)


def test_busqueda_cuantica_nombre_invalido(oraculo_8_1):
    with pytest.raises(ValueError, match="no es un nombre válido"):
        oracle.quantum_search(oraculo_8_1, "zzzz", 3)


def test_run_trials_cuantico():
    resumen = oracle.run_trials(8, 1, "quantum", seed=2, trials=3, T=12)
    assert resumen.mean_queries == 12
    esperado = spectral.hit_amplitude(WalkSpec(8, 1), 12) ** 2
    assert resumen.mean_success_probability == pytest.approx(esperado, abs=1e-9)


################### TESTS de replay ###################

def test_replay_con_la_misma_semilla_coincide(tmp_path):
    resumen = oracle.run_trials(8, 1, "classical", seed=21, trials=1, keep_transcript=True)
    ruta = tmp_path / "transcript.txt"
    ruta.write_text(resumen.first_transcript, encoding="utf-8")

    semilla_oraculo = oracle.trial_seeds(21, 1)[0][0]
    filas = oracle.replay_transcript(oracle.make_oracle(8, 1, semilla_oraculo), ruta)
    assert len(filas) == resumen.records[0].queries
    assert all(f["match"] for f in filas)


def test_replay_con_otro_oraculo_no_coincide(tmp_path):
    resumen = oracle.run_trials(8, 1, "classical", seed=21, trials=1, keep_transcript=True)
    ruta = tmp_path / "transcript.txt"
    ruta.write_text(resumen.first_transcript, encoding="utf-8")

    filas = oracle.replay_transcript(oracle.make_oracle(8, 1, seed=22), ruta)
    assert not all(f["match"] for f in filas)


def test_transcript_mal_formado():
    with pytest.raises(ValueError, match="mal formada"):
        oracle.parse_transcript("abcd 1\n")
