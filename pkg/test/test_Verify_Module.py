import pytest
from src.modulos.Verify_Module import VerifySuiteNode
from src.submodulos.walks import verify


class DummyLogger:
    def info(self, *args): pass
    def debug(self, *args): pass
    def error(self, *args): pass


################### TESTS de run_suite ###################

@pytest.mark.parametrize("suite, n_max", [
    ("kravchuk-identity", 14),
    ("generating-function", 12),
    ("parity", 20),
    ("kravchuk-bound", 120),
    ("arcsin", 16),
    ("spectral-vs-dense", 6),
    ("unitarity", 6),
    ("coin-spectrum", 8),
    ("connectivity", 9),
    ("code-weights", 9),
    ("layers", 12),
    ("measured", 6),
])
def test_suites_pasan(suite, n_max):
    reporte = verify.run_suite(suite, n_max, logger=DummyLogger())
    assert reporte.passed, reporte.failures
    assert reporte.checks > 0


@pytest.mark.slow
@pytest.mark.parametrize("suite", list(verify.SUITES))
def test_suites_pasan_con_tope_por_defecto(suite):
    reporte = verify.run_suite(suite, logger=DummyLogger())
    assert reporte.n_max == verify.SUITES[suite].n_default
    assert reporte.passed, reporte.failures[:5]
    assert reporte.checks > 0


def test_run_suite_desconocida():
    with pytest.raises(ValueError, match="Suite desconocida"):
        verify.run_suite("no-existe")


def test_run_suite_n_max_cero():
    with pytest.raises(ValueError, match="n_max"):
        verify.run_suite("parity", 0)


@pytest.mark.parametrize("suite, n_max", [("spectral-vs-dense", 40), ("unitarity", 9), ("kravchuk-bound", 49),
                                          ("oracle-classical", 6)])
def test_run_suite_n_max_fuera_de_rango(suite, n_max):
    with pytest.raises(ValueError, match="fuera de rango"):
        verify.run_suite(suite, n_max)


def test_run_suite_recorta_al_rango():
    reporte = verify.run_suite("kravchuk-bound", 5, recortar=True)
    assert reporte.n_max == 50
    assert reporte.passed


@pytest.mark.parametrize("suite", list(verify.SUITES))
def test_rangos_de_suites_consistentes(suite):
    s = verify.SUITES[suite]
    assert 1 <= s.n_min <= s.n_default <= s.n_max


def test_reporte_sin_comprobaciones_no_aprueba():
    reporte = verify.VerifyReport(suite="demo", n_max=1)
    assert not reporte.passed
    assert reporte.records() == [{"suite": "demo", "case": "empty", "detail": "sin comprobaciones n_max=1"}]


def test_records_de_fallos():
    reporte = verify.VerifyReport(suite="demo", n_max=3)
    reporte.check(True, "ok")
    reporte.check(False, "malo", n=3, k=1)
    assert not reporte.passed
    assert reporte.records() == [{"suite": "demo", "case": "malo", "detail": "n=3 k=1"}]


def test_records_sin_fallos():
    reporte = verify.VerifyReport(suite="demo", n_max=3)
    reporte.check(True, "ok")
    assert reporte.records() == [{"suite": "demo", "case": "all", "detail": "ok checks=1"}]


################### TESTS de VerifySuiteNode ###################

def test_nodo_varias_suites():
    node = VerifySuiteNode("Verificar", {"suites": ["parity", "coin-spectrum"], "n_max": 6})
    node.logger = DummyLogger()
    df = node.run()["data"]
    assert df.columns == ["suite", "case", "detail"]
    assert df["suite"].to_list() == ["parity", "coin-spectrum"]
    assert node.fallos == 0


def test_nodo_suite_como_texto():
    df = VerifySuiteNode("Verificar", {"suites": "parity", "n_max": 5}).run()["data"]
    assert df.height == 1


def test_nodo_suite_desconocida():
    with pytest.raises(ValueError, match="Suites desconocidas"):
        VerifySuiteNode("Verificar", {"suites": ["parity", "otra"]}).run()


def test_nodo_n_max_invalido():
    with pytest.raises(ValueError, match="n_max"):
        VerifySuiteNode("Verificar", {"suites": "parity", "n_max": 0}).run()


def test_nodo_falta_suites():
    with pytest.raises(ValueError, match="Falta 'suites'"):
        VerifySuiteNode("Verificar", {}).run()


def test_nodo_n_max_fuera_del_rango_de_la_suite():
    node = VerifySuiteNode("Verificar", {"suites": ["parity", "unitarity"], "n_max": 20})
    with pytest.raises(ValueError, match=r"\[Verificar\].*unitarity"):
        node.run()


def test_nodo_all_recorta_cada_suite(monkeypatch):
    vistos = {}

    def _falso(nombre, n_max=None, logger=None, recortar=False):
        tope = verify.resolver_tope(nombre, n_max, recortar)
        vistos[nombre] = tope
        reporte = verify.VerifyReport(suite=nombre, n_max=tope)
        reporte.check(True, "ok")
        return reporte

    monkeypatch.setattr("src.modulos.Verify_Module.run_suite", _falso)
    node = VerifySuiteNode("Verificar", {"suites": "all", "n_max": 40})
    df = node.run()["data"]
    assert df.height == len(verify.SUITES)
    assert vistos["spectral-vs-dense"] == 12
    assert vistos["kravchuk-bound"] == 50
    assert vistos["parity"] == 40
    assert node.fallos == 0


def test_nodo_cuenta_suite_vacia_como_fallo(monkeypatch):
    monkeypatch.setattr("src.modulos.Verify_Module.run_suite",
                        lambda nombre, n_max=None, logger=None, recortar=False: verify.VerifyReport(nombre, 2))
    node = VerifySuiteNode("Verificar", {"suites": "parity", "n_max": 2})
    df = node.run()["data"]
    assert node.fallos == 1
    assert df["case"].to_list() == ["empty"]
