import os

import pytest

from config.load_config import RunConfigError, cargar_envars, validar_run_config, validate_file_path


def _cfg(**kwargs):
    return {"format": "csv", "out": "-", "ver_cli": False, **kwargs}


################### TESTS de validar_run_config ###################

def test_spectrum_valido():
    cfg = validar_run_config(_cfg(subcommand="spectrum", n=12, s=3, reporte=None))
    assert cfg["n"] == 12
    assert "reporte" not in cfg


def test_subcomando_desconocido():
    with pytest.raises(RunConfigError, match="desconocido"):
        validar_run_config(_cfg(subcommand="otro"))


@pytest.mark.parametrize("n, s", [(0, 1), (5, 5), (5, 7)])
def test_par_invalido(n, s):
    with pytest.raises(RunConfigError):
        validar_run_config(_cfg(subcommand="spectrum", n=n, s=s))


def test_tipo_incorrecto_en_esquema():
    with pytest.raises(RunConfigError, match="Configuración inválida"):
        validar_run_config(_cfg(subcommand="curve", n=8, s=1, t_max="diez"))


def test_verify_suites_conocidas():
    cfg = validar_run_config(_cfg(subcommand="verify", suite=["parity", "all"], n_max=5))
    assert cfg["suite"] == ["parity", "all"]


def test_verify_suite_desconocida():
    with pytest.raises(RunConfigError, match="Suites desconocidas"):
        validar_run_config(_cfg(subcommand="verify", suite=["nope"]))


def test_verify_n_max_cero():
    with pytest.raises(RunConfigError):
        validar_run_config(_cfg(subcommand="verify", suite=["parity"], n_max=0))


def test_verify_n_max_fuera_del_rango_de_la_suite():
    with pytest.raises(RunConfigError, match="spectral-vs-dense"):
        validar_run_config(_cfg(subcommand="verify", suite=["spectral-vs-dense"], n_max=40))


def test_verify_n_max_bajo_el_minimo_de_la_suite():
    with pytest.raises(RunConfigError, match=r"\[50, 400\]"):
        validar_run_config(_cfg(subcommand="verify", suite=["parity", "kravchuk-bound"], n_max=20))


def test_verify_all_no_valida_rangos():
    cfg = validar_run_config(_cfg(subcommand="verify", suite=["all"], n_max=40))
    assert cfg["n_max"] == 40


@pytest.mark.parametrize("c", [0, -1.5])
def test_measured_c_no_positiva(c):
    with pytest.raises(RunConfigError, match="c debe ser > 0"):
        validar_run_config(_cfg(subcommand="measured", n=9, s=3, t0=0, t=40, t_p=10, c=c))


def test_predict_beta_fuera_de_rango():
    with pytest.raises(RunConfigError, match="beta"):
        validar_run_config(_cfg(subcommand="predict", n=20, s=1, kind="ReturnAtPiM", beta=0.6))


def test_oracle_s_grande_estricto():
    with pytest.raises(RunConfigError, match="s < n/6"):
        validar_run_config(_cfg(subcommand="oracle", n=12, s=2, mode="classical", seed=1))


def test_oracle_s_grande_no_estricto():
    cfg = validar_run_config(_cfg(subcommand="oracle", n=12, s=2, mode="classical", seed=1, strict=False))
    assert cfg["strict"] is False


def test_oracle_n_grande():
    with pytest.raises(RunConfigError, match="n <= 20"):
        validar_run_config(_cfg(subcommand="oracle", n=24, s=1, mode="classical", seed=1))


def test_oracle_cuantico_sin_t_congruencia_par():
    with pytest.raises(RunConfigError, match="HitAtHalfPiM"):
        validar_run_config(_cfg(subcommand="oracle", n=13, s=2, mode="quantum", seed=1))


def test_oracle_replay_y_transcript_excluyentes():
    with pytest.raises(RunConfigError, match="excluyentes"):
        validar_run_config(_cfg(subcommand="oracle", n=12, s=1, mode="classical", seed=1,
                                replay="a.txt", transcript="b.txt"))


def test_oracle_semilla_obligatoria():
    with pytest.raises(RunConfigError):
        validar_run_config(_cfg(subcommand="oracle", n=12, s=1, mode="classical"))


@pytest.mark.parametrize("extra, mensaje", [
    ({"s": 2}, "s impar"),
    ({"t0": 3}, "par"),
    ({"t_p": 50}, "T0 <= T_p < T"),
    ({"n": 13, "fuente": "projective"}, "n <= 12"),
])
def test_measured_invalido(extra, mensaje):
    base = _cfg(subcommand="measured", n=9, s=3, t0=0, t=40)
    with pytest.raises(RunConfigError, match=mensaje):
        validar_run_config({**base, **extra})


def test_dense_vertice_fuera_de_rango():
    with pytest.raises(RunConfigError, match="2\\^n"):
        validar_run_config(_cfg(subcommand="dense", n=4, s=1, t_max=3, vertex=16))


################### TESTS de rutas y variables de entorno ###################

def test_validate_file_path(tmp_path):
    ruta = tmp_path / "p.yaml"
    ruta.write_text("pipeline: {}\n", encoding="utf-8")
    assert validate_file_path(str(ruta), (".yaml",)) == ruta.resolve()
    with pytest.raises(ValueError, match="extensión"):
        validate_file_path(str(ruta), (".yml",))
    with pytest.raises(FileNotFoundError):
        validate_file_path(str(tmp_path / "no.yaml"), (".yaml",))


def test_cargar_envars_no_sobrescribe(monkeypatch, tmp_path):
    monkeypatch.setenv("RUNNING_ENV", "ci")
    monkeypatch.setenv("path_resultados", str(tmp_path))
    # se registran para que el monkeypatch los restaure al terminar
    for var in ("path_transcripts", "log_dir"):
        monkeypatch.setenv(var, "")
        monkeypatch.delenv(var)
    cargar_envars()
    assert os.environ["path_resultados"] == str(tmp_path)
    assert os.environ["path_transcripts"] == "/tmp/qwalk/resultados/transcripts"


def test_cargar_envars_entorno_desconocido(monkeypatch):
    monkeypatch.setenv("RUNNING_ENV", "produccion")
    with pytest.raises(ValueError, match="produccion"):
        cargar_envars()
