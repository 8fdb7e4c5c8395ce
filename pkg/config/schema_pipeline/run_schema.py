
# Esquemas Cerberus de la configuración de corrida del CLI, uno por subcomando.
# Las reglas que cruzan campos (s < n, paridades, s < n/6) se validan aparte
# en `config.load_config.validar_run_config`.

_n = {"type": "integer", "min": 2, "required": True}
_s = {"type": "integer", "min": 1, "required": True}

_comunes = {
    "subcommand": {"type": "string", "required": True},
    "format": {"type": "string", "allowed": ["csv", "json"]},
    "out": {"type": "string", "empty": False},
    "ver_cli": {"type": "boolean"},
}

run_schema = {
    "spectrum": {
        **_comunes,
        "n": _n,
        "s": _s,
        "reporte": {"type": "string", "allowed": ["tabla", "cota", "pesos"]},
    },
    "curve": {
        **_comunes,
        "n": _n,
        "s": _s,
        "t_max": {"type": "integer", "min": 0, "required": True},
        "t_min": {"type": "integer", "min": 0},
    },
    "predict": {
        **_comunes,
        "n": _n,
        "s": _s,
        "kind": {"type": "string", "allowed": ["ReturnAtPiM", "ReturnAtHalfPiM", "HitAtHalfPiM"], "required": True},
        "beta": {"type": "number"},
        "epsilon": {"type": "integer", "min": 0},
    },
    "verify": {
        **_comunes,
        "suite": {"type": "list", "schema": {"type": "string"}, "minlength": 1, "required": True},
        "n_max": {"type": "integer", "min": 1},
    },
    "oracle": {
        **_comunes,
        "n": _n,
        "s": _s,
        "mode": {"type": "string", "allowed": ["classical", "quantum"], "required": True},
        "seed": {"type": "integer", "min": 0, "required": True},
        "trials": {"type": "integer", "min": 1},
        "t": {"type": "integer", "min": 0},
        "strict": {"type": "boolean"},
        "workers": {"type": "integer", "min": 1},
        "transcript": {"type": "string", "empty": False},
        "replay": {"type": "string", "empty": False},
        "reporte": {"type": "string", "allowed": ["resumen", "ensayos"]},
    },
    "measured": {
        **_comunes,
        "n": _n,
        "s": _s,
        "t0": {"type": "integer", "min": 0, "required": True},
        "t": {"type": "integer", "min": 0, "required": True},
        "t_p": {"type": "integer", "min": 0},
        "c": {"type": "number"},
        "fuente": {"type": "string", "allowed": ["spectral", "projective"]},
        "gap": {"type": "boolean"},
    },
    "layers": {
        **_comunes,
        "n": _n,
        "s": _s,
        "reporte": {"type": "string", "allowed": ["vecinos", "k", "comunes", "tamanos"]},
    },
    "dense": {
        **_comunes,
        "n": _n,
        "s": _s,
        "t_max": {"type": "integer", "min": 0, "required": True},
        "vertex": {"type": "integer", "min": 0},
        "modo": {"type": "string", "allowed": ["proyecciones", "capas", "distribucion", "estado"]},
    },
}
