
# Esquema Cerberus de un pipeline YAML (o del dict equivalente que arma el CLI).
# Los tipos de nodo se validan aparte contra el registro de nodos.

_nombre_nodo = {"type": "string", "required": True, "empty": False, "regex": r"^[A-Za-z0-9_\-]+$"}

pipeline_schema = {
    "pipeline": {
        "type": "dict",
        "required": True,
        "schema": {
            "name": {"type": "string", "required": True, "empty": False},
            "entrypoint": {"type": "string", "required": True, "empty": False},
            "nodes": {
                "type": "list",
                "required": True,
                "minlength": 1,
                "schema": {
                    "type": "dict",
                    "schema": {
                        "name": _nombre_nodo,
                        "type": {"type": "string", "required": True, "regex": r"^[A-Za-z]+Node$"},
                        "params": {
                            "type": "dict",
                            "required": False,
                            "schema": {
                                # n, s, t_max, suites, file_path, ...; cada nodo valida sus claves
                                "config": {"type": "dict", "required": False, "allow_unknown": True},
                            },
                        },
                        "outputs": {
                            "type": "list",
                            "schema": {"type": "string", "empty": False},
                            "required": False
                        }
                    }
                }
            }
        }
    }
}
