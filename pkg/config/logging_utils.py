import sys
import logging
from datetime import datetime
from pathlib import Path

RUN_ID = datetime.now().strftime("%Y%m%d_%H%M%S")
LOGGER_NAME = "qwalk_logger"
PREFIJO = "qwalk_"


class Logger:
    """
    Fábrica del logger compartido `qwalk_logger`.

    Escribe en DEBUG a un archivo `qwalk_<RUN_ID>.log` dentro de `log_path`
    y, si `ver_cli` es True, repite los mensajes INFO por stderr (stdout queda para los datos).
    """

    def __init__(self, log_path: str = None, ver_cli: bool = False, reuse_window: int = 5):
        self.log_path = log_path
        self.ver_cli = ver_cli
        self.reuse_window = reuse_window

    def _archivo_reciente(self, log_dir: Path) -> Path | None:
        """
        Devuelve el log más reciente creado dentro de los últimos `reuse_window`
        segundos, para que varias corridas encadenadas compartan archivo.
        """
        now = datetime.now()
        for file in sorted(log_dir.glob(f"{PREFIJO}*.log"), reverse=True):
            ts_str = file.stem.removeprefix(PREFIJO)
            try:
                ts = datetime.strptime(ts_str, "%Y%m%d_%H%M%S")
            except ValueError:
                continue
            if (now - ts).total_seconds() <= self.reuse_window:
                return file
        return None

    def get_logger(self) -> logging.Logger:
        log_dir = Path(__file__).parent / "logs" if not self.log_path else Path(self.log_path).resolve()
        log_dir.mkdir(parents=True, exist_ok=True)

        log_file = self._archivo_reciente(log_dir) or log_dir / f"{PREFIJO}{RUN_ID}.log"

        logger = logging.getLogger(LOGGER_NAME)
        logger.setLevel(logging.DEBUG)

        # Si cambia el destino (p. ej. entre tests) se reemplazan los handlers
        actual = [h for h in logger.handlers if isinstance(h, logging.FileHandler)]
        if actual and Path(actual[0].baseFilename) != log_file.resolve():
            for h in list(logger.handlers):
                logger.removeHandler(h)
                h.close()

        if not logger.handlers:
            if self.ver_cli:
                ch = logging.StreamHandler(sys.stderr)
                ch.setLevel(logging.INFO)
                ch.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
                logger.addHandler(ch)

            fh = logging.FileHandler(log_file, mode="a")
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(logging.Formatter(
                "[%(asctime)s] [%(levelname)s] [%(threadName)s] %(name)s - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            ))
            logger.addHandler(fh)

        return logger
