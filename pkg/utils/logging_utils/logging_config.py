import contextvars
import json
import logging
import sys
from contextlib import contextmanager
from logging.handlers import RotatingFileHandler
from pathlib import Path

from app_config.app_settings import get_settings


# LogRecord attributes that are not caller-supplied ``extra`` fields
_RESERVED = frozenset(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


class StructuredLogger:
    """Central logging utility providing JSON logs with contextual fields."""

    _session_var: contextvars.ContextVar[str | None] = contextvars.ContextVar(
        "session_id", default=None
    )
    _action_var: contextvars.ContextVar[str | None] = contextvars.ContextVar("action", default=None)
    _layer_var: contextvars.ContextVar[str | None] = contextvars.ContextVar("layer", default=None)
    _input_var: contextvars.ContextVar[str | None] = contextvars.ContextVar(
        "input_path", default=None
    )

    _configured: bool = False

    class _JsonFormatter(logging.Formatter):
        """Format log records as JSON including contextual metadata."""

        def format(self, record: logging.LogRecord) -> str:  # pragma: no cover - formatting
            log_record = {
                "time": self.formatTime(record, self.datefmt),
                "level": record.levelname,
                "module": record.name,
                "message": record.getMessage(),
            }
            session_id = StructuredLogger._session_var.get()
            action = StructuredLogger._action_var.get()
            layer = StructuredLogger._layer_var.get()
            input_path = StructuredLogger._input_var.get()
            if session_id:
                log_record["session_id"] = session_id
            if action:
                log_record["action"] = action
            if layer:
                log_record["layer"] = layer
            if input_path:
                log_record["input_path"] = input_path
            for key, value in record.__dict__.items():
                if key not in _RESERVED and not key.startswith("_"):
                    log_record.setdefault(key, value)
            if record.exc_info:
                log_record["exc_info"] = self.formatException(record.exc_info)
            return json.dumps(log_record, default=str)

    @classmethod
    def _configure(
        cls, *, log_file: Path | None, log_to_stderr: bool, level: int = logging.INFO
    ) -> None:
        """Set up root logger with JSON formatting if not already configured."""
        if cls._configured:
            return

        formatter = cls._JsonFormatter()
        root = logging.getLogger()
        root.setLevel(level)

        if log_file is not None:
            file_handler = RotatingFileHandler(log_file, maxBytes=1_000_000, backupCount=5)
            file_handler.setFormatter(formatter)
            root.addHandler(file_handler)

        # stdout carries data only
        if log_to_stderr:
            stream_handler = logging.StreamHandler(sys.stderr)
            stream_handler.setFormatter(formatter)
            root.addHandler(stream_handler)

        cls._configured = True

    @classmethod
    def get_logger(cls, name: str | None = None) -> logging.Logger:
        """Return a logger; handlers are attached by :func:`configure_logging`."""
        return logging.getLogger(name)

    @classmethod
    def set_session_id(cls, session_id: str) -> None:
        """Bind a session identifier for all subsequent log records."""
        cls._session_var.set(session_id)

    @classmethod
    @contextmanager
    def context(
        cls,
        *,
        action: str | None = None,
        layer: str | None = None,
        input_path: str | None = None,
    ):
        """Inject contextual fields into log records within the ``with`` block."""

        tokens: list[tuple[contextvars.ContextVar[str | None], contextvars.Token[str | None]]] = []
        if action is not None:
            tokens.append((cls._action_var, cls._action_var.set(action)))
        if layer is not None:
            tokens.append((cls._layer_var, cls._layer_var.set(layer)))
        if input_path is not None:
            tokens.append((cls._input_var, cls._input_var.set(input_path)))
        try:
            yield
        finally:
            for var, token in reversed(tokens):
                var.reset(token)


def get_logger(name: str | None = None) -> logging.Logger:
    """Return a structured logger."""
    return StructuredLogger.get_logger(name)


def configure_logging(
    mode: str,
    log_to_stderr: bool = True,
    *,
    log_dir: Path | None = None,
    level: str | None = None,
) -> None:
    """Configure structured logging for the given application mode.

    Parameters
    ----------
    mode:
        ``"cli"`` or ``"pipeline"``; selects the target log file.
    log_to_stderr:
        Attach a stream handler on standard error. Setting
        ``TEJIDO_LOG_TO_STDERR=0`` (``AppSettings.log_to_stderr``) disables it
        regardless of this flag.
    log_dir:
        Directory for the rotating log file. ``None`` means ``logs/app`` under
        the repository root.
    level:
        Root level name; falls back to ``AppSettings.log_level`` (``TEJIDO_LOG_LEVEL``).
    """

    if log_dir is None:
        repo_root = Path(__file__).resolve().parents[2]
        log_dir = repo_root / "logs" / "app"
    log_file: Path | None
    try:
        log_dir.mkdir(parents=True, exist_ok=True)
        file_map = {"cli": "cli.log", "pipeline": "pipeline.log"}
        log_file = log_dir / file_map.get(mode, "app.log")
    except OSError:
        # read-only checkout; keep stderr logging only
        log_file = None

    settings = get_settings()
    stderr_enabled = log_to_stderr and settings.log_to_stderr

    level_name = (level or settings.log_level).upper()
    numeric = logging.getLevelName(level_name)
    if not isinstance(numeric, int):
        numeric = logging.INFO

    StructuredLogger._configure(log_file=log_file, log_to_stderr=stderr_enabled, level=numeric)
