import logging
import os
import typing as t

import structlog
from rich.console import Console
from rich.logging import RichHandler

LogFormat = t.Literal["console", "json"]

LOG_LEVELS = ("debug", "info", "warning", "error", "critical")

# stdout carries CLI data (CSV/JSON), so logs always go to stderr.
console = Console(stderr=True)


class TypedBoundLogger(structlog.stdlib.BoundLogger):
    """Bound logger whose methods take an event name plus key-value context."""

    def debug(self, event: str, **kwargs: t.Any) -> None:
        self._proxy_to_logger("debug", event, **kwargs)

    def info(self, event: str, **kwargs: t.Any) -> None:
        self._proxy_to_logger("info", event, **kwargs)

    def warning(self, event: str, **kwargs: t.Any) -> None:
        self._proxy_to_logger("warning", event, **kwargs)

    def error(self, event: str, **kwargs: t.Any) -> None:
        self._proxy_to_logger("error", event, **kwargs)


logger: TypedBoundLogger = structlog.get_logger("tendonplan")


def _renderer(format: LogFormat) -> t.Any:
    if format == "json":
        return structlog.processors.JSONRenderer(sort_keys=True)
    return structlog.dev.ConsoleRenderer(colors=False)


def _handler(file_name: t.Optional[str]) -> logging.Handler:
    if file_name:
        return logging.FileHandler(file_name, encoding="utf-8")
    return RichHandler(console=console, rich_tracebacks=True, show_path=False)


def configure_logging(
    level: str = "warning",
    format: LogFormat = "console",
    file_name: t.Optional[str] = None,
) -> None:
    """
    Route tendonplan events through structlog to stderr or a log file.

    Args:
        level (str): One of ``debug``, ``info``, ``warning``, ``error``, ``critical``.
        format (LogFormat): ``console`` for key=value lines, ``json`` for one object per line.
        file_name (Optional[str]): Append to this file instead of stderr.

    Raises:
        ValueError: On an unknown level or format.
    """
    if level.lower() not in LOG_LEVELS:
        raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}, got {level!r}")
    if format not in ("console", "json"):
        raise ValueError(f"log format must be 'console' or 'json', got {format!r}")

    _configure_structlog(format)
    logging.basicConfig(
        format="%(message)s",
        handlers=[_handler(file_name)],
        level=level.upper(),
        force=True,
    )
    # optuna logs every trial at INFO through its own handler.
    logging.getLogger("optuna").setLevel(logging.WARNING)


def _configure_structlog(format: LogFormat) -> None:
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            _renderer(format),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=TypedBoundLogger,
        cache_logger_on_first_use=False,
    )


def show_logging(level: t.Optional[str] = None) -> None:
    """Console logging at ``level``, or ``TENDONPLAN_LOG_LEVEL`` when omitted."""
    configure_logging(level or os.environ.get("TENDONPLAN_LOG_LEVEL", "warning"))


# Importing only sets up structlog; root handlers belong to the application.
_configure_structlog("console")
