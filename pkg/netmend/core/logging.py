import logging
import sys

from netmend.core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
HANDLER_NAME = "netmend-stderr"


def configure_logging(level: str | None = None) -> None:
    """Send netmend logs to the current stderr at the configured level."""
    root = logging.getLogger("netmend")
    root.setLevel((level or settings.LOG_LEVEL).upper())

    for handler in [h for h in root.handlers if h.get_name() == HANDLER_NAME]:
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
