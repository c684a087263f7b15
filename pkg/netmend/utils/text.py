from collections.abc import Iterator
from pathlib import Path

from netmend.core.exceptions import GraphParseError


def read_lines(path: str | Path) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for a UTF-8 file, line endings stripped."""
    path = Path(path)
    with path.open("rb") as f:
        for line_number, data in enumerate(f, start=1):
            try:
                text = data.decode("utf-8")
            except UnicodeDecodeError as e:
                raise GraphParseError(f"invalid UTF-8: {e.reason}", line_number, str(path)) from e
            yield line_number, text.rstrip("\r\n")
