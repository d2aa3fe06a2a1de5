import logging
from typing import Any, Callable

from disent.service.exceptions import RunFileError

logger = logging.getLogger(__name__)


def parse_length_scale(value) -> float | None:
    if isinstance(value, str) and value.strip().lower() == "auto":
        return None
    return float(value)


def parse_int(value) -> int:
    if isinstance(value, str):
        return int(value.strip(), 0)
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"expected an integer, got {value!r}")
    return int(value)


# Run-file key (same spelling as the command-line flag) -> RunConfig field.
RUN_FILE_KEYS: dict[str, tuple[str, Callable[[Any], Any]]] = {
    "a11": ("a11", float),
    "a12": ("a12", float),
    "temp": ("temperature", float),
    "time": ("time", float),
    "mass": ("mass", float),
    "hbar": ("hbar", float),
    "kb": ("boltzmann", float),
    "length-scale": ("length_scale", parse_length_scale),
    "seed": ("seed", parse_int),
    "samples": ("samples", parse_int),
    "tolerance": ("tolerance", float),
}


class RunFileParser:
    """Line-oriented ``key=value`` run files.

    ``#`` starts a comment, blank lines are skipped and a key given twice
    keeps its last value.
    """

    def __init__(self, content: str, source: str = "<run file>"):
        self._content = content
        self._source = source

    def get_values(self) -> dict[str, Any]:
        values = {}
        for line_number, raw_line in enumerate(
            self._content.splitlines(), start=1
        ):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            key, separator, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not separator or not key or not value:
                raise RunFileError(
                    f"{self._source}, line {line_number}: expected "
                    f"key=value, got {raw_line.strip()!r}",
                    line_number,
                )
            if key not in RUN_FILE_KEYS:
                raise RunFileError(
                    f"{self._source}, line {line_number}: unknown key "
                    f"'{key}'",
                    line_number,
                )
            field, convert = RUN_FILE_KEYS[key]
            try:
                converted = convert(value)
            except ValueError:
                raise RunFileError(
                    f"{self._source}, line {line_number}: invalid value "
                    f"for '{key}': {value!r}",
                    line_number,
                ) from None
            if field in values:
                logger.debug(
                    "%s, line %d: '%s' overrides an earlier value",
                    self._source,
                    line_number,
                    key,
                )
            values[field] = converted
        return values
