"""Length parsing: config files may write "405nm", "5mm", "11um"; everything
internal is SI meters."""

from __future__ import annotations

import re

from .errors import ConfigError

_SUFFIXES = {
    "nm": 1e-9,
    "um": 1e-6,
    "µm": 1e-6,  # micro sign
    "μm": 1e-6,  # greek mu
    "mm": 1e-3,
    "cm": 1e-2,
    "m": 1.0,
}

_LENGTH_RE = re.compile(r"^\s*([+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)\s*([a-zµμ]*)\s*$")


def parse_length(value, field=""):
    """Convert a config length to meters.

    Accepts a bare number (already meters) or a string with one of the
    suffixes nm/um/mm/cm/m.  Raises :class:`ConfigError` naming ``field``
    on anything else.
    """
    if isinstance(value, bool):
        raise ConfigError(f"{field}: expected a length, got a boolean", field_path=field)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        m = _LENGTH_RE.match(value)
        if m:
            number, suffix = m.groups()
            if suffix == "":
                return float(number)
            if suffix in _SUFFIXES:
                return float(number) * _SUFFIXES[suffix]
        raise ConfigError(
            f"{field}: cannot parse length {value!r} (use e.g. '405nm', '5mm', '11um')",
            field_path=field,
        )
    raise ConfigError(f"{field}: expected a length, got {type(value).__name__}", field_path=field)
