"""Flat key/value config documents for ControllerConfig.

One `key = value` per line, `#` comments allowed.  Keys mirror the
ControllerConfig field names; unknown or duplicated keys are hard errors so
a typo can never silently fall back to a default in a comfort-critical
parameter.  Omitted keys keep their defaults.
"""
from __future__ import annotations

from dataclasses import fields

from .controller import ControllerConfig
from .errors import InvalidConfig

_FIELD_TYPES = {f.name: f.type for f in fields(ControllerConfig)}


def parse_config(text: str) -> ControllerConfig:
    values: dict[str, float | int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidConfig(f"line {line_no}: expected 'key = value', got {raw!r}")
        key, _, value_text = line.partition("=")
        key = key.strip()
        value_text = value_text.strip()
        if key not in _FIELD_TYPES:
            raise InvalidConfig(f"line {line_no}: unknown config key {key!r}")
        if key in values:
            raise InvalidConfig(f"line {line_no}: duplicate config key {key!r}")
        try:
            if key == "activation_frames":
                values[key] = int(value_text)
            else:
                values[key] = float(value_text)
        except ValueError:
            raise InvalidConfig(f"line {line_no}: bad value for {key!r}: {value_text!r}") from None
    config = ControllerConfig(**values)
    config.validate()
    return config


def format_config(config: ControllerConfig) -> str:
    lines = [f"{f.name} = {getattr(config, f.name)!r}" for f in fields(ControllerConfig)]
    return "\n".join(lines) + "\n"


def load_config(path: str) -> ControllerConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
