"""Scenario configuration: a small line-oriented ``[section] key = value`` format.

Grammar (one item per line, whitespace around tokens ignored)::

    # comment             (also allowed after a value)
    [section]             one of system, phonons, sweep, oracle
    key = value           value: decimal real, complex "re+imi", or "quoted string"

Duplicate keys within a section and unknown sections are errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ConfigurationError

__all__ = ["ConfigError", "ScenarioConfig", "parse_config", "parse_value", "SECTIONS"]

SECTIONS = ("system", "phonons", "sweep", "oracle")

_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^{_REAL}$")
_COMPLEX_RE = re.compile(rf"^(?P<re>{_REAL})?(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i$")
_KEY_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_SECTION_RE = re.compile(r"^\[\s*([A-Za-z_][A-Za-z0-9_]*)\s*\]$")


class ConfigError(ConfigurationError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = "" if line is None else f"line {line}" + ("" if column is None else f", column {column}") + ": "
        super().__init__(where + message)


def parse_value(text: str):
    """Decode a value token: float, complex or str."""
    if len(text) >= 2 and text[0] == '"' and text[-1] == '"':
        return text[1:-1]
    if _REAL_RE.match(text):
        return float(text)
    if text.endswith("i") and _REAL_RE.match(text[:-1]):
        return complex(0.0, float(text[:-1]))
    m = _COMPLEX_RE.match(text)
    if m:
        im = m.group("im")
        if im in ("+", "-"):
            im += "1"
        return complex(float(m.group("re") or 0.0), float(im))
    raise ValueError(f"cannot parse value {text!r}")


def _strip_comment(line: str) -> str:
    in_str = False
    for i, ch in enumerate(line):
        if ch == '"':
            in_str = not in_str
        elif ch == "#" and not in_str:
            return line[:i]
    return line


@dataclass
class ScenarioConfig:
    sections: dict[str, dict[str, object]] = field(default_factory=dict)
    lines: dict[tuple[str, str], int] = field(default_factory=dict)

    def section(self, name: str) -> dict[str, object]:
        return self.sections.get(name, {})

    def has(self, section: str, key: str) -> bool:
        return key in self.section(section)

    def where(self, section: str, key: str) -> str:
        line = self.lines.get((section, key))
        return f"[{section}] {key}" + (f" (line {line})" if line else "")

    def get(self, section: str, key: str, default=None, kind=float):
        if key not in self.section(section):
            if default is None:
                raise ConfigError(f"missing required key {key!r} in [{section}]")
            return default
        v = self.sections[section][key]
        try:
            if kind is float:
                if isinstance(v, complex) or isinstance(v, str):
                    raise TypeError
                return float(v)
            if kind is complex:
                if isinstance(v, str):
                    raise TypeError
                return complex(v)
            if kind is int:
                if isinstance(v, str) or isinstance(v, complex) or v != int(v):
                    raise TypeError
                return int(v)
            if kind is str:
                if not isinstance(v, str):
                    raise TypeError
                return v
        except TypeError:
            raise ConfigError(f"{self.where(section, key)} must be of type {kind.__name__}, got {v!r}") from None
        raise AssertionError(kind)

    def check_keys(self, allowed: dict[str, set[str]]) -> None:
        for sec, keys in self.sections.items():
            extra = set(keys) - allowed.get(sec, set())
            for key in sorted(extra, key=lambda k: self.lines.get((sec, k), 0)):
                raise ConfigError(f"unknown key {key!r} in [{sec}]", self.lines.get((sec, key)))


def parse_config(text: str) -> ScenarioConfig:
    cfg = ScenarioConfig()
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        m = _SECTION_RE.match(line)
        if m:
            name = m.group(1)
            if name not in SECTIONS:
                raise ConfigError(f"unknown section [{name}]", lineno, col)
            current = name
            cfg.sections.setdefault(name, {})
            continue
        if "=" not in line:
            raise ConfigError("expected '[section]' or 'key = value'", lineno, col)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not _KEY_RE.match(key):
            raise ConfigError(f"invalid key {key!r}", lineno, col)
        if current is None:
            raise ConfigError(f"key {key!r} outside of any section", lineno, col)
        if key in cfg.sections[current]:
            raise ConfigError(f"duplicate key {key!r} in [{current}]", lineno, col)
        try:
            cfg.sections[current][key] = parse_value(value)
        except ValueError as exc:
            raise ConfigError(str(exc), lineno, raw.index("=") + 2) from None
        cfg.lines[(current, key)] = lineno
    return cfg
