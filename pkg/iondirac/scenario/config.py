"""Flat ``key = value`` configuration files for scenarios and ion parameters."""

import dataclasses
import enum
import logging
import pathlib
import typing

import attrs
import cattrs

from iondirac.dirac import IonParams
from iondirac.errors import InputError
from iondirac.scenario.models import ScenarioConfig

logger = logging.getLogger(__name__)

META_PREFIX = "meta."

T = typing.TypeVar("T")

_TRUE = ("true", "yes", "on", "1")
_FALSE = ("false", "no", "off", "0")


def _structure_bool(value: typing.Any, _: type) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in _TRUE:
        return True
    if text in _FALSE:
        return False
    raise InputError(f"Invalid boolean: {value!r}")


def _structure_vector(value: typing.Any, _: type) -> tuple[float, float, float]:
    items = [item.strip() for item in value.split(",")] if isinstance(value, str) else list(value)
    if len(items) != 3:
        raise InputError(f"Expected a 3-vector, got {value!r}")
    x, y, z = (float(item) for item in items)
    return x, y, z


def _format_value(value: typing.Any) -> str:
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, complex)):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ",".join(_format_value(item) for item in value)
    return str(value)


converter = cattrs.Converter(detailed_validation=False, prefer_attrib_converters=True)
converter.register_structure_hook(bool, _structure_bool)
converter.register_structure_hook_func(lambda t: t == tuple[float, float, float], _structure_vector)


def parse_flat(text: str, source: str = "<string>") -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment, blank lines are skipped.

    >>> parse_flat("state = cat  # initial state\\nsteps=10")
    {'state': 'cat', 'steps': '10'}
    """
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise InputError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        if key in values:
            raise InputError(f"{source}:{lineno}: duplicate key {key!r}")
        values[key] = value.strip()
    return values


def _read(path: pathlib.Path | str) -> str:
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read '{path}': {e.strerror or e}") from e


def _field_names(cls: typing.Any) -> set[str]:
    if attrs.has(cls):
        return {field.name for field in attrs.fields(cls)}
    return {field.name for field in dataclasses.fields(cls)}


def _structure(values: dict[str, str], cls: type[T], source: str) -> T:
    known = _field_names(cls)
    unknown = sorted(key for key in values if key not in known and not key.startswith(META_PREFIX))
    if unknown:
        raise InputError(f"{source}: unknown key(s) {', '.join(unknown)}")
    relevant = {key: value for key, value in values.items() if key in known}
    try:
        return converter.structure(relevant, cls)
    except InputError:
        raise
    except (TypeError, ValueError) as e:
        raise InputError(f"{source}: {e}") from e


def load_scenario(text: str, source: str = "<string>") -> ScenarioConfig:
    """Scenario configuration from flat text; ``meta.*`` keys are ignored."""
    return _structure(parse_flat(text, source), ScenarioConfig, source)


def read_scenario(path: pathlib.Path | str) -> ScenarioConfig:
    logger.debug(f"Reading scenario configuration from {path}")
    return load_scenario(_read(path), str(path))


def dump_scenario(cfg: ScenarioConfig) -> str:
    """Flat text that ``load_scenario`` turns back into ``cfg``."""
    unstructured = converter.unstructure(cfg)
    return "".join(f"{key} = {_format_value(value)}\n" for key, value in unstructured.items())


def read_ion_params(path: pathlib.Path | str) -> IonParams:
    """Ion parameters (``eta``, ``omega_tilde``, ``delta``, ``Delta``, ``omega1``, ``omega2``) from flat text."""
    logger.debug(f"Reading ion parameters from {path}")
    return _structure(parse_flat(_read(path), str(path)), IonParams, str(path))
