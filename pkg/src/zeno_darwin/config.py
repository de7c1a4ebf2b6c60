"""
Sweep config files.

Configs are YAML mappings with the fields of `SweepConfig`. A `preset` key
starts from a figure preset; any other key given alongside it overrides the
preset, `fixed` being merged key by key. Unknown keys are errors.

    preset: fig2
    delta: 0.2
    axes:
      - {param: rabi, min: 0.0, max: 1.5707963267948966, points: 64}
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from zeno_darwin.data import SweepConfig, first_issue
from zeno_darwin.exceptions import ConfigParseError, UnknownPresetError
from zeno_darwin.sweep import figure_preset
from zeno_darwin.utils import atomic_write_text

_LOGGER = logging.getLogger(__name__)

PRESET_KEY = "preset"

ERROR_READ = "Could not read config {path}: {error}"
ERROR_YAML = "Invalid YAML in {path}: {error}"
ERROR_NOT_MAPPING = "Config {path} must be a mapping, got {kind}"
ERROR_INVALID = "Invalid config {path}: {error}"


def _find_node(root: yaml.Node | None, loc: tuple[int | str, ...]) -> yaml.Node | None:
    """Deepest node along `loc` in a composed YAML document."""

    node = root
    for part in loc:
        child: yaml.Node | None = None
        if isinstance(node, yaml.MappingNode):
            child = next((v for k, v in node.value if k.value == str(part)), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(part, int):
            child = node.value[part] if part < len(node.value) else None
        if child is None:
            break
        node = child
    return node


def _issue_loc(
    data: dict[str, Any], loc: tuple[int | str, ...], field: str | None
) -> tuple[int | str, ...]:
    if loc or not field:
        return loc

    parts = field.split(".")
    # model level axis errors only name the parameter, map it back to its entry
    if parts[0] == "axes" and len(parts) == 2:  # noqa: PLR2004
        axes = data.get("axes") or []
        for index, axis in enumerate(axes):
            if isinstance(axis, dict) and axis.get("param") == parts[1]:
                return ("axes", index)
    return tuple(parts)


def _line_of(text: str, loc: tuple[int | str, ...]) -> int | None:
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError:
        return None
    node = _find_node(root, loc)
    return None if node is None else node.start_mark.line + 1


def _expand_preset(data: dict[str, Any]) -> dict[str, Any]:
    data = dict(data)
    name = data.pop(PRESET_KEY, None)
    if name is None:
        return data

    base = figure_preset(str(name)).model_dump(mode="json")
    fixed = {**base["fixed"], **(data.pop("fixed", None) or {})}
    if "axes" in data:
        # parameters the user sweeps are no longer fixed
        for axis in data["axes"] or []:
            if isinstance(axis, dict):
                fixed.pop(axis.get("param"), None)
    return {**base, **data, "fixed": fixed}


def parse_config(text: str, source: str = "<string>") -> SweepConfig:
    """Parse and validate YAML config text."""

    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as ex:
        mark = getattr(ex, "problem_mark", None)
        raise ConfigParseError(
            ERROR_YAML.format(path=source, error=ex),
            line=None if mark is None else mark.line + 1,
        ) from ex

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigParseError(
            ERROR_NOT_MAPPING.format(path=source, kind=type(data).__name__), line=1
        )

    try:
        expanded = _expand_preset(data)
    except UnknownPresetError as ex:
        raise ConfigParseError(
            str(ex), field=PRESET_KEY, line=_line_of(text, (PRESET_KEY,))
        ) from ex

    try:
        config = SweepConfig.model_validate(expanded)
    except ValidationError as ex:
        issue = first_issue(ex)
        loc = _issue_loc(data, issue.loc, issue.field)
        raise ConfigParseError(
            ERROR_INVALID.format(path=source, error=issue.message),
            field=issue.field,
            line=_line_of(text, loc),
        ) from ex

    _LOGGER.debug("Loaded %s config from %s", config.kind, source)
    return config


def load_config(path: Path) -> SweepConfig:
    """Load and validate a YAML config file."""

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as ex:
        raise ConfigParseError(ERROR_READ.format(path=path, error=ex)) from ex
    return parse_config(text, source=str(path))


def dump_config(cfg: SweepConfig) -> str:
    """Serialize config to YAML that `parse_config` reads back unchanged."""

    return yaml.safe_dump(cfg.model_dump(mode="json"), sort_keys=False)


def save_config(cfg: SweepConfig, path: Path) -> None:
    """Write config YAML atomically."""

    atomic_write_text(Path(path), dump_config(cfg))
