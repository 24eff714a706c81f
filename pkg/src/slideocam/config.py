"""TOML design configuration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from .feasibility import require_feasible
from .params import (
    DEFAULT_B,
    DEFAULT_E,
    DEFAULT_L,
    DEFAULT_P,
    DEFAULT_TAU,
    DesignParams,
    SlideOCamError,
)


class ConfigError(SlideOCamError):
    """Malformed configuration: unknown key, wrong type, bad value."""


class ConfigIOError(OSError):
    pass


# config key -> (DesignParams field, factor to package units)
_PARAM_KEYS = {
    "p_mm": ("p", 1.0),
    "eta": ("eta", 1.0),
    "a4_mm": ("a4", 1.0),
    "a5_mm": ("a5", 1.0),
    "b_mm": ("b", 1.0),
    "L_mm": ("L", 1.0),
    "tau_Nm": ("tau", 1000.0),
    "E_MPa": ("E", 1.0),
    "cams": ("cams", 1),
}
_ALIASES = {"p": "p_mm", "a4": "a4_mm", "a5": "a5_mm", "b": "b_mm", "L": "L_mm", "tau": "tau_Nm", "E": "E_MPa"}
_OUTPUT_KEYS = {"samples": int, "curve": str, "out": str}

DEFAULT_SAMPLES = 1024


@dataclass(frozen=True)
class DesignConfig:
    params: Optional[DesignParams]
    eta: float
    values: Dict[str, Any]
    samples: int = DEFAULT_SAMPLES
    curve: str = "cam"
    out: Optional[str] = None

    def design(self, cams: Optional[int] = None) -> DesignParams:
        """DesignParams for this config; a missing a4 takes the largest admissible roller."""
        if self.params is not None:
            return self.params if cams is None else self.params.with_(cams=cams)
        from .optimizer import design_for

        base = _base_from_values(self.values, a4=1.0)
        if cams is not None:
            base = base.with_(cams=cams)
        return design_for(base.eta, base)

    def base(self, cams: Optional[int] = None) -> DesignParams:
        """Shared settings (p, b, L, tau, E, cams) for sweeps; eta/a4 are placeholders."""
        base = _base_from_values(self.values, a4=self.values.get("a4", 1.0))
        return base if cams is None else base.with_(cams=cams)


def _number(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key}: expected a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(f"{key}: must be finite")
    return float(value)


def _base_from_values(values: Dict[str, Any], a4: float) -> DesignParams:
    kwargs = dict(values)
    kwargs.setdefault("a4", a4)
    return DesignParams(**kwargs)


def parse_config(doc: Dict[str, Any], validate: bool = True) -> DesignConfig:
    """Validate a parsed TOML mapping and fill in the Orthoglide defaults."""
    values: Dict[str, Any] = {"p": DEFAULT_P, "b": DEFAULT_B, "L": DEFAULT_L, "tau": DEFAULT_TAU, "E": DEFAULT_E}
    output: Dict[str, Any] = {}
    seen = set()
    for raw_key, value in doc.items():
        key = _ALIASES.get(raw_key, raw_key)
        if key in seen:
            raise ConfigError(f"duplicate key {raw_key!r}")
        seen.add(key)
        if key in _PARAM_KEYS:
            name, factor = _PARAM_KEYS[key]
            if name == "cams":
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ConfigError(f"cams: expected an integer, got {value!r}")
                values["cams"] = value
            else:
                values[name] = _number(raw_key, value) * factor
        elif key in _OUTPUT_KEYS:
            if not isinstance(value, _OUTPUT_KEYS[key]) or isinstance(value, bool):
                raise ConfigError(f"{key}: expected {_OUTPUT_KEYS[key].__name__}, got {value!r}")
            output[key] = value
        else:
            raise ConfigError(f"unknown key {raw_key!r}")
    if "eta" not in values:
        raise ConfigError("missing required key 'eta'")
    if output.get("curve", "cam") not in ("cam", "pitch"):
        raise ConfigError(f"curve must be 'cam' or 'pitch', got {output['curve']!r}")
    if output.get("samples", DEFAULT_SAMPLES) < 2:
        raise ConfigError("samples must be at least 2")

    # structural invariants (eta > 1/(2 pi), positivity, cams) raise InvalidParamsError
    base = _base_from_values(values, a4=values.get("a4", 1.0))
    params = base if "a4" in values else None
    if validate and params is not None:
        require_feasible(params)
    return DesignConfig(params=params, eta=base.eta, values=values, **output)


def load_config(path, validate: bool = True) -> DesignConfig:
    path = Path(path)
    try:
        text = path.read_bytes()
    except OSError as exc:
        raise ConfigIOError(f"cannot read config {path}: {exc.strerror or exc}") from None
    try:
        doc = tomllib.loads(text.decode("utf-8"))
    except (UnicodeDecodeError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return parse_config(doc, validate=validate)
