"""Flat ``key = value`` run configuration.

Lines are ``key = value`` with dotted keys (``beam.theta_i``); ``#``
starts a comment.  Every key has a default, unknown keys are rejected,
and each value is checked when it is parsed so errors name the key.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConfigError

SCENARIOS = ("lhm", "klein", "map", "coeffs", "sweep")


def _float(text):
    return float(text)


def _int(text):
    value = float(text)
    if value != int(value):
        raise ValueError("expected an integer")
    return int(value)


def _floats(text):
    return [float(part) for part in text.split(",") if part.strip()]


def _str(text):
    return text.strip()


def _bool(text):
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected a boolean")


def _optional_float(text):
    return None if text.strip().lower() in ("", "none") else float(text)


def _positive(v):
    return v > 0


def _odd(v):
    return v >= 1 and v % 2 == 1


# key -> (parser, default, check, message)
SCHEMA = {
    "medium.center_frequency": (_float, 5e9, _positive, "must be positive (Hz)"),
    "medium.epsilon": (_float, -4.76, lambda v: v < 0, "fit target must be negative"),
    "medium.mu": (_float, -1.222, lambda v: v < 0, "fit target must be negative"),
    "medium.fill_factor": (_float, 0.5, lambda v: 0 < v < 1, "must lie in (0, 1)"),
    "medium.electric_loss": (_float, 0.0, lambda v: v >= 0, "must be non-negative"),
    "medium.magnetic_loss": (_float, 0.0, lambda v: v >= 0, "must be non-negative"),
    "klein.E_ueV": (_float, 20.7, _positive, "must be positive (ueV)"),
    "klein.V_ueV": (_float, 70.63, lambda v: v >= 0, "must be non-negative (ueV)"),
    "klein.m": (_float, 0.0, lambda v: v >= 0, "must be non-negative (kg)"),
    "beam.theta_i": (_float, math.pi / 6, lambda v: 0 <= v < math.pi / 2, "must lie in [0, pi/2)"),
    "beam.angular_sigma": (_float, 0.06, lambda v: 0 < v < math.pi / 8, "must lie in (0, pi/8)"),
    "beam.n_components": (_int, 129, _odd, "must be a positive odd integer"),
    "beam.n_spectral": (_int, 1, _odd, "must be a positive odd integer"),
    "beam.spectral_sigma": (_float, 0.0, lambda v: 0 <= v < 1 / 3, "must lie in [0, 1/3)"),
    "grid.nx": (_int, 512, lambda v: v >= 2, "must be at least 2"),
    "grid.nz": (_int, 512, lambda v: v >= 2, "must be at least 2"),
    "grid.span_wavelengths": (_float, 20.0, _positive, "must be positive"),
    "grid.t": (_float, 0.0, math.isfinite, "must be finite"),
    "grid.workers": (_int, 1, lambda v: v >= 1, "must be at least 1"),
    "coeffs.picture": (_str, "lhm", lambda v: v in ("lhm", "klein"), "must be 'lhm' or 'klein'"),
    "coeffs.angles": (
        _floats,
        [0.0, math.pi / 12, math.pi / 6, math.pi / 4, math.pi / 3],
        lambda v: len(v) > 0 and all(0 <= a < math.pi / 2 for a in v),
        "must be a non-empty list of angles in [0, pi/2)",
    ),
    "coeffs.n": (_optional_float, None, lambda v: v is None or v != 0, "must be nonzero"),
    "coeffs.mu": (_optional_float, None, lambda v: v is None or v != 0, "must be nonzero"),
    "map.f_min": (_float, 4.75e9, _positive, "must be positive (Hz)"),
    "map.f_max": (_float, 5.25e9, _positive, "must be positive (Hz)"),
    "map.count": (_int, 101, lambda v: v >= 1, "must be at least 1"),
    "sweep.picture": (_str, "klein", lambda v: v in ("lhm", "klein"), "must be 'lhm' or 'klein'"),
    "sweep.parameter": (_str, "V_ueV", lambda v: v in ("V_ueV", "E_ueV", "theta_i", "frequency"),
                        "must be V_ueV, E_ueV, theta_i or frequency"),
    "sweep.start": (_float, 0.0, math.isfinite, "must be finite"),
    "sweep.stop": (_float, 150.0, math.isfinite, "must be finite"),
    "sweep.count": (_int, 151, lambda v: v >= 1, "must be at least 1"),
    "sweep.random": (_bool, False, lambda v: True, ""),
    "seed": (_int, 0, lambda v: v >= 0, "must be a non-negative integer"),
    "output_prefix": (_str, "out", lambda v: len(v) > 0, "must be non-empty"),
}


@dataclass
class RunConfig:
    scenario: str
    values: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    @property
    def output_prefix(self):
        return self.values["output_prefix"]

    @property
    def seed(self):
        return self.values["seed"]


def parse_lines(text):
    """Raw ``{key: text}`` pairs from config-file text."""
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}", "expected 'key = value'")
        pairs[key.strip()] = value.strip()
    return pairs


def _convert(key, text):
    if key not in SCHEMA:
        raise ConfigError(key, "unknown key")
    parser, _, check, message = SCHEMA[key]
    try:
        value = parser(text)
    except ValueError as exc:
        raise ConfigError(key, f"cannot parse {text!r}: {exc}") from None
    if not check(value):
        raise ConfigError(key, message)
    return value


def build_config(scenario, file_pairs=None, overrides=None):
    """Merge defaults, file values and ``--set`` overrides (last wins)."""
    if scenario not in SCENARIOS:
        raise ConfigError("scenario", f"must be one of {', '.join(SCENARIOS)}")
    values = {key: spec[1] for key, spec in SCHEMA.items()}
    for source in (file_pairs or {}, overrides or {}):
        for key, text in source.items():
            values[key] = _convert(key, text)
    _cross_check(values)
    return RunConfig(scenario, values)


def _cross_check(values):
    if values["beam.theta_i"] + 3 * values["beam.angular_sigma"] >= math.pi / 2:
        raise ConfigError("beam.theta_i", "theta_i + 3*angular_sigma must stay below pi/2")
    if values["beam.n_spectral"] > 1 and values["beam.spectral_sigma"] == 0:
        raise ConfigError("beam.spectral_sigma", "must be positive when beam.n_spectral > 1")
    if values["map.f_max"] < values["map.f_min"]:
        raise ConfigError("map.f_max", "must not be below map.f_min")
    if (values["coeffs.n"] is None) != (values["coeffs.mu"] is None):
        raise ConfigError("coeffs.mu", "coeffs.n and coeffs.mu must be given together")
    if values["sweep.stop"] < values["sweep.start"]:
        raise ConfigError("sweep.stop", "must not be below sweep.start")


def load_config(scenario, path=None, overrides=()):
    """Build a :class:`RunConfig` from an optional file and ``key=value`` strings."""
    file_pairs = {}
    if path is not None:
        with open(path) as fh:
            file_pairs = parse_lines(fh.read())
    over = {}
    for item in overrides:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(item, "override must look like key=value")
        over[key.strip()] = value.strip()
    return build_config(scenario, file_pairs, over)
