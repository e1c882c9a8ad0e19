"""Frozen constants, one section per surface, stored as versioned JSON.

The file carries a version tag and a digest of its constants; loading fails
if the digest does not match, so a constant cannot change without the
version changing with it (``write_config`` bumps both).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

REQUIRED = (
    "rho_min", "D_rho", "eps", "eps_prime", "rho_prime", "tuple_threshold",
    "c", "c0", "c1", "c2", "A0", "a", "q_factor", "D_real", "E0", "L", "K",
    "m0", "B", "m1", "m2", "L0", "t0", "quasi_a", "quasi_b",
    "b", "b1", "b2", "b3", "sigma_slack", "census_b", "ds_b", "cr_c", "conv_C",
    "ball_max_radius", "beta",
)


class ConfigError(ValueError):
    pass


def digest(surfaces: dict) -> str:
    blob = json.dumps(surfaces, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass(frozen=True)
class Config:
    version: str
    surface: str
    constants: dict

    def __getattr__(self, name):
        try:
            return self.constants[name]
        except KeyError:
            raise AttributeError(name) from None

    def as_dict(self) -> dict:
        return dict(self.constants)


def default_path() -> Path:
    return Path(str(resources.files("rdcentroid") / "data" / "constants.json"))


def read_raw(path=None) -> dict:
    path = Path(path) if path else default_path()
    with open(path) as fh:
        raw = json.load(fh)
    for key in ("version", "digest", "surfaces"):
        if key not in raw:
            raise ConfigError(f"config file is missing {key!r}")
    if digest(raw["surfaces"]) != raw["digest"]:
        raise ConfigError("constants changed without a version bump (digest mismatch)")
    return raw


def load_config(surface: str = "S_1_1", path=None) -> Config:
    raw = read_raw(path)
    try:
        consts = raw["surfaces"][surface]
    except KeyError:
        raise ConfigError(f"no constants for surface {surface!r}") from None
    missing = [k for k in REQUIRED if k not in consts]
    if missing:
        raise ConfigError(f"missing constants: {missing}")
    bad = [k for k in REQUIRED if not consts[k] > 0]
    if bad:
        raise ConfigError(f"constants must be positive: {bad}")
    return Config(raw["version"], surface, dict(consts))


_current: Optional[Config] = None
_path: Optional[Path] = None


def get_config() -> Config:
    global _current
    if _current is None:
        _current = load_config(path=_path)
    return _current


def use_config(path=None) -> Config:
    """Switch the process-wide config file (None restores the packaged one)."""
    global _current, _path
    _path = Path(path) if path else None
    _current = None
    return get_config()


def bump_version(version: str) -> str:
    major, minor = version.split(".")[:2]
    return f"{major}.{int(minor) + 1}"


def write_config(updates: dict, surface: str = "S_1_1", path=None) -> str:
    """Merge ``updates`` into the surface section; returns the new version."""
    path = Path(path) if path else (_path or default_path())
    raw = read_raw(path)
    section = raw["surfaces"].setdefault(surface, {})
    if all(section.get(k) == v for k, v in updates.items()):
        return raw["version"]
    section.update(updates)
    raw["version"] = bump_version(raw["version"])
    raw["digest"] = digest(raw["surfaces"])
    with open(path, "w") as fh:
        json.dump(raw, fh, indent=2, sort_keys=True)
        fh.write("\n")
    global _current
    _current = None
    return raw["version"]
