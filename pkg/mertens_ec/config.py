from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

ROOT = Path(__file__).resolve().parents[1]
CONFIG_PATH = ROOT / "config" / "run.yaml"


@dataclass(frozen=True)
class Limits:
    prime_power_max: int = 2 ** 40
    field_max_order: int = 2 ** 20
    census_max_order: int = 16
    product_max_degree: int = 64


@dataclass(frozen=True)
class Precision:
    dps: int = 50
    ratio_digits: int = 15


@dataclass(frozen=True)
class Defaults:
    nmax: int = 12
    xmax: int = 500
    epsilon: str = "0.1"
    qmax: int = 64


@dataclass(frozen=True)
class RunConfig:
    defaults: Defaults = field(default_factory=Defaults)
    limits: Limits = field(default_factory=Limits)
    precision: Precision = field(default_factory=Precision)
    threads: Optional[int] = None


def _safe_read_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        return {}
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except Exception:
        return {}
    return data if isinstance(data, dict) else {}


def _section(cls, raw: Any):
    # keep known keys only; values are coerced through the dataclass defaults' types
    if not isinstance(raw, dict):
        return cls()
    base = cls()
    kwargs = {}
    for name in cls.__dataclass_fields__:
        if name in raw and raw[name] is not None:
            kwargs[name] = type(getattr(base, name))(raw[name])
    return cls(**kwargs)


def load_run_config(path: Optional[Path] = None) -> RunConfig:
    raw = _safe_read_yaml(Path(path) if path is not None else CONFIG_PATH)
    threads = raw.get("threads")
    return RunConfig(
        defaults=_section(Defaults, raw.get("defaults")),
        limits=_section(Limits, raw.get("limits")),
        precision=_section(Precision, raw.get("precision")),
        threads=int(threads) if threads else None,
    )


DEFAULT_CONFIG = load_run_config()
