from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict

FORMAT_VERSION = "1"


@dataclass
class OutputRecord:
    command: str
    inputs: Dict[str, Any]                              # echo of q, a and bounds, as strings
    payload: Dict[str, Any] = field(default_factory=dict)
    format_version: str = FORMAT_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
