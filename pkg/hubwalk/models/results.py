from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Tuple

import numpy as np

# Method identifiers accepted by the analyzer and the CLI, in display order.
QUANTUM_METHODS = ("cqau", "cqaw", "cqg")
CLASSICAL_METHODS = ("hits", "pagerank", "bek")
ALL_METHODS = QUANTUM_METHODS + CLASSICAL_METHODS

METHOD_TITLES = {
    "cqau": "CQAu",
    "cqaw": "CQAw",
    "cqg": "CQG",
    "hits": "HITS",
    "pagerank": "PR",
    "bek": "BEK",
}


@dataclass(frozen=True)
class CentralityResult:
    """Per-node hub and authority scores of one method, in the method's native scale."""

    method: str
    hub: np.ndarray
    authority: np.ndarray
    normalization: str
    info: Mapping[str, Any] = field(default_factory=dict)
    warnings: Tuple[str, ...] = ()

    def __post_init__(self):
        hub = np.asarray(self.hub, dtype=float)
        authority = np.asarray(self.authority, dtype=float)
        if hub.shape != authority.shape or hub.ndim != 1:
            raise ValueError(f"hub {hub.shape} and authority {authority.shape} must be equal-length vectors")
        object.__setattr__(self, "hub", hub)
        object.__setattr__(self, "authority", authority)
        object.__setattr__(self, "info", dict(self.info))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def n(self) -> int:
        return int(self.hub.shape[0])

    @property
    def title(self) -> str:
        return METHOD_TITLES.get(self.method, self.method)

    def side(self, name: str) -> np.ndarray:
        if name == "hub":
            return self.hub
        if name == "authority":
            return self.authority
        raise ValueError(f"side must be 'hub' or 'authority', got {name!r}")

    def to_dict(self) -> Dict[str, Any]:
        """JSON-serialisable form with full double precision."""
        payload: Dict[str, Any] = {
            "method": self.method,
            "hub": [float(x) for x in self.hub],
            "authority": [float(x) for x in self.authority],
            "normalization": self.normalization,
        }
        if self.info:
            payload["info"] = {k: _plain(v) for k, v in self.info.items()}
        if self.warnings:
            payload["warnings"] = list(self.warnings)
        return payload


def _plain(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value
