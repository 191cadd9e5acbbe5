"""
Typed configuration models matching the YAML config structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass
class VerifyConfig:
    """Sequence verification settings."""
    n_max: int = 10
    workers: int = 1

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "VerifyConfig":
        return cls(
            n_max=d.get("n_max", 10),
            workers=d.get("workers", 1),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_max": self.n_max,
            "workers": self.workers,
        }


@dataclass
class EnumerationConfig:
    """
    Value enumeration settings.

    Attributes:
        max_rounds: Generation rounds after the atoms.
        max_values: Cap on representatives.
        time_limit: Wall-clock seconds per run.
        prune: Restrict option sets to antichains.
        validate_pruning: Run the domination check before relying on pruning.
        domination_samples: Random trials for that check.
        workers: Threads scanning candidates within a round.
    """
    max_rounds: int = 12
    max_values: int = 2000
    time_limit: float = 600.0
    prune: bool = True
    validate_pruning: bool = True
    domination_samples: int = 2000
    workers: int = 1

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "EnumerationConfig":
        return cls(
            max_rounds=d.get("max_rounds", 12),
            max_values=d.get("max_values", 2000),
            time_limit=d.get("time_limit", 600.0),
            prune=d.get("prune", True),
            validate_pruning=d.get("validate_pruning", True),
            domination_samples=d.get("domination_samples", 2000),
            workers=d.get("workers", 1),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_rounds": self.max_rounds,
            "max_values": self.max_values,
            "time_limit": self.time_limit,
            "prune": self.prune,
            "validate_pruning": self.validate_pruning,
            "domination_samples": self.domination_samples,
            "workers": self.workers,
        }


@dataclass
class SamplingConfig:
    """Random game sampling (domination checks, property sampling)."""
    seed: int = 0
    max_depth: int = 2
    max_options: int = 2

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "SamplingConfig":
        return cls(
            seed=d.get("seed", 0),
            max_depth=d.get("max_depth", 2),
            max_options=d.get("max_options", 2),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "max_depth": self.max_depth,
            "max_options": self.max_options,
        }


@dataclass
class Config:
    """
    Complete application configuration.

    This is a typed representation of the YAML config structure, after
    command-line overrides are applied.
    """
    poset: str = "L5"
    output: str = "text"
    log_path: Optional[str] = None
    log_level: str = "WARNING"
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Config":
        """Adapter: Create Config from raw dictionary (e.g., from load_config)."""
        return cls(
            poset=d.get("poset", "L5"),
            output=d.get("output", "text"),
            log_path=d.get("log_path"),
            log_level=d.get("log_level", "WARNING"),
            verify=VerifyConfig.from_dict(d.get("verify") or {}),
            enumeration=EnumerationConfig.from_dict(d.get("enumeration") or {}),
            sampling=SamplingConfig.from_dict(d.get("sampling") or {}),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert back to dictionary."""
        d: Dict[str, Any] = {
            "poset": self.poset,
            "output": self.output,
            "log_level": self.log_level,
            "verify": self.verify.to_dict(),
            "enumeration": self.enumeration.to_dict(),
            "sampling": self.sampling.to_dict(),
        }
        if self.log_path:
            d["log_path"] = self.log_path
        return d

    @property
    def json(self) -> bool:
        return self.output == "json"
