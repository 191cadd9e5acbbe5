"""
Typed models for configuration and CLI reports.

Config dataclasses mirror the YAML structure; report models define the JSON
emitted by `--json`.
"""

from .config import (
    Config,
    EnumerationConfig,
    SamplingConfig,
    VerifyConfig,
)
from .reports import (
    ClaimRecord,
    CompareResult,
    DominationResult,
    EnumerationExport,
    GameSummary,
    NormalPlayResult,
)

__all__ = [
    # Config
    "Config",
    "VerifyConfig",
    "EnumerationConfig",
    "SamplingConfig",
    # Reports
    "ClaimRecord",
    "EnumerationExport",
    "CompareResult",
    "NormalPlayResult",
    "GameSummary",
    "DominationResult",
]
