"""
JSON output schemas for CLI reports.

Field names and order are part of the output contract; golden-file tests pin them.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ClaimRecord(BaseModel):
    """One line of `verify --json` output."""
    claim: str
    n: int
    expected: bool
    actual: Optional[bool] = Field(None, description="None when the claim's guard fails")
    ok: Optional[bool] = Field(None, description="None when skipped")
    skipped: bool = False
    micros: int = 0


class EnumerationExport(BaseModel):
    """Output of `enumerate --json`."""
    poset: str
    counts_per_round: List[int]
    saturated: bool
    representatives: List[str]
    hasse_edges: List[List[str]]


class CompareResult(BaseModel):
    """Output of `compare --json`."""
    g: str
    h: str
    leq_gh: bool
    leq_hg: bool
    tri_gh: bool
    tri_hg: bool
    verdict: str


class NormalPlayResult(BaseModel):
    """Output of `np --json`."""
    g: str
    h: str
    np_g: str
    np_h: str
    leq: bool
    np_leq: bool
    agree: bool
    mean_g: Optional[int] = None
    mean_h: Optional[int] = None
    claimed: bool = Field(..., description="Both games in class with equal mean values")
    warnings: List[str] = Field(default_factory=list)


class GameSummary(BaseModel):
    """Output of `parse --json`."""
    game: str
    size: int
    depth: int
    positions: int
    mean_value: Optional[int] = None
    locally_monotone: bool
    monotone: bool


class DominationResult(BaseModel):
    """Output of `domination --json`."""
    poset: str
    trials: int
    applicable: int
    ok: bool
    counterexamples: List[List[str]]
    exhaustive: Optional[Dict[str, int]] = None
