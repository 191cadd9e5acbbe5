"""
Enumeration of monotone game values and validation of option pruning.
"""

from .enumeration import (
    EnumerationBudget,
    ValueEnumerator,
    ValueTable,
    audit_value_table,
    enumerate_monotone_values,
    value_poset_edges,
)
from .domination import (
    DominationReport,
    check_domination,
    check_domination_exhaustive,
    check_domination_on,
)

__all__ = [
    "EnumerationBudget",
    "ValueEnumerator",
    "ValueTable",
    "audit_value_table",
    "enumerate_monotone_values",
    "value_poset_edges",
    "DominationReport",
    "check_domination",
    "check_domination_exhaustive",
    "check_domination_on",
]
