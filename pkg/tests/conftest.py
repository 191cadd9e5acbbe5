"""
Pytest configuration and shared fixtures.
"""

import os
import sys

import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from games.poset import linear_order  # noqa: E402
from games.relations import RelationEngine  # noqa: E402
from games.sequence import GameSequence  # noqa: E402
from games.store import TermStore  # noqa: E402


@pytest.fixture
def l5():
    return linear_order(5)


@pytest.fixture
def store(l5):
    return TermStore(l5)


@pytest.fixture
def engine(store):
    return RelationEngine(store)


@pytest.fixture
def seq(store):
    return GameSequence(store)


@pytest.fixture
def atom(store):
    """atom(label) -> the atomic game with that label in the L5 store."""
    return store.atom_game


@pytest.fixture
def temp_config_dir(tmp_path):
    """Create a temporary config directory with default.yaml."""
    config_dir = tmp_path / "config"
    config_dir.mkdir()

    default_yaml = config_dir / "default.yaml"
    default_yaml.write_text("""
poset: "L5"
output: "text"
log_level: "WARNING"

verify:
  n_max: 3
  workers: 1

enumeration:
  max_rounds: 8
  max_values: 500
  time_limit: 60.0
  prune: true
  domination_samples: 200

sampling:
  seed: 0
  max_depth: 2
""")

    return config_dir


@pytest.fixture
def valid_config():
    """Return a valid configuration dictionary."""
    return {
        "poset": "L5",
        "output": "text",
        "log_level": "INFO",
        "verify": {"n_max": 10, "workers": 1},
        "enumeration": {
            "max_rounds": 12,
            "max_values": 2000,
            "time_limit": 600.0,
            "prune": True,
            "domination_samples": 2000,
        },
        "sampling": {"seed": 0, "max_depth": 2, "max_options": 2},
    }
