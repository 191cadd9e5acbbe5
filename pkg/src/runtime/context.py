from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from games.normal_play import NormalPlay
from games.notation import format_game, parse
from games.poset import Poset
from games.relations import RelationEngine
from games.store import GameRef, TermStore
from models.config import Config


@dataclass
class RuntimeContext:
    """Holds the per-invocation poset, term store and caches; avoids global singletons."""

    config: Config
    poset: Poset
    store: TermStore
    engine: RelationEngine
    _normal_play: Optional[NormalPlay] = None
    _formatted: Dict[GameRef, str] = field(default_factory=dict)

    @classmethod
    def from_config(cls, config: Config) -> "RuntimeContext":
        poset = Poset.from_spec(config.poset)
        store = TermStore(poset)
        return cls(config=config, poset=poset, store=store, engine=RelationEngine(store))

    @property
    def normal_play(self) -> NormalPlay:
        if self._normal_play is None:
            self._normal_play = NormalPlay(self.store)
        return self._normal_play

    def parse(self, text: str) -> GameRef:
        return parse(text, self.store)

    def format(self, g: GameRef) -> str:
        return format_game(self.store, g, self._formatted)
