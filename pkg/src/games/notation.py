"""
Text notation for games.

Grammar (whitespace is insignificant):

    game   := atom | brace | macro
    brace  := '{' list '|' list '}'
    list   := game (',' game)*
    atom   := signed integer label
    macro  := 'star' | 'M(' game ')' | 'P(' game ')' | 'Ps(' game ')'
            | 'Pn(' nat ',' game ')' | 'G(' nat ')'

Macros expand eagerly into plain terms. `format_game` prints the canonical,
fully expanded brace form, and parse(format_game(G)) returns G's own handle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional

from .errors import GameError, NotationError
from .sequence import GameSequence
from .store import GameRef, TermStore

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<int>[+-]?\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[{}|,()])"
)

MACROS = ("star", "M", "P", "Ps", "Pn", "G")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", one of "{}|,()", or "end"
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            raise NotationError(f"unexpected character {text[pos]!r}", line, column)
        kind = match.lastgroup
        value = match.group()
        if kind == "ws":
            newlines = value.count("\n")
            if newlines:
                line += newlines
                line_start = pos + value.rindex("\n") + 1
        elif kind == "punct":
            tokens.append(Token(value, value, line, column))
        else:
            tokens.append(Token(kind, value, line, column))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class Parser:
    """Recursive-descent parser producing GameRefs in a TermStore."""

    def __init__(self, store: TermStore):
        self.store = store
        self._sequence: Optional[GameSequence] = None
        self._tokens: List[Token] = []
        self._pos = 0

    def parse(self, text: str) -> GameRef:
        self._tokens = tokenize(text)
        self._pos = 0
        try:
            game = self._game()
        except RecursionError:
            raise NotationError("game is nested too deeply") from None
        end = self._peek()
        if end.kind != "end":
            raise self._error(f"unexpected {end.text!r} after game", end)
        return game

    # Token helpers

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _next(self) -> Token:
        token = self._tokens[self._pos]
        if token.kind != "end":
            self._pos += 1
        return token

    def _expect(self, kind: str) -> Token:
        token = self._next()
        if token.kind != kind:
            raise self._error(f"expected {kind!r}, found {_describe(token)}", token)
        return token

    @staticmethod
    def _error(message: str, token: Token) -> NotationError:
        return NotationError(message, token.line, token.column)

    # Grammar

    def _game(self) -> GameRef:
        token = self._peek()
        if token.kind == "int":
            self._next()
            label = int(token.text)
            if not self.store.poset.has_label(label):
                raise self._error(f"unknown atom {label} in poset {self.store.poset.name}", token)
            return self.store.atom_game(label)
        if token.kind == "{":
            return self._brace()
        if token.kind == "name":
            return self._macro()
        raise self._error(f"expected a game, found {_describe(token)}", token)

    def _brace(self) -> GameRef:
        self._expect("{")
        bar = self._peek()
        if bar.kind == "|":
            raise self._error("empty left option set", bar)
        left = self._list()
        self._expect("|")
        close = self._peek()
        if close.kind == "}":
            raise self._error("empty right option set", close)
        right = self._list()
        self._expect("}")
        return self.store.composite(left, right)

    def _list(self) -> List[GameRef]:
        games = [self._game()]
        while self._peek().kind == ",":
            self._next()
            games.append(self._game())
        return games

    def _macro(self) -> GameRef:
        token = self._next()
        name = token.text
        if name not in MACROS:
            raise self._error(f"unknown macro {name!r}", token)
        seq = self._sequence_for(token)
        if name == "star":
            return seq.star()
        self._expect("(")
        if name == "G":
            n = self._nat()
            result = seq.g_seq(n)
        elif name == "Pn":
            n = self._nat()
            self._expect(",")
            result = seq.p_n(n, self._game())
        else:
            inner = self._game()
            result = {"M": seq.m, "P": seq.p, "Ps": seq.p_star}[name](inner)
        self._expect(")")
        return result

    def _nat(self) -> int:
        token = self._expect("int")
        value = int(token.text)
        if value < 0 or token.text.startswith(("+", "-")):
            raise self._error(f"expected a natural number, found {token.text!r}", token)
        return value

    def _sequence_for(self, token: Token) -> GameSequence:
        if self._sequence is None:
            try:
                self._sequence = GameSequence(self.store)
            except GameError as exc:
                raise self._error(f"macro {token.text!r} unavailable: {exc}", token) from None
        return self._sequence


def _describe(token: Token) -> str:
    return "end of input" if token.kind == "end" else repr(token.text)


def parse(text: str, store: TermStore) -> GameRef:
    """Parse `text` into a game of `store`."""
    return Parser(store).parse(text)


def format_game(store: TermStore, g: GameRef, cache: Optional[Dict[GameRef, str]] = None) -> str:
    """Canonical fully expanded brace form of G."""
    text = cache if cache is not None else {}
    for position in sorted(store.positions(g)):
        if position in text:
            continue
        term = store.term(position)
        if term.is_atomic:
            text[position] = str(term.atom.label)
        else:
            left = ",".join(text[o] for o in term.left)
            right = ",".join(text[o] for o in term.right)
            text[position] = "{" + left + "|" + right + "}"
    return text[g]


