# hamspec/graphs/parsing.py

"""
Parser for family expressions.

    FAMILY := NAME ':' INT (':' INT)*
            | 'join(' FAMILY ',' FAMILY ')'
            | 'union(' FAMILY ',' FAMILY ')'
            | INT FAMILY                      k disjoint copies
            | 'K' INT                         complete graph
            | 'K' INT ',' INT                 complete bipartite graph
            | '(' FAMILY ')'
            | NAME                            named fixture

'K a,b' is read as bipartite only when the integer after the comma is
followed by the end of input, ')' or ','. So "join(K2,4K1)" is the join
of K2 with 4K1 while "join(K2,5,K1)" is the join of K2,5 with K1.
Whitespace is ignored.
"""

from __future__ import annotations

from typing import Tuple

from pydantic import ValidationError

from ..errors import FamilyParameterError, FamilySyntaxError
from ..models.family import ARITY, FamilySpec, FamilyTag
from .families import NAMED_FIXTURES

_NAMES = {
    "g1": FamilyTag.G1,
    "g2": FamilyTag.G2,
    "split": FamilyTag.SPLIT,
    "k": FamilyTag.COMPLETE,
    "complete": FamilyTag.COMPLETE,
    "empty": FamilyTag.EMPTY,
    "bipartite": FamilyTag.COMPLETE_BIPARTITE,
    "path": FamilyTag.PATH,
    "cycle": FamilyTag.CYCLE,
    "xyjoin": FamilyTag.MODIFIED_JOIN,
    "calg1": FamilyTag.CAL_G1,
    "calg2": FamilyTag.CAL_G2,
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # ---------- lexing helpers ----------

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str) -> None:
        if self._peek() != ch:
            found = self._peek() or "end of input"
            raise FamilySyntaxError(f"expected {ch!r}", self.pos, found)
        self.pos += 1

    def _int(self) -> Tuple[int, int]:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise FamilySyntaxError("expected an integer", start, self._peek() or "end of input")
        return int(self.text[start : self.pos]), start

    def _ident(self) -> Tuple[str, int]:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos], start

    def _build(self, start: int, token: str, **fields) -> FamilySpec:
        try:
            return FamilySpec(**fields)
        except (ValidationError, FamilyParameterError) as exc:
            message = exc.errors()[0]["msg"] if isinstance(exc, ValidationError) else str(exc)
            raise FamilySyntaxError(f"invalid parameters: {message}", start, token) from exc

    def _bipartite_ahead(self) -> bool:
        """At a ',' after 'K a': is the next token an integer that closes the operand?"""
        k = self.pos + 1
        while k < len(self.text) and self.text[k].isspace():
            k += 1
        digits = k
        while k < len(self.text) and self.text[k].isdigit():
            k += 1
        if k == digits:
            return False
        while k < len(self.text) and self.text[k].isspace():
            k += 1
        return k == len(self.text) or self.text[k] in "),"

    # ---------- grammar ----------

    def parse(self) -> FamilySpec:
        spec = self.family()
        self._skip()
        if self.pos != len(self.text):
            raise FamilySyntaxError("unexpected trailing input", self.pos, self.text[self.pos :])
        return spec

    def family(self) -> FamilySpec:
        ch = self._peek()
        start = self.pos
        if not ch:
            raise FamilySyntaxError("unexpected end of input", self.pos)
        if ch == "(":
            self.pos += 1
            inner = self.family()
            self._expect(")")
            return inner
        if ch.isdigit():
            k, _ = self._int()
            inner = self.family()
            return self._build(start, str(k), tag=FamilyTag.COPIES, params=(k,), children=(inner,))
        if ch == "K" and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
            self.pos += 1
            a, _ = self._int()
            if self._peek() == "," and self._bipartite_ahead():
                self.pos += 1
                b, _ = self._int()
                return self._build(start, f"K{a},{b}", tag=FamilyTag.COMPLETE_BIPARTITE, params=(a, b))
            return self._build(start, f"K{a}", tag=FamilyTag.COMPLETE, params=(a,))

        name, name_pos = self._ident()
        if not name:
            raise FamilySyntaxError("unexpected character", self.pos, ch)
        if name in ("join", "union") and self._peek() == "(":
            self.pos += 1
            left = self.family()
            self._expect(",")
            right = self.family()
            self._expect(")")
            tag = FamilyTag.JOIN if name == "join" else FamilyTag.UNION
            return self._build(name_pos, name, tag=tag, children=(left, right))

        if self._peek() == ":":
            tag = _NAMES.get(name.lower())
            if tag is None:
                raise FamilySyntaxError("unknown family name", name_pos, name)
            params = []
            while self._peek() == ":":
                self.pos += 1
                value, _ = self._int()
                params.append(value)
            if len(params) != ARITY[tag]:
                raise FamilySyntaxError(
                    f"{name} takes {ARITY[tag]} parameter(s), got {len(params)}", name_pos, name
                )
            return self._build(name_pos, name, tag=tag, params=tuple(params))

        if name in NAMED_FIXTURES:
            return self._build(name_pos, name, tag=FamilyTag.NAMED, name=name)
        raise FamilySyntaxError("unknown family name", name_pos, name)


def parse_family(spec: str) -> FamilySpec:
    """Parse a family expression such as 'G2:14' or 'join(K2,union(K10,2K1))'."""
    return _Parser(spec).parse()
