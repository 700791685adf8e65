# hamspec/models/family.py

"""
Symbolic descriptions of named graph families.

A FamilySpec is a small tree: leaves are parametric families (complete,
split, G1, ...) and inner nodes are join / union / copies. Realization
lives in hamspec.graphs.families; this module only validates shape and
parameter ranges and renders labels/expressions.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import FamilyParameterError
from .graph import MAX_ORDER


class FamilyTag(str, Enum):
    COMPLETE = "complete"
    EMPTY = "empty"
    COMPLETE_BIPARTITE = "complete_bipartite"
    G1 = "G1"
    G2 = "G2"
    SPLIT = "split"
    PATH = "path"
    CYCLE = "cycle"
    JOIN = "join"
    UNION = "union"
    COPIES = "copies"
    MODIFIED_JOIN = "modified_join"
    NAMED = "named"
    CAL_G1 = "calG1"
    CAL_G2 = "calG2"


# tag -> number of integer parameters
ARITY = {
    FamilyTag.COMPLETE: 1,
    FamilyTag.EMPTY: 1,
    FamilyTag.COMPLETE_BIPARTITE: 2,
    FamilyTag.G1: 1,
    FamilyTag.G2: 1,
    FamilyTag.SPLIT: 2,
    FamilyTag.PATH: 1,
    FamilyTag.CYCLE: 1,
    FamilyTag.JOIN: 0,
    FamilyTag.UNION: 0,
    FamilyTag.COPIES: 1,
    FamilyTag.MODIFIED_JOIN: 2,
    FamilyTag.NAMED: 0,
    FamilyTag.CAL_G1: 1,
    FamilyTag.CAL_G2: 1,
}

SET_TAGS = frozenset({FamilyTag.CAL_G1, FamilyTag.CAL_G2})
_COMPOUND = frozenset({FamilyTag.JOIN, FamilyTag.UNION, FamilyTag.COPIES})


class FamilySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: FamilyTag
    params: Tuple[int, ...] = ()
    children: Tuple["FamilySpec", ...] = ()
    name: Optional[str] = None

    @model_validator(mode="after")
    def check_parameters(self) -> "FamilySpec":
        tag, p = self.tag, self.params
        if len(p) != ARITY[tag]:
            raise FamilyParameterError(
                f"{tag.value} takes {ARITY[tag]} parameter(s), got {len(p)}"
            )
        want_children = {FamilyTag.JOIN: 2, FamilyTag.UNION: 2, FamilyTag.COPIES: 1}.get(tag, 0)
        if len(self.children) != want_children:
            raise FamilyParameterError(
                f"{tag.value} takes {want_children} operand(s), got {len(self.children)}"
            )

        if tag in (FamilyTag.COMPLETE, FamilyTag.EMPTY, FamilyTag.PATH) and p[0] < 1:
            raise FamilyParameterError(f"{tag.value} requires n >= 1")
        if tag is FamilyTag.CYCLE and p[0] < 3:
            raise FamilyParameterError("cycle requires n >= 3")
        if tag is FamilyTag.COMPLETE_BIPARTITE and min(p) < 1:
            raise FamilyParameterError("complete bipartite requires a, b >= 1")
        if tag is FamilyTag.G1 and p[0] < 4:
            raise FamilyParameterError("G1 requires n >= 4")
        if tag is FamilyTag.G2 and p[0] < 5:
            raise FamilyParameterError("G2 requires n >= 5")
        if tag is FamilyTag.SPLIT and not 1 <= p[1] <= p[0] - 1:
            raise FamilyParameterError("split requires 1 <= k <= n-1")
        if tag is FamilyTag.COPIES and p[0] < 1:
            raise FamilyParameterError("copies requires k >= 1")
        if tag is FamilyTag.MODIFIED_JOIN and (p[0] < 1 or p[1] < 2):
            raise FamilyParameterError("modified join requires x >= 1 and y >= 2")
        if tag in SET_TAGS and not 1 <= p[0] <= MAX_ORDER:
            raise FamilyParameterError(f"{tag.value} requires 1 <= n <= {MAX_ORDER}")
        if tag is FamilyTag.NAMED and not self.name:
            raise FamilyParameterError("named family requires a name")

        if tag not in SET_TAGS and tag is not FamilyTag.NAMED and self.order() > MAX_ORDER:
            raise FamilyParameterError(f"order {self.order()} exceeds {MAX_ORDER}")
        return self

    # ---------- shape ----------

    @property
    def is_set(self) -> bool:
        return self.tag in SET_TAGS

    def order(self) -> int:
        tag, p = self.tag, self.params
        if tag is FamilyTag.COMPLETE_BIPARTITE or tag is FamilyTag.MODIFIED_JOIN:
            return p[0] + p[1]
        if tag in (FamilyTag.JOIN, FamilyTag.UNION):
            return self.children[0].order() + self.children[1].order()
        if tag is FamilyTag.COPIES:
            return p[0] * self.children[0].order()
        if tag is FamilyTag.NAMED:
            from ..graphs.families import named_fixture

            return named_fixture(self.name).order()
        return p[0]

    # ---------- rendering ----------

    def label(self) -> str:
        """Report-friendly rendering, e.g. 'K2 ∨ (K1,3 + K1)'."""
        tag, p = self.tag, self.params
        if tag is FamilyTag.COMPLETE:
            return f"K{p[0]}"
        if tag is FamilyTag.EMPTY:
            return "K1" if p[0] == 1 else f"{p[0]}K1"
        if tag is FamilyTag.COMPLETE_BIPARTITE:
            return f"K{p[0]},{p[1]}"
        if tag in (FamilyTag.G1, FamilyTag.G2):
            return f"{tag.value}({p[0]})"
        if tag is FamilyTag.SPLIT:
            rest = p[0] - p[1]
            return f"K{p[1]} ∨ " + ("K1" if rest == 1 else f"{rest}K1")
        if tag is FamilyTag.PATH:
            return f"P{p[0]}"
        if tag is FamilyTag.CYCLE:
            return f"C{p[0]}"
        if tag is FamilyTag.JOIN:
            return f"{self.children[0]._operand()} ∨ {self.children[1]._operand()}"
        if tag is FamilyTag.UNION:
            return f"{self.children[0]._operand()} + {self.children[1]._operand()}"
        if tag is FamilyTag.COPIES:
            return f"{p[0]}{self.children[0]._operand()}"
        if tag is FamilyTag.MODIFIED_JOIN:
            return f"K{p[0]} ∨ {p[1]}K1 (xy1, xy2 → y1y2)"
        if tag is FamilyTag.NAMED:
            return str(self.name)
        return f"{tag.value}({p[0]})"

    def _operand(self) -> str:
        text = self.label()
        if self.tag in (FamilyTag.JOIN, FamilyTag.UNION, FamilyTag.SPLIT, FamilyTag.MODIFIED_JOIN):
            return f"({text})"
        if self.tag is FamilyTag.COPIES and self.children[0].tag in _COMPOUND:
            return f"({text})"
        return text

    def to_expression(self) -> str:
        """Render in the grammar accepted by parse_family()."""
        tag, p = self.tag, self.params
        if tag is FamilyTag.COMPLETE:
            return f"K{p[0]}"
        if tag is FamilyTag.COMPLETE_BIPARTITE:
            return f"K{p[0]},{p[1]}"
        if tag is FamilyTag.JOIN:
            return f"join({self.children[0].to_expression()},{self.children[1].to_expression()})"
        if tag is FamilyTag.UNION:
            return f"union({self.children[0].to_expression()},{self.children[1].to_expression()})"
        if tag is FamilyTag.COPIES:
            inner = self.children[0].to_expression()
            if self.children[0].tag in (FamilyTag.COPIES, FamilyTag.COMPLETE_BIPARTITE):
                inner = f"({inner})"
            return f"{p[0]}{inner}"
        if tag is FamilyTag.NAMED:
            return str(self.name)
        name = {
            FamilyTag.EMPTY: "empty",
            FamilyTag.G1: "G1",
            FamilyTag.G2: "G2",
            FamilyTag.SPLIT: "split",
            FamilyTag.PATH: "path",
            FamilyTag.CYCLE: "cycle",
            FamilyTag.MODIFIED_JOIN: "xyjoin",
            FamilyTag.CAL_G1: "calG1",
            FamilyTag.CAL_G2: "calG2",
        }[tag]
        return ":".join([name, *(str(v) for v in p)])

    def __str__(self) -> str:
        return self.label()


# ---------- small builders used by family tables and tests ----------

def K(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.COMPLETE, params=(n,))


def E(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.EMPTY, params=(n,))


def Kab(a: int, b: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.COMPLETE_BIPARTITE, params=(a, b))


def G1(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.G1, params=(n,))


def G2(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.G2, params=(n,))


def split(n: int, k: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.SPLIT, params=(n, k))


def join(a: FamilySpec, b: FamilySpec) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.JOIN, children=(a, b))


def union(a: FamilySpec, b: FamilySpec) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.UNION, children=(a, b))


def copies(k: int, a: FamilySpec) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.COPIES, params=(k,), children=(a,))


FamilySpec.model_rebuild()
