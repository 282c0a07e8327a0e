"""Circuit-formula ASTs: connectives, parsing, printing, classical evaluation.

Grammar (prefix, whitespace-separated)::

    formula := var | "T" | "F" | "(" op formula* ")"
    op      := base | base "?"        -- "?" marks an unreliable gate
    base    := not | id | and | nand | or | nor | imp | nimp | iff | xor
             | majN | nmajN           -- N odd, >= 3

Every gate has a negated-output counterpart (not/id, and/nand, or/nor,
imp/nimp, iff/xor, maj/nmaj); a misfiring unreliable gate behaves as the
counterpart of its base connective.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .errors import ParseError

_FIXED_ARITY = {
    "not": 1,
    "id": 1,
    "and": 2,
    "nand": 2,
    "or": 2,
    "nor": 2,
    "imp": 2,
    "nimp": 2,
    "iff": 2,
    "xor": 2,
}

_COUNTERPART = {
    "not": "id",
    "id": "not",
    "and": "nand",
    "nand": "and",
    "or": "nor",
    "nor": "or",
    "imp": "nimp",
    "nimp": "imp",
    "iff": "xor",
    "xor": "iff",
    "maj": "nmaj",
    "nmaj": "maj",
}


@dataclass(frozen=True)
class Connective:
    kind: str
    arity: int
    unreliable: bool = False

    def __post_init__(self):
        if self.kind in _FIXED_ARITY:
            if self.arity != _FIXED_ARITY[self.kind]:
                raise ValueError(f"{self.kind} has arity {_FIXED_ARITY[self.kind]}")
        elif self.kind in ("maj", "nmaj"):
            if self.arity < 3 or self.arity % 2 == 0:
                raise ValueError("majority arity must be odd and at least 3")
        else:
            raise ValueError(f"unknown connective kind {self.kind!r}")

    @property
    def name(self) -> str:
        base = self.kind if self.kind not in ("maj", "nmaj") else f"{self.kind}{self.arity}"
        return base + ("?" if self.unreliable else "")

    def counterpart(self) -> "Connective":
        return Connective(_COUNTERPART[self.kind], self.arity, self.unreliable)

    def as_reliable(self) -> "Connective":
        return Connective(self.kind, self.arity) if self.unreliable else self


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class App:
    conn: Connective
    args: tuple["CFormula", ...]

    def __post_init__(self):
        if len(self.args) != self.conn.arity:
            raise ValueError(
                f"{self.conn.name} expects {self.conn.arity} arguments, "
                f"got {len(self.args)}"
            )


CFormula = Union[Var, Const, App]


def variables(f: CFormula) -> set[str]:
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, Const):
        return set()
    out: set[str] = set()
    for a in f.args:
        out |= variables(a)
    return out


def is_pl(f: CFormula) -> bool:
    """True when f contains no unreliable connective (it is a PL formula)."""
    if isinstance(f, (Var, Const)):
        return True
    return not f.conn.unreliable and all(is_pl(a) for a in f.args)


def fau(f: CFormula) -> list[tuple[int, ...]]:
    """Positions of unreliable occurrences, depth-first pre-order."""
    out: list[tuple[int, ...]] = []

    def walk(node: CFormula, path: tuple[int, ...]) -> None:
        if isinstance(node, App):
            if node.conn.unreliable:
                out.append(path)
            for i, a in enumerate(node.args):
                walk(a, path + (i,))

    walk(f, ())
    return out


def apply_pattern(f: CFormula, pattern: Sequence[bool]) -> CFormula:
    """Resolve each unreliable gate: bit False = correct, True = misfire."""
    bits = list(pattern)
    expected = len(fau(f))
    if len(bits) != expected:
        raise ValueError(f"pattern length {len(bits)} != gate count {expected}")
    it = iter(bits)

    def walk(node: CFormula) -> CFormula:
        if not isinstance(node, App):
            return node
        conn = node.conn
        if conn.unreliable:
            misfire = next(it)
            conn = (conn.counterpart() if misfire else conn).as_reliable()
        return App(conn, tuple(walk(a) for a in node.args))

    return walk(f)


def eval_pl(f: CFormula, valuation: Mapping[str, bool]) -> bool:
    """Classical truth value; majority is strict (odd arity, no ties)."""
    if isinstance(f, Var):
        try:
            return bool(valuation[f.name])
        except KeyError:
            raise KeyError(f"unbound variable {f.name!r}") from None
    if isinstance(f, Const):
        return f.value
    vals = [eval_pl(a, valuation) for a in f.args]
    kind = f.conn.kind
    if kind == "not":
        return not vals[0]
    if kind == "id":
        return vals[0]
    if kind == "and":
        return vals[0] and vals[1]
    if kind == "nand":
        return not (vals[0] and vals[1])
    if kind == "or":
        return vals[0] or vals[1]
    if kind == "nor":
        return not (vals[0] or vals[1])
    if kind == "imp":
        return (not vals[0]) or vals[1]
    if kind == "nimp":
        return vals[0] and not vals[1]
    if kind == "iff":
        return vals[0] == vals[1]
    if kind == "xor":
        return vals[0] != vals[1]
    if kind == "maj":
        return sum(vals) * 2 > len(vals)
    if kind == "nmaj":
        return sum(vals) * 2 <= len(vals)
    raise AssertionError(kind)


def format_cformula(f: CFormula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "T" if f.value else "F"
    inner = " ".join([f.conn.name] + [format_cformula(a) for a in f.args])
    return f"({inner})"


_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_MAJ_RE = re.compile(r"(n?maj)([0-9]+)\Z")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            tokens.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append((text[i:j], i))
            i = j
    return tokens


def _parse_op(tok: str, pos: int) -> Connective:
    unreliable = tok.endswith("?")
    base = tok[:-1] if unreliable else tok
    m = _MAJ_RE.match(base)
    if m:
        arity = int(m.group(2))
        if arity < 3 or arity % 2 == 0:
            raise ParseError(f"majority arity must be odd and >= 3, got {arity}", pos)
        return Connective(m.group(1), arity, unreliable)
    if base in _FIXED_ARITY:
        return Connective(base, _FIXED_ARITY[base], unreliable)
    raise ParseError(f"unknown connective {tok!r}", pos)


def parse_cformula(text: str) -> CFormula:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty formula")
    idx = 0

    def parse_node() -> CFormula:
        nonlocal idx
        if idx >= len(tokens):
            raise ParseError("unexpected end of formula", len(text))
        tok, pos = tokens[idx]
        idx += 1
        if tok == "(":
            if idx >= len(tokens):
                raise ParseError("expected connective after '('", pos)
            op_tok, op_pos = tokens[idx]
            idx += 1
            conn = _parse_op(op_tok, op_pos)
            args = []
            while idx < len(tokens) and tokens[idx][0] != ")":
                args.append(parse_node())
            if idx >= len(tokens):
                raise ParseError("missing ')'", len(text))
            idx += 1  # consume ')'
            if len(args) != conn.arity:
                raise ParseError(
                    f"{conn.name} expects {conn.arity} arguments, got {len(args)}",
                    op_pos,
                )
            return App(conn, tuple(args))
        if tok == ")":
            raise ParseError("unexpected ')'", pos)
        if tok == "T":
            return Const(True)
        if tok == "F":
            return Const(False)
        if _VAR_RE.match(tok):
            return Var(tok)
        raise ParseError(f"invalid token {tok!r}", pos)

    node = parse_node()
    if idx < len(tokens):
        tok, pos = tokens[idx]
        raise ParseError(f"trailing input {tok!r}", pos)
    return node
