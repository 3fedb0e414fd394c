"""Finite semigroups given by Cayley tables.

Elements are dense integer indices ``0..n-1``; names only matter at I/O
boundaries.  The adjoined identity of S^1 is the module-level ``ONE``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product as _triples
from typing import Optional, Sequence, Union

DEFAULT_MAX_ORDER = 64
NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class SemigroupError(ValueError):
    """Malformed or invalid Cayley table."""


class ParseError(SemigroupError):
    pass


class AssociativityError(SemigroupError):
    def __init__(self, triple, names=None):
        i, j, k = triple
        self.triple = triple
        if names is not None:
            i, j, k = names[i], names[j], names[k]
        super().__init__(f"associativity fails at ({i}, {j}, {k})")


class _One:
    """The identity adjoined in S^1."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ONE"

    def __reduce__(self):
        return (_One, ())


ONE = _One()
UnitExt = Union[int, _One]


@dataclass(frozen=True)
class Semigroup:
    names: tuple
    table: tuple
    zero: Optional[int] = field(default=None)
    identity: Optional[int] = field(default=None)

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def product(self, s: int, t: int) -> int:
        return self.table[s][t]

    def unit_product(self, x: UnitExt, y: UnitExt) -> UnitExt:
        if x is ONE:
            return y
        if y is ONE:
            return x
        return self.table[x][y]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def name(self, x: UnitExt) -> str:
        return "1" if x is ONE else self.names[x]

    @property
    def nonzero(self) -> list:
        """S - {0}; all of S when there is no zero."""
        return [s for s in range(self.order) if s != self.zero]

    def opposite(self) -> "Semigroup":
        """S with the reversed multiplication."""
        n = self.order
        table = tuple(tuple(self.table[j][i] for j in range(n)) for i in range(n))
        return Semigroup(self.names, table, self.zero, self.identity)

    def to_text(self) -> str:
        lines = ["elements: " + " ".join(self.names)]
        for row in self.table:
            lines.append(" ".join(self.names[x] for x in row))
        return "\n".join(lines) + "\n"


def find_associativity_violation(table) -> Optional[tuple]:
    n = len(table)
    for i, j, k in _triples(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            return (i, j, k)
    return None


def find_zero(table) -> Optional[int]:
    n = len(table)
    for z in range(n):
        if all(table[z][i] == z and table[i][z] == z for i in range(n)):
            return z
    return None


def find_identity(table) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            return e
    return None


def from_table(names: Sequence[str], table, max_order: int = DEFAULT_MAX_ORDER) -> Semigroup:
    """Validate a table (rows of element indices) and build a Semigroup."""
    names = tuple(names)
    n = len(names)
    if n == 0:
        raise SemigroupError("empty element list")
    if n > max_order:
        raise SemigroupError(f"order {n} exceeds the maximum {max_order}")
    seen = set()
    for nm in names:
        if not NAME_RE.match(nm):
            raise ParseError(f"invalid element name {nm!r}")
        if nm in seen:
            raise SemigroupError(f"duplicate element name {nm!r}")
        seen.add(nm)
    rows = tuple(tuple(int(x) for x in row) for row in table)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SemigroupError(f"table must be {n}x{n}")
    if any(not 0 <= x < n for r in rows for x in r):
        raise SemigroupError("table entry out of range")
    bad = find_associativity_violation(rows)
    if bad is not None:
        raise AssociativityError(bad, names)
    return Semigroup(names, rows, find_zero(rows), find_identity(rows))


def load_semigroup(text: str, max_order: int = DEFAULT_MAX_ORDER) -> Semigroup:
    """Parse the line-oriented Cayley-table format.

    ``elements: a b c`` followed by one row per element; row i lists the
    products (element i)*(element j).  Lines starting with ``#`` are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise ParseError("empty document")
    lineno, header = lines[0]
    key, sep, rest = header.partition(":")
    if not sep or key.strip() != "elements":
        raise ParseError(f"line {lineno}: expected 'elements: <names>'")
    names = rest.split()
    if not names:
        raise ParseError(f"line {lineno}: no element names")
    for nm in names:
        if not NAME_RE.match(nm):
            raise ParseError(f"line {lineno}: invalid element name {nm!r}")
    if len(set(names)) != len(names):
        dup = next(nm for nm in names if names.count(nm) > 1)
        raise SemigroupError(f"duplicate element name {dup!r}")
    rows = lines[1:]
    if len(rows) != len(names):
        raise ParseError(f"expected {len(names)} table rows, found {len(rows)}")
    idx = {nm: i for i, nm in enumerate(names)}
    table = []
    for lineno, row in rows:
        entries = row.split()
        if len(entries) != len(names):
            raise ParseError(f"line {lineno}: expected {len(names)} entries, found {len(entries)}")
        try:
            table.append([idx[e] for e in entries])
        except KeyError as exc:
            raise ParseError(f"line {lineno}: unknown element {exc.args[0]!r}") from None
    return from_table(names, table, max_order=max_order)


def read_semigroup(path, max_order: int = DEFAULT_MAX_ORDER) -> Semigroup:
    with open(path, encoding="utf-8") as fh:
        return load_semigroup(fh.read(), max_order=max_order)
