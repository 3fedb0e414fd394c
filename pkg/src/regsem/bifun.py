"""The partial functions B, B_R and B_L, evaluated by witness search in S^1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .green import GreenData
from .representatives import RepChoice
from .semigroup import ONE, Semigroup, UnitExt


class DomainError(ValueError):
    """A B-function was called outside its domain."""


@dataclass(frozen=True)
class Witness:
    value: UnitExt
    role: str  # 'right': w = v*z ; 'left': u = y*v


def right_witnesses(S: Semigroup, v: int, w: int) -> list:
    """All z in S^1 with w = v*z, ONE first."""
    out = [ONE] if v == w else []
    out.extend(z for z in range(S.order) if S.table[v][z] == w)
    return out


def left_witnesses(S: Semigroup, v: int, u: int) -> list:
    """All y in S^1 with u = y*v, ONE first."""
    out = [ONE] if v == u else []
    out.extend(y for y in range(S.order) if S.table[y][v] == u)
    return out


def witness_right(S: Semigroup, v: int, w: int) -> Optional[Witness]:
    if v == w:
        return Witness(ONE, "right")
    row = S.table[v]
    for z in range(S.order):
        if row[z] == w:
            return Witness(z, "right")
    return None


def witness_left(S: Semigroup, v: int, u: int) -> Optional[Witness]:
    if v == u:
        return Witness(ONE, "left")
    T = S.table
    for y in range(S.order):
        if T[y][v] == u:
            return Witness(y, "left")
    return None


def _nonzero(S, *xs):
    for x in xs:
        if x == S.zero:
            raise DomainError("B-functions are defined on S - {0} only")


def b3(S: Semigroup, G: GreenData, u: int, v: int, w: int) -> int:
    """B(u, v, w) = u*z where w = v*z; requires u <=_L v >=_R w."""
    _nonzero(S, u, v, w)
    if not G.leqL[u][v]:
        raise DomainError(f"B({S.names[u]}, {S.names[v]}, {S.names[w]}): {S.names[u]} <=_L {S.names[v]} fails")
    if not G.leqR[w][v]:
        raise DomainError(f"B({S.names[u]}, {S.names[v]}, {S.names[w]}): {S.names[v]} >=_R {S.names[w]} fails")
    z = witness_right(S, v, w).value
    return S.unit_product(u, z)


def b_r(S: Semigroup, G: GreenData, rc: RepChoice, u: int, v: int) -> int:
    """B_R(u, v) = x*r_u where v = x*u; requires v <=_L u."""
    _nonzero(S, u, v)
    if not G.leqL[v][u]:
        raise DomainError(f"B_R({S.names[u]}, {S.names[v]}): {S.names[v]} <=_L {S.names[u]} fails")
    x = witness_left(S, u, v).value
    return S.unit_product(x, rc.r(u))


def b_l(S: Semigroup, G: GreenData, rc: RepChoice, v: int, u: int) -> int:
    """B_L(v, u) = l_u*y where v = u*y; requires v <=_R u."""
    _nonzero(S, u, v)
    if not G.leqR[v][u]:
        raise DomainError(f"B_L({S.names[v]}, {S.names[u]}): {S.names[v]} <=_R {S.names[u]} fails")
    y = witness_right(S, u, v).value
    return S.unit_product(rc.l(u), y)


def tables(S: Semigroup, G: GreenData, rc: RepChoice):
    """Flat lookup tables for the kernel: b3 over n^3, br and bl over n^2,
    with -1 where undefined."""
    n = S.order
    nz = S.nonzero
    B = [-1] * (n * n * n)
    BR = [-1] * (n * n)
    BL = [-1] * (n * n)
    for v in nz:
        for w in nz:
            if not G.leqR[w][v]:
                continue
            z = witness_right(S, v, w).value
            for u in nz:
                if G.leqL[u][v]:
                    B[(u * n + v) * n + w] = S.unit_product(u, z)
    for u in nz:
        for v in nz:
            if G.leqL[v][u]:
                BR[u * n + v] = b_r(S, G, rc, u, v)
            if G.leqR[v][u]:
                BL[v * n + u] = b_l(S, G, rc, v, u)
    return B, BR, BL
