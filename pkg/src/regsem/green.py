"""Green's relations, the L/R preorders and the unambiguity test."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .semigroup import Semigroup


def _class_ids(n, equiv):
    ids = [-1] * n
    k = 0
    for s in range(n):
        if ids[s] < 0:
            for t in range(s, n):
                if ids[t] < 0 and equiv(s, t):
                    ids[t] = k
            k += 1
    return ids


def _members(ids):
    out = [[] for _ in range(max(ids) + 1)]
    for s, c in enumerate(ids):
        out[c].append(s)
    return out


@dataclass(frozen=True)
class GreenData:
    """Green's classes of a finite semigroup.

    ``leqL[s][t]`` is s <=_L t (s in S^1 t), ``leqR[s][t]`` is s <=_R t and
    ``leqJ[s][t]`` is s <=_J t.  Class ids are assigned in order of first
    occurrence, so the class containing element 0 always has id 0.
    """

    n: int
    zero: Optional[int]
    leqL: tuple
    leqR: tuple
    leqJ: tuple
    L: tuple
    R: tuple
    H: tuple
    D: tuple
    J: tuple

    # element-level predicates

    def leq_L(self, s, t):
        return self.leqL[s][t]

    def leq_R(self, s, t):
        return self.leqR[s][t]

    def lt_L(self, s, t):
        return self.leqL[s][t] and not self.leqL[t][s]

    def lt_R(self, s, t):
        return self.leqR[s][t] and not self.leqR[t][s]

    def eq_L(self, s, t):
        return self.L[s] == self.L[t]

    def eq_R(self, s, t):
        return self.R[s] == self.R[t]

    def eq_H(self, s, t):
        return self.H[s] == self.H[t]

    def eq_D(self, s, t):
        return self.D[s] == self.D[t]

    def incomp_L(self, s, t):
        return not self.leqL[s][t] and not self.leqL[t][s]

    def incomp_R(self, s, t):
        return not self.leqR[s][t] and not self.leqR[t][s]

    def rel_L(self, s, t) -> str:
        """One of '<', '=', '>', '|' comparing s with t in the L-order."""
        return _rel(self.leqL[s][t], self.leqL[t][s])

    def rel_R(self, s, t) -> str:
        return _rel(self.leqR[s][t], self.leqR[t][s])

    # class-level views

    def classes(self, kind: str) -> list:
        return _members(getattr(self, kind))

    def class_leq(self, kind: str) -> list:
        """Partial order on the classes of ``kind`` ('L' or 'R')."""
        ids = getattr(self, kind)
        leq = self.leqL if kind == "L" else self.leqR
        reps = [m[0] for m in _members(ids)]
        return [[leq[a][b] for b in reps] for a in reps]


def _rel(le, ge):
    if le and ge:
        return "="
    if le:
        return "<"
    if ge:
        return ">"
    return "|"


def compute_green(S: Semigroup) -> GreenData:
    n = S.order
    T = S.table
    left_ideal = [{t} | {T[x][t] for x in range(n)} for t in range(n)]
    right_ideal = [{t} | {T[t][x] for x in range(n)} for t in range(n)]
    two_sided = []
    for t in range(n):
        ideal = set(left_ideal[t])
        for a in left_ideal[t]:
            ideal.update(right_ideal[a])
        two_sided.append(ideal)
    leqL = tuple(tuple(s in left_ideal[t] for t in range(n)) for s in range(n))
    leqR = tuple(tuple(s in right_ideal[t] for t in range(n)) for s in range(n))
    leqJ = tuple(tuple(s in two_sided[t] for t in range(n)) for s in range(n))

    L = _class_ids(n, lambda s, t: leqL[s][t] and leqL[t][s])
    R = _class_ids(n, lambda s, t: leqR[s][t] and leqR[t][s])
    H = _class_ids(n, lambda s, t: L[s] == L[t] and R[s] == R[t])
    D = _class_ids(n, lambda s, t: any(L[s] == L[u] and R[u] == R[t] for u in range(n)))
    J = _class_ids(n, lambda s, t: leqJ[s][t] and leqJ[t][s])
    return GreenData(n, S.zero, leqL, leqR, leqJ, tuple(L), tuple(R), tuple(H), tuple(D), tuple(J))


@dataclass(frozen=True)
class UnambiguityWitness:
    verdict: bool
    violation: Optional[tuple] = None  # (s, u, t)
    side: Optional[str] = None  # 'L' or 'R'

    def __bool__(self):
        return self.verdict


def is_unambiguous(S: Semigroup, G: GreenData) -> UnambiguityWitness:
    """Decide whether the strict L- and R-upper sets of each nonzero element
    are chains.  On failure return a triple (s, u, t) with s > u < t and s, t
    incomparable; the L side is scanned first."""
    nz = S.nonzero
    for side, lt, incomp in (("L", G.lt_L, G.incomp_L), ("R", G.lt_R, G.incomp_R)):
        for u in nz:
            above = [s for s in nz if lt(u, s)]
            for s, t in combinations(above, 2):
                if incomp(s, t):
                    return UnambiguityWitness(False, (s, u, t), side)
    return UnambiguityWitness(True)


def is_regular_element(S: Semigroup, s: int) -> bool:
    T = S.table
    return any(T[T[s][x]][s] == s for x in range(S.order))
