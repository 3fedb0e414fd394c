"""(S)_reg as a finite table of normal-form words."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .green import GreenData
from .rewrite import RewriteSystem, StepCapExceeded
from .semigroup import Semigroup

MAX_ELEMENTS = 100_000
MAX_STEPS = 10_000_000


class SRegCapExceeded(RuntimeError):
    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class ClosureError(RuntimeError):
    """A product of enumerated elements fell outside the enumerated set."""


@dataclass
class SRegTable:
    elements: list          # coded normal-form words
    index: dict             # word -> element index
    mul: np.ndarray         # (i, j) -> index; -1 where not filled
    inv: np.ndarray
    embed: dict             # nonzero s -> index of (s)
    zero: int
    steps: int = 0
    authoritative: bool = True

    def __len__(self):
        return len(self.elements)

    def words(self, sys: RewriteSystem) -> list:
        return [sys.decode(w) for w in self.elements]


def embed(sys: RewriteSystem, s: int) -> tuple:
    return (sys.plain(s),)


def multiply(sys: RewriteSystem, w1, w2) -> tuple:
    return sys.normal_form(tuple(w1) + tuple(w2))


def _involution_codes(codes, n):
    return tuple(0 if c == 0 else (c + n if c <= n else c - n) for c in reversed(codes))


def enumerate_elements(sys: RewriteSystem, max_elements=MAX_ELEMENTS, max_steps=MAX_STEPS) -> SRegTable:
    """Breadth-first closure of the generators under right multiplication,
    then the full multiplication table."""
    gens = sys.alphabet()
    elements = []
    index = {}
    steps = 0

    def add(w):
        if w not in index:
            index[w] = len(elements)
            elements.append(w)
            queue.append(w)

    def nf(w):
        nonlocal steps
        out, k, _ = sys.reduce_codes(w)
        steps += k
        return out

    def partial(msg):
        m = len(elements)
        table = SRegTable(elements, index, np.full((m, m), -1, dtype=np.int64),
                          np.full(m, -1, dtype=np.int64), {}, index.get((0,), -1), steps, False)
        return SRegCapExceeded(msg, table)

    queue = deque()
    for g in gens:
        add((g,))
    try:
        while queue:
            x = queue.popleft()
            for g in gens:
                add(nf(x + (g,)))
                if len(elements) > max_elements:
                    raise partial(f"more than {max_elements} elements")
                if steps > max_steps:
                    raise partial(f"more than {max_steps} reduction steps")
    except StepCapExceeded as exc:
        raise partial(str(exc)) from None

    m = len(elements)
    mul = np.empty((m, m), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            p = nf(x + y)
            k = index.get(p)
            if k is None:
                raise ClosureError(f"{sys.format_codes(x)} * {sys.format_codes(y)} = "
                                   f"{sys.format_codes(p)} is not among the enumerated elements")
            mul[i, j] = k
        if steps > max_steps:
            raise partial(f"more than {max_steps} reduction steps")
    inv = np.empty(m, dtype=np.int64)
    for i, x in enumerate(elements):
        y = _involution_codes(x, sys.n)
        k = index.get(y)
        if k is None:
            k = index.get(nf(y))
        if k is None:
            raise ClosureError(f"involution of {sys.format_codes(x)} left the element set")
        inv[i] = k
    emb = {s: index[(sys.kernel.plain(s),)] for s in sys.S.nonzero}
    return SRegTable(elements, index, mul, inv, emb, index[(0,)], steps, sys.authoritative)


def check_axioms(table: SRegTable) -> list:
    """Involution, anti-automorphism, regularity, associativity, absorbing zero."""
    mul, inv = table.mul, table.inv
    m = len(inv)
    out = []
    idx = np.arange(m)
    for x in np.nonzero(inv[inv] != idx)[0]:
        out.append(f"inv(inv({x})) != {x}")
    # inv(xy) against inv(y) inv(x)
    anti = mul[inv][:, inv].T
    bad = np.argwhere(inv[mul] != anti)
    for x, y in bad[:20]:
        out.append(f"inv({x}*{y}) != inv({y})*inv({x})")
    xix = mul[mul[idx, inv], idx]
    for x in np.nonzero(xix != idx)[0]:
        out.append(f"{x}*inv({x})*{x} != {x}")
    for x in range(m):
        # (xy)z against x(yz), one x at a time to keep memory at m^2
        for y, z in np.argwhere(mul[mul[x]] != mul[x][mul])[:20]:
            out.append(f"({x}*{y})*{z} != {x}*({y}*{z})")
        if len(out) > 100:
            break
    z0 = table.zero
    if (mul[z0, :] != z0).any() or (mul[:, z0] != z0).any():
        out.append(f"element {z0} is not an absorbing zero")
    return out


def embedding_check(sys: RewriteSystem, table: SRegTable) -> list:
    """Injectivity and multiplicativity of s -> (s) on S - {0}."""
    S = sys.S
    out = []
    img = {}
    for s, k in table.embed.items():
        if k in img:
            out.append(f"embedding not injective: {S.names[img[k]]}, {S.names[s]} -> {k}")
        img[k] = s
    for s in S.nonzero:
        for t in S.nonzero:
            st = S.table[s][t]
            want = table.zero if st == S.zero else table.embed[st]
            if table.mul[table.embed[s], table.embed[t]] != want:
                out.append(f"(s)(t) != (st) for s={S.names[s]}, t={S.names[t]}")
    return out


def class_idempotent_check(sys: RewriteSystem) -> list:
    """R-related s, r give equal (s, s') and (r, r'); dually for L."""
    S, G, k = sys.S, sys.G, sys.kernel
    out = []
    nz = S.nonzero
    for s in nz:
        for r in nz:
            if s >= r:
                continue
            if G.eq_R(s, r):
                a = sys.reduce_codes((k.plain(s), k.bar(s)))[0]
                b = sys.reduce_codes((k.plain(r), k.bar(r)))[0]
                if a != b:
                    out.append(f"R: ({S.names[s]}, {S.names[s]}') -> {sys.format_codes(a)} but "
                               f"({S.names[r]}, {S.names[r]}') -> {sys.format_codes(b)}")
            if G.eq_L(s, r):
                a = sys.reduce_codes((k.bar(s), k.plain(s)))[0]
                b = sys.reduce_codes((k.bar(r), k.plain(r)))[0]
                if a != b:
                    out.append(f"L: ({S.names[s]}', {S.names[s]}) -> {sys.format_codes(a)} but "
                               f"({S.names[r]}', {S.names[r]}) -> {sys.format_codes(b)}")
    return out


def _j_order(mul: np.ndarray) -> np.ndarray:
    """leq[x, y] iff x lies in the principal two-sided ideal of y."""
    m = mul.shape[0]
    leq = np.zeros((m, m), dtype=bool)
    for y in range(m):
        left = np.unique(np.append(mul[:, y], y))
        ideal = np.unique(np.concatenate([left, mul[left, :].ravel()]))
        leq[ideal, y] = True
    return leq


def _classes(leq):
    m = leq.shape[0]
    eq = leq & leq.T
    ids = [-1] * m
    nxt = 0
    for x in range(m):
        if ids[x] < 0:
            for y in np.nonzero(eq[x])[0]:
                ids[y] = nxt
            nxt += 1
    return ids


@dataclass
class JReport:
    s_classes: list                 # nonzero J-classes of S, as element lists
    t_classes: list                 # J-classes of the table, as index lists
    image: dict                     # S class id -> table class id
    injective: bool
    order_preserving: bool
    order_reflecting: bool
    unmet: list = field(default_factory=list)   # nonzero table classes missing the image
    regular_census: dict = field(default_factory=dict)  # table class id -> (regular, size)

    @property
    def ok(self) -> bool:
        return self.injective and self.order_preserving and self.order_reflecting


def compare_j_structure(S: Semigroup, G: GreenData, table: SRegTable) -> JReport:
    mul = table.mul
    leq = _j_order(mul)
    tid = _classes(leq)
    t_classes = {}
    for x, c in enumerate(tid):
        t_classes.setdefault(c, []).append(x)
    s_ids = {}
    for s in S.nonzero:
        s_ids.setdefault(G.J[s], []).append(s)
    image = {c: tid[table.embed[mem[0]]] for c, mem in s_ids.items()}
    injective = len(set(image.values())) == len(image)
    preserving = reflecting = True
    for c, a in s_ids.items():
        for d, b in s_ids.items():
            s_le = bool(G.leqJ[a[0]][b[0]])
            t_le = bool(leq[table.embed[a[0]], table.embed[b[0]]])
            if s_le and not t_le:
                preserving = False
            if t_le and not s_le:
                reflecting = False
    hit = set(image.values())
    zc = tid[table.zero]
    unmet = sorted(c for c in t_classes if c != zc and c not in hit)
    census = {}
    for c, members in t_classes.items():
        reg = 0
        for x in members:
            if (mul[mul[x, :], x] == x).any():
                reg += 1
        census[c] = (reg, len(members))
    return JReport(list(s_ids.values()), [t_classes[c] for c in sorted(t_classes)], image,
                   injective, preserving, reflecting, unmet, census)


def export_table(sys: RewriteSystem, table: SRegTable) -> str:
    """Cayley-table text with the element words and involution in ``#:`` comment
    lines, so the result loads back as an ordinary semigroup."""
    m = len(table)
    names = [f"x{i}" for i in range(m)]
    lines = []
    for i, w in enumerate(table.elements):
        lines.append(f"#: word {names[i]} {sys.format_codes(w)}")
    lines.append(f"#: zero {names[table.zero]}")
    lines.append("#: inv " + " ".join(names[int(k)] for k in table.inv))
    if not table.authoritative:
        lines.append("#: authoritative false")
    lines.append("elements: " + " ".join(names))
    for i in range(m):
        lines.append(" ".join(names[int(k)] for k in table.mul[i]))
    return "\n".join(lines) + "\n"


def read_export_metadata(text: str) -> dict:
    """Recover {'words': {name: word text}, 'zero': name, 'inv': [names]} from an export."""
    meta = {"words": {}, "zero": None, "inv": [], "authoritative": True}
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("#:"):
            continue
        key, _, rest = line[2:].strip().partition(" ")
        if key == "word":
            name, _, word = rest.partition(" ")
            meta["words"][name] = word
        elif key == "zero":
            meta["zero"] = rest.strip()
        elif key == "inv":
            meta["inv"] = rest.split()
        elif key == "authoritative":
            meta["authoritative"] = rest.strip() != "false"
    return meta
