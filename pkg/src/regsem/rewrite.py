"""The string-rewrite system for (S)_reg.

Words are tuples of :class:`Sym`.  Internally every word is also available
as a tuple of integer codes (see ``regsem._kernel_py``); the verification
sweeps work on codes directly.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import NamedTuple, Optional

from . import bifun
from .green import GreenData, compute_green, is_unambiguous
from .representatives import RepChoice, choose_representatives, validate_representatives
from .semigroup import Semigroup

if os.environ.get("REGSEM_PURE_PYTHON"):
    from ._kernel_py import Kernel
    KERNEL_BACKEND = "python"
else:
    try:
        from ._kernel import Kernel
        KERNEL_BACKEND = "cython"
    except ImportError:
        from ._kernel_py import Kernel
        KERNEL_BACKEND = "python"

from ._kernel_py import StaleRedex


class Kind(IntEnum):
    ZERO = 0
    PLAIN = 1
    BAR = 2


class Sym(NamedTuple):
    kind: Kind
    elem: Optional[int] = None


ZERO = Sym(Kind.ZERO)


class RuleId(Enum):
    # value is the tie-break priority at equal position
    R12 = 0
    R13 = 1
    R14 = 2
    R11P = 3
    R11B = 4
    R15 = 5
    R16 = 6
    R21 = 7
    R22 = 8
    R23 = 9
    R24 = 10

    @property
    def width(self) -> int:
        return 3 if self in (RuleId.R15, RuleId.R16) else 2

    @property
    def length_preserving(self) -> bool:
        return self.value >= RuleId.R21.value


RULES = tuple(RuleId)
PRESERVING = frozenset(r.value for r in RuleId if r.length_preserving)


@dataclass(frozen=True)
class Redex:
    position: int
    rule: RuleId

    @property
    def width(self) -> int:
        return self.rule.width


class RewriteError(RuntimeError):
    pass


class StepCapExceeded(RewriteError):
    def __init__(self, word, steps, trace=None):
        self.word = word
        self.steps = steps
        self.trace = trace
        super().__init__(f"step cap {steps} exceeded while reducing a word of length {len(word)}")


class AmbiguousSemigroupError(ValueError):
    pass


class InvalidRepresentativesError(ValueError):
    pass


STRATEGIES = ("leftmost", "rightmost", "random")


def default_step_cap(length: int, order: int) -> int:
    env = os.environ.get("REGSEM_CAP_STEPS")
    if env:
        return int(env)
    return 4 * max(length, 1) ** 2 * max(order, 1) ** 2


def involution(word):
    """Reverse and swap plain/bar; the zero symbol is fixed."""
    swap = {Kind.PLAIN: Kind.BAR, Kind.BAR: Kind.PLAIN, Kind.ZERO: Kind.ZERO}
    return tuple(Sym(swap[x.kind], x.elem) for x in reversed(tuple(word)))


class RewriteSystem:
    """S together with its Green data, representatives and compiled tables.

    Refuses ambiguous S unless ``force`` and invalid representatives unless
    ``unsafe_reps``; ``authoritative`` records whether both checks passed.
    """

    def __init__(self, S: Semigroup, G: GreenData = None, rc: RepChoice = None, *,
                 force=False, unsafe_reps=False, step_cap=None):
        self.S = S
        self.G = G if G is not None else compute_green(S)
        self.unambiguity = is_unambiguous(S, self.G)
        if not self.unambiguity and not force:
            s, u, t = self.unambiguity.violation
            raise AmbiguousSemigroupError(
                f"S is not unambiguous: {S.names[s]} > {S.names[u]} < {S.names[t]} on the "
                f"{self.unambiguity.side} side")
        self.rc = rc if rc is not None else choose_representatives(S, self.G)
        self.rep_violations = validate_representatives(S, self.G, self.rc)
        if self.rep_violations and not unsafe_reps:
            raise InvalidRepresentativesError("; ".join(self.rep_violations))
        self.authoritative = bool(self.unambiguity) and not self.rep_violations
        self.step_cap = step_cap
        n = S.order
        self.n = n
        B, BR, BL = bifun.tables(S, self.G, self.rc)
        rrep = [self.rc.r(s) if s != S.zero else -1 for s in range(n)]
        lrep = [self.rc.l(s) if s != S.zero else -1 for s in range(n)]
        self.kernel = Kernel(
            n, S.zero,
            [S.table[i][j] for i in range(n) for j in range(n)],
            [int(self.G.leqL[i][j]) for i in range(n) for j in range(n)],
            [int(self.G.leqR[i][j]) for i in range(n) for j in range(n)],
            rrep, lrep, B, BR, BL,
        )

    # --- symbols and codes ------------------------------------------------

    def plain(self, e: int) -> Sym:
        return ZERO if e == self.S.zero else Sym(Kind.PLAIN, e)

    def bar(self, e: int) -> Sym:
        return ZERO if e == self.S.zero else Sym(Kind.BAR, e)

    def encode(self, word) -> tuple:
        out = []
        for x in word:
            if x.kind == Kind.ZERO:
                out.append(0)
            elif x.kind == Kind.PLAIN:
                out.append(self.kernel.plain(x.elem))
            else:
                out.append(self.kernel.bar(x.elem))
        return tuple(out)

    def decode(self, codes) -> tuple:
        n = self.n
        out = []
        for c in codes:
            if c == 0:
                out.append(ZERO)
            elif c <= n:
                out.append(Sym(Kind.PLAIN, c - 1))
            else:
                out.append(Sym(Kind.BAR, c - 1 - n))
        return tuple(out)

    def alphabet(self) -> tuple:
        """Codes of every generator symbol: 0, plain nonzero, barred nonzero."""
        nz = self.S.nonzero
        return (0,) + tuple(1 + s for s in nz) + tuple(1 + self.n + s for s in nz)

    def parse_word(self, text: str) -> tuple:
        tokens = text.split()
        if not tokens:
            raise ValueError("empty word")
        out = []
        for tok in tokens:
            if tok == "0":
                out.append(ZERO)
            elif tok.endswith("'"):
                out.append(self.bar(self.S.index(tok[:-1])))
            else:
                out.append(self.plain(self.S.index(tok)))
        return tuple(out)

    def format_word(self, word) -> str:
        names = self.S.names
        out = []
        for x in word:
            if x.kind == Kind.ZERO:
                out.append("0")
            elif x.kind == Kind.PLAIN:
                out.append(names[x.elem])
            else:
                out.append(names[x.elem] + "'")
        return " ".join(out)

    def format_codes(self, codes) -> str:
        return self.format_word(self.decode(codes))

    # --- rewriting --------------------------------------------------------

    def find_redexes(self, word) -> list:
        return [Redex(i, RULES[r]) for i, r in self.kernel.redexes(self.encode(word))]

    def apply_redex(self, word, rx: Redex) -> tuple:
        try:
            codes = self.kernel.apply(self.encode(word), rx.position, rx.rule.value)
        except StaleRedex as exc:
            raise RewriteError(f"stale redex {rx}: {exc}") from None
        return self.decode(codes)

    def cap_for(self, length: int) -> int:
        return self.step_cap if self.step_cap is not None else default_step_cap(length, self.n)

    def pick(self, codes, strategy: str, rng: random.Random = None):
        """Choose a (position, rule) redex of ``codes`` under ``strategy``."""
        if strategy == "leftmost":
            return self.kernel.first_redex(codes)
        found = self.kernel.redexes(codes)
        if not found:
            return None
        if strategy == "rightmost":
            last = found[-1][0]
            return next(rx for rx in found if rx[0] == last)
        if strategy == "random":
            return (rng or random).choice(found)
        raise ValueError(f"unknown strategy {strategy!r}")

    def reduce_codes(self, codes, strategy="leftmost", rng=None, cap=None, trace=False):
        """Reduce a coded word.  Returns (normal form, steps, trace) where the
        trace is a list of (position, rule, result) or None."""
        codes = tuple(codes)
        if not codes:
            raise ValueError("the empty word does not represent an element")
        if cap is None:
            cap = self.cap_for(len(codes))
        if strategy == "leftmost" and not trace:
            nf, steps = self.kernel.normal_form(codes, cap)
            if steps < 0:
                raise StepCapExceeded(codes, cap)
            return nf, steps, None
        log = [] if trace else None
        steps = 0
        while True:
            hit = self.pick(codes, strategy, rng)
            if hit is None:
                return codes, steps, log
            if steps >= cap:
                raise StepCapExceeded(codes, cap, log)
            codes = self.kernel.apply(codes, hit[0], hit[1])
            steps += 1
            if log is not None:
                log.append((hit[0], hit[1], codes))

    def reduce(self, word, strategy="leftmost", seed=None, cap=None):
        """Reduce to the normal form, returning (word, trace) with the trace a
        list of (Redex, resulting word)."""
        word = tuple(word)
        if not word:
            raise ValueError("the empty word does not represent an element")
        rng = random.Random(seed) if strategy == "random" else None
        try:
            nf, _, log = self.reduce_codes(self.encode(word), strategy, rng, cap, trace=True)
        except StepCapExceeded as exc:
            exc.trace = [(Redex(i, RULES[r]), self.decode(c)) for i, r, c in exc.trace or ()]
            raise
        return self.decode(nf), [(Redex(i, RULES[r]), self.decode(c)) for i, r, c in log]

    def normal_form(self, word) -> tuple:
        nf, _, _ = self.reduce_codes(self.encode(word))
        return self.decode(nf)

    def is_irreducible(self, word) -> bool:
        return self.kernel.is_irreducible(self.encode(word))

    # --- normal-form shape --------------------------------------------------

    def pair_relation(self, x: int, y: int) -> str:
        """Relation between adjacent coded symbols: L-order for (plain, bar),
        R-order for (bar, plain); '' if the pair is not of mixed type."""
        n = self.n
        if x == 0 or y == 0 or (x <= n) == (y <= n):
            return ""
        if x <= n:
            return self.G.rel_L(x - 1, y - 1 - n)
        return self.G.rel_R(x - 1 - n, y - 1)

    def is_normal_shape_codes(self, codes) -> bool:
        k = len(codes)
        if k == 1:
            return True
        n = self.n
        rels = []
        for i in range(k - 1):
            rel = self.pair_relation(codes[i], codes[i + 1])
            if rel in ("", "|"):
                return False
            rels.append(rel)
        # the centre is the first position not strictly above its right neighbour
        c = next((i for i, rel in enumerate(rels) if rel != ">"), k - 1)
        if any(rel == ">" for rel in rels[c + 1:]):
            return False
        if any(rel == "=" for rel in rels[c + 1:]):
            return False
        rc = self.rc
        for i in range(k):
            if i == c:
                continue
            x = codes[i]
            plain = x <= n
            e = x - 1 if plain else x - 1 - n
            # left flank: plain R-reps, barred L-reps; right flank the reverse
            want_r = plain if i < c else not plain
            if want_r and not rc.is_rrep(e):
                return False
            if not want_r and not rc.is_lrep(e):
                return False
        return True

    def is_normal_shape(self, word) -> bool:
        return self.is_normal_shape_codes(self.encode(word))
