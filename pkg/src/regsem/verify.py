"""Desk-scale certification of the rewrite system.

Exhaustive rewrite-graph search (unique normal forms and acyclicity),
critical-pair joinability, the B-function lemma suite, and the position
diagnostics for the length-preserving rules.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .lemmas import LEMMAS, LemmaReport, lemma_suite, parse_lemmas  # noqa: F401
from .rewrite import PRESERVING, RULES, Redex, RewriteSystem, StepCapExceeded

MAX_GRAPH_NODES = 100_000
MAX_SWEEP_NODES = 1_000_000


class SweepCapExceeded(RuntimeError):
    pass


# --- rewrite graphs -------------------------------------------------------

@dataclass
class RewriteGraph:
    nodes: set
    edges: list          # (word, Redex, word), coded
    sinks: set
    cyclic: bool = False
    complete: bool = True


def rewrite_graph(sys: RewriteSystem, codes, max_nodes=MAX_GRAPH_NODES) -> RewriteGraph:
    """Every word reachable from ``codes`` with every rewrite between them."""
    start = tuple(codes)
    seen = {start}
    edges = []
    out = {}
    queue = deque([start])
    complete = True
    while queue:
        w = queue.popleft()
        succ = sys.kernel.successors(w)
        out[w] = [x[2] for x in succ]
        for pos, rule, nxt in succ:
            edges.append((w, Redex(pos, RULES[rule]), nxt))
            if nxt not in seen:
                if len(seen) >= max_nodes:
                    complete = False
                    continue
                seen.add(nxt)
                queue.append(nxt)
    sinks = {w for w, s in out.items() if not s}
    # Kahn's algorithm: nodes left over lie on or lead into a cycle
    indeg = dict.fromkeys(out, 0)
    for w, succ in out.items():
        for x in succ:
            if x in indeg:
                indeg[x] += 1
    ready = [w for w, d in indeg.items() if d == 0]
    done = 0
    while ready:
        w = ready.pop()
        done += 1
        for x in out[w]:
            if x in indeg:
                indeg[x] -= 1
                if indeg[x] == 0:
                    ready.append(x)
    return RewriteGraph(seen, edges, sinks, done < len(out), complete)


@dataclass
class BFSResult:
    sinks: frozenset
    nodes: int
    cyclic: bool
    unresolved: bool

    @property
    def unique(self) -> bool:
        return len(self.sinks) == 1 and not self.cyclic and not self.unresolved


def confluence_bfs(sys: RewriteSystem, word, max_nodes=MAX_GRAPH_NODES) -> BFSResult:
    """Sinks reachable from ``word`` (a Sym word or a coded tuple)."""
    codes = _as_codes(sys, word)
    g = rewrite_graph(sys, codes, max_nodes)
    return BFSResult(frozenset(g.sinks), len(g.nodes), g.cyclic, not g.complete)


def _as_codes(sys, word):
    word = tuple(word)
    if word and isinstance(word[0], int):
        return word
    return sys.encode(word)


class SinkOracle:
    """Memoized all-sinks search shared across many start words.

    ``sinks(w)`` is the set of irreducible words reachable from w.  A word
    reached again while still on the search stack marks a cycle.
    """

    def __init__(self, sys: RewriteSystem, max_nodes=MAX_SWEEP_NODES):
        self.sys = sys
        self.succ = sys.kernel.successors
        self.memo = {}
        self.cycles = []
        self.max_nodes = max_nodes

    def successors(self, w):
        return {x[2] for x in self.succ(w)}

    def sinks(self, w) -> frozenset:
        memo = self.memo
        if w in memo:
            return memo[w]
        acc = {w: set()}
        stack = [(w, iter(self.successors(w)))]
        onstack = {w}
        leaf = {w: True}
        while stack:
            node, it = stack[-1]
            for nxt in it:
                leaf[node] = False
                if nxt in memo:
                    acc[node] |= memo[nxt]
                elif nxt in onstack:
                    self.cycles.append((node, nxt))
                else:
                    if len(memo) + len(onstack) >= self.max_nodes:
                        raise SweepCapExceeded(f"more than {self.max_nodes} words explored")
                    onstack.add(nxt)
                    acc[nxt] = set()
                    leaf[nxt] = True
                    stack.append((nxt, iter(self.successors(nxt))))
                    break
            else:
                stack.pop()
                onstack.discard(node)
                got = acc.pop(node)
                if leaf.pop(node):
                    got = {node}
                res = memo[node] = frozenset(got)
                if stack:
                    acc[stack[-1][0]] |= res
        return memo[w]


def all_words(sys: RewriteSystem, maxlen: int, minlen: int = 1):
    alpha = sys.alphabet()
    for k in range(minlen, maxlen + 1):
        yield from product(alpha, repeat=k)


@dataclass
class SweepReport:
    words: int = 0
    nodes: int = 0
    multi: list = field(default_factory=list)     # (word, sinks) with more than one sink
    cycles: list = field(default_factory=list)
    unresolved: bool = False

    @property
    def ok(self) -> bool:
        return not self.multi and not self.cycles and not self.unresolved


def unique_normal_forms(sys: RewriteSystem, maxlen=5, oracle: SinkOracle = None) -> SweepReport:
    """Every word up to ``maxlen`` has exactly one reachable sink and no
    rewrite graph contains a cycle."""
    oracle = oracle or SinkOracle(sys)
    rep = SweepReport()
    try:
        for w in all_words(sys, maxlen):
            rep.words += 1
            s = oracle.sinks(w)
            if len(s) != 1:
                rep.multi.append((w, s))
    except SweepCapExceeded:
        rep.unresolved = True
    rep.nodes = len(oracle.memo)
    rep.cycles = list(oracle.cycles)
    return rep


# --- critical pairs -------------------------------------------------------

@dataclass(frozen=True)
class CriticalPair:
    peak: tuple
    left_redex: Redex
    right_redex: Redex
    left: tuple
    right: tuple
    verdict: str          # joinable | divergent | unresolved
    common: tuple = ()    # shared normal forms when joinable


def _overlap(a, wa, b, wb):
    return a < b + wb and b < a + wa


def iter_critical_pairs(sys: RewriteSystem, maxlen=5, oracle: SinkOracle = None):
    if maxlen < 3:
        raise ValueError("maxlen must be at least 3")
    oracle = oracle or SinkOracle(sys)
    for w in all_words(sys, maxlen, minlen=2):
        succ = sys.kernel.successors(w)
        for i in range(len(succ)):
            pa, ra, wa = succ[i]
            for j in range(i + 1, len(succ)):
                pb, rb, wb = succ[j]
                if not _overlap(pa, RULES[ra].width, pb, RULES[rb].width):
                    continue
                try:
                    sa, sb = oracle.sinks(wa), oracle.sinks(wb)
                except SweepCapExceeded:
                    yield CriticalPair(w, Redex(pa, RULES[ra]), Redex(pb, RULES[rb]), wa, wb, "unresolved")
                    continue
                both = sa & sb
                verdict = "joinable" if both else "divergent"
                yield CriticalPair(w, Redex(pa, RULES[ra]), Redex(pb, RULES[rb]), wa, wb, verdict,
                                   tuple(sorted(both)))


def critical_pairs(sys: RewriteSystem, maxlen=5, oracle: SinkOracle = None) -> list:
    return list(iter_critical_pairs(sys, maxlen, oracle))


@dataclass
class PairSummary:
    total: int = 0
    joinable: int = 0
    divergent: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)
    by_rules: dict = field(default_factory=dict)   # (rule, rule) -> count

    @property
    def ok(self) -> bool:
        return self.total == self.joinable


def summarize_pairs(pairs) -> PairSummary:
    out = PairSummary()
    for cp in pairs:
        out.total += 1
        key = tuple(sorted((cp.left_redex.rule.name, cp.right_redex.rule.name)))
        out.by_rules[key] = out.by_rules.get(key, 0) + 1
        if cp.verdict == "joinable":
            out.joinable += 1
        elif cp.verdict == "divergent":
            out.divergent.append(cp)
        else:
            out.unresolved.append(cp)
    return out


# --- positions and continuity --------------------------------------------

def segments(sys: RewriteSystem, codes) -> list:
    """Maximal continuous subsegments as (start, end) half-open ranges."""
    k = len(codes)
    if k == 0:
        return []
    out = []
    start = 0
    for i in range(k - 1):
        rel = sys.pair_relation(codes[i], codes[i + 1])
        if rel in ("", "|"):
            out.append((start, i + 1))
            start = i + 1
    out.append((start, k))
    return out


def position_classes(sys: RewriteSystem, codes) -> list:
    """Per position: maximal, minimal, interior-ascending, interior-descending,
    or isolated for a segment of length one."""
    out = [None] * len(codes)
    for a, b in segments(sys, codes):
        if b - a == 1:
            out[a] = "isolated"
            continue
        gt = [sys.pair_relation(codes[i], codes[i + 1]) == ">" for i in range(a, b - 1)]
        for i in range(a, b):
            left = gt[i - a - 1] if i > a else None      # x_{i-1} > x_i
            right = gt[i - a] if i < b - 1 else None     # x_i > x_{i+1}
            if left is None:
                out[i] = "maximal" if right else "minimal"
            elif right is None:
                out[i] = "minimal" if left else "maximal"
            elif not left and right:
                out[i] = "maximal"
            elif left and not right:
                out[i] = "minimal"
            else:
                out[i] = "interior-descending" if left else "interior-ascending"
    return out


def _kinds(codes, n):
    return tuple(0 if c == 0 else (1 if c <= n else 2) for c in codes)


@dataclass
class ContinuityReport:
    runs: int = 0
    steps: int = 0
    max_changes_at_maximal: int = 0
    violations: list = field(default_factory=list)
    unstable_minimal: int = 0     # minimal positions still changing at the end of a run cut short

    @property
    def ok(self) -> bool:
        return not self.violations


def continuity_diagnostics(sys: RewriteSystem, word, trace) -> ContinuityReport:
    """Check the position invariants along every maximal run of
    length-preserving steps in ``trace``.

    ``trace`` holds (position, rule code, result) triples as produced by
    ``reduce_codes(..., trace=True)``.
    """
    rep = ContinuityReport()
    n = sys.n
    cur = _as_codes(sys, word)
    run = []

    def close(start, steps, cut_short):
        if not steps:
            return
        rep.runs += 1
        rep.steps += len(steps)
        seg0 = segments(sys, start)
        kinds0 = _kinds(start, n)
        rels0 = [sys.pair_relation(start[i], start[i + 1]) for i in range(len(start) - 1)]
        cls = position_classes(sys, start)
        changes = [0] * len(start)
        last_change = [-1] * len(start)
        prev = start
        for t, (pos, rule, nxt) in enumerate(steps):
            if _kinds(nxt, n) != kinds0:
                rep.violations.append(f"position types changed at step {t}: {sys.format_codes(nxt)}")
            rels = [sys.pair_relation(nxt[i], nxt[i + 1]) for i in range(len(nxt) - 1)]
            if rels != rels0:
                rep.violations.append(f"adjacent relations changed at step {t}: {sys.format_codes(nxt)}")
            if segments(sys, nxt) != seg0:
                rep.violations.append(f"factorization changed at step {t}: {sys.format_codes(nxt)}")
            if any(a <= pos < b and pos + 1 >= b for a, b in seg0):
                rep.violations.append(f"step {t} rewrites across a segment break at {pos}")
            for i in range(len(nxt)):
                if nxt[i] != prev[i]:
                    changes[i] += 1
                    last_change[i] = t
            prev = nxt
        for i, c in enumerate(cls):
            if c == "maximal":
                rep.max_changes_at_maximal = max(rep.max_changes_at_maximal, changes[i])
                if changes[i] > 2:
                    rep.violations.append(f"maximal position {i} of {sys.format_codes(start)} changed {changes[i]} times")
            if cut_short and c == "minimal" and last_change[i] == len(steps) - 1:
                rep.unstable_minimal += 1

    start = cur
    for pos, rule, nxt in trace:
        if rule in PRESERVING:
            if not run:
                start = cur
            run.append((pos, rule, nxt))
        else:
            close(start, run, True)
            run = []
        cur = nxt
    close(start, run, False)
    return rep


# --- strategies and termination ------------------------------------------

def parse_strategy(name: str):
    """'leftmost', 'rightmost' or 'random:<seed>' -> (strategy, rng)."""
    if name.startswith("random"):
        _, _, seed = name.partition(":")
        return "random", random.Random(int(seed) if seed else 0)
    if name not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {name!r}")
    return name, None


def default_strategies(seeds=5) -> tuple:
    return ("leftmost", "rightmost") + tuple(f"random:{k}" for k in range(seeds))


@dataclass
class ProbeReport:
    words: int = 0
    runs: int = 0
    max_steps: int = 0
    disagreements: list = field(default_factory=list)   # (word, {strategy: nf})
    cap_exceeded: list = field(default_factory=list)    # (word, strategy)
    continuity: ContinuityReport = field(default_factory=ContinuityReport)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.cap_exceeded and self.continuity.ok


def termination_probe(sys: RewriteSystem, words, strategies=None, cap=None, diagnostics=True) -> ProbeReport:
    strategies = strategies or default_strategies()
    rep = ProbeReport()
    for w in words:
        codes = _as_codes(sys, w)
        rep.words += 1
        seen = {}
        for name in strategies:
            strat, rng = parse_strategy(name)
            rep.runs += 1
            try:
                nf, steps, log = sys.reduce_codes(codes, strat, rng, cap, trace=diagnostics)
            except StepCapExceeded as exc:
                rep.cap_exceeded.append((codes, name))
                if diagnostics and exc.trace:
                    _merge(rep.continuity, continuity_diagnostics(sys, codes, exc.trace))
                continue
            rep.max_steps = max(rep.max_steps, steps)
            seen[name] = nf
            if diagnostics:
                _merge(rep.continuity, continuity_diagnostics(sys, codes, log))
        if len(set(seen.values())) > 1:
            rep.disagreements.append((codes, seen))
    return rep


def _merge(into: ContinuityReport, other: ContinuityReport):
    into.runs += other.runs
    into.steps += other.steps
    into.max_changes_at_maximal = max(into.max_changes_at_maximal, other.max_changes_at_maximal)
    into.violations.extend(other.violations)
    into.unstable_minimal += other.unstable_minimal


def random_words(sys: RewriteSystem, count: int, maxlen: int, seed=0) -> list:
    rng = random.Random(seed)
    alpha = sys.alphabet()
    return [tuple(rng.choice(alpha) for _ in range(rng.randint(1, maxlen))) for _ in range(count)]


@dataclass
class InvalidRepsReport:
    """Observations under a representative choice that breaks the H-class rule."""
    violations: list                # validation messages for the choice
    words: int = 0
    cap_blowouts: int = 0
    cycles: int = 0
    multi_sink_words: int = 0
    maximal_rewritten_3plus: int = 0
    max_changes_at_maximal: int = 0
    examples: list = field(default_factory=list)


def invalid_reps_probe(sys_factory, rc, maxlen=5, cap=200, max_examples=5) -> InvalidRepsReport:
    """Run the rewrite system built by ``sys_factory(rc)`` (with unsafe reps
    allowed) over every short word and record what goes wrong."""
    sys = sys_factory(rc)
    rep = InvalidRepsReport(list(sys.rep_violations))
    oracle = SinkOracle(sys)
    for w in all_words(sys, maxlen):
        rep.words += 1
        for strat in ("leftmost", "rightmost"):
            try:
                _, _, log = sys.reduce_codes(w, strat, cap=cap, trace=True)
            except StepCapExceeded as exc:
                rep.cap_blowouts += 1
                log = exc.trace or []
                if len(rep.examples) < max_examples:
                    rep.examples.append((f"cap ({strat})", sys.format_codes(w)))
            d = continuity_diagnostics(sys, w, log)
            rep.max_changes_at_maximal = max(rep.max_changes_at_maximal, d.max_changes_at_maximal)
            if d.max_changes_at_maximal >= 3:
                rep.maximal_rewritten_3plus += 1
        ncyc = len(oracle.cycles)
        try:
            if len(oracle.sinks(w)) > 1:
                rep.multi_sink_words += 1
                if len(rep.examples) < max_examples:
                    rep.examples.append(("sinks", sys.format_codes(w)))
        except SweepCapExceeded:
            break
        if len(oracle.cycles) > ncyc and len(rep.examples) < max_examples:
            a, b = oracle.cycles[ncyc]
            rep.examples.append(("cycle", f"{sys.format_codes(a)} -> {sys.format_codes(b)}"))
    rep.cycles = len(oracle.cycles)
    return rep


# --- full report ------------------------------------------------------------

@dataclass
class VerificationReport:
    member: str
    sweep: SweepReport
    pairs: PairSummary
    lemmas: LemmaReport
    probe: ProbeReport

    @property
    def ok(self) -> bool:
        return self.sweep.ok and self.pairs.ok and self.lemmas.ok and self.probe.ok


def verify_all(sys: RewriteSystem, maxlen=5, lemmas="all", seeds=5, random_count=1000,
               random_maxlen=10, member="") -> VerificationReport:
    oracle = SinkOracle(sys)
    sweep = unique_normal_forms(sys, maxlen, oracle)
    pairs = summarize_pairs(iter_critical_pairs(sys, maxlen, oracle))
    lem = lemma_suite(sys.S, sys.G, sys.rc, lemmas)
    words = random_words(sys, random_count, random_maxlen, seed=0)
    probe = termination_probe(sys, words, default_strategies(seeds))
    return VerificationReport(member, sweep, pairs, lem, probe)
