import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import system
from regsem import corpus
from regsem.rewrite import (PRESERVING, RULES, ZERO, AmbiguousSemigroupError, InvalidRepresentativesError,
                            Kind, Redex, RewriteError, RewriteSystem, RuleId, StepCapExceeded, Sym,
                            involution)
from regsem.green import compute_green
from regsem.representatives import make_choice


def W(rs, text):
    return rs.parse_word(text)


def fmt(rs, w):
    return rs.format_word(w)


@pytest.fixture
def lz2():
    return system("lz2")


def test_parse_and_format(lz2):
    w = W(lz2, "a b' 0")
    assert w == (Sym(Kind.PLAIN, 0), Sym(Kind.BAR, 1), ZERO)
    assert fmt(lz2, w) == "a b' 0"
    with pytest.raises(KeyError):
        W(lz2, "q")
    with pytest.raises(ValueError):
        W(lz2, "  ")


def test_zero_element_parses_as_zero_symbol():
    rs = system("chain3")
    assert W(rs, "c0") == (ZERO,)
    assert W(rs, "c0'") == (ZERO,)


def test_redexes_examples(lz2):
    assert lz2.find_redexes(W(lz2, "b' b")) == [Redex(0, RuleId.R23)]
    assert lz2.find_redexes(W(lz2, "a' b")) == [Redex(0, RuleId.R14)]
    for name in ("lz2", "z2", "b2", "n3"):
        rs = system(name)
        for s in rs.S.nonzero:
            w = (rs.plain(s), rs.bar(s), rs.plain(s))
            assert Redex(0, RuleId.R15) in rs.find_redexes(w)


def test_apply_examples(lz2):
    assert fmt(lz2, lz2.apply_redex(W(lz2, "a b"), Redex(0, RuleId.R11P))) == "a"
    assert fmt(lz2, lz2.apply_redex(W(lz2, "b' b"), Redex(0, RuleId.R23))) == "a' a"
    assert fmt(lz2, lz2.apply_redex(W(lz2, "0 a'"), Redex(0, RuleId.R12))) == "0"
    assert fmt(lz2, lz2.apply_redex(W(lz2, "a 0"), Redex(0, RuleId.R12))) == "0"
    with pytest.raises(RewriteError):
        lz2.apply_redex(W(lz2, "a' a"), Redex(0, RuleId.R23))


def test_reduce_examples(lz2):
    nf, trace = lz2.reduce(W(lz2, "a b' b"))
    assert fmt(lz2, nf) == "a"
    assert trace[-1][1] == nf
    c2 = system("z2")
    nf, trace = c2.reduce(W(c2, "e g'"))
    assert fmt(c2, nf) == "g e'"
    assert [rx.rule for rx, _ in trace] == [RuleId.R24]


@pytest.mark.parametrize("name", sorted(corpus.UNAMBIGUOUS))
def test_s_sbar_s(name):
    rs = system(name)
    for s in rs.S.nonzero:
        w = (rs.plain(s), rs.bar(s), rs.plain(s))
        nf, trace = rs.reduce(w)
        assert nf == (rs.plain(s),) and len(trace) == 1
        # other strategies may first normalise an end pair when s is not a representative
        nf, trace = rs.reduce(w, "rightmost")
        assert nf == (rs.plain(s),)
        if rs.rc.is_rrep(s) and rs.rc.is_lrep(s):
            assert len(trace) == 1


def test_empty_word_rejected(lz2):
    with pytest.raises(ValueError):
        lz2.reduce(())


def test_involution():
    a, b = Sym(Kind.PLAIN, 0), Sym(Kind.BAR, 1)
    assert involution((a, b)) == (Sym(Kind.PLAIN, 1), Sym(Kind.BAR, 0))
    assert involution((ZERO,)) == (ZERO,)


@given(st.lists(st.sampled_from([ZERO] + [Sym(k, e) for k in (Kind.PLAIN, Kind.BAR) for e in range(4)]),
                min_size=1, max_size=8))
def test_involution_is_involutive(w):
    assert involution(involution(tuple(w))) == tuple(w)


@pytest.mark.parametrize("name", ["lz2", "z3", "b2", "rb22one", "n3"])
def test_involution_is_well_defined_on_elements(name):
    rs = system(name)
    for w in itertools.product(rs.alphabet(), repeat=3):
        word = rs.decode(w)
        assert rs.normal_form(involution(word)) == rs.normal_form(involution(rs.normal_form(word)))


def test_rule_metadata():
    assert [r.value for r in RULES] == list(range(11))
    assert RuleId.R15.width == 3 and RuleId.R23.width == 2
    assert PRESERVING == {r.value for r in (RuleId.R21, RuleId.R22, RuleId.R23, RuleId.R24)}


@pytest.mark.parametrize("name", ["lz2", "b2", "n3", "rb22one", "chain4", "z3"])
def test_rule_invariants_on_short_words(name):
    """Every single step: length behaviour, position types and adjacent relations
    under the length-preserving rules, and agreement of normal forms."""
    rs = system(name)
    k = rs.kernel
    n = rs.n
    kind = lambda c: 0 if c == 0 else (1 if c <= n else 2)
    for length in range(2, 5):
        for w in itertools.product(rs.alphabet(), repeat=length):
            nf = k.normal_form(w, 10**6)[0]
            for pos, rule, out in k.successors(w):
                if rule in PRESERVING:
                    assert len(out) == len(w)
                    assert [kind(c) for c in out] == [kind(c) for c in w]
                    for i in range(len(w) - 1):
                        assert rs.pair_relation(w[i], w[i + 1]) == rs.pair_relation(out[i], out[i + 1])
                else:
                    assert len(out) < len(w)
                assert k.normal_form(out, 10**6)[0] == nf


def test_step_cap(lz2):
    w = W(lz2, "b' b b' b a b'")
    with pytest.raises(StepCapExceeded) as exc:
        lz2.reduce(w, cap=1)
    assert exc.value.trace and len(exc.value.trace) == 1
    capped = RewriteSystem(corpus.left_zero(2), step_cap=1)
    with pytest.raises(StepCapExceeded):
        capped.normal_form(w)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("REGSEM_CAP_STEPS", "1")
    rs = RewriteSystem(corpus.left_zero(2))
    with pytest.raises(StepCapExceeded):
        rs.normal_form(W(rs, "b' b b' b"))


def test_refuses_ambiguous():
    S = corpus.load("sl3")
    with pytest.raises(AmbiguousSemigroupError, match="a > ab < b"):
        RewriteSystem(S)
    rs = RewriteSystem(S, force=True)
    assert not rs.authoritative


def test_refuses_invalid_reps():
    S = corpus.brandt2()
    G = compute_green(S)
    rc = make_choice(S, G, {S.index("e11"): S.index("e11"), S.index("e22"): S.index("e22")}, {})
    with pytest.raises(InvalidRepresentativesError):
        RewriteSystem(S, G, rc)
    assert not RewriteSystem(S, G, rc, unsafe_reps=True).authoritative


def test_normal_shape_examples(lz2):
    assert lz2.is_normal_shape(W(lz2, "a b'"))
    assert not lz2.is_normal_shape(W(lz2, "b' b"))
    assert not lz2.is_normal_shape(W(lz2, "0 a"))
    assert lz2.is_normal_shape(W(lz2, "0"))


@pytest.mark.parametrize("name", ["lz2", "b2", "n3", "rb22one", "chain3", "lz2one"])
def test_normal_shape_matches_irreducible(name):
    rs = system(name)
    for length in range(1, 6):
        for w in itertools.product(rs.alphabet(), repeat=length):
            assert rs.is_normal_shape_codes(w) == rs.kernel.is_irreducible(w)


# --- the two kernel backends --------------------------------------------------

def _clone(kernel_cls, rs):
    from regsem import bifun
    S, G, rc, n = rs.S, rs.G, rs.rc, rs.n
    B, BR, BL = bifun.tables(S, G, rc)
    return kernel_cls(n, S.zero,
                      [S.table[i][j] for i in range(n) for j in range(n)],
                      [int(G.leqL[i][j]) for i in range(n) for j in range(n)],
                      [int(G.leqR[i][j]) for i in range(n) for j in range(n)],
                      [rc.r(s) if s != S.zero else -1 for s in range(n)],
                      [rc.l(s) if s != S.zero else -1 for s in range(n)],
                      B, BR, BL)


PARITY = ["lz3", "b2", "z4", "n3", "rb22one", "chain5", "rb22c2"]


@pytest.mark.parametrize("name", PARITY)
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_kernel_matches_reference(kernel_cls, name, data):
    from regsem._kernel_py import Kernel as PyKernel
    rs = system(name)
    ref, k = _clone(PyKernel, rs), _clone(kernel_cls, rs)
    w = tuple(data.draw(st.lists(st.sampled_from(rs.alphabet()), min_size=1, max_size=12)))
    assert k.redexes(w) == ref.redexes(w)
    assert k.first_redex(w) == ref.first_redex(w)
    assert k.is_irreducible(w) == ref.is_irreducible(w)
    assert sorted(k.successors(w)) == sorted(ref.successors(w))
    assert k.normal_form(w, 10**6) == ref.normal_form(w, 10**6)
    assert k.normal_form(w, 1)[1] == ref.normal_form(w, 1)[1]
