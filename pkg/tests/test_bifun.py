import pytest

from regsem import corpus
from regsem.bifun import (DomainError, b3, b_l, b_r, left_witnesses, right_witnesses, tables,
                          witness_right)
from regsem.green import compute_green
from regsem.representatives import all_valid_choices, choose_representatives
from regsem.semigroup import ONE


def setup(S):
    G = compute_green(S)
    return S, G, choose_representatives(S, G)


def test_witness_right():
    S = corpus.left_zero(2)
    a, b = S.index("a"), S.index("b")
    assert witness_right(S, a, a).value is ONE
    assert witness_right(S, b, b).value is ONE
    assert right_witnesses(S, b, b) == [ONE, a, b]
    C = corpus.cyclic(2)
    e, g = C.index("e"), C.index("g")
    assert witness_right(C, g, e).value == g
    assert witness_right(S, a, b) is None


@pytest.mark.parametrize("name", ["lz2", "z3", "b2", "n3", "chain3"])
def test_b3_on_diagonal(name):
    S, G, _ = setup(corpus.load(name))
    for s in S.nonzero:
        assert b3(S, G, s, s, s) == s


def test_b3_examples():
    S, G, _ = setup(corpus.left_zero(2))
    a, b = S.index("a"), S.index("b")
    assert b3(S, G, b, a, a) == b
    C, H, _ = setup(corpus.cyclic(2))
    g = C.index("g")
    assert b3(C, H, g, g, g) == g


def test_b3_in_groups_is_u_vinv_w():
    S, G, _ = setup(corpus.cyclic(4))
    n = S.order
    e = S.identity
    inv = {v: next(x for x in range(n) if S.table[v][x] == e) for v in range(n)}
    for u in range(n):
        for v in range(n):
            for w in range(n):
                assert b3(S, G, u, v, w) == S.table[S.table[u][inv[v]]][w]


def test_b_r_examples():
    C, G, rc = setup(corpus.cyclic(2))
    g = C.index("g")
    for s in range(2):
        assert b_r(C, G, rc, g, s) == C.table[s][g]
        assert b_l(C, G, rc, s, g) == C.table[g][s]
    S, G, rc = setup(corpus.left_zero(2))
    a, b = S.index("a"), S.index("b")
    assert b_r(S, G, rc, b, a) == a
    assert b_l(S, G, rc, b, b) == a


@pytest.mark.parametrize("name", sorted(corpus.UNAMBIGUOUS))
def test_representative_identities(name):
    S, G, rc = setup(corpus.load(name))
    for u in S.nonzero:
        for v in S.nonzero:
            if G.leqL[v][rc.r(u)]:
                assert b_r(S, G, rc, rc.r(u), v) == v
            if G.leqR[v][rc.l(u)]:
                assert b_l(S, G, rc, v, rc.l(u)) == v


@pytest.mark.parametrize("name", ["lz2", "b2", "rb22", "n3", "z3", "lz2one"])
def test_values_do_not_depend_on_witness(name):
    S, G, rc = setup(corpus.load(name))
    for u in S.nonzero:
        for v in S.nonzero:
            if G.leqL[v][u]:
                vals = {S.unit_product(x, rc.r(u)) for x in left_witnesses(S, u, v)}
                assert len(vals) == 1
            if G.leqR[v][u]:
                vals = {S.unit_product(rc.l(u), y) for y in right_witnesses(S, u, v)}
                assert len(vals) == 1
            for w in S.nonzero:
                if G.leqL[u][v] and G.leqR[w][v]:
                    vals = {S.unit_product(u, z) for z in right_witnesses(S, v, w)}
                    assert len(vals) == 1


def test_domain_errors():
    S, G, rc = setup(corpus.nilpotent3())
    a, a2, z = S.index("a"), S.index("a2"), S.index("z")
    with pytest.raises(DomainError, match="<=_L"):
        b3(S, G, a, a2, a2)
    with pytest.raises(DomainError):
        b_r(S, G, rc, a2, a)
    with pytest.raises(DomainError):
        b3(S, G, z, a, a)


@pytest.mark.parametrize("name", ["lz2", "b2", "n3"])
def test_tables_agree_with_functions(name):
    S, G, rc = setup(corpus.load(name))
    B, BR, BL = tables(S, G, rc)
    n = S.order
    for u in S.nonzero:
        for v in S.nonzero:
            want = b_r(S, G, rc, u, v) if G.leqL[v][u] else -1
            assert BR[u * n + v] == want
            want = b_l(S, G, rc, v, u) if G.leqR[v][u] else -1
            assert BL[v * n + u] == want


def test_every_valid_choice_gives_representative_identity():
    S = corpus.load("b2")
    G = compute_green(S)
    for rc in all_valid_choices(S, G):
        for u in S.nonzero:
            if G.leqL[u][rc.r(u)]:
                assert b_r(S, G, rc, rc.r(u), u) == u
