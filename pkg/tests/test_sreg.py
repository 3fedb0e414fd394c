import numpy as np
import pytest

from conftest import system
from regsem import corpus, sreg
from regsem.green import compute_green
from regsem.semigroup import load_semigroup

LZ2_ELEMENTS = {"0", "a", "b", "a'", "b'", "a a'", "a b'", "a' a", "b a'", "b b'"}
Z2_ELEMENTS = {"0", "e", "g", "e'", "g'", "e e'", "g e'", "e' e", "g' e"}


def element_words(rs, table):
    return {rs.format_codes(w) for w in table.elements}


def test_left_zero_elements():
    rs = system("lz2")
    t = sreg.enumerate_elements(rs)
    assert len(t) == 10
    assert element_words(rs, t) == LZ2_ELEMENTS


def test_cyclic_elements():
    rs = system("z2")
    t = sreg.enumerate_elements(rs)
    assert len(t) == 9
    assert element_words(rs, t) == Z2_ELEMENTS


def test_embed():
    rs = system("lz2")
    assert rs.format_word(sreg.embed(rs, 0)) == "a"
    c = system("chain3")
    assert c.format_word(sreg.embed(c, c.S.zero)) == "0"


def test_multiply_examples():
    rs = system("lz2")
    P = lambda t: rs.parse_word(t)
    x = sreg.multiply(rs, sreg.multiply(rs, P("a b'"), P("b a'")), P("a b'"))
    assert rs.format_word(x) == "a b'"
    for w in ("a", "b'", "a b'", "b' a'"):
        assert rs.format_word(sreg.multiply(rs, P(w), P("0"))) == "0"
    c2 = system("z2")
    assert c2.format_word(sreg.multiply(c2, c2.parse_word("e e'"), c2.parse_word("e e'"))) == "e e'"


@pytest.mark.parametrize("name", sorted(corpus.UNAMBIGUOUS))
def test_axioms_and_embedding(name):
    rs = system(name)
    t = sreg.enumerate_elements(rs)
    assert sreg.check_axioms(t) == []
    assert sreg.embedding_check(rs, t) == []
    assert sreg.class_idempotent_check(rs) == []
    rep = sreg.compare_j_structure(rs.S, rs.G, t)
    assert rep.ok


def test_axiom_checker_catches_damage():
    rs = system("lz2")
    t = sreg.enumerate_elements(rs)
    t.mul = t.mul.copy()
    t.mul[1, 2] = (t.mul[1, 2] + 1) % len(t)
    assert sreg.check_axioms(t)
    t = sreg.enumerate_elements(rs)
    t.inv = np.roll(t.inv, 1)
    assert sreg.check_axioms(t)


def test_class_idempotent_examples():
    rs = system("lz2")
    P = rs.parse_word
    assert rs.normal_form(P("a' a")) == rs.normal_form(P("b' b")) == P("a' a")
    c2 = system("z2")
    assert c2.normal_form(c2.parse_word("g g'")) == c2.parse_word("e e'")


def test_j_structure_examples():
    rs = system("lz2")
    rep = sreg.compare_j_structure(rs.S, rs.G, sreg.enumerate_elements(rs))
    assert len(rep.s_classes) == 1 and rep.injective
    b2 = system("b2")
    t = sreg.enumerate_elements(b2)
    rep = sreg.compare_j_structure(b2.S, b2.G, t)
    (img,) = rep.image.values()
    zero_class = next(i for i, c in enumerate(rep.t_classes) if t.zero in c)
    assert img != zero_class


def test_export_round_trip():
    rs = system("b2")
    t = sreg.enumerate_elements(rs)
    text = sreg.export_table(rs, t)
    T = load_semigroup(text)
    assert T.order == len(t)
    assert T.names[T.zero] == f"x{t.zero}"
    meta = sreg.read_export_metadata(text)
    assert meta["authoritative"]
    assert sorted(meta["words"].values()) == sorted(rs.format_codes(w) for w in t.elements)
    assert [T.index(x) for x in meta["inv"]] == list(t.inv)
    # the exported table is itself regular
    G = compute_green(T)
    assert G.n == T.order


def test_element_cap():
    rs = system("b2")
    with pytest.raises(sreg.SRegCapExceeded) as exc:
        sreg.enumerate_elements(rs, max_elements=5)
    assert not exc.value.partial.authoritative
    with pytest.raises(sreg.SRegCapExceeded):
        sreg.enumerate_elements(rs, max_steps=3)


def test_elements_are_normal_shape():
    for name in ("lz3", "b2", "rb22one", "n3"):
        rs = system(name)
        for w in sreg.enumerate_elements(rs).elements:
            assert rs.is_normal_shape_codes(w)
