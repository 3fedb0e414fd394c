import pytest
from hypothesis import given, strategies as st

from regsem import corpus
from regsem.semigroup import (ONE, AssociativityError, ParseError, SemigroupError, from_table,
                              load_semigroup)

LZ2 = """\
# left zero
elements: a b
a a
b b
"""


def test_left_zero_loads():
    S = load_semigroup(LZ2)
    assert S.order == 2
    assert S.zero is None and S.identity is None
    assert S.product(S.index("a"), S.index("b")) == S.index("a")


def test_associativity_error_names_triple():
    text = "elements: a b\nb a\na a\n"
    with pytest.raises(AssociativityError) as exc:
        load_semigroup(text)
    i, j, k = exc.value.triple
    T = [[1, 0], [0, 0]]
    assert T[T[i][j]][k] != T[i][T[j][k]]


def test_brandt_zero_detected():
    S = load_semigroup(corpus.brandt2().to_text())
    assert S.order == 5
    assert S.names[S.zero] == "z"
    e12, e21 = S.index("e12"), S.index("e21")
    assert S.names[S.product(e12, e21)] == "e11"


def test_cyclic_product():
    S = corpus.cyclic(2)
    g = S.index("g")
    assert S.names[S.product(g, g)] == "e"
    assert S.identity == S.index("e")


@pytest.mark.parametrize("text, err", [
    ("", ParseError),
    ("nope: a\na\n", ParseError),
    ("elements: a a\na a\na a\n", SemigroupError),
    ("elements: a b\na a\n", ParseError),
    ("elements: a b\na c\nb b\n", ParseError),
    ("elements: 1x\n1x\n", ParseError),
    ("elements: a b\na a b\nb b\n", ParseError),
])
def test_bad_documents(text, err):
    with pytest.raises(err):
        load_semigroup(text)


def test_max_order():
    with pytest.raises(SemigroupError):
        load_semigroup(corpus.chain(5).to_text(), max_order=4)


def test_unit_product():
    S = corpus.left_zero(2)
    a, b = 0, 1
    assert S.unit_product(ONE, a) == a
    assert S.unit_product(a, ONE) == a
    assert S.unit_product(ONE, ONE) is ONE
    assert S.unit_product(a, b) == S.product(a, b)


@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_corpus_round_trip_and_zero(name):
    S = corpus.load(name)
    T = load_semigroup(S.to_text())
    assert T.table == S.table and T.zero == S.zero
    n = S.order
    zs = [z for z in range(n) if all(S.table[z][i] == z == S.table[i][z] for i in range(n))]
    assert zs == ([S.zero] if S.zero is not None else [])


@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_opposite_is_involutive(name):
    S = corpus.load(name)
    assert S.opposite().opposite().table == S.table


@given(st.integers(1, 5), st.data())
def test_random_tables_either_load_or_report_triple(n, data):
    rows = [[data.draw(st.integers(0, n - 1)) for _ in range(n)] for _ in range(n)]
    names = [f"x{i}" for i in range(n)]
    try:
        S = from_table(names, rows)
    except AssociativityError as exc:
        i, j, k = exc.triple
        assert rows[rows[i][j]][k] != rows[i][rows[j][k]]
    else:
        T = S.table
        assert all(T[T[i][j]][k] == T[i][T[j][k]] for i in range(n) for j in range(n) for k in range(n))
