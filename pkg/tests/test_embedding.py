import pytest
from hypothesis import given, strategies as st

from lusztig_tableaux.crystalgraph import TableauFamily, generate, highest_weight_graph
from lusztig_tableaux.embedding import (
    EmbeddingContext,
    c_minus,
    c_minus_barred,
    c_plus,
    embed,
    embed_general,
    large_shape,
    large_tableau,
    split_tableau,
    transition,
)
from lusztig_tableaux.lusztig import LusztigDatum, Quiver, apply_direct, split
from lusztig_tableaux.tableaux import BARRED, UNBARRED, Alphabet, Tableau, highest_weight_tableau, partitions_up_to

from strategies import data, normal_tableaux

U6 = Alphabet(UNBARRED, 6)
S = Tableau.normal([[1, 1, 1, 2, 2, 3], [2, 3, 3, 5, 6], [4, 4, 4], [5, 5, 6], [6, 6]], U6)
C_PLUS = {(1, 2): 2, (1, 3): 1, (2, 3): 2, (2, 5): 1, (2, 6): 1, (3, 4): 3, (4, 5): 2, (4, 6): 1, (5, 6): 2}
C_MINUS = {(5, 6): 1, (4, 6): 1, (1, 6): 2, (4, 5): 1, (2, 5): 1, (3, 4): 2, (2, 3): 1, (1, 3): 1}
C57_J = {(3, 5): 1, (3, 6): 1, (2, 4): 1, (1, 4): 2}
C57_J1 = {(2, 3): 1, (1, 3): 1}
C57_J2 = {(4, 5): 2, (4, 6): 1, (5, 6): 2}


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def padded(lam, n):
    return tuple(lam) + (0,) * (n - len(lam))


# -- golden examples ------------------------------------------------------

def test_c_plus_example():
    c = c_plus(S)
    assert c.quiver == Quiver(6, 1)
    assert c.as_dict() == C_PLUS


@pytest.mark.parametrize("d", [6, 7, 10])
def test_c_minus_example(d):
    c = c_minus(S, d)
    assert c.quiver == Quiver(6, 5)
    assert c.as_dict() == C_MINUS


def test_split_example():
    ctx = EmbeddingContext.for_tableau(S, Quiver(6, 3), 6)
    assert ctx.eta == (3, 1) and ctx.zeta == (3, 2)
    sp = split_tableau(S, ctx)
    assert sp.s_plus.rows == ((5, 5, 6), (6, 6))
    assert sp.s_minus.rows == ((-3, -2, -1), (-2,))
    # rows 3-bar, 2-bar, 1-bar against columns 4, 5, 6
    assert [[sp.m[(-i, j)] for j in (4, 5, 6)] for i in (3, 2, 1)] == [[0, 1, 1], [1, 0, 0], [2, 0, 0]]
    assert sp.m.entries == {(-3, 5): 1, (-3, 6): 1, (-2, 4): 1, (-1, 4): 2}
    assert sp.p_prime.rows == ((1, 1, 1, 2, 2, 3), (2, 3, 3))
    assert sp.p.rows == ((-3, -3, -2), (-3, -2, -2, -1, -1, -1))
    assert sp.q.rows == ((5, 6), (4, 4, 4))
    assert sp.t.rows == ((-3,), (-2, -2, -1))


def test_embed_example():
    c = embed(S, Quiver(6, 3), 6)
    s = split(c)
    assert s.cJ.as_dict() == C57_J
    assert s.cJ1.as_dict() == C57_J1
    assert s.cJ2.as_dict() == C57_J2


def test_transition_between_examples():
    assert transition(c_plus(S), Quiver(6, 3)) == embed(S, Quiver(6, 3))
    assert transition(embed(S, Quiver(6, 3)), Quiver(6, 1)).as_dict() == C_PLUS
    assert transition(c_plus(S), Quiver(6, 5)).as_dict() == C_MINUS


# -- basic cases -----------------------------------------------------------

@pytest.mark.parametrize("lam", [(), (1,), (3, 1), (2, 2, 1), (4, 2, 1, 1)])
def test_highest_weight_goes_to_zero(lam):
    n = 4
    H = highest_weight_tableau(lam, Alphabet(UNBARRED, n))
    for r in range(1, n):
        assert embed(H, Quiver(n, r)).total() == 0
    Hbar = highest_weight_tableau(lam, Alphabet(BARRED, n))
    assert c_minus_barred(Hbar).total() == 0
    sp = split_tableau(H, EmbeddingContext.for_tableau(H, Quiver(n, 2)))
    assert sp.m.total() == 0
    # rows of S^+ are filled with r+1, r+2, ...
    assert all(set(row) == {k + 3} for k, row in enumerate(sp.s_plus.rows))
    assert sp.s_minus == highest_weight_tableau(sp.s_minus.shape.outer, Alphabet(BARRED, 2))


def test_errors():
    with pytest.raises(ValueError):
        embed(S, Quiver(6, 3), 5)
    with pytest.raises(ValueError):
        embed(S, Quiver(5, 3))
    with pytest.raises(ValueError):
        EmbeddingContext((3, 1), Quiver(4, 2), 2)
    with pytest.raises(ValueError):
        split_tableau(S, EmbeddingContext((6, 5, 3, 3), Quiver(6, 3), 6))


# -- properties -------------------------------------------------------------

@given(normal_tableaux(n=5), st.data())
def test_weight_of_embedding(T, d):
    r = d.draw(st.integers(1, 4))
    c = embed(T, Quiver(5, r))
    assert c.weight() == sub(T.weight(), padded(T.shape.outer, 5))


@given(normal_tableaux(n=5), st.data())
def test_split_weight_bookkeeping(T, d):
    r = d.draw(st.integers(1, 4))
    lam1 = T.shape.outer[0] if T.shape.outer else 0
    ctx = EmbeddingContext.for_tableau(T, Quiver(5, r), lam1 + d.draw(st.integers(0, 2)))
    sp = split_tableau(T, ctx)
    barred = list(sp.s_minus.weight()) + [0] * (5 - r)
    rows = list(sp.m.row_weight()) + [0] * (5 - r)
    total = [a + b + c + e for a, b, c, e in zip(sp.s_plus.weight(), barred, rows, sp.m.col_weight())]
    expected = [w - (ctx.d if k < r else 0) for k, w in enumerate(T.weight())]
    assert total == expected


@given(normal_tableaux(n=5), st.data())
def test_d_independence(T, d):
    r = d.draw(st.integers(1, 4))
    lam1 = T.shape.outer[0] if T.shape.outer else 0
    q = Quiver(5, r)
    base = embed_general(T, q, lam1)
    for extra in (1, 5):
        assert embed_general(T, q, lam1 + extra) == base
    assert c_minus(T, lam1) == c_minus(T, lam1 + 3)


@given(normal_tableaux(n=5))
def test_general_route_at_extremal_sinks(T):
    assert embed_general(T, Quiver(5, 1)) == c_plus(T)
    assert embed_general(T, Quiver(5, 4)) == c_minus(T)


@pytest.mark.parametrize("lam", [p for p in partitions_up_to(6, 4) if p])
def test_counting_maps_are_morphisms(lam):
    n = 4
    g = highest_weight_graph(lam, n)
    for fn, q in ((c_plus, Quiver(n, 1)), (c_minus, Quiver(n, n - 1))):
        images = set()
        for T in g.nodes:
            c = fn(T)
            images.add(c)
            for i in range(1, n):
                for d in ("raise", "lower"):
                    T2 = T.apply(i, d)
                    if T2 is not None:
                        assert fn(T2) == apply_direct(c, i, d)
        assert len(images) == len(g)


@pytest.mark.parametrize("lam", [(2, 1), (3, 2, 1), (2, 2, 2)])
def test_c_minus_barred_is_a_morphism(lam):
    n = 3
    A = Alphabet(BARRED, n)
    g = generate(highest_weight_tableau(lam, A), TableauFamily(n))
    for T in g.nodes:
        c = c_minus_barred(T)
        for i in range(1, n):
            T2 = T.apply(i, "lower")
            if T2 is not None:
                assert c_minus_barred(T2) == apply_direct(c, i, "lower")


# -- inverse direction ------------------------------------------------------

@given(data(max_entry=3, max_n=6))
def test_large_tableau_round_trip(c):
    L = large_tableau(c)
    assert L.is_semistandard()
    assert L.shape.outer == large_shape(c)
    assert embed(L, c.quiver) == c
    assert embed_general(L, c.quiver) == c


@given(data(max_entry=3, max_n=5), st.data())
def test_transition_coherence(c, d):
    n = c.n
    q2 = Quiver(n, d.draw(st.integers(1, n - 1)))
    q3 = Quiver(n, d.draw(st.integers(1, n - 1)))
    assert transition(c, c.quiver) == c
    c2 = transition(c, q2)
    assert c2.weight() == c.weight()
    assert transition(c2, q3) == transition(c, q3)
    i = d.draw(st.integers(1, n - 1))
    assert transition(apply_direct(c, i, "lower"), q2) == apply_direct(c2, i, "lower")


def test_zero_datum_transition():
    for r in range(1, 5):
        z = LusztigDatum.zero(Quiver(5, r))
        assert large_tableau(z) == highest_weight_tableau((4, 3, 2, 1), Alphabet(UNBARRED, 5))
        for r2 in range(1, 5):
            assert transition(z, Quiver(5, r2)) == LusztigDatum.zero(Quiver(5, r2))
