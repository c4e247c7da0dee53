import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import get_group
from oracle import Brute
from nilgraph import (CapExceeded, MalformedTable, NotAGroup, NotASubgroup, UnknownFamily,
                      builtin, from_cayley_table, from_permutation_generators, parse_cycles,
                      read_cayley_file, read_permutation_file)
from nilgraph.groups import cycle_label, normalize_cycle_label, p_part, prime_factors

SMALL = ["S3", "S4", "A4", "D8", "D10", "D12", "Q8", "T", "C6", "C12", "S3xC2"]

S3_TABLE = [  # (), (1 2), (1 3), (2 3), (1 2 3), (1 3 2), composing left to right
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 2, 3],
    [2, 5, 0, 4, 3, 1],
    [3, 4, 5, 0, 1, 2],
    [4, 3, 1, 2, 5, 0],
    [5, 2, 3, 1, 0, 4],
]


def test_trivial_and_c2_tables():
    G = from_cayley_table([[0]])
    assert G.order == 1 and G.identity == 0
    C2 = from_cayley_table([[0, 1], [1, 0]])
    assert C2.order == 2 and C2.element_order(1) == 2


def test_s3_table_has_three_involutions():
    G = from_cayley_table(S3_TABLE)
    assert G.order == 6
    assert sorted(G.orders.tolist()) == [1, 2, 2, 2, 3, 3]
    assert not G.is_abelian()


@pytest.mark.parametrize("rows", [[[0, 1], [1]], [[0, 1], [1, 2]], []])
def test_malformed_tables(rows):
    with pytest.raises(MalformedTable):
        from_cayley_table(rows)


def test_not_a_group():
    with pytest.raises(NotAGroup):
        from_cayley_table([[0, 0], [0, 0]])          # no inverse for 1
    with pytest.raises(NotAGroup):
        from_cayley_table([[1, 0], [0, 0]])          # no identity
    # a Latin square with identity that is not associative
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        from_cayley_table(loop)


def test_permutation_generators():
    assert from_permutation_generators([]).order == 1
    s3 = from_permutation_generators([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    assert s3.order == 6
    a5 = from_permutation_generators([parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)(3 4)", 5)])
    assert a5.order == 60
    with pytest.raises(CapExceeded):
        from_permutation_generators([parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)], cap=100)


def test_builtin_orders():
    assert builtin("S_3").order == 6
    assert builtin("PSL(2,7)").order == 168
    assert builtin("S3xC2").order == 12
    with pytest.raises(UnknownFamily):
        builtin("M11")
    with pytest.raises(UnknownFamily):
        builtin("PSL(2,3)")
    with pytest.raises(CapExceeded):
        builtin("S7")


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13])
def test_psl_order_formula(q):
    from math import gcd
    assert get_group(f"PSL(2,{q})").order == q * (q - 1) * (q + 1) // gcd(2, q - 1)


def test_t_relations():
    T = get_group("T")
    x, y = T.index_of("x"), T.index_of("y")
    e = T.identity
    assert T.order == 12
    assert T.power(x, 6) == e
    assert T.product(T.power(x, 3), T.inv[T.power(y, 2)]) == e     # x^3 y^-2 = 1
    assert T.product(T.conjugate(x, y), x) == e                      # x^y x = 1


def test_element_order_and_pi():
    S3 = get_group("S3")
    assert S3.element_order(S3.identity) == 1 and S3.pi_of(S3.identity) == set()
    c = S3.index_of("(1 2 3)")
    assert S3.element_order(c) == 3 and S3.pi_of(c) == {3}
    T = get_group("T")
    xy = T.product(T.index_of("x"), T.index_of("y"))
    assert T.element_order(xy) == Brute(T).order(xy)


def test_closure_examples():
    S4 = get_group("S4")
    assert S4.closure([]).indices.tolist() == [S4.identity]
    H = S4.closure([S4.index_of("(1 2)"), S4.index_of("(1 2 3)")])
    assert len(H) == 6 and S4.is_subgroup(H)


def test_centralizer_center_normal_closure():
    S4, S3 = get_group("S4"), get_group("S3")
    assert S4.centralizer(S4.identity) == S4.whole()
    assert S4.center() == S4.trivial()
    assert S3.normal_closure(S3.index_of("(1 2)")) == S3.whole()


def test_abelian_and_subgroup_as_group():
    S3, S4 = get_group("S3"), get_group("S4")
    assert S3.is_abelian(S3.trivial())
    assert S3.is_abelian(S3.cyclic(S3.index_of("(1 2 3)")))
    H = S4.closure([S4.index_of("(1 2)"), S4.index_of("(1 2 3)")])
    assert not S4.is_abelian(H)
    sub = S4.subgroup_as_group(H)
    assert sub.order == 6 and not sub.is_abelian()
    with pytest.raises(NotASubgroup):
        S4.subgroup_as_group(S4.element_set([S4.index_of("(1 2)"), S4.index_of("(1 3)")]))


def test_cycle_notation():
    assert parse_cycles("(1324)", 4) == parse_cycles("(1 3 2 4)", 4) == parse_cycles("(1,3,2,4)", 4)
    assert cycle_label(parse_cycles("(1 2)(3 4)", 4)) == "(1 2)(3 4)"
    assert cycle_label((0, 1, 2)) == "()"
    assert normalize_cycle_label("(34)(12)") == "(1 2)(3 4)"


def test_number_helpers():
    assert prime_factors(1092) == [2, 3, 7, 13]
    assert p_part(1092, 2) == 4 and p_part(60, 5) == 5 and p_part(60, 7) == 1


def test_file_readers(tmp_path):
    f = tmp_path / "c3.txt"
    f.write_text("# cyclic of order 3\n3\n0 1 2\n1 2 0\n2 0 1\nlabel 1 a\nlabel 2 a^2\n")
    G = read_cayley_file(f)
    assert G.order == 3 and G.labels == ["0", "a", "a^2"]
    p = tmp_path / "s4.txt"
    p.write_text("# S4\n(1 2)\n(1 2 3 4)\n")
    assert read_permutation_file(p).order == 24
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 1\n")
    with pytest.raises(MalformedTable):
        read_cayley_file(bad)


@pytest.mark.parametrize("name", SMALL)
def test_tables_are_groups(name):
    G = get_group(name)
    G.validate()
    assert len(set(G.labels)) == G.order
    n = np.arange(G.order)
    assert (G.mul[n, G.inv] == G.identity).all() and (G.mul[G.inv, n] == G.identity).all()


element_sets = st.sampled_from(SMALL).flatmap(
    lambda name: st.tuples(st.just(name),
                           st.lists(st.integers(0, get_group(name).order - 1), max_size=4),
                           st.lists(st.integers(0, get_group(name).order - 1), max_size=3)))


@settings(max_examples=60, deadline=None)
@given(element_sets)
def test_closure_idempotent_and_monotone(case):
    name, S, extra = case
    G = get_group(name)
    H = G.closure(S)
    assert G.closure(H) == H
    assert H <= G.closure(S + extra)
    assert G.is_subgroup(H)
    assert H.indices.tolist() == sorted(Brute(G).closure(S))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL).flatmap(
    lambda name: st.tuples(st.just(name), st.integers(0, get_group(name).order - 1),
                           st.integers(0, get_group(name).order - 1))))
def test_cyclic_and_conjugation(case):
    name, x, g = case
    G = get_group(name)
    assert len(G.cyclic(x)) == G.element_order(x)
    image = G.conj[:, g]
    assert sorted(image.tolist()) == list(range(G.order))
    assert (G.orders[image] == G.orders).all()
    assert G.conjugate(x, g) == G.product(G.inv[g], x, g)
    assert G.commutator(x, g) == G.product(G.inv[x], G.inv[g], x, g)
