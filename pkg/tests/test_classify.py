import pytest

from conftest import get_group
from oracle import Brute
from nilgraph import (NotNormal, PrimeNotDividing, class_profile, hypercenter, is_ac_group,
                      is_e_group, is_ep_group, is_n_group, is_np_group, is_simple, is_sn_group,
                      is_snp_group, is_solvable, quotient, sylow_subgroup)
from nilgraph.classify import (has_nontrivial_normal_abelian_subgroup, is_centerless,
                               is_weakly_nilpotent, minimal_normal_subgroups, projection,
                               sylow_abelian)
from nilgraph.nilpotentizer import nil_table
from nilgraph.series import is_nilpotent

CORPUS = ["S3", "S4", "S5", "A4", "A5", "D8", "D10", "D12", "Q8", "T", "C6", "C12", "S3xC2",
          "A4xC2", "PSL(2,7)"]


def test_n_group_examples():
    assert is_n_group(get_group("D12"))
    assert not is_n_group(get_group("S4"))
    assert not is_n_group(get_group("PSL(2,7)"))


def test_sn_and_e_examples():
    S4 = get_group("S4")
    assert is_sn_group(S4) and is_e_group(S4)
    assert is_sn_group(get_group("PSL(2,4)"))
    assert is_sn_group(get_group("D12"))


def test_e_group_by_brute_force():
    # E_G(x) a subgroup for every x, checked with the plain-list oracle
    for name in ["S4", "S3", "A4", "T"]:
        G = get_group(name)
        B = Brute(G)
        assert is_e_group(G) == all(B.is_subgroup(B.engel_set(x)) for x in range(G.order))


def test_prime_local_predicates():
    S4 = get_group("S4")
    assert not is_np_group(S4, 2) and is_np_group(S4, 3)
    assert is_snp_group(S4, 2) and is_ep_group(S4, 3)
    for fn in (is_np_group, is_snp_group, is_ep_group, sylow_abelian):
        with pytest.raises(PrimeNotDividing):
            fn(S4, 5)


def test_ac_and_sylow():
    P = get_group("PSL(2,4)")
    assert is_ac_group(P) and is_centerless(P)
    S4 = get_group("S4")
    assert sylow_abelian(S4, 3) and not sylow_abelian(S4, 2)
    P2 = sylow_subgroup(S4, 2)
    assert len(P2) == 8 and S4.is_subgroup(P2) and not S4.is_abelian(P2)
    assert len(sylow_subgroup(get_group("PSL(2,7)"), 7)) == 7


def test_normal_structure():
    assert has_nontrivial_normal_abelian_subgroup(get_group("S4"))
    assert not has_nontrivial_normal_abelian_subgroup(get_group("A5"))
    assert has_nontrivial_normal_abelian_subgroup(get_group("S3"))
    assert [len(N) for N in minimal_normal_subgroups(get_group("S4"))] == [4]
    assert is_simple(get_group("A5")) and is_simple(get_group("PSL(2,7)"))
    assert not is_simple(get_group("S4"))


def test_quotients():
    D12, S4 = get_group("D12"), get_group("S4")
    Q = quotient(D12, D12.trivial())
    assert Q.order == 12
    proj = projection(Q)
    assert (Q.mul[proj[:, None], proj[None, :]] == proj[D12.mul]).all()
    Q = quotient(D12, D12.center())
    assert Q.order == 6 and not Q.is_abelian()
    V4 = minimal_normal_subgroups(S4)[0]
    assert quotient(S4, V4).order == 6
    with pytest.raises(NotNormal):
        quotient(S4, S4.cyclic(S4.index_of("(1 2)")))


def test_quotient_by_central_subgroup_keeps_n_group():
    D12 = get_group("D12")
    Q = quotient(D12, D12.center())
    assert is_n_group(D12) == is_n_group(Q)
    proj = projection(Q)
    for x in range(D12.order):
        assert (nil_table(D12).rows[x] == nil_table(Q).rows[proj[x]][proj]).all()


def test_solvable_and_weakly_nilpotent():
    assert is_solvable(get_group("S4")) and not is_solvable(get_group("A5"))
    for name in CORPUS:
        G = get_group(name)
        assert is_weakly_nilpotent(G) == is_nilpotent(G.whole())


@pytest.mark.parametrize("name", CORPUS)
def test_profile_consistent(name):
    G = get_group(name)
    p = class_profile(G)
    assert p.consistent()
    assert p.flags["nilpotent"] == (len(hypercenter(G)) == G.order)
    d = p.to_dict()
    assert set(d["per_prime"]) == {str(q) for q in G.primes}


def test_simple_and_psl_instances():
    for name in ["A5", "PSL(2,8)"]:
        f = class_profile(get_group(name)).flags
        assert f["sn_group"] and f["n_group"] and f["simple"]
    for q, expect in [(4, True), (5, True), (7, False), (8, True), (9, False)]:
        assert is_n_group(get_group(f"PSL(2,{q})")) == expect, q
