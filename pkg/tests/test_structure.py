import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import builtin
from oracles import (
    bf_center,
    bf_closure,
    bf_commutator,
    bf_derived,
    bf_frattini,
    bf_is_normal,
    bf_maximal_subgroups,
    bf_order,
    bf_power,
    table,
)
from noninner.groups import Cyclic, DirectProduct, build_group, closure, trivial_subgroup, whole_group
from noninner.structure import (
    NotAbelianError,
    NotAPGroupError,
    abelian_invariants,
    abelian_subgroups_by_order,
    agemo,
    center,
    commutator,
    derived_subgroup,
    frattini,
    generator_rank,
    index_p_normal_subgroups,
    is_abelian,
    is_normal,
    maximal_intersection,
    maximal_subgroups,
    omega1,
    quotient,
    verify_lemma_identities,
)

SMALL = ["D4", "Q8", "C2xD4", "C2xQ8", "heisenberg27", "modular27", "C4xD4", "C2xC2xD4"]


def ab(*orders):
    return build_group(DirectProduct(tuple(Cyclic(n) for n in orders)))


def test_center_examples():
    A = ab(2, 4)
    assert center(A).order == 8
    D4 = builtin("D4")
    assert set(center(D4).elements) == {0, D4.element("r^2")}
    assert center(builtin("C2xD4")).order == 4


def test_derived_examples():
    assert derived_subgroup(ab(3, 9)).is_trivial
    D4 = builtin("D4")
    assert set(derived_subgroup(D4).elements) == {0, D4.element("r^2")}
    assert derived_subgroup(builtin("Q8")).order == 2


def test_agemo_examples():
    assert agemo(ab(3, 3)).is_trivial
    assert agemo(build_group(Cyclic(9))).order == 3


def test_frattini_examples():
    assert frattini(ab(2, 2, 2)).is_trivial
    assert frattini(build_group(Cyclic(8))).order == 4
    D4 = builtin("D4")
    assert set(frattini(D4).elements) == {0, D4.element("r^2")}


def test_omega1_examples():
    A = ab(3, 3)
    assert omega1(A).order == 9
    assert omega1(build_group(Cyclic(9))).order == 3
    Z = center(builtin("D4"))
    assert omega1(Z) == Z


@pytest.mark.parametrize("orders, count, sub_order", [((3,), 1, 1), ((3, 3), 4, 3), ((2, 4), 3, 4),
                                                      ((2, 2, 2), 7, 4), ((3, 3, 3), 13, 9)])
def test_maximal_subgroups_counts(orders, count, sub_order):
    A = ab(*orders)
    ms = maximal_subgroups(A)
    assert len(ms) == count
    assert all(M.order == sub_order for M in ms)
    assert {frozenset(M.elements) for M in ms} == set(bf_maximal_subgroups(table(A)))


def test_maximal_subgroups_requires_abelian():
    with pytest.raises(NotAbelianError):
        maximal_subgroups(whole_group(builtin("D4")))


def test_p_group_required():
    with pytest.raises(NotAPGroupError):
        agemo(build_group(Cyclic(6)))


def test_commutator_identity_and_abelian():
    D4 = builtin("D4")
    assert all(commutator(D4, 0, y) == 0 for y in range(8))
    A = ab(2, 4)
    assert all(commutator(A, x, y) == 0 for x in range(8) for y in range(8))
    assert verify_lemma_identities(A)


def test_lemma_d4_exhaustive():
    assert verify_lemma_identities(builtin("D4"))


def test_lemma_brute_force_matches_on_d4():
    G = builtin("D4")
    t = table(G)
    c = lambda x, y: bf_commutator(t, x, y)  # noqa: E731
    for x in range(8):
        for y in range(8):
            for z in range(8):
                assert c(x, t[y][z]) == t[t[c(x, z)][c(x, y)]][c(c(x, y), z)]
                assert c(t[x][y], z) == t[t[c(x, z)][c(c(x, z), y)]][c(y, z)]


def test_lemma_sampled_path():
    assert verify_lemma_identities(builtin("C9xHeis27"), exhaustive_limit=16, samples=2000)


@pytest.mark.parametrize("orders, factors", [((9, 3), (3, 9)), ((2, 2), (2, 2)), ((4, 2, 8), (2, 4, 8)),
                                             ((6,), (6,)), ((2, 3, 4), (2, 12)), ((1,), ())])
def test_abelian_invariants(orders, factors):
    A = ab(*orders)
    inv = abelian_invariants(A)
    assert inv.factors == factors
    assert [bf_order(table(A), b) for b in inv.basis] == list(factors)
    assert closure(A, inv.basis).order == A.order


def test_center_of_c2xd4_invariants():
    assert abelian_invariants(center(builtin("C2xD4"))).factors == (2, 2)


def test_normality_examples():
    D4 = builtin("D4")
    assert is_normal(D4, trivial_subgroup(D4)) and is_abelian(trivial_subgroup(D4))
    for name in SMALL:
        G = builtin(name)
        assert is_normal(G, center(G)) and is_abelian(center(G))
    assert not is_normal(D4, closure(D4, [D4.element("s")]))


def test_quotient_by_derived_is_abelian():
    G = builtin("C4xD4")
    Q, coset, reps = quotient(G, derived_subgroup(G))
    assert Q.order == G.order // 2 and Q.is_abelian
    t = table(G)
    for x in range(G.order):
        for y in range(G.order):
            assert coset[t[x][y]] == Q.mult[coset[x], coset[y]]


@pytest.mark.parametrize("name", SMALL)
def test_structure_matches_brute_force(name):
    G = builtin(name)
    t = table(G)
    p = G.prime
    assert frozenset(center(G).elements) == bf_center(t)
    assert frozenset(derived_subgroup(G).elements) == bf_derived(t)
    assert frozenset(agemo(G).elements) == bf_closure(t, {bf_power(t, x, p) for x in range(G.order)})
    assert frozenset(frattini(G).elements) == bf_frattini(t)
    assert frattini(G) == maximal_intersection(G)


@pytest.mark.parametrize("name", SMALL)
def test_index_p_normal_subgroups_are_maximal(name):
    G = builtin(name)
    t = table(G)
    got = {frozenset(M.elements) for M in index_p_normal_subgroups(G)}
    want = {M for M in bf_maximal_subgroups(t) if bf_is_normal(t, M)}
    assert got == want


@pytest.mark.parametrize("name, rank", [("D4", 2), ("Q8", 2), ("C2xD4", 3), ("heisenberg27", 2),
                                        ("modular27", 2), ("C2xC2xD4", 4)])
def test_generator_rank(name, rank):
    assert generator_rank(builtin(name)) == rank


@pytest.mark.parametrize("orders", [(2, 4), (3, 9), (2, 2, 2), (4, 4)])
def test_abelian_subgroups_by_order_is_complete(orders):
    A = ab(*orders)
    from oracles import bf_all_subgroups
    got = {frozenset(S.elements) for layer in abelian_subgroups_by_order(whole_group(A)) for S in layer}
    assert got == bf_all_subgroups(table(A))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from([2, 4, 8]), min_size=1, max_size=3))
def test_invariants_property_2groups(orders):
    A = ab(*orders)
    inv = abelian_invariants(A)
    assert sorted(inv.factors) == sorted(orders)
    assert all(b % a == 0 for a, b in zip(inv.factors, inv.factors[1:]))
    prod = 1
    for d in inv.factors:
        prod *= d
    assert prod == A.order


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 31), st.integers(0, 31))
def test_commutator_matches_definition(name, x, y):
    G = builtin(name)
    x, y = x % G.order, y % G.order
    assert commutator(G, x, y) == bf_commutator(table(G), x, y)
    assert commutator(G, x, y) in derived_subgroup(G)
