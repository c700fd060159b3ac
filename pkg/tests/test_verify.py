import itertools

import numpy as np
import pytest

from conftest import builtin
from oracles import bf_center, bf_is_hom, bf_derived, table
from noninner.construct import GroupMap, build_alpha, choose_alpha_data, conjugation_map, identity_map
from noninner.decompose import find_abelian_direct_factor
from noninner.groups import closure, trivial_subgroup
from noninner.structure import agemo, center, derived_subgroup, frattini
from noninner.verify import (
    CHECK_NAMES,
    fixes_subgroup_elementwise,
    is_automorphism,
    is_central,
    is_inner,
    map_order,
    run_theorem_pipeline,
)

APPLICABLE = ["C2xD4", "C2xQ8", "C4xD4", "C2xC2xD4", "C3xHeis27", "C3xmodular27", "C9xHeis27"]


def alpha_of(name):
    G = builtin(name)
    dec = find_abelian_direct_factor(G)
    return G, build_alpha(dec, choose_alpha_data(dec))


def brute_force_order(img):
    ident = list(range(len(img)))
    cur, k = list(img), 1
    while cur != ident:
        cur = [img[c] for c in cur]
        k += 1
    return k


def test_identity_map_verdicts():
    G = builtin("D4")
    e = identity_map(G)
    assert is_automorphism(e) and is_central(e) and map_order(e) == 1
    assert is_inner(e) == 0


def test_constant_map_is_not_automorphism():
    G = builtin("D4")
    assert not is_automorphism(GroupMap(G, G, np.zeros(8, dtype=np.int64)))


def test_non_bijective_hom_rejected():
    G = builtin("C2xD4")
    from noninner.groups import extend_homomorphism
    img = extend_homomorphism(G, G.generators, [0] * len(G.generators), G)
    assert not is_automorphism(GroupMap(G, G, img))


def test_conjugation_by_r_in_d4():
    G = builtin("D4")
    phi = conjugation_map(G, G.element("r"))
    s = G.element("s")
    assert G.mult[G.inv[s], phi(s)] == G.element("r^2")
    assert is_central(phi)
    assert map_order(phi) == 2
    assert is_inner(phi) in {G.element("r"), G.element("r^3")}


@pytest.mark.parametrize("name", ["D4", "Q8", "heisenberg27", "C2xD4"])
def test_conjugation_witness_in_coset(name):
    G = builtin(name)
    Z = set(bf_center(table(G)))
    t = table(G)
    for y in range(G.order):
        w = is_inner(conjugation_map(G, y))
        assert w is not None
        assert t[G.inv[y]][w] in Z


@pytest.mark.parametrize("name", APPLICABLE)
def test_constructed_alpha_properties_brute_force(name):
    G, alpha = alpha_of(name)
    t = table(G)
    img = alpha.image.tolist()
    p = G.prime
    assert bf_is_hom(t, img) and len(set(img)) == G.order
    assert brute_force_order(img) == p == map_order(alpha)
    Z = bf_center(t)
    assert all(t[G.inv[x]][img[x]] in Z for x in range(G.order))
    # inner maps fix the center pointwise, alpha does not
    assert any(img[z] != z for z in Z)
    assert is_inner(alpha) is None
    assert all(img[x] == x for x in bf_derived(t))


@pytest.mark.parametrize("name", APPLICABLE)
def test_distinct_iterates(name):
    G, alpha = alpha_of(name)
    iterates = {identity_map(G).key()}
    cur = alpha
    for _ in range(G.prime - 1):
        iterates.add(cur.key())
        cur = alpha.compose(cur)
    assert cur.is_identity()
    assert len(iterates) == G.prime


@pytest.mark.parametrize("name", APPLICABLE)
def test_fixes_subgroups(name):
    G, alpha = alpha_of(name)
    assert fixes_subgroup_elementwise(alpha, trivial_subgroup(G))
    fd = fixes_subgroup_elementwise(alpha, derived_subgroup(G))
    fa = fixes_subgroup_elementwise(alpha, agemo(G))
    ff = fixes_subgroup_elementwise(alpha, frattini(G))
    assert fd and fa and ff
    if G.prime > 2:
        assert ff == (fd and fa)


def test_pipeline_c2xd4():
    rep = run_theorem_pipeline(builtin("C2xD4"), with_oracle=True)
    assert rep.applicable and rep.passed and rep.prime == 2
    assert list(rep.checks) == list(CHECK_NAMES)
    assert rep.oracle is True
    assert rep.inner_witness is None


def test_pipeline_q8_not_applicable():
    rep = run_theorem_pipeline(builtin("Q8"))
    assert not rep.applicable and rep.checks is None and not rep.passed


def test_report_keys_fixed_order():
    d = run_theorem_pipeline(builtin("C2xD4")).to_dict()
    assert list(d) == ["group", "order", "prime", "applicable", "decomposition", "alpha", "checks",
                       "oracle", "timings_ms"]
    assert d["timings_ms"] == {}


def test_inner_witness_search_on_all_d4_automorphisms():
    # |Aut(D4)| = 8 and |Inn(D4)| = 4
    G = builtin("D4")
    t = table(G)
    r, s = G.element("r"), G.element("s")
    count, inner = 0, 0
    for ri, si in itertools.product(range(8), repeat=2):
        from noninner.groups import extend_homomorphism
        img = extend_homomorphism(G, [r, s], [ri, si], G)
        if img is None or len(set(img.tolist())) != 8:
            continue
        count += 1
        w = is_inner(GroupMap(G, G, img))
        if w is not None:
            inner += 1
            assert np.array_equal(conjugation_map(G, w).image, img)
    assert (count, inner) == (8, 4)


def test_fixes_frattini_large_p3_group():
    G, alpha = alpha_of("C9xHeis27")
    F = frattini(G)
    assert F == closure(G, derived_subgroup(G).elements + agemo(G).elements)
    assert fixes_subgroup_elementwise(alpha, F)
    assert not fixes_subgroup_elementwise(alpha, center(G))
