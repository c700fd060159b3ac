"""Structural subgroups of finite p-groups.

Commutators follow ``[x, y] = x^-1 y^-1 x y`` and ``[x, y, z] = [[x, y], z]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from sympy import factorint

from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    bfs_tree,
    closure,
    small_generating_set,
    subgroup_from_mask,
    trivial_subgroup,
    whole_group,
)


class NotAPGroupError(GroupError):
    pass


class NotAbelianError(GroupError):
    pass


def _require_p(G: FiniteGroup) -> int:
    if G.prime is None:
        raise NotAPGroupError(f"{G.name} has order {G.order}, not a prime power")
    return G.prime


def _as_subgroup(S) -> Subgroup:
    return whole_group(S) if isinstance(S, FiniteGroup) else S


def commutator(G: FiniteGroup, x: int, y: int) -> int:
    return G.mul(int(G.inv[x]), int(G.inv[y]), x, y)


def commutator_table(G: FiniteGroup) -> np.ndarray:
    m = G.mult
    inv = G.inv
    left = m[inv[:, None], inv[None, :]]
    return m[left, m].astype(np.int64)


def center(G: FiniteGroup) -> Subgroup:
    mask = (G.mult == G.mult.T).all(axis=1)
    return subgroup_from_mask(G, mask)


def centralizer_in(S: Subgroup) -> Subgroup:
    """Center of the subgroup ``S`` (elements of S commuting with all of S)."""
    G = S.parent
    a = S.array
    block = G.mult[np.ix_(a, a)]
    mask = np.zeros(G.order, dtype=bool)
    mask[a[(block == block.T).all(axis=1)]] = True
    return subgroup_from_mask(G, mask)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    comms = np.unique(commutator_table(G))
    return closure(G, comms)


def agemo(G: FiniteGroup) -> Subgroup:
    """Subgroup generated by all p-th powers."""
    p = _require_p(G)
    return closure(G, np.unique(G.power_map(p)))


def frattini(G: FiniteGroup) -> Subgroup:
    """``G^2`` for p = 2 and ``G' G^p`` for odd p."""
    p = _require_p(G)
    if p == 2:
        return agemo(G)
    return closure(G, derived_subgroup(G).elements + agemo(G).elements)


def omega1(A) -> Subgroup:
    """Subgroup generated by the elements of order p in ``A``."""
    A = _as_subgroup(A)
    G = A.parent
    p = _require_p(G)
    orders = G.element_orders[A.array]
    return closure(G, A.array[orders == p])


def is_abelian(S) -> bool:
    S = _as_subgroup(S)
    a = S.array
    block = S.parent.mult[np.ix_(a, a)]
    return bool(np.array_equal(block, block.T))


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    m = G.mult
    inv = G.inv
    gens = np.asarray(G.generators, dtype=np.int64)
    if gens.size == 0:
        return True
    # g^-1 s g for every generator g is enough
    conj = m[m[inv[gens][:, None], S.array[None, :]], gens[:, None]]
    return bool(S.mask[conj].all())


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, np.ndarray, np.ndarray]:
    """Quotient ``G/N`` for normal ``N``.

    Returns ``(Q, coset, reps)``: ``coset[x]`` is the quotient index of
    ``x N`` and ``reps[i]`` the smallest element of coset ``i``.
    """
    if not is_normal(G, N):
        raise GroupError("quotient by a non-normal subgroup")
    cosets = G.mult[:, N.array].min(axis=1).astype(np.int64)
    reps, coset = np.unique(cosets, return_inverse=True)
    qm = coset[G.mult[np.ix_(reps, reps)].astype(np.int64)]
    qi = coset[G.inv[reps].astype(np.int64)]
    gens = tuple(sorted({int(coset[g]) for g in G.generators} - {0}))
    labels = tuple(f"[{G.labels[r]}]" for r in reps)
    Q = FiniteGroup(f"{G.name}/N", qm, qi, gens, labels)
    return Q, coset, reps


# ---------------------------------------------------------------------------
# Homomorphisms to Z/p


def _cayley_coordinates(G: FiniteGroup, gens) -> tuple[np.ndarray, np.ndarray]:
    """Per-element generator counts along a BFS tree, and edge constraints.

    A choice ``v`` of generator images in Z/p extends to a homomorphism
    ``x -> coords[x] . v`` iff ``constraints @ v == 0 (mod p)``.
    """
    k = len(gens)
    visit, parent, via = bfs_tree(G, gens)
    coords = np.zeros((G.order, k), dtype=np.int64)
    for x in visit[1:]:
        coords[x] = coords[parent[x]]
        coords[x, via[x]] += 1
    rows = []
    for j, g in enumerate(gens):
        d = coords[G.mult[:, g].astype(np.int64)] - coords
        d[:, j] -= 1
        rows.append(d)
    return coords, np.concatenate(rows) if rows else np.zeros((0, k), dtype=np.int64)


def homs_to_cyclic_p(G: FiniteGroup, p: int) -> list[np.ndarray]:
    """All homomorphisms ``G -> Z/p`` as value tables (zero map first)."""
    gens = small_generating_set(whole_group(G))
    coords, cons = _cayley_coordinates(G, gens)
    cons = np.unique(cons % p, axis=0)
    cand = np.array(list(itertools.product(range(p), repeat=len(gens))), dtype=np.int64)
    if len(gens) == 0:
        return [np.zeros(G.order, dtype=np.int64)]
    ok = ((cons @ cand.T) % p == 0).all(axis=0)
    return [(coords @ v) % p for v in cand[ok]]


def index_p_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Kernels of all surjections ``G -> Z/p``, canonically sorted.

    In a p-group these are exactly the maximal subgroups.
    """
    p = _require_p(G)
    kernels = {}
    for f in homs_to_cyclic_p(G, p):
        if f.any():
            S = subgroup_from_mask(G, f == 0)
            kernels[S.elements] = S
    return [kernels[k] for k in sorted(kernels)]


def maximal_subgroups(A) -> list[Subgroup]:
    """All index-p subgroups of an abelian p-subgroup ``A``."""
    A = _as_subgroup(A)
    if not is_abelian(A):
        raise NotAbelianError("maximal_subgroups needs an abelian subgroup")
    _require_p(A.parent)
    if A.order == 1:
        return []
    local, emb = A.as_group()
    out = [subgroup_from_mask(A.parent, _lift_mask(A.parent, emb, K.mask))
           for K in index_p_normal_subgroups(local)]
    return sorted(out, key=lambda S: S.elements)


def _lift_mask(G: FiniteGroup, emb: np.ndarray, local_mask: np.ndarray) -> np.ndarray:
    mask = np.zeros(G.order, dtype=bool)
    mask[emb[local_mask]] = True
    return mask


def maximal_intersection(G: FiniteGroup) -> Subgroup:
    """Intersection of all index-p normal subgroups (Frattini cross-check)."""
    mask = np.ones(G.order, dtype=bool)
    for M in index_p_normal_subgroups(G):
        mask &= M.mask
    return subgroup_from_mask(G, mask)


def generator_rank(G: FiniteGroup) -> int:
    """Minimal number of generators, as the rank of ``G/Phi(G)``."""
    p = _require_p(G)
    return int(round(np.log(G.order // frattini(G).order) / np.log(p)))


# ---------------------------------------------------------------------------
# Abelian invariants


@dataclass(frozen=True)
class AbelianInvariants:
    factors: tuple[int, ...]
    basis: tuple[int, ...]


def _primary_basis(G: FiniteGroup, elems: np.ndarray) -> list[tuple[int, int]]:
    """Basis of an abelian p-group given by ``elems`` as (element, order) pairs.

    Repeatedly takes an element of largest order modulo the span so far and
    corrects it by the span so that its order equals that quotient order.
    """
    m = G.mult
    span = np.zeros(G.order, dtype=bool)
    span[0] = True
    coord: dict[int, tuple[int, ...]] = {0: ()}
    basis: list[tuple[int, int]] = []
    while span.sum() < len(elems):
        # quotient order of every element modulo the span
        q = np.zeros(len(elems), dtype=np.int64)
        cur = elems.astype(np.int64).copy()
        k = 1
        pending = np.ones(len(elems), dtype=bool)
        while pending.any():
            hit = pending & span[cur]
            q[hit] = k
            pending &= ~hit
            cur = m[cur, elems].astype(np.int64)
            k += 1
        i = int(np.argmax(q))
        x, f = int(elems[i]), int(q[i])
        t = coord[G.power(x, f)]
        y = x
        for (b, ob), ti in zip(basis, t):
            assert ti % f == 0, "basis correction is not divisible"
            y = int(m[y, G.power(b, -(ti // f))])
        basis.append((y, f))
        new_coord = {}
        powers = [0]
        for _ in range(f - 1):
            powers.append(int(m[powers[-1], y]))
        for s, c in coord.items():
            for e, yp in enumerate(powers):
                new_coord[int(m[s, yp])] = c + (e,)
        coord = new_coord
        span[:] = False
        span[list(coord)] = True
    return basis


def abelian_invariants(A) -> AbelianInvariants:
    """Invariant factors ``d1 | d2 | ... | dk`` with a realizing basis."""
    A = _as_subgroup(A)
    if not is_abelian(A):
        raise NotAbelianError("abelian_invariants needs an abelian subgroup")
    G = A.parent
    if A.order == 1:
        return AbelianInvariants((), ())
    orders = G.element_orders[A.array]
    columns: list[list[tuple[int, int]]] = []
    for p in sorted(factorint(A.order)):
        pmask = np.array([len(factorint(int(o))) <= 1 and (o == 1 or o % p == 0) for o in orders])
        comp = _primary_basis(G, A.array[pmask])
        columns.append(sorted(comp, key=lambda bo: -bo[1]))
    width = max(len(c) for c in columns)
    factors, basis = [], []
    for r in range(width):
        x, d = 0, 1
        for col in columns:
            if r < len(col):
                x = int(G.mult[x, col[r][0]])
                d *= col[r][1]
        factors.append(d)
        basis.append(x)
    return AbelianInvariants(tuple(reversed(factors)), tuple(reversed(basis)))


def abelian_coordinates(G: FiniteGroup, inv: AbelianInvariants) -> dict[int, tuple[int, ...]]:
    """Exponent vector of every element of the span of ``inv.basis``."""
    coord: dict[int, tuple[int, ...]] = {0: ()}
    for b, d in zip(inv.basis, inv.factors):
        powers = [0]
        for _ in range(d - 1):
            powers.append(int(G.mult[powers[-1], b]))
        coord = {int(G.mult[s, bp]): c + (e,) for s, c in coord.items() for e, bp in enumerate(powers)}
    return coord


def abelian_subgroups_by_order(A: Subgroup):
    """Yield the subgroups of an abelian p-subgroup ``A`` layer by layer.

    Each layer lists all subgroups of order ``p^k`` sorted by element set;
    every one arises as ``S<x>`` with ``S`` in the previous layer and
    ``x^p`` in ``S``.
    """
    G = A.parent
    p = _require_p(G)
    layer = [trivial_subgroup(G)]
    yield layer
    pmap = G.power_map(p)
    while layer[0].order < A.order:
        found: dict[tuple[int, ...], Subgroup] = {}
        for S in layer:
            for x in A.array[(~S.mask[A.array]) & S.mask[pmap[A.array]]]:
                elems = set(S.elements)
                y = int(x)
                for _ in range(p - 1):
                    elems.update(int(v) for v in G.mult[S.array, y])
                    y = int(G.mult[y, x])
                key = tuple(sorted(elems))
                if key not in found:
                    found[key] = Subgroup(G, key, tuple(S.generators) + (int(x),))
        layer = [found[k] for k in sorted(found)]
        yield layer


def verify_lemma_identities(G: FiniteGroup, *, exhaustive_limit: int = 128,
                            samples: int = 100_000, seed: int = 0) -> bool:
    """Check ``[x,yz] = [x,z][x,y][x,y,z]`` and ``[xy,z] = [x,z][x,z,y][y,z]``."""
    n = G.order
    c = commutator_table(G)
    m = G.mult.astype(np.int64)
    if n <= exhaustive_limit:
        x, y, z = (a.ravel() for a in np.meshgrid(np.arange(n), np.arange(n), np.arange(n),
                                                   indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, n, size=(3, samples))
    lhs1 = c[x, m[y, z]]
    rhs1 = m[m[c[x, z], c[x, y]], c[c[x, y], z]]
    lhs2 = c[m[x, y], z]
    rhs2 = m[m[c[x, z], c[c[x, z], y]], c[y, z]]
    return bool(np.array_equal(lhs1, rhs1) and np.array_equal(lhs2, rhs2))
