"""Internal direct products ``G = H x K`` with H abelian and K non-abelian.

The search only looks where a factor can live.  If ``G = H x K`` with H
abelian then H commutes with K and with itself, so H lies in Z(G).  And
``G/K`` is isomorphic to H, hence abelian, so K contains G'.  Conversely,
for central H meeting G' trivially, every complement of ``HG'/G'`` in
``G/G'`` pulls back to a normal complement of H containing G'.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .groups import FiniteGroup, GroupError, Subgroup, closure, small_generating_set
from .structure import (
    abelian_coordinates,
    abelian_invariants,
    abelian_subgroups_by_order,
    center,
    derived_subgroup,
    is_abelian,
    is_normal,
    quotient,
)


class DecompositionError(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class DirectDecomposition:
    group: FiniteGroup
    H: Subgroup
    K: Subgroup
    h_part: np.ndarray
    k_part: np.ndarray

    @cached_property
    def h_generators(self) -> tuple[int, ...]:
        return small_generating_set(self.H)

    @cached_property
    def k_generators(self) -> tuple[int, ...]:
        return small_generating_set(self.K)

    def summary(self) -> dict:
        G = self.group
        return {
            "H_order": self.H.order,
            "K_order": self.K.order,
            "H_generators": [G.labels[x] for x in self.h_generators],
            "K_generators": [G.labels[x] for x in self.k_generators],
        }


def verify_decomposition(G: FiniteGroup, H_gens, K_gens) -> DirectDecomposition:
    """Check that ``<H_gens> x <K_gens>`` is an internal direct product of G.

    Raises :class:`DecompositionError` naming the first violated condition.
    """
    H = closure(G, H_gens)
    K = closure(G, K_gens)
    return _verify(G, H, K)


def _verify(G: FiniteGroup, H: Subgroup, K: Subgroup) -> DirectDecomposition:
    if H.is_trivial:
        raise DecompositionError("H is trivial")
    if not is_abelian(H):
        raise DecompositionError("H is not abelian")
    if is_abelian(K):
        raise DecompositionError("K is abelian")
    if not is_normal(G, H):
        raise DecompositionError("H is not normal")
    if not is_normal(G, K):
        raise DecompositionError("K is not normal")
    if (H.mask & K.mask).sum() != 1:
        raise DecompositionError("H and K intersect non-trivially")
    if H.order * K.order != G.order:
        raise DecompositionError("HK is not all of G")
    prods = G.mult[np.ix_(H.array, K.array)]
    if not np.array_equal(prods, G.mult[np.ix_(K.array, H.array)].T):
        raise DecompositionError("H and K do not commute elementwise")
    h_part = np.empty(G.order, dtype=np.int64)
    k_part = np.empty(G.order, dtype=np.int64)
    h_part[prods.ravel()] = np.repeat(H.array, K.order)
    k_part[prods.ravel()] = np.tile(K.array, H.order)
    return DirectDecomposition(G, H, K, h_part, k_part)


def _complements(Q: FiniteGroup, Hbar: list[int]) -> list[np.ndarray]:
    """Masks of all complements of the subgroup ``Hbar`` in abelian ``Q``.

    Complements are the kernels of retractions ``Q -> Hbar``; these are
    enumerated as homomorphisms from an invariant-factor basis of Q.
    """
    inv = abelian_invariants(Q)
    coord = abelian_coordinates(Q, inv)
    coords = np.array([coord[x] for x in range(Q.order)], dtype=np.int64).reshape(Q.order, -1)
    hmask = np.zeros(Q.order, dtype=bool)
    hmask[Hbar] = True
    horders = Q.element_orders[Hbar]
    choices = [[h for h, o in zip(Hbar, horders) if d % o == 0] for d in inv.factors]
    hb = np.asarray(Hbar, dtype=np.int64)
    out = []
    for images in itertools.product(*choices):
        # evaluate x -> prod images[i]^coords[x, i]
        val = np.zeros(Q.order, dtype=np.int64)
        for i, im in enumerate(images):
            pw = np.zeros(inv.factors[i], dtype=np.int64)
            for e in range(1, inv.factors[i]):
                pw[e] = Q.mult[pw[e - 1], im]
            val = Q.mult[val, pw[coords[:, i]]].astype(np.int64)
        if np.array_equal(val[hb], hb):
            out.append(val == 0)
    return out


def decompositions_with_factor(G: FiniteGroup, H: Subgroup, derived: Subgroup,
                               Q_data=None, *, first_only: bool = False) -> list[DirectDecomposition]:
    """Decompositions ``G = H x K`` with the given central H, sorted by K."""
    if (H.mask & derived.mask).sum() != 1:
        return []
    Q, coset, reps = Q_data or quotient(G, derived)
    Hbar = sorted({int(coset[h]) for h in H.elements})
    candidates = sorted(tuple(int(x) for x in np.flatnonzero(kbar[coset]))
                        for kbar in _complements(Q, Hbar))
    found = []
    for elems in candidates:
        try:
            found.append(_verify(G, H, Subgroup(G, elems)))
        except DecompositionError:
            continue
        if first_only:
            break
    return found


def find_abelian_direct_factor(G: FiniteGroup) -> DirectDecomposition | None:
    """First decomposition in canonical order, or None if purely non-abelian.

    Canonical order: smallest ``|H|``, then smallest element set of H,
    then of K.
    """
    if G.is_abelian:
        raise DecompositionError(f"{G.name} is abelian; the theorem needs a non-abelian group")
    if G.prime is None:
        raise DecompositionError(f"{G.name} is not a p-group")
    Z = center(G)
    D = derived_subgroup(G)
    Q_data = quotient(G, D)
    for layer in abelian_subgroups_by_order(Z):
        for H in layer:
            if H.is_trivial:
                continue
            decs = decompositions_with_factor(G, H, D, Q_data, first_only=True)
            if decs:
                return decs[0]
    return None


def is_purely_nonabelian(G: FiniteGroup) -> bool:
    return find_abelian_direct_factor(G) is None


def fold_multifactor(G: FiniteGroup, factor_gens) -> DirectDecomposition:
    """Fold ``G = H1 x H2 x ... x Hn`` into ``H1 x (H2 ... Hn)``."""
    factor_gens = [list(f) for f in factor_gens]
    if len(factor_gens) < 2:
        raise DecompositionError("need at least two factors")
    factors = [closure(G, f) for f in factor_gens]
    if factors[0].is_trivial or not is_abelian(factors[0]):
        raise DecompositionError("first factor must be non-trivial abelian")
    span = closure(G, [])
    for i, F in enumerate(factors):
        if i and is_abelian(F):
            raise DecompositionError(f"factor {i + 1} must be non-abelian")
        if not is_normal(G, F):
            raise DecompositionError(f"factor {i + 1} is not normal")
        if i and (span.mask & F.mask).sum() != 1:
            raise DecompositionError(f"factor {i + 1} meets the product of the earlier factors")
        span = closure(G, span.elements + F.elements)
    K_gens = [x for f in factor_gens[1:] for x in f]
    return verify_decomposition(G, factor_gens[0], K_gens)
