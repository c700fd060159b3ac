"""Brute-force central and inner automorphisms for small groups.

Every central automorphism has the form ``x -> x f(x)`` for a homomorphism
``f: G -> Z(G)``.  Such f factor through ``G/G'``, so they are enumerated
from an invariant-factor basis of ``G/G'``: each basis element of order d
may go to any central element whose order divides d.  None of this reuses
the construction path; every enumerated map is re-verified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .construct import GroupMap, conjugation_map
from .groups import FiniteGroup, GroupError
from .structure import abelian_coordinates, abelian_invariants, center, derived_subgroup, quotient
from .verify import is_automorphism, is_central

ORACLE_CAP = 512


class OracleCapError(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class HomToCenter:
    image: np.ndarray


def _check_cap(G: FiniteGroup, cap: int) -> None:
    if G.order > cap:
        raise OracleCapError(f"order {G.order} exceeds the oracle cap {cap}")


def expected_hom_count(G: FiniteGroup) -> int:
    """``|Hom(G/G', Z(G))|`` from the invariant factors of both sides."""
    Q, _, _ = quotient(G, derived_subgroup(G))
    zf = abelian_invariants(center(G)).factors
    count = 1
    for d in abelian_invariants(Q).factors:
        for e in zf:
            count *= np.gcd(d, e)
    return int(count)


def enumerate_homs_to_center(G: FiniteGroup, *, cap: int = ORACLE_CAP) -> list[HomToCenter]:
    _check_cap(G, cap)
    if G.prime is None:
        raise GroupError(f"{G.name} is not a p-group")
    Z = center(G)
    Q, coset, _ = quotient(G, derived_subgroup(G))
    inv = abelian_invariants(Q)
    coord = abelian_coordinates(Q, inv)
    qc = np.array([coord[q] for q in range(Q.order)], dtype=np.int64).reshape(Q.order, -1)
    xc = qc[coset]
    zorders = G.element_orders[Z.array]
    choices = [[int(z) for z, o in zip(Z.array, zorders) if d % o == 0] for d in inv.factors]
    m = G.mult
    homs = []
    for images in itertools.product(*choices):
        f = np.zeros(G.order, dtype=np.int64)
        for i, z in enumerate(images):
            pw = np.zeros(inv.factors[i], dtype=np.int64)
            for e in range(1, inv.factors[i]):
                pw[e] = m[pw[e - 1], z]
            f = m[f, pw[xc[:, i]]].astype(np.int64)
        if not np.array_equal(f[m], m[f[:, None], f[None, :]]):
            raise AssertionError("enumerated map to the center is not a homomorphism")
        homs.append(HomToCenter(f))
    homs.sort(key=lambda h: tuple(h.image))
    return homs


def central_automorphisms(G: FiniteGroup, *, cap: int = ORACLE_CAP) -> list[GroupMap]:
    m = G.mult
    idx = np.arange(G.order)
    Z = center(G)
    out = []
    for f in enumerate_homs_to_center(G, cap=cap):
        img = m[idx, f.image].astype(np.int64)
        if len(np.unique(img)) != G.order:
            continue
        phi = GroupMap(G, G, img)
        if not (is_automorphism(phi) and is_central(phi, Z)):
            raise AssertionError("enumerated central map failed re-verification")
        out.append(phi)
    out.sort(key=lambda a: tuple(a.image))
    return out


def inner_automorphisms(G: FiniteGroup) -> list[GroupMap]:
    seen = {}
    for y in range(G.order):
        phi = conjugation_map(G, y)
        seen.setdefault(phi.key(), phi)
    return sorted(seen.values(), key=lambda a: tuple(a.image))


def iterate_order(phi: GroupMap, limit: int = 1_000_000) -> int:
    """Least k with ``phi^k`` the identity, by repeated composition."""
    ident = np.arange(phi.source.order)
    cur = np.asarray(phi.image, dtype=np.int64)
    k = 1
    while not np.array_equal(cur, ident):
        cur = phi.image[cur]
        k += 1
        if k > limit:
            raise GroupError("map order exceeds the iteration limit")
    return k


def oracle_cross_check(G: FiniteGroup, alpha: GroupMap, *, cap: int = ORACLE_CAP) -> bool:
    """``alpha`` is central, not inner, and of order p, all by enumeration."""
    _check_cap(G, cap)
    key = alpha.key()
    central = {a.key() for a in central_automorphisms(G, cap=cap)}
    inner = {a.key() for a in inner_automorphisms(G)}
    return key in central and key not in inner and iterate_order(alpha) == G.prime
