"""The central automorphism ``x -> x * g^nu(x)`` built from ``G = H x K``.

Here M is a maximal subgroup of H, h an element of H outside M, g a
non-identity element of order p in Z(K), and ``nu: G -> Z/p`` reads off
the exponent i in ``x = m h^i k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decompose import DirectDecomposition
from .groups import FiniteGroup, GroupError, Subgroup, closure, subgroup_from_mask
from .structure import centralizer_in, maximal_subgroups, omega1


class AlphaSpecError(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class GroupMap:
    source: FiniteGroup
    target: FiniteGroup
    image: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def compose(self, other: "GroupMap") -> "GroupMap":
        """``self o other``."""
        return GroupMap(other.source, self.target, self.image[other.image])

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.image, np.arange(self.source.order)))

    def key(self) -> bytes:
        return np.asarray(self.image, dtype=np.int64).tobytes()


def identity_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(G, G, np.arange(G.order, dtype=np.int64))


def conjugation_map(G: FiniteGroup, y: int) -> GroupMap:
    """``x -> y^-1 x y``."""
    m = G.mult
    img = m[m[int(G.inv[y]), :], y]
    return GroupMap(G, G, img.astype(np.int64))


@dataclass(frozen=True, eq=False)
class AlphaSpec:
    M: Subgroup
    h: int
    g: int
    nu: np.ndarray
    p: int


def _exponent_map(dec: DirectDecomposition, M: Subgroup, h: int, p: int) -> np.ndarray:
    G = dec.group
    coset_of = np.full(G.order, -1, dtype=np.int64)
    hi = 0
    for i in range(p):
        coset_of[G.mult[hi, M.array].astype(np.int64)] = i
        hi = int(G.mult[hi, h])
    nu = coset_of[dec.h_part]
    if (nu < 0).any():
        raise AlphaSpecError("H is not M<h>")
    return nu


def choose_alpha_data(dec: DirectDecomposition, *, M: Subgroup | None = None,
                      h: int | None = None, g: int | None = None) -> AlphaSpec:
    """Canonical (M, h, g) unless pinned; pinned choices are validated."""
    G = dec.group
    p = G.prime
    if p is None:
        raise AlphaSpecError(f"{G.name} is not a p-group")
    maximals = maximal_subgroups(dec.H)
    if M is None:
        M = maximals[0]
    elif M not in maximals:
        raise AlphaSpecError("M must be a maximal subgroup of H")
    outside = [x for x in dec.H.elements if not M.mask[x]]
    if h is None:
        h = outside[0]
    elif h not in outside:
        raise AlphaSpecError("h must lie in H but not in M")
    omega = omega1(centralizer_in(dec.K))
    choices = [x for x in omega.elements if x != 0]
    if not choices:
        raise AlphaSpecError("Omega_1(Z(K)) is trivial; K cannot be a non-trivial p-group")
    if g is None:
        g = choices[0]
    elif g not in choices:
        raise AlphaSpecError("g must be a non-identity element of Ω₁(Z(K))")
    return AlphaSpec(M, int(h), int(g), _exponent_map(dec, M, int(h), p), p)


def subgroup_from_labels(G: FiniteGroup, refs) -> Subgroup:
    return closure(G, [G.element(r) for r in refs])


def build_alpha(dec: DirectDecomposition, spec: AlphaSpec) -> GroupMap:
    G = dec.group
    gpow = [0]
    for _ in range(spec.p - 1):
        gpow.append(int(G.mult[gpow[-1], spec.g]))
    gpow = np.asarray(gpow, dtype=np.int64)
    image = G.mult[np.arange(G.order), gpow[spec.nu]].astype(np.int64)
    return GroupMap(G, G, image)


def displacement(phi: GroupMap, x: int) -> int:
    G = phi.source
    return int(G.mult[G.inv[x], phi.image[x]])


def displacements(phi: GroupMap) -> np.ndarray:
    G = phi.source
    return G.mult[G.inv.astype(np.int64), phi.image].astype(np.int64)


def kernel_MK(dec: DirectDecomposition, spec: AlphaSpec) -> Subgroup:
    return subgroup_from_mask(dec.group, spec.nu == 0)
