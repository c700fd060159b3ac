"""Exhaustive checks of the claimed properties of a candidate map."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .construct import GroupMap, build_alpha, choose_alpha_data, displacements
from .decompose import DecompositionError, find_abelian_direct_factor
from .groups import FiniteGroup, GroupError, Subgroup, small_generating_set
from .structure import agemo, center, derived_subgroup, frattini

EXHAUSTIVE_LIMIT = 4096

CHECK_NAMES = ("is_automorphism", "is_central", "has_order_p", "is_non_inner",
               "fixes_derived", "fixes_agemo", "fixes_frattini")


def is_automorphism(phi: GroupMap) -> bool:
    G = phi.source
    img = np.asarray(phi.image, dtype=np.int64)
    if len(np.unique(img)) != G.order or img[0] != 0:
        return False
    m = G.mult
    if G.order <= EXHAUSTIVE_LIMIT:
        return bool(np.array_equal(img[m], m[img[:, None], img[None, :]]))
    # phi(x g) = phi(x) phi(g) on every Cayley-graph edge forces a homomorphism
    for g in G.generators:
        if not np.array_equal(img[m[:, g]], m[img, img[g]]):
            return False
    return True


def is_central(phi: GroupMap, Z: Subgroup | None = None) -> bool:
    Z = center(phi.source) if Z is None else Z
    return bool(Z.mask[displacements(phi)].all())


def map_order(phi: GroupMap) -> int:
    """Order of a bijective map, as the lcm of its cycle lengths."""
    img = np.asarray(phi.image, dtype=np.int64)
    seen = np.zeros(len(img), dtype=bool)
    out = 1
    for start in range(len(img)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = int(img[x])
            k += 1
        out = lcm(out, k)
    return out


def is_inner(phi: GroupMap, Z: Subgroup | None = None) -> int | None:
    """A witness ``y`` with ``phi(x) = y^-1 x y`` for all x, or None.

    Candidates run over one representative per coset of Z(G).
    """
    G = phi.source
    Z = center(G) if Z is None else Z
    m = G.mult
    inv = G.inv
    reps = np.unique(m[:, Z.array].min(axis=1))
    gens = np.asarray(G.generators, dtype=np.int64)
    img = np.asarray(phi.image, dtype=np.int64)
    if gens.size:
        conj = m[m[inv[reps][:, None], gens[None, :]], reps[:, None]]
        hits = reps[(conj == img[gens][None, :]).all(axis=1)]
    else:
        hits = reps
    for y in hits:
        y = int(y)
        if np.array_equal(m[m[inv[y], :], y], img):
            return y
    return None


def fixes_subgroup_elementwise(phi: GroupMap, S: Subgroup) -> bool:
    return bool(np.array_equal(phi.image[S.array], S.array))


@dataclass
class TheoremReport:
    group: str
    order: int
    prime: int | None
    applicable: bool
    decomposition: dict | None = None
    alpha: dict | None = None
    checks: dict | None = None
    inner_witness: str | None = None
    fixed_points: int | None = None
    oracle: bool | None = None
    timings_ms: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.applicable and self.checks and all(self.checks.values())
                    and self.oracle is not False)

    def to_dict(self, *, timings: bool = False) -> dict:
        alpha = None
        if self.alpha is not None:
            alpha = dict(self.alpha)
            alpha["fixed_points"] = self.fixed_points
            alpha["inner_witness"] = self.inner_witness
        return {
            "group": self.group,
            "order": self.order,
            "prime": self.prime,
            "applicable": self.applicable,
            "decomposition": self.decomposition,
            "alpha": alpha,
            "checks": self.checks,
            "oracle": self.oracle,
            "timings_ms": dict(self.timings_ms) if timings else {},
        }


def check_map(phi: GroupMap, p: int, *, Z=None, derived=None, pth=None, phi_sub=None) -> tuple[dict, int | None]:
    """The seven named verdicts for ``phi`` plus any inner witness."""
    G = phi.source
    Z = center(G) if Z is None else Z
    derived = derived_subgroup(G) if derived is None else derived
    pth = agemo(G) if pth is None else pth
    phi_sub = frattini(G) if phi_sub is None else phi_sub
    auto = is_automorphism(phi)
    witness = is_inner(phi, Z) if auto else None
    checks = {
        "is_automorphism": auto,
        "is_central": auto and is_central(phi, Z),
        "has_order_p": auto and map_order(phi) == p,
        "is_non_inner": auto and witness is None,
        "fixes_derived": fixes_subgroup_elementwise(phi, derived),
        "fixes_agemo": fixes_subgroup_elementwise(phi, pth),
        "fixes_frattini": fixes_subgroup_elementwise(phi, phi_sub),
    }
    return checks, witness


def run_theorem_pipeline(G: FiniteGroup, *, alpha_overrides: dict | None = None,
                         with_oracle: bool = False) -> TheoremReport:
    """Decompose, construct the automorphism and check every claimed property."""
    if G.prime is None:
        raise GroupError(f"{G.name} has order {G.order}, not a prime power")
    if G.is_abelian:
        raise DecompositionError(f"{G.name} is abelian; the theorem needs a non-abelian group")
    p = G.prime
    rep = TheoremReport(G.name, G.order, p, applicable=False)
    t0 = time.perf_counter()
    dec = find_abelian_direct_factor(G)
    rep.timings_ms["decompose"] = int((time.perf_counter() - t0) * 1000)
    if dec is None:
        return rep
    rep.applicable = True
    rep.decomposition = dec.summary()

    t0 = time.perf_counter()
    spec = choose_alpha_data(dec, **(alpha_overrides or {}))
    alpha = build_alpha(dec, spec)
    rep.timings_ms["construct"] = int((time.perf_counter() - t0) * 1000)
    rep.alpha = alpha_summary(G, dec, spec, alpha)

    t0 = time.perf_counter()
    checks, witness = check_map(alpha, p)
    rep.checks = checks
    rep.inner_witness = None if witness is None else G.labels[witness]
    rep.fixed_points = int((alpha.image == np.arange(G.order)).sum())
    rep.timings_ms["verify"] = int((time.perf_counter() - t0) * 1000)

    if with_oracle:
        from .oracle import ORACLE_CAP, oracle_cross_check

        if G.order <= ORACLE_CAP:
            t0 = time.perf_counter()
            rep.oracle = oracle_cross_check(G, alpha)
            rep.timings_ms["oracle"] = int((time.perf_counter() - t0) * 1000)
    return rep


def alpha_summary(G: FiniteGroup, dec, spec, alpha: GroupMap) -> dict:
    lab = G.labels
    gens = sorted(set(dec.h_generators) | set(dec.k_generators) | set(G.generators))
    return {
        "M_generators": [lab[x] for x in small_generating_set(spec.M)],
        "M_order": spec.M.order,
        "h": lab[spec.h],
        "g": lab[spec.g],
        "images": {lab[x]: lab[int(alpha.image[x])] for x in gens},
    }

