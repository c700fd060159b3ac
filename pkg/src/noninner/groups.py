"""Finite groups as fully materialized Cayley tables.

Every group is stored as an ``n x n`` table of element indices with the
identity at index 0.  Groups are immutable once built; everything else in
the package is a read-only query against these tables.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence, Union

import numpy as np
from sympy import factorint

DEFAULT_ORDER_CAP = 10_000


class GroupError(ValueError):
    """Raised when a group spec cannot be turned into a valid group."""


def _table_dtype(n: int):
    return np.uint16 if n <= np.iinfo(np.uint16).max else np.int32


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group on the element indices ``0..n-1``.

    ``gen_names`` maps generator names to element indices; when every label
    is a word in those names, :func:`evaluate_word` inverts ``labels``.
    """

    name: str
    mult: np.ndarray
    inv: np.ndarray
    generators: tuple[int, ...]
    labels: tuple[str, ...]
    gen_names: dict[str, int] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @cached_property
    def prime(self) -> int | None:
        """The prime ``p`` when the order is a power of ``p``, else None."""
        f = factorint(self.order)
        return next(iter(f)) if len(f) == 1 else None

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        return _readonly(_element_orders(self.mult, np.arange(self.order)))

    def mul(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = int(self.mult[out, x])
        return out

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        out, base = 0, int(x)
        while k:
            if k & 1:
                out = int(self.mult[out, base])
            base = int(self.mult[base, base])
            k >>= 1
        return out

    def power_map(self, k: int) -> np.ndarray:
        """Vector of ``x**k`` for every element ``x`` (``k >= 0``)."""
        idx = np.arange(self.order)
        out = np.zeros(self.order, dtype=np.int64)
        base = idx.copy()
        while k:
            if k & 1:
                out = self.mult[out, base].astype(np.int64)
            base = self.mult[base, base].astype(np.int64)
            k >>= 1
        return out

    def label(self, x: int) -> str:
        return self.labels[int(x)]

    def element(self, ref: Union[int, str]) -> int:
        """Resolve an element index, label, or generator word."""
        if isinstance(ref, (int, np.integer)):
            if not 0 <= ref < self.order:
                raise IndexError(f"element index {ref} out of range")
            return int(ref)
        if ref in self.index_of:
            return self.index_of[ref]
        return evaluate_word(self, ref)


def _element_orders(mult: np.ndarray, elems: np.ndarray) -> np.ndarray:
    elems = np.asarray(elems, dtype=np.int64)
    orders = np.zeros(len(elems), dtype=np.int64)
    cur = elems.copy()
    k = 1
    pending = np.ones(len(elems), dtype=bool)
    while pending.any():
        done = pending & (cur == 0)
        orders[done] = k
        pending &= ~done
        cur = mult[cur, elems].astype(np.int64)
        k += 1
    return orders


def element_order(G: FiniteGroup, x: int) -> int:
    return int(G.element_orders[x])


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup given by its sorted element indices in ``parent``."""

    parent: FiniteGroup
    elements: tuple[int, ...]
    generators: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    @cached_property
    def array(self) -> np.ndarray:
        return _readonly(np.array(self.elements, dtype=np.int64))

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.elements)] = True
        return _readonly(m)

    def issubset(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.array].all())

    @cached_property
    def is_trivial(self) -> bool:
        return self.order == 1

    def as_group(self, name: str | None = None) -> tuple[FiniteGroup, np.ndarray]:
        """Return the subgroup as a standalone group plus the embedding array.

        Local index ``i`` corresponds to parent element ``embedding[i]``;
        local 0 is the identity because parent 0 is the smallest element.
        """
        emb = self.array
        local = np.full(self.parent.order, -1, dtype=np.int64)
        local[emb] = np.arange(len(emb))
        sub = self.parent.mult[np.ix_(emb, emb)]
        mult = local[sub].astype(_table_dtype(len(emb)))
        inv = local[self.parent.inv[emb]].astype(_table_dtype(len(emb)))
        labels = tuple(self.parent.labels[i] for i in emb)
        gens = tuple(int(local[g]) for g in self.generators)
        G = FiniteGroup(
            name or f"sub({self.parent.name})",
            _readonly(mult),
            _readonly(inv),
            gens,
            labels,
        )
        return G, emb


def _as_index_list(seed: Iterable[int]) -> list[int]:
    return sorted({int(s) for s in seed})


def closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``seed``."""
    seed = _as_index_list(seed)
    for s in seed:
        if not 0 <= s < G.order:
            raise IndexError(f"element index {s} out of range for order {G.order}")
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens: list[int] = []
    for s in seed:
        if mask[s]:
            continue
        gens.append(s)
        mask = _grow(G, mask, gens)
    return Subgroup(G, tuple(int(i) for i in np.flatnonzero(mask)), tuple(seed))


def _grow(G: FiniteGroup, mask: np.ndarray, gens: Sequence[int]) -> np.ndarray:
    # Closing the current set under right multiplication by the generators
    # yields the generated subgroup since the group is finite.
    mask = mask.copy()
    frontier = np.flatnonzero(mask)
    g = np.asarray(gens, dtype=np.int64)
    while frontier.size:
        nxt = np.unique(G.mult[np.ix_(frontier, g)].ravel())
        nxt = nxt[~mask[nxt]]
        mask[nxt] = True
        frontier = nxt
    return mask


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,), ())


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)), tuple(G.generators))


def subgroup_from_mask(G: FiniteGroup, mask: np.ndarray, generators=()) -> Subgroup:
    return Subgroup(G, tuple(int(i) for i in np.flatnonzero(mask)), tuple(generators))


def small_generating_set(S: Subgroup) -> tuple[int, ...]:
    """Greedy generating set, scanning elements in index order."""
    G = S.parent
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    gens: list[int] = []
    for x in S.elements:
        if not mask[x]:
            gens.append(x)
            mask = _grow(G, mask, gens)
    return tuple(gens)


def bfs_tree(G: FiniteGroup, gens: Sequence[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spanning tree of the right Cayley graph rooted at the identity.

    Returns ``(order, parent, via)`` where ``order`` lists the reached
    elements in BFS order and ``x == parent[x] * gens[via[x]]``.
    """
    parent = np.full(G.order, -1, dtype=np.int64)
    via = np.full(G.order, -1, dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    seen[0] = True
    visit = [0]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for j, g in enumerate(gens):
            y = int(G.mult[x, g])
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                via[y] = j
                visit.append(y)
                queue.append(y)
    return np.array(visit, dtype=np.int64), parent, via


def extend_homomorphism(
    G: FiniteGroup, gens: Sequence[int], images: Sequence[int], target: FiniteGroup
) -> np.ndarray | None:
    """Extend ``gens[j] -> images[j]`` to a homomorphism ``G -> target``.

    Returns the image table, or None when the assignment does not extend
    (the generators do not generate ``G`` or some relation is violated).
    """
    visit, parent, via = bfs_tree(G, gens)
    if len(visit) != G.order:
        return None
    img = np.zeros(G.order, dtype=np.int64)
    ims = np.asarray(images, dtype=np.int64)
    for x in visit[1:]:
        img[x] = target.mult[img[parent[x]], ims[via[x]]]
    for j, g in enumerate(gens):
        lhs = img[G.mult[:, g].astype(np.int64)]
        rhs = target.mult[img, ims[j]]
        if not np.array_equal(lhs, rhs):
            return None
    return img


# ---------------------------------------------------------------------------
# Group specs


@dataclass(frozen=True)
class Cyclic:
    order: int
    name: str | None = None


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple


@dataclass(frozen=True)
class Semidirect:
    """``base`` abelian, ``actor`` cyclic.

    ``action[j][i]`` is the image of base generator ``i`` under actor
    generator ``j``: a word string such as ``"r^3"`` or an exponent vector
    over the base generators.  Actor element ``t`` acts by ``b -> t b t^-1``.
    """

    base: object
    actor: object
    action: tuple


@dataclass(frozen=True)
class Permutation:
    """Permutation group on ``1..degree``; ``x*y`` applies ``x`` first."""

    degree: int
    generators: tuple[str, ...]
    names: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Builtin:
    name: str


GroupSpec = Union[Cyclic, DirectProduct, Semidirect, Permutation, Builtin]


def build_group(spec: GroupSpec, *, order_cap: int = DEFAULT_ORDER_CAP, name: str | None = None,
                validate: bool = True) -> FiniteGroup:
    """Build and (by default) validate the group described by ``spec``."""
    counter = itertools.count(1)
    G = _build(spec, order_cap, counter)
    if name is not None:
        G = FiniteGroup(name, G.mult, G.inv, G.generators, G.labels, G.gen_names)
    if validate:
        check_group_axioms(G)
    return G


def _auto_name(counter) -> str:
    return f"g{next(counter)}"


def _build(spec, cap: int, counter) -> FiniteGroup:
    if isinstance(spec, Cyclic):
        return cyclic_group(spec.order, spec.name or _auto_name(counter), order_cap=cap)
    if isinstance(spec, DirectProduct):
        if not spec.factors:
            raise GroupError("direct product needs at least one factor")
        G = _build(spec.factors[0], cap, counter)
        for f in spec.factors[1:]:
            G, _, _ = direct_product(G, _build(f, cap, counter), order_cap=cap)
        return G
    if isinstance(spec, Semidirect):
        base = _build(spec.base, cap, counter)
        actor = _build(spec.actor, cap, counter)
        return semidirect_product(base, actor, spec.action, order_cap=cap)
    if isinstance(spec, Permutation):
        return permutation_group(spec.degree, spec.generators, spec.names, order_cap=cap,
                                 counter=counter)
    if isinstance(spec, Builtin):
        from .catalogue import builtin_spec

        G = _build(builtin_spec(spec.name), cap, itertools.count(1))
        return FiniteGroup(spec.name, G.mult, G.inv, G.generators, G.labels, G.gen_names)
    raise GroupError(f"unknown group spec node {spec!r}")


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise GroupError(f"group order {n} exceeds the order cap {cap}")


def _power_label(name: str, k: int) -> str:
    if k == 0:
        return "1"
    return name if k == 1 else f"{name}^{k}"


def cyclic_group(n: int, name: str = "g", *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"cyclic group order must be positive, got {n}")
    _check_cap(n, order_cap)
    i = np.arange(n)
    dt = _table_dtype(n)
    mult = ((i[:, None] + i[None, :]) % n).astype(dt)
    inv = ((-i) % n).astype(dt)
    gens = (1,) if n > 1 else ()
    names = {name: 1} if n > 1 else {}
    labels = tuple(_power_label(name, k) for k in range(n))
    return FiniteGroup(f"C{n}", _readonly(mult), _readonly(inv), gens, labels, names)


def _join_labels(left: str, right: str, left_id: str, right_id: str) -> str:
    if left == left_id:
        return right if right != right_id else "1"
    if right == right_id:
        return left
    return f"{left}*{right}"


def _merge_names(A: FiniteGroup, B: FiniteGroup, embA, embB) -> dict[str, int] | None:
    names = {k: int(embA[v]) for k, v in A.gen_names.items()}
    for k, v in B.gen_names.items():
        if k in names:
            return None
        names[k] = int(embB[v])
    return names


def _pair_labels(A_labels, B_labels) -> tuple[str, ...]:
    words = tuple(_join_labels(a, b, A_labels[0], B_labels[0]) for a in A_labels for b in B_labels)
    if len(set(words)) == len(words):
        return words
    return tuple(f"({a},{b})" for a in A_labels for b in B_labels)


def direct_product(A: FiniteGroup, B: FiniteGroup, *, order_cap: int = DEFAULT_ORDER_CAP):
    """External direct product ``A x B`` with its two embeddings.

    Element ``(a, b)`` has index ``a * |B| + b``.
    """
    na, nb = A.order, B.order
    n = na * nb
    _check_cap(n, order_cap)
    Am = A.mult.astype(np.int64)
    Bm = B.mult.astype(np.int64)
    mult = (Am[:, None, :, None] * nb + Bm[None, :, None, :]).reshape(n, n)
    ia = np.repeat(A.inv.astype(np.int64), nb)
    ib = np.tile(B.inv.astype(np.int64), na)
    inv = ia * nb + ib
    embA = np.arange(na) * nb
    embB = np.arange(nb)
    gens = tuple(int(embA[g]) for g in A.generators) + tuple(int(embB[g]) for g in B.generators)
    names = _merge_names(A, B, embA, embB)
    labels = _pair_labels(A.labels, B.labels)
    if names is None:
        names = {}
    dt = _table_dtype(n)
    G = FiniteGroup(f"{A.name}x{B.name}", _readonly(mult.astype(dt)), _readonly(inv.astype(dt)),
                    gens, labels, names)
    return G, _readonly(embA), _readonly(embB)


def evaluate_word(G: FiniteGroup, word: str) -> int:
    """Evaluate a word such as ``"x^2*c^-1*y"`` in the named generators."""
    word = word.strip()
    if word in ("", "1", "e"):
        return 0
    out = 0
    for token in word.split("*"):
        m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(-?\d+))?\s*", token)
        if not m or m.group(1) not in G.gen_names:
            raise GroupError(f"cannot parse word {word!r} over generators "
                             f"{sorted(G.gen_names)}")
        k = int(m.group(2)) if m.group(2) else 1
        out = int(G.mult[out, G.power(G.gen_names[m.group(1)], k)])
    return out


def _word_image(base: FiniteGroup, word) -> int:
    if isinstance(word, str):
        return evaluate_word(base, word)
    exps = list(word)
    if len(exps) != len(base.generators):
        raise GroupError(f"exponent vector {exps} does not match the "
                         f"{len(base.generators)} base generators")
    out = 0
    for g, e in zip(base.generators, exps):
        out = int(base.mult[out, base.power(g, int(e))])
    return out


def semidirect_product(base: FiniteGroup, actor: FiniteGroup, action,
                       *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """``base`` (abelian, normal) by cyclic ``actor``.

    Element ``(b, t)`` means ``b*t``, has index ``b * |actor| + t`` and
    multiplies as ``(b1, t1)(b2, t2) = (b1 * phi_t1(b2), t1 * t2)``.
    """
    if not base.is_abelian:
        raise GroupError("semidirect base must be abelian")
    if not actor.is_abelian or actor.element_orders.max() != actor.order:
        raise GroupError("semidirect actor must be cyclic")
    nb, nt = base.order, actor.order
    n = nb * nt
    _check_cap(n, order_cap)
    action = [list(a) for a in action]
    if len(action) != len(actor.generators):
        raise GroupError(f"action lists {len(action)} generator images, actor has "
                         f"{len(actor.generators)} generators")
    gen_auts = []
    for j, images in enumerate(action):
        if len(images) != len(base.generators):
            raise GroupError(f"action of actor generator {j} gives {len(images)} images for "
                             f"{len(base.generators)} base generators")
        ims = [_word_image(base, w) for w in images]
        aut = extend_homomorphism(base, base.generators, ims, base)
        if aut is None or len(np.unique(aut)) != nb:
            raise GroupError(f"action of actor generator {j} is not an automorphism of the base")
        gen_auts.append(aut)
    # phi(t * gen) = phi(t) o phi(gen), checked on every Cayley-graph edge.
    visit, parent, via = bfs_tree(actor, actor.generators)
    phi = np.zeros((nt, nb), dtype=np.int64)
    phi[0] = np.arange(nb)
    for t in visit[1:]:
        phi[t] = phi[parent[t]][gen_auts[via[t]]]
    for t in range(nt):
        for j, g in enumerate(actor.generators):
            if not np.array_equal(phi[int(actor.mult[t, g])], phi[t][gen_auts[j]]):
                raise GroupError("action is not a homomorphism from the actor to Aut(base)")
    Bm = base.mult.astype(np.int64)
    Tm = actor.mult.astype(np.int64)
    b1 = np.repeat(np.arange(nb), nt)
    t1 = np.tile(np.arange(nt), nb)
    # (b1,t1)(b2,t2) = (b1 * phi[t1][b2], t1 t2)
    left_b = Bm[b1[:, None], phi[t1][:, b1]]
    mult = left_b * nt + Tm[t1[:, None], t1[None, :]]
    tinv = actor.inv.astype(np.int64)
    binv = base.inv.astype(np.int64)
    # (b,t)^-1 = (phi_{t^-1}(b^-1), t^-1)
    inv = phi[tinv[t1], binv[b1]] * nt + tinv[t1]
    embB = np.arange(nb) * nt
    embT = np.arange(nt)
    gens = tuple(int(embB[g]) for g in base.generators) + tuple(int(embT[g]) for g in actor.generators)
    names = _merge_names(base, actor, embB, embT) or {}
    labels = _pair_labels(base.labels, actor.labels)
    dt = _table_dtype(n)
    return FiniteGroup(f"({base.name}):{actor.name}", _readonly(mult.astype(dt)),
                       _readonly(inv.astype(dt)), gens, labels, names)


def _parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    perm = list(range(degree))
    text = text.strip()
    if text in ("", "()"):
        return tuple(perm)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if re.sub(r"\([^()]*\)", "", text).strip():
        raise GroupError(f"cannot parse permutation {text!r}")
    for cyc in cycles:
        pts = [int(p) for p in re.split(r"[,\s]+", cyc.strip()) if p]
        if len(set(pts)) != len(pts):
            raise GroupError(f"repeated point in cycle ({cyc})")
        for p in pts:
            if not 1 <= p <= degree:
                raise GroupError(f"point {p} outside degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if perm[a - 1] != a - 1:
                raise GroupError(f"point {a} appears in two cycles of {text!r}")
            perm[a - 1] = b - 1
    return tuple(perm)


def _cycle_string(perm: Sequence[int]) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        out.append("(" + ",".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "()"


def permutation_group(degree: int, generators: Sequence[str], names=None,
                      *, order_cap: int = DEFAULT_ORDER_CAP, counter=None) -> FiniteGroup:
    if degree < 1:
        raise GroupError(f"permutation degree must be positive, got {degree}")
    gen_perms = [_parse_cycles(g, degree) for g in generators]
    if names is not None and len(names) != len(gen_perms):
        raise GroupError("permutation generator names do not match the generators")
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gen_perms:
            y = tuple(g[x[i]] for i in range(degree))  # apply x, then g
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
                if len(elements) > order_cap:
                    raise GroupError(f"permutation group exceeds the order cap {order_cap}")
    n = len(elements)
    gens = tuple(index[g] for g in gen_perms)
    # Right-multiplication columns by generators, then every column along a BFS tree.
    right = np.array([[index[tuple(g[x[i]] for i in range(degree))] for g in gen_perms]
                      for x in elements], dtype=np.int64).reshape(n, len(gen_perms))
    mult = np.zeros((n, n), dtype=np.int64)
    mult[:, 0] = np.arange(n)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        y = queue.popleft()
        for j in range(len(gen_perms)):
            z = int(right[y, j])
            if not seen[z]:
                seen[z] = True
                mult[:, z] = right[mult[:, y], j]
                queue.append(z)
    inv = np.argmax(mult == 0, axis=1)
    if names is None:
        names = [f"g{next(counter)}" if counter is not None else f"g{j + 1}" for j in range(len(gens))]
    gen_names = {nm: g for nm, g in zip(names, gens)}
    dt = _table_dtype(n)
    return FiniteGroup(f"Perm{degree}", _readonly(mult.astype(dt)), _readonly(inv.astype(dt)),
                       gens, tuple(_cycle_string(e) for e in elements), gen_names)


# ---------------------------------------------------------------------------
# Validation


def check_group_axioms(G: FiniteGroup, *, samples: int = 1_000_000, seed: int = 0) -> None:
    """Raise :class:`GroupError` unless ``G`` satisfies the table invariants.

    Associativity is decided exactly with Light's test: checking
    ``(x*y)*g == x*(y*g)`` for all ``x, y`` and every generator ``g`` of a
    generating set suffices.  Above order 2000 a random-triple sample is
    run in addition.
    """
    n = G.order
    idx = np.arange(n)
    m = G.mult.astype(np.int64)
    if not (np.array_equal(m[0], idx) and np.array_equal(m[:, 0], idx)):
        raise GroupError("element 0 is not the identity")
    if not np.all(m[idx, G.inv.astype(np.int64)] == 0):
        raise GroupError("inverse table is wrong")
    for row in (m, m.T):
        if not np.all(np.sort(row, axis=1) == idx):
            raise GroupError("multiplication table is not a Latin square")
    if closure(G, G.generators).order != n:
        raise GroupError("generators do not generate the group")
    for g in G.generators:
        if not np.array_equal(m[m, g], m[idx[:, None], m[:, g][None, :]]):
            raise GroupError("multiplication is not associative")
    if n > 2000:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, n, size=(3, samples))
        if not np.array_equal(m[m[x, y], z], m[x, m[y, z]]):
            raise GroupError("multiplication is not associative")


def is_prime_power(n: int) -> bool:
    return len(factorint(n)) == 1


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
