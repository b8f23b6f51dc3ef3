"""Explicit finite groups: permutations, Cayley tables, subgroups and the
usual constructions (closure, centralizers, normalizers, cores, quotients,
sections, direct and semidirect products).

Elements of a :class:`FiniteGroup` are the integers ``0..order-1`` with ``0``
the identity.  Multiplication is a numpy table; subgroups are sets of element
indices, mirrored as Python ``int`` bitmasks for cheap inclusion tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

DEFAULT_ORDER_BOUND = 5000

__all__ = [
    "GroupError",
    "OrderBoundError",
    "NotNormalError",
    "Permutation",
    "compose_permutations",
    "FiniteGroup",
    "SubgroupHandle",
    "QuotientMap",
    "Section",
    "generate_group",
    "group_from_table",
    "subgroup_closure",
    "centralizer",
    "normalizer",
    "normal_core",
    "normal_closure",
    "quotient_group",
    "direct_product",
    "semidirect_product",
    "section_group",
    "product_set",
    "join",
    "commutator_subgroup",
]


class GroupError(ValueError):
    """Invalid group data or an operation applied outside its domain."""


class OrderBoundError(GroupError):
    """A construction would exceed the configured element bound."""


class NotNormalError(GroupError):
    pass


# ---------------------------------------------------------------------------
# permutations

Permutation = tuple  # images of 0..degree-1, 0-based


def as_permutation(images: Iterable[int]) -> Permutation:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise GroupError(f"not a permutation: {list(p)}")
    return p


def compose_permutations(a: Sequence[int], b: Sequence[int]) -> Permutation:
    """Return ``a∘b``, i.e. the map ``x -> a[b[x]]``."""
    if len(a) != len(b):
        raise GroupError(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[x] for x in b)


def cycles_to_permutation(degree: int, *cycles: Sequence[int]) -> Permutation:
    images = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return as_permutation(images)


# ---------------------------------------------------------------------------
# bitmask helpers


def mask_of(indices) -> int:
    idx = np.asarray(indices, dtype=np.int64)
    if idx.size == 0:
        return 0
    flags = np.zeros(int(idx.max()) + 1, dtype=bool)
    flags[idx] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def indices_of(mask: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])


# ---------------------------------------------------------------------------
# groups


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``realization`` optionally holds one permutation per element (row ``i`` is
    the image list of element ``i``); it is kept for display and for parsing
    subgroup generators, never for arithmetic.

    Instances are immutable.  ``cache`` memoizes derived data (lattices,
    formation membership, ...); every cached value is a deterministic function
    of the group, so a concurrent double computation is harmless.
    """

    def __init__(self, table, *, generators=None, realization=None, label: str = ""):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n) or n == 0:
            raise GroupError("multiplication table must be a non-empty square")
        if not (np.array_equal(table[0], np.arange(n)) and np.array_equal(table[:, 0], np.arange(n))):
            raise GroupError("index 0 must be a two-sided identity")
        inv = np.argmax(table == 0, axis=1)
        if not np.all(table[np.arange(n), inv] == 0):
            raise GroupError("some element has no inverse")
        table.setflags(write=False)
        inv = inv.astype(np.int32)
        inv.setflags(write=False)
        self.table = table
        self.inverses = inv
        self.order = n
        self.label = label
        self.realization = None if realization is None else np.asarray(realization, dtype=np.int32)
        if generators is None:
            generators = _greedy_generators(self)
        self.generators = [int(g) for g in generators]
        self.cache: dict = {}

    def __repr__(self):
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    def __len__(self):
        return self.order

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.table[self.table[g, x], self.inverses[g]])

    @cached_property
    def conjugation_table(self) -> np.ndarray:
        # row g is the permutation x -> g x g^-1
        t = self.table[self.table, self.inverses[:, None]]
        t.setflags(write=False)
        return t

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        power = np.arange(n)
        k = 1
        while (orders == 0).any():
            hit = (power == 0) & (orders == 0)
            orders[hit] = k
            power = self.table[power, np.arange(n)]
            k += 1
        return orders

    @cached_property
    def whole(self) -> "SubgroupHandle":
        return SubgroupHandle(self, frozenset(range(self.order)))

    @cached_property
    def trivial(self) -> "SubgroupHandle":
        return SubgroupHandle(self, frozenset([0]))

    def subgroup(self, members) -> "SubgroupHandle":
        """Wrap a member set already known to be a subgroup."""
        return SubgroupHandle(self, frozenset(int(x) for x in members))

    def subgroup_from_mask(self, mask: int) -> "SubgroupHandle":
        return SubgroupHandle(self, frozenset(indices_of(mask, self.order).tolist()))

    def element_of_permutation(self, images: Sequence[int]) -> int:
        if self.realization is None:
            raise GroupError(f"{self.label} has no permutation realization")
        images = tuple(images)
        lookup = self.cache.get("perm_index")
        if lookup is None:
            lookup = {tuple(row): i for i, row in enumerate(self.realization.tolist())}
            self.cache["perm_index"] = lookup
        try:
            return lookup[images]
        except KeyError:
            raise GroupError(f"{list(images)} is not an element of {self.label}") from None

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def fingerprint(self) -> dict:
        return {"order": self.order, "abelian": self.is_abelian(), "exponent": self.exponent()}


def _greedy_generators(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    inside = np.zeros(G.order, dtype=bool)
    inside[0] = True
    # high-order elements first keeps the list short
    for x in np.argsort(-G.element_orders, kind="stable"):
        if not inside[x]:
            gens.append(int(x))
            inside = _close(G.table, gens)
            if inside.all():
                break
    return gens


def _close(table: np.ndarray, gens) -> np.ndarray:
    """Boolean membership vector of the subgroup generated by ``gens``."""
    n = table.shape[0]
    inside = np.zeros(n, dtype=bool)
    inside[0] = True
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    if gens.size == 0:
        return inside
    frontier = np.array([0])
    while frontier.size:
        nxt = table[np.ix_(frontier, gens)].ravel()
        nxt = np.unique(nxt[~inside[nxt]])
        inside[nxt] = True
        frontier = nxt
    return inside


@dataclass(frozen=True, eq=True)
class SubgroupHandle:
    """A subgroup of ``parent`` stored as its set of member indices."""

    parent: FiniteGroup = field(repr=False)
    members: frozenset

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __repr__(self):
        return f"<subgroup of {self.parent.label} order {self.order}>"

    @cached_property
    def mask(self) -> int:
        return mask_of(sorted(self.members))

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(sorted(self.members), dtype=np.int64)
        a.setflags(write=False)
        return a

    @cached_property
    def sort_key(self) -> tuple:
        return (len(self.members), tuple(sorted(self.members)))

    def __le__(self, other: "SubgroupHandle") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "SubgroupHandle") -> bool:
        return self.mask != other.mask and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __and__(self, other: "SubgroupHandle") -> "SubgroupHandle":
        return SubgroupHandle(self.parent, self.members & other.members)

    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def conjugate(self, g: int) -> "SubgroupHandle":
        """``g H g^-1``."""
        row = self.parent.conjugation_table[g]
        return SubgroupHandle(self.parent, frozenset(row[self.array].tolist()))

    def is_normalized_by(self, elements) -> bool:
        ct = self.parent.conjugation_table
        m = self.mask
        for g in elements:
            if mask_of(ct[g][self.array]) != m:
                return False
        return True

    def is_normal_in(self, T: "SubgroupHandle | None" = None) -> bool:
        if T is None:
            T = self.parent.whole
        # generators of T suffice
        return self.is_normalized_by(_subgroup_generators(T))

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group; ``embedding`` maps back."""
        cached = self.parent.cache.get(("as_group", self.mask))
        if cached is not None:
            return cached
        emb = self.array
        pos = np.full(self.parent.order, -1, dtype=np.int64)
        pos[emb] = np.arange(len(emb))
        table = pos[self.parent.table[np.ix_(emb, emb)]]
        real = None if self.parent.realization is None else self.parent.realization[emb]
        label = self.parent.label if self.is_whole() else f"{self.parent.label}[{self.order}]"
        H = FiniteGroup(table, realization=real, label=label)
        H.embedding = emb
        self.parent.cache[("as_group", self.mask)] = H
        return H

    def generators(self) -> list[int]:
        return _subgroup_generators(self)


def _subgroup_generators(H: SubgroupHandle) -> list[int]:
    key = ("gens", H.mask)
    cache = H.parent.cache
    if key not in cache:
        G = H.parent
        gens: list[int] = []
        inside = np.zeros(G.order, dtype=bool)
        inside[0] = True
        arr = H.array
        for x in arr[np.argsort(-G.element_orders[arr], kind="stable")]:
            if not inside[x]:
                gens.append(int(x))
                inside = _close(G.table, gens)
                if inside.sum() == H.order:
                    break
        cache[key] = gens
    return cache[key]


def group_from_table(table, label: str = "", realization=None) -> FiniteGroup:
    return FiniteGroup(table, label=label, realization=realization)


def generate_group(gens, label: str = "", order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Enumerate the permutation group generated by ``gens``."""
    gens = [as_permutation(g) for g in gens]
    if not gens:
        raise GroupError("need at least one generator")
    degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise GroupError("generators have different degrees")
    gen_arr = np.array(gens, dtype=np.int64)
    identity = tuple(range(degree))
    index = {identity: 0}
    elements = [np.arange(degree)]
    frontier = [0]
    while frontier:
        new = []
        for i in frontier:
            # element_i ∘ gen
            for g in gen_arr:
                img = elements[i][g]
                key = tuple(img.tolist())
                if key not in index:
                    if len(elements) >= order_bound:
                        raise OrderBoundError(f"{label or 'group'}: more than {order_bound} elements")
                    index[key] = len(elements)
                    elements.append(img)
                    new.append(index[key])
        frontier = new
    perms = np.array(elements, dtype=np.int64)
    n = len(perms)
    table = np.empty((n, n), dtype=np.int32)
    encode = _encoder(perms, degree)
    codes = encode(perms)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    for i in range(n):
        # row i: perm_i ∘ perm_j = perm_i[perm_j]
        row = encode(perms[i][perms])
        table[i] = order[np.searchsorted(sorted_codes, row)]
    gen_idx = [index[tuple(g)] for g in gens]
    return FiniteGroup(table, generators=gen_idx, realization=perms, label=label)


def _encoder(perms: np.ndarray, degree: int):
    if degree <= 15:
        weights = degree ** np.arange(degree, dtype=np.int64)
        return lambda rows: rows @ weights
    # wide permutations: rank the byte strings instead
    keys = sorted({r.tobytes() for r in perms})
    rank = {k: i for i, k in enumerate(keys)}
    return lambda rows: np.array([rank[r.tobytes()] for r in np.ascontiguousarray(rows)], dtype=np.int64)


# ---------------------------------------------------------------------------
# subgroup arithmetic


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> SubgroupHandle:
    inside = _close(G.table, [int(s) for s in seed])
    return SubgroupHandle(G, frozenset(np.flatnonzero(inside).tolist()))


def join(*subgroups: SubgroupHandle) -> SubgroupHandle:
    G = subgroups[0].parent
    gens = [g for H in subgroups for g in _subgroup_generators(H)]
    return subgroup_closure(G, gens)


def product_set(G: FiniteGroup, A: Iterable[int], B: Iterable[int]) -> frozenset:
    a = np.fromiter(A, dtype=np.int64)
    b = np.fromiter(B, dtype=np.int64)
    return frozenset(np.unique(G.table[np.ix_(a, b)]).tolist())


def centralizer(G: FiniteGroup, S: SubgroupHandle | Iterable[int]) -> SubgroupHandle:
    elems = S.generators() if isinstance(S, SubgroupHandle) else list(S)
    keep = np.ones(G.order, dtype=bool)
    t = G.table
    for s in elems:
        keep &= t[:, s] == t[s, :]
    return SubgroupHandle(G, frozenset(np.flatnonzero(keep).tolist()))


def normalizer(G: FiniteGroup, H: SubgroupHandle) -> SubgroupHandle:
    ct = G.conjugation_table
    target = np.zeros(G.order, dtype=bool)
    target[H.array] = True
    images = ct[:, H.array]  # row g: g H g^-1
    keep = target[images].all(axis=1)
    return SubgroupHandle(G, frozenset(np.flatnonzero(keep).tolist()))


def normal_core(G: FiniteGroup, H: SubgroupHandle, within: SubgroupHandle | None = None) -> SubgroupHandle:
    """Intersection of the conjugates of ``H`` by elements of ``within`` (default ``G``)."""
    T = G.whole if within is None else within
    ct = G.conjugation_table
    inside = np.zeros(G.order, dtype=bool)
    inside[H.array] = True
    # x in core iff g^-1 x g in H for every g
    rows = ct[np.ix_(G.inverses[T.array], H.array)]
    keep = H.array[inside[rows].all(axis=0)]
    return SubgroupHandle(G, frozenset(keep.tolist()))


def normal_closure(G: FiniteGroup, S: Iterable[int], within: SubgroupHandle | None = None) -> SubgroupHandle:
    T = G.whole if within is None else within
    ct = G.conjugation_table
    s = np.fromiter(S, dtype=np.int64)
    if s.size == 0:
        return G.trivial
    gens = np.unique(ct[np.ix_(T.array, s)])
    return subgroup_closure(G, gens.tolist())


def commutator_subgroup(G: FiniteGroup, A: SubgroupHandle | None = None, B: SubgroupHandle | None = None) -> SubgroupHandle:
    """``[A, B]`` (default ``[G, G]``)."""
    A = G.whole if A is None else A
    B = G.whole if B is None else B
    t, inv = G.table, G.inverses
    a, b = A.array, B.array
    # [x, y] = x^-1 y^-1 x y
    comm = t[t[inv[a][:, None], inv[b][None, :]], t[a[:, None], b[None, :]]]
    return subgroup_closure(G, np.unique(comm).tolist())


# ---------------------------------------------------------------------------
# quotients and sections


@dataclass(frozen=True)
class QuotientMap:
    source: FiniteGroup
    kernel: SubgroupHandle
    target: FiniteGroup
    projection: np.ndarray  # source index -> target index
    section: np.ndarray  # target index -> coset representative

    def image(self, H: SubgroupHandle) -> SubgroupHandle:
        return SubgroupHandle(self.target, frozenset(np.unique(self.projection[H.array]).tolist()))

    def preimage(self, Q: SubgroupHandle) -> SubgroupHandle:
        hit = np.isin(self.projection, Q.array)
        return SubgroupHandle(self.source, frozenset(np.flatnonzero(hit).tolist()))


@dataclass(frozen=True)
class Section:
    """The factor ``H/K`` of subgroups of ``parent`` as an abstract group.

    ``coset_of`` maps every element of ``H`` to its coset index (-1 outside
    ``H``); ``reps`` are the chosen coset representatives.
    """

    parent: FiniteGroup
    upper: SubgroupHandle
    lower: SubgroupHandle
    group: FiniteGroup
    coset_of: np.ndarray
    reps: np.ndarray

    def conj_action(self, g: int) -> np.ndarray:
        """Permutation of section elements induced by ``hK -> (g h g^-1)K``."""
        ct = self.parent.conjugation_table
        img = self.coset_of[ct[g][self.reps]]
        if (img < 0).any():
            raise GroupError("element does not normalize the section")
        return img

    def action_kernel(self, acting: SubgroupHandle | None = None) -> SubgroupHandle:
        """Elements acting trivially, i.e. the centralizer ``C(H/K)``."""
        G = self.parent
        acting = G.whole if acting is None else acting
        ct = G.conjugation_table
        ident = np.arange(len(self.reps))
        rows = self.coset_of[ct[np.ix_(acting.array, self.reps)]]
        keep = acting.array[(rows == ident).all(axis=1)]
        return SubgroupHandle(G, frozenset(keep.tolist()))


def _coset_table(G: FiniteGroup, H: SubgroupHandle, K: SubgroupHandle, label: str) -> Section:
    if not K <= H:
        raise GroupError("lower term is not inside the upper term")
    if not K.is_normal_in(H):
        raise NotNormalError(f"subgroup of order {K.order} is not normal in the subgroup of order {H.order}")
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    karr = K.array
    for h in H.array:
        if coset_of[h] < 0:
            coset_of[G.table[h, karr]] = len(reps)
            reps.append(int(h))
    reps = np.array(reps, dtype=np.int64)
    table = coset_of[G.table[np.ix_(reps, reps)]]
    Q = FiniteGroup(table, label=label)
    return Section(G, H, K, Q, coset_of, reps)


def quotient_group(G: FiniteGroup, N: SubgroupHandle) -> QuotientMap:
    key = ("quotient", N.mask)
    if key in G.cache:
        return G.cache[key]
    if not N.is_normal_in():
        raise NotNormalError(f"subgroup of order {N.order} is not normal in {G.label}")
    sec = _coset_table(G, G.whole, N, label=f"{G.label}/{N.order}" if not N.is_trivial() else G.label)
    qm = QuotientMap(G, N, sec.group, sec.coset_of, sec.reps)
    G.cache[key] = qm
    return qm


def section_group(G: FiniteGroup, H: SubgroupHandle, K: SubgroupHandle) -> Section:
    """``H/K`` as a group; ``Section.conj_action`` is the G-conjugation."""
    key = ("section", H.mask, K.mask)
    if key not in G.cache:
        G.cache[key] = _coset_table(G, H, K, label=f"{G.label}:{H.order}/{K.order}")
    return G.cache[key]


def section_conj_action(G: FiniteGroup, H: SubgroupHandle, K: SubgroupHandle) -> tuple[FiniteGroup, Callable[[int], np.ndarray]]:
    if not (H.is_normal_in() and K.is_normal_in()):
        raise NotNormalError("conjugation action needs both terms normal in the group")
    sec = section_group(G, H, K)
    return sec.group, sec.conj_action


# ---------------------------------------------------------------------------
# products


def direct_product(A: FiniteGroup, B: FiniteGroup, label: str | None = None,
                   order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    trivial = [np.arange(A.order)] * B.order
    G = semidirect_product(A, B, trivial, label=label or f"{A.label}x{B.label}",
                           order_bound=order_bound, check=False)
    if A.realization is not None and B.realization is not None:
        da, db = A.realization.shape[1], B.realization.shape[1]
        real = np.empty((G.order, da + db), dtype=np.int64)
        # index = a + |A| * b
        ai = np.arange(G.order) % A.order
        bi = np.arange(G.order) // A.order
        real[:, :da] = A.realization[ai]
        real[:, da:] = B.realization[bi] + da
        G.realization = real.astype(np.int32)
    return G


def embeddings(A: FiniteGroup, B: FiniteGroup, P: FiniteGroup) -> tuple[SubgroupHandle, SubgroupHandle]:
    """Images of the factors inside ``P = A x B`` (or ``A ⋊ B``)."""
    a = P.subgroup(range(A.order))
    b = P.subgroup(range(0, P.order, A.order))
    return a, b


def semidirect_product(N: FiniteGroup, Q: FiniteGroup, action, label: str = "",
                       order_bound: int = DEFAULT_ORDER_BOUND, check: bool = True) -> FiniteGroup:
    """``N ⋊ Q`` with ``(n1,q1)(n2,q2) = (n1·action(q1)(n2), q1 q2)``.

    ``action`` is a sequence (or callable) giving, for every element index of
    ``Q``, the automorphism of ``N`` as an array of element images.  The pair
    ``(n, q)`` gets index ``n + |N|·q``.
    """
    nN, nQ = N.order, Q.order
    if nN * nQ > order_bound:
        raise OrderBoundError(f"semidirect product of order {nN * nQ} exceeds {order_bound}")
    if callable(action):
        action = [action(q) for q in range(nQ)]
    acts = np.array([np.asarray(a, dtype=np.int64) for a in action])
    if acts.shape != (nQ, nN):
        raise GroupError("action must give an image array for every element of Q")
    if check:
        _check_action(N, Q, acts)
    idx = np.arange(nN * nQ)
    n_of, q_of = idx % nN, idx // nN
    moved = acts[q_of[:, None], n_of[None, :]]  # action(q1)(n2)
    new_n = N.table[n_of[:, None], moved]
    new_q = Q.table[q_of[:, None], q_of[None, :]]
    table = new_n + nN * new_q
    return FiniteGroup(table, label=label or f"{N.label}:{Q.label}")


def _check_action(N: FiniteGroup, Q: FiniteGroup, acts: np.ndarray) -> None:
    nN = N.order
    if not np.array_equal(acts[0], np.arange(nN)):
        raise GroupError("identity of Q must act trivially")
    for q, a in enumerate(acts):
        if len(np.unique(a)) != nN or a[0] != 0:
            raise GroupError(f"action of element {q} is not a bijection fixing the identity")
        if not np.array_equal(a[N.table], N.table[a[:, None], a[None, :]]):
            raise GroupError(f"action of element {q} is not a homomorphism")
    # action(q1 q2) = action(q1) ∘ action(q2)
    lhs = acts[Q.table]
    rhs = acts[np.arange(Q.order)[:, None, None], acts[None, :, :]]
    if not np.array_equal(lhs, rhs):
        raise GroupError("action is not a homomorphism Q -> Aut(N)")
