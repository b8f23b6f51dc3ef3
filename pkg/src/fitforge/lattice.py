"""Subgroup lattices and the subgroup families built on them: maximal,
normal and minimal normal subgroups, Sylow and Hall subgroups, cyclic
primary subgroups, chief series and lattice intervals."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .kernel import (
    FiniteGroup,
    OrderBoundError,
    SubgroupHandle,
    _close,
    join,
    normal_closure,
)

DEFAULT_LATTICE_BOUND = 200


class LatticeBoundError(OrderBoundError):
    pass


def lattice_bound() -> int:
    return int(os.environ.get("FORGE_LATTICE_BOUND", DEFAULT_LATTICE_BOUND))


# ---------------------------------------------------------------------------
# primes


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def primes_of(n: int) -> list[int]:
    return sorted(prime_factors(n))


def pi_part(n: int, primes) -> int:
    primes = set(primes)
    return int(np.prod([p**a for p, a in prime_factors(n).items() if p in primes], dtype=np.int64))


def is_prime_power(n: int) -> bool:
    return len(prime_factors(n)) == 1


def _bool_mask(inside: np.ndarray) -> int:
    return int.from_bytes(np.packbits(inside, bitorder="little").tobytes(), "little")


# ---------------------------------------------------------------------------
# the lattice


class SubgroupLattice:
    """All subgroups of ``parent``, sorted by (order, members).

    Subgroups are deduplicated by their member bitmask; ``get`` looks one up
    by mask and ``index`` gives its position in ``subgroups``.
    """

    def __init__(self, parent: FiniteGroup, subgroups: list[SubgroupHandle]):
        self.parent = parent
        self.subgroups = sorted(subgroups, key=lambda H: H.sort_key)
        self._by_mask = {H.mask: H for H in self.subgroups}
        self.index = {H.mask: i for i, H in enumerate(self.subgroups)}
        self._maximal_in: dict[int, list[SubgroupHandle]] = {}

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def get(self, mask: int) -> SubgroupHandle:
        return self._by_mask[mask]

    def canonical(self, H: SubgroupHandle) -> SubgroupHandle:
        """The lattice's own handle for ``H`` (shares cached masks)."""
        return self._by_mask[H.mask]

    def lookup(self, members) -> SubgroupHandle:
        return self._by_mask[SubgroupHandle(self.parent, frozenset(members)).mask]

    @cached_property
    def normal_flags(self) -> list[bool]:
        return [H.is_normal_in() for H in self.subgroups]

    @cached_property
    def maximal_flags(self) -> list[bool]:
        whole = self.parent.whole.mask
        maxes = {M.mask for M in self.maximal_in(self.parent.whole)}
        return [H.mask in maxes and H.mask != whole for H in self.subgroups]

    def above(self, H: SubgroupHandle) -> list[SubgroupHandle]:
        m = H.mask
        return [T for T in self.subgroups if T.mask & m == m]

    def below(self, T: SubgroupHandle) -> list[SubgroupHandle]:
        m = T.mask
        return [H for H in self.subgroups if H.mask & m == H.mask]

    def maximal_in(self, T: SubgroupHandle) -> list[SubgroupHandle]:
        """Maximal subgroups of ``T`` (the lower covers of ``T``)."""
        m = T.mask
        if m not in self._maximal_in:
            proper = [H for H in self.subgroups if H.mask & m == H.mask and H.mask != m]
            covers = []
            for H in reversed(proper):  # larger first
                if not any(C.mask & H.mask == H.mask for C in covers):
                    covers.append(H)
            self._maximal_in[m] = sorted(covers, key=lambda H: H.sort_key)
        return self._maximal_in[m]

    def join(self, A: SubgroupHandle, B: SubgroupHandle) -> SubgroupHandle:
        if A <= B:
            return self.canonical(B)
        if B <= A:
            return self.canonical(A)
        return self.canonical(join(A, B))

    def meet(self, A: SubgroupHandle, B: SubgroupHandle) -> SubgroupHandle:
        return self._by_mask[A.mask & B.mask]

    def product(self, A: SubgroupHandle, N: SubgroupHandle) -> SubgroupHandle:
        """``AN`` for ``N`` normalized by ``A`` (so the product is a subgroup)."""
        return self.join(A, N)


def all_subgroups(G: FiniteGroup, bound: int | None = None) -> SubgroupLattice:
    """Every subgroup of ``G``: cyclic subgroups closed under joins.

    Joins are taken with cyclic subgroups of prime-power order only; every
    subgroup is generated by its elements of prime-power order, so the
    fixpoint still reaches all of them.
    """
    bound = lattice_bound() if bound is None else bound
    if G.order > bound:
        raise LatticeBoundError(f"{G.label}: order {G.order} exceeds lattice bound {bound}")
    key = "lattice"
    if key in G.cache:
        return G.cache[key]
    table = G.table
    orders = G.element_orders
    found: dict[int, list[int]] = {1: []}  # mask -> generators
    primary: list[tuple[int, int]] = []
    for x in range(1, G.order):
        m = _bool_mask(_close(table, [x]))
        if m not in found:
            found[m] = [x]
            if is_prime_power(int(orders[x])):
                primary.append((m, x))
    queue = list(found)
    while queue:
        m = queue.pop()
        gens = found[m]
        for cm, x in primary:
            if cm & m == cm:
                continue
            jm = _bool_mask(_close(table, gens + [x]))
            if jm not in found:
                found[jm] = gens + [x]
                queue.append(jm)
    subs = []
    for m, gens in found.items():
        H = G.subgroup_from_mask(m)
        if gens:
            G.cache.setdefault(("gens", H.mask), gens)
        subs.append(H)
    L = SubgroupLattice(G, subs)
    G.cache[key] = L
    return L


def maximal_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    return all_subgroups(G).maximal_in(G.whole)


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    if "classes" not in G.cache:
        seen = np.zeros(G.order, dtype=bool)
        classes = []
        ct = G.conjugation_table
        for x in range(G.order):
            if not seen[x]:
                cls = np.unique(ct[:, x])
                seen[cls] = True
                classes.append(cls.tolist())
        G.cache["classes"] = classes
    return G.cache["classes"]


def normal_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    """All normal subgroups, as joins of normal closures of single elements.

    Does not need the full lattice, so it also serves large quotient and
    semidirect test groups.
    """
    if "normal" in G.cache:
        return G.cache["normal"]
    closures: dict[int, SubgroupHandle] = {}
    for cls in conjugacy_classes(G):
        N = normal_closure(G, [cls[0]])
        closures.setdefault(N.mask, N)
    found = dict(closures)
    found.setdefault(G.trivial.mask, G.trivial)
    queue = list(found.values())
    seeds = list(closures.values())
    while queue:
        N = queue.pop()
        for C in seeds:
            if C <= N:
                continue
            J = join(N, C)
            if J.mask not in found:
                found[J.mask] = J
                queue.append(J)
    result = sorted(found.values(), key=lambda H: H.sort_key)
    G.cache["normal"] = result
    return result


def minimal_normal_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    nontrivial = [N for N in normal_subgroups(G) if not N.is_trivial()]
    return [N for N in nontrivial if not any(M < N for M in nontrivial)]


def normal_subgroups_between(G: FiniteGroup, K: SubgroupHandle, H: SubgroupHandle) -> list[SubgroupHandle]:
    return [N for N in normal_subgroups(G) if K <= N <= H]


def sylow_subgroups(G: FiniteGroup, p: int) -> list[SubgroupHandle]:
    a = prime_factors(G.order).get(p, 0)
    if a == 0:
        return []
    return [H for H in all_subgroups(G) if H.order == p**a]


def all_hall_subgroups(G: FiniteGroup, primes) -> list[SubgroupHandle]:
    target = pi_part(G.order, primes)
    return [H for H in all_subgroups(G) if H.order == target]


def hall_subgroup(G: FiniteGroup, primes) -> SubgroupHandle | None:
    halls = all_hall_subgroups(G, primes)
    return halls[0] if halls else None


def pi_elements(G: FiniteGroup, primes) -> np.ndarray:
    primes = set(primes)
    orders = G.element_orders
    keep = np.array([set(prime_factors(int(o))) <= primes for o in orders])
    return np.flatnonzero(keep)


def normal_hall_subgroup(G: FiniteGroup, primes) -> SubgroupHandle | None:
    """The normal Hall ``primes``-subgroup if there is one.

    A normal Hall subgroup consists of exactly the π-elements, so it exists
    iff those form a subgroup of the full π-order.  No lattice needed.
    """
    elems = pi_elements(G, primes)
    if len(elems) != pi_part(G.order, primes):
        return None
    inside = np.zeros(G.order, dtype=bool)
    inside[elems] = True
    if not inside[G.table[np.ix_(elems, elems)]].all():
        return None
    return G.subgroup(elems.tolist())


def cyclic_primary_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    found = {}
    orders = G.element_orders
    for x in range(1, G.order):
        if is_prime_power(int(orders[x])):
            m = _bool_mask(_close(G.table, [x]))
            if m not in found:
                found[m] = G.subgroup_from_mask(m)
    return sorted(found.values(), key=lambda H: H.sort_key)


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple  # 1 = N_0 < ... < N_k = G

    def factors(self) -> list[tuple[SubgroupHandle, SubgroupHandle]]:
        """(upper, lower) pairs."""
        return [(self.terms[i + 1], self.terms[i]) for i in range(len(self.terms) - 1)]

    def factor_orders(self) -> list[int]:
        return [H.order // K.order for H, K in self.factors()]


def chief_series(G: FiniteGroup, through: SubgroupHandle | None = None) -> ChiefSeries:
    """A chief series of ``G``; if ``through`` (normal) is given the series
    passes through it."""
    normals = normal_subgroups(G)
    terms = [G.trivial]
    stops = [G.whole] if through is None else [through, G.whole]
    for stop in stops:
        while terms[-1] != stop and terms[-1].mask != stop.mask:
            cur = terms[-1]
            nxt = min((N for N in normals if cur < N and N <= stop), key=lambda H: H.sort_key)
            terms.append(nxt)
    return ChiefSeries(tuple(terms))


def is_chief_factor(G: FiniteGroup, H: SubgroupHandle, K: SubgroupHandle) -> bool:
    if not (K < H and H.is_normal_in() and K.is_normal_in()):
        return False
    return not any(K < N < H for N in normal_subgroups(G))


def intermediate_subgroups(G: FiniteGroup, H: SubgroupHandle, T: SubgroupHandle | None = None) -> list[SubgroupHandle]:
    """All subgroups between ``H`` and ``T`` (default ``G``), inclusive."""
    T = G.whole if T is None else T
    return [S for S in all_subgroups(G).above(H) if S <= T]
