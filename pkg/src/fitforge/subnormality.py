"""K-𝔉-subnormality.

``H`` is K-𝔉-subnormal in ``T`` when a chain ``H = H_0 ≤ … ≤ H_n = T`` exists
with every step either normal or with ``H_i / Core_{H_i}(H_{i-1}) ∈ 𝔉``.
The decision runs over all intermediate subgroups of the ambient lattice
(not only maximal ones), memoized per ``(group, formation)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .formations import Formation, FormationError
from .kernel import (
    FiniteGroup,
    GroupError,
    SubgroupHandle,
    normal_closure,
    normal_core,
    product_set,
    subgroup_closure,
)
from .lattice import (
    SubgroupLattice,
    all_subgroups,
    cyclic_primary_subgroups,
    is_prime_power,
    normal_subgroups,
    prime_factors,
    sylow_subgroups,
)

NORMAL = "normal"
QUOTIENT = "quotient"


@dataclass(frozen=True)
class SubnormalChain:
    links: tuple  # H_0 ≤ H_1 ≤ … ≤ H_n
    kinds: tuple  # one step kind per consecutive pair

    def __len__(self):
        return len(self.kinds)

    def validate(self, F: Formation) -> None:
        if len(self.links) != len(self.kinds) + 1:
            raise GroupError("chain has mismatched links and step kinds")
        for (A, B), kind in zip(zip(self.links, self.links[1:]), self.kinds):
            if not A <= B:
                raise GroupError("chain is not increasing")
            if kind == NORMAL:
                ok = A.is_normal_in(B)
            else:
                ok = F.member_quotient(B, normal_core(B.parent, A, within=B))
            if not ok:
                raise GroupError(f"chain step {A.order} -> {B.order} fails its {kind} condition")


@dataclass(frozen=True)
class WeakSubnormalizerSet:
    base: SubgroupHandle
    maximals: tuple


class KSubnormality:
    """K-F-subnormality among the subgroups of ``G``.

    ``reach(H)`` maps each ``T ≥ H`` in which ``H`` is K-F-subnormal to the
    predecessor on one witness chain.  Use :func:`ksn_context` to share one
    instance per ``(G, F)``.
    """

    def __init__(self, G: FiniteGroup, F: Formation):
        self.G = G
        self.F = F
        self.lattice: SubgroupLattice = all_subgroups(G)
        self._step: dict[tuple[int, int], str | None] = {}
        self._reach: dict[int, dict[int, int | None]] = {}

    def step(self, M: SubgroupHandle, T: SubgroupHandle) -> str | None:
        key = (M.mask, T.mask)
        if key not in self._step:
            if M.is_normal_in(T):
                kind = NORMAL
            elif self.F.member_quotient(T, normal_core(self.G, M, within=T)):
                kind = QUOTIENT
            else:
                kind = None
            self._step[key] = kind
        return self._step[key]

    def reach(self, H: SubgroupHandle) -> dict[int, int | None]:
        if H.mask not in self._reach:
            L = self.lattice
            H = L.canonical(H)
            found: dict[int, int | None] = {H.mask: None}
            handles = {H.mask: H}
            for T in L.above(H):
                if T.mask == H.mask:
                    continue
                for m in found:
                    if m & T.mask == m and self.step(handles[m], T):
                        found[T.mask] = m
                        handles[T.mask] = T
                        break
            self._reach[H.mask] = found
        return self._reach[H.mask]

    def is_sn(self, H: SubgroupHandle, T: SubgroupHandle | None = None) -> bool:
        T = self.G.whole if T is None else T
        return T.mask in self.reach(H)

    def chain(self, H: SubgroupHandle, T: SubgroupHandle | None = None) -> SubnormalChain | None:
        T = self.G.whole if T is None else T
        found = self.reach(H)
        if T.mask not in found:
            return None
        L = self.lattice
        links = [L.get(T.mask)]
        m = found[T.mask]
        while m is not None:
            links.append(L.get(m))
            m = found[m]
        links.reverse()
        kinds = tuple(self.step(a, b) for a, b in zip(links, links[1:]))
        chain = SubnormalChain(tuple(links), kinds)
        chain.validate(self.F)
        return chain

    def subnormal_overgroups(self, H: SubgroupHandle) -> list[SubgroupHandle]:
        L = self.lattice
        return [L.get(m) for m in self.reach(H)]

    def weak_subnormalizers(self, H: SubgroupHandle) -> list[SubgroupHandle]:
        over = self.subnormal_overgroups(H)
        tops = [T for T in over if not any(T < U for U in over)]
        return sorted(tops, key=lambda S: S.sort_key)


def ksn_context(G: FiniteGroup, F: Formation) -> KSubnormality:
    key = ("ksn", F.name)
    if key not in G.cache:
        G.cache[key] = KSubnormality(G, F)
    return G.cache[key]


def _check_sub(G: FiniteGroup, H: SubgroupHandle) -> None:
    if H.parent is not G:
        raise GroupError("subgroup belongs to a different group")


def is_k_f_subnormal(G: FiniteGroup, H: SubgroupHandle, F: Formation,
                     T: SubgroupHandle | None = None) -> SubnormalChain | None:
    """A witness chain from ``H`` up to ``T`` (default ``G``), or ``None``."""
    _check_sub(G, H)
    T = G.whole if T is None else T
    if not H <= T:
        raise GroupError("H is not contained in the target subgroup")
    return ksn_context(G, F).chain(H, T)


def is_r_k_f_subnormal(G: FiniteGroup, H: SubgroupHandle, R: SubgroupHandle, F: Formation) -> bool:
    """``H`` is K-F-subnormal in ``<H, R>``."""
    ctx = ksn_context(G, F)
    J = ctx.lattice.join(H, R)
    return ctx.is_sn(H, J)


def weak_k_f_subnormalizers(G: FiniteGroup, H: SubgroupHandle, F: Formation) -> WeakSubnormalizerSet:
    _check_sub(G, H)
    return WeakSubnormalizerSet(H, tuple(ksn_context(G, F).weak_subnormalizers(H)))


def _require_hereditary(F: Formation) -> None:
    if not F.hereditary:
        raise FormationError(f"{F.name} is not hereditary")


def all_sylow_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    return [P for p in sorted(prime_factors(G.order)) for P in sylow_subgroups(G, p)]


def sylow_subgroups_of(L: SubgroupLattice, U: SubgroupHandle) -> list[SubgroupHandle]:
    """Sylow subgroups of the subgroup ``U``, read off the ambient lattice."""
    targets = {p**a for p, a in prime_factors(U.order).items()}
    return [P for P in L.below(U) if P.order in targets]


def primary_subgroups_of(L: SubgroupLattice, U: SubgroupHandle) -> list[SubgroupHandle]:
    """Nontrivial cyclic subgroups of prime-power order inside ``U``."""
    G = L.parent
    orders = G.element_orders
    found = {}
    for x in U.array:
        if x and is_prime_power(int(orders[x])):
            C = L.canonical(subgroup_closure(G, [int(x)]))
            found.setdefault(C.mask, C)
    return sorted(found.values(), key=lambda S: S.sort_key)


def _intersect_subnormalizers(G: FiniteGroup, F: Formation, bases) -> SubgroupHandle:
    ctx = ksn_context(G, F)
    result = G.whole
    for H in bases:
        for S in ctx.weak_subnormalizers(H):
            result = result & S
    return ctx.lattice.canonical(result)


def s_f(G: FiniteGroup, F: Formation) -> SubgroupHandle:
    """Intersection of all weak K-F-subnormalizers of all Sylow subgroups."""
    _require_hereditary(F)
    key = ("s_f", F.name)
    if key not in G.cache:
        G.cache[key] = _intersect_subnormalizers(G, F, all_sylow_subgroups(G))
    return G.cache[key]


def c_f(G: FiniteGroup, F: Formation) -> SubgroupHandle:
    """Intersection of all weak K-F-subnormalizers of all cyclic primary subgroups."""
    _require_hereditary(F)
    key = ("c_f", F.name)
    if key not in G.cache:
        L = all_subgroups(G)
        bases = [L.canonical(C) for C in cyclic_primary_subgroups(G)]
        G.cache[key] = _intersect_subnormalizers(G, F, bases)
    return G.cache[key]


def largest_normal_subnormalizing(G: FiniteGroup, F: Formation, bases) -> SubgroupHandle:
    """Largest normal ``N`` with every base ``P`` K-F-subnormal in ``PN``
    (brute force over normal subgroups)."""
    ctx = ksn_context(G, F)
    L = ctx.lattice
    bases = list(bases)
    good = [N for N in normal_subgroups(G)
            if all(ctx.is_sn(P, L.product(P, N)) for P in bases)]
    top = max(good, key=lambda S: S.sort_key)
    if not all(N <= top for N in good):
        raise GroupError("qualifying normal subgroups have no largest member")
    return L.canonical(top)


def s_f_by_scan(G: FiniteGroup, F: Formation) -> SubgroupHandle:
    return largest_normal_subnormalizing(G, F, all_sylow_subgroups(G))


def c_f_by_scan(G: FiniteGroup, F: Formation) -> SubgroupHandle:
    L = all_subgroups(G)
    return largest_normal_subnormalizing(G, F, [L.canonical(C) for C in cyclic_primary_subgroups(G)])


def is_conjugate_permutable(G: FiniteGroup, H: SubgroupHandle, R: SubgroupHandle) -> bool:
    """``H^r H = H H^r`` for every ``r ∈ R``."""
    for r in R.array:
        Hr = H.conjugate(int(r))
        if Hr.mask == H.mask:
            continue
        if product_set(G, Hr.members, H.members) != product_set(G, H.members, Hr.members):
            return False
    return True


def is_subnormal(G: FiniteGroup, H: SubgroupHandle, T: SubgroupHandle | None = None) -> bool:
    """Classical subnormality via the descending normal-closure series
    ``T = X_0``, ``X_{i+1}`` = normal closure of ``H`` in ``X_i``."""
    X = G.whole if T is None else T
    while True:
        Y = normal_closure(G, H.array.tolist(), within=X)
        if Y.mask == H.mask:
            return True
        if Y.mask == X.mask:
            return False
        X = Y


def intersection(subs) -> SubgroupHandle:
    return reduce(lambda A, B: A & B, subs)
