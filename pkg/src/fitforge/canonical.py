"""Distinguished subgroups (centre, hypercentre, Frattini, Fitting, socle,
O_π, the generalized Fitting subgroup F*(G) and F̃(G)) and the structural
predicates nilpotent / soluble / supersoluble / abelian / π-group.

Most subgroups come with a second, independently computed route
(``*_by_scan`` functions) that the test suite compares against.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .kernel import (
    FiniteGroup,
    GroupError,
    SubgroupHandle,
    centralizer,
    commutator_subgroup,
    join,
    quotient_group,
    section_group,
    subgroup_closure,
)
from .lattice import (
    all_subgroups,
    chief_series,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_hall_subgroup,
    normal_subgroups,
    prime_factors,
    primes_of,
)


class InconsistencyError(GroupError):
    """Two routes to the same subgroup disagreed."""


def _cached(G: FiniteGroup, key, compute):
    if key not in G.cache:
        G.cache[key] = compute()
    return G.cache[key]


def _join_all(G: FiniteGroup, subs) -> SubgroupHandle:
    subs = list(subs)
    return join(*subs) if subs else G.trivial


# ---------------------------------------------------------------------------
# predicates


def is_abelian(G: FiniteGroup) -> bool:
    return G.is_abelian()


def is_pi_group(G: FiniteGroup, primes) -> bool:
    return set(primes_of(G.order)) <= set(primes)


def is_nilpotent(G: FiniteGroup) -> bool:
    """Every Sylow subgroup normal."""
    return _cached(G, "nilpotent", lambda: all(
        normal_hall_subgroup(G, [p]) is not None for p in primes_of(G.order)))


def derived_series(G: FiniteGroup) -> list[SubgroupHandle]:
    def compute():
        series = [G.whole]
        while True:
            X = series[-1]
            D = commutator_subgroup(G, X, X)
            if D.mask == X.mask:
                return series
            series.append(D)
    return _cached(G, "derived", compute)


def is_soluble(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_supersoluble(G: FiniteGroup) -> bool:
    """Soluble with every chief factor of prime order."""
    def compute():
        if not is_soluble(G):
            return False
        return all(len(prime_factors(k)) == 1 and sum(prime_factors(k).values()) == 1
                   for k in chief_series(G).factor_orders())
    return _cached(G, "supersoluble", compute)


def is_supersoluble_by_indices(G: FiniteGroup) -> bool:
    """Huppert's criterion for soluble groups: every maximal subgroup has prime index."""
    if not is_soluble(G):
        return False
    return all(sum(prime_factors(G.order // M.order).values()) == 1 for M in maximal_subgroups(G))


# ---------------------------------------------------------------------------
# centre and hypercentre


def _commutator_table(G: FiniteGroup) -> np.ndarray:
    def compute():
        t, inv = G.table, G.inverses
        # [g, x] = g x g^-1 x^-1
        return t[t, t[inv[:, None], inv[None, :]]]
    return _cached(G, "comm_table", compute)


def center(G: FiniteGroup) -> SubgroupHandle:
    return centralizer(G, G.whole)


def upper_central_series(G: FiniteGroup) -> list[SubgroupHandle]:
    def compute():
        comm = _commutator_table(G)
        series = [G.trivial]
        while True:
            inside = np.zeros(G.order, dtype=bool)
            inside[series[-1].array] = True
            nxt = G.subgroup(np.flatnonzero(inside[comm].all(axis=1)).tolist())
            if nxt.mask == series[-1].mask:
                return series
            series.append(nxt)
    return _cached(G, "upper_central", compute)


def hypercenter(G: FiniteGroup) -> SubgroupHandle:
    return upper_central_series(G)[-1]


# ---------------------------------------------------------------------------
# Frattini, Fitting, socle, O_pi


def frattini(G: FiniteGroup) -> SubgroupHandle:
    """Intersection of all maximal subgroups."""
    def compute():
        if G.order == 1:
            return G.trivial
        return reduce(lambda A, B: A & B, maximal_subgroups(G))
    return _cached(G, "frattini", compute)


def frattini_by_nongenerators(G: FiniteGroup) -> SubgroupHandle:
    """Elements ``g`` such that ``<H, g> = G`` forces ``H = G``."""
    L = all_subgroups(G)
    whole = G.whole.mask
    proper = [H for H in L if H.mask != whole]
    keep = []
    for g in range(G.order):
        cyc = L.canonical(subgroup_closure(G, [g]))
        if all(L.join(H, cyc).mask != whole for H in proper):
            keep.append(g)
    return G.subgroup(keep)


def _normal_nilpotent(G: FiniteGroup) -> list[SubgroupHandle]:
    return [N for N in normal_subgroups(G) if is_nilpotent(N.as_group())]


def fitting(G: FiniteGroup) -> SubgroupHandle:
    """Join of all normal nilpotent subgroups."""
    return _cached(G, "fitting", lambda: _join_all(G, _normal_nilpotent(G)))


def o_pi(G: FiniteGroup, primes) -> SubgroupHandle:
    """Largest normal π-subgroup."""
    primes = frozenset(primes)

    def compute():
        good = [N for N in normal_subgroups(G) if set(primes_of(N.order)) <= primes]
        return _join_all(G, good)
    return _cached(G, ("o_pi", primes), compute)


def fitting_by_op_product(G: FiniteGroup) -> SubgroupHandle:
    return _join_all(G, [o_pi(G, [p]) for p in primes_of(G.order)])


def socle(G: FiniteGroup) -> SubgroupHandle:
    return _cached(G, "socle", lambda: _join_all(G, minimal_normal_subgroups(G)))


def socle_by_lattice_scan(G: FiniteGroup) -> SubgroupHandle:
    """Socle from the normal members of the full subgroup lattice."""
    L = all_subgroups(G)
    normal = [H for H, flag in zip(L, L.normal_flags) if flag and not H.is_trivial()]
    minimal = [N for N in normal if not any(M < N for M in normal)]
    return _join_all(G, minimal)


def g_socle_of_section(G: FiniteGroup, K: SubgroupHandle, N: SubgroupHandle) -> SubgroupHandle:
    """Preimage of the socle of ``N/K`` taken as a G-section: ``K`` joined with
    every normal subgroup of ``G`` minimal over ``K`` and inside ``N``."""
    above = [M for M in normal_subgroups(G) if K < M and M <= N]
    minimal = [M for M in above if not any(X < M for X in above)]
    return _join_all(G, [K] + minimal)


# ---------------------------------------------------------------------------
# generalized Fitting subgroups


def generalized_fitting(G: FiniteGroup) -> SubgroupHandle:
    """F*(G) from F*(G)/F(G) = Soc(F(G) C_G(F(G)) / F(G))."""
    def compute():
        F = fitting(G)
        FC = join(F, centralizer(G, F))
        if not FC.is_normal_in():
            raise InconsistencyError("F(G)C_G(F(G)) is not normal")
        return g_socle_of_section(G, F, FC)
    return _cached(G, "fstar", compute)


def is_quasinilpotent(X: FiniteGroup) -> bool:
    """Every element induces an inner automorphism on every chief factor:
    ``X = H C_X(H/K)`` for each factor ``H/K`` of a chief series."""
    def compute():
        for H, K in chief_series(X).factors():
            C = section_group(X, H, K).action_kernel()
            if join(H, C).order != X.order:
                return False
        return True
    return _cached(X, "quasinilpotent", compute)


def generalized_fitting_by_scan(G: FiniteGroup) -> SubgroupHandle:
    """F*(G) as the largest normal quasinilpotent subgroup (brute force)."""
    good = [N for N in normal_subgroups(G) if is_quasinilpotent(N.as_group())]
    top = max(good, key=lambda H: H.sort_key)
    if not all(N <= top for N in good):
        raise InconsistencyError("normal quasinilpotent subgroups have no largest member")
    return top


def _pullback_from_quotient(G: FiniteGroup, N: SubgroupHandle, fn) -> SubgroupHandle:
    qm = quotient_group(G, N)
    return qm.preimage(fn(qm.target))


def f_tilde(G: FiniteGroup) -> SubgroupHandle:
    """F̃(G): Φ(G) ≤ F̃(G) and F̃(G)/Φ(G) = Soc(G/Φ(G)); checked against
    the alternative form F̃(G)/Φ(G) = F*(G/Φ(G))."""
    def compute():
        phi = frattini(G)
        via_socle = _pullback_from_quotient(G, phi, socle)
        via_fstar = _pullback_from_quotient(G, phi, generalized_fitting)
        if via_socle != via_fstar:
            raise InconsistencyError(
                f"{G.label}: Soc(G/Φ) and F*(G/Φ) pull back to different subgroups")
        return via_socle
    return _cached(G, "ftilde", compute)


def f_tilde_forster(G: FiniteGroup) -> SubgroupHandle:
    return _pullback_from_quotient(G, frattini(G), generalized_fitting)


@dataclass(frozen=True)
class CanonicalReport:
    center: SubgroupHandle
    hypercenter: SubgroupHandle
    frattini: SubgroupHandle
    fitting: SubgroupHandle
    socle: SubgroupHandle
    fstar: SubgroupHandle
    ftilde: SubgroupHandle

    def check(self) -> None:
        ok = (self.fitting <= self.fstar and self.fitting <= self.ftilde
              and self.frattini <= self.ftilde)
        if not ok:
            raise InconsistencyError("canonical subgroups violate F ≤ F*, F ≤ F̃, Φ ≤ F̃")
        for H in (self.center, self.hypercenter, self.frattini, self.fitting,
                  self.socle, self.fstar, self.ftilde):
            if not H.is_normal_in():
                raise InconsistencyError("canonical subgroup is not normal")


def canonical_report(G: FiniteGroup) -> CanonicalReport:
    rep = CanonicalReport(center(G), hypercenter(G), frattini(G), fitting(G), socle(G),
                          generalized_fitting(G), f_tilde(G))
    rep.check()
    return rep
