"""Schmidt subgroups and N-critical graphs.

A Schmidt group is non-nilpotent with every proper subgroup nilpotent.  The
N-critical graph of ``G`` has an edge ``(p, q)`` whenever ``G`` contains a
Schmidt subgroup with normal Sylow ``p``-subgroup.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .canonical import is_nilpotent
from .formations import SigmaPartition
from .kernel import FiniteGroup, GroupError, SubgroupHandle
from .lattice import (
    SubgroupLattice,
    all_subgroups,
    normal_hall_subgroup,
    prime_factors,
    primes_of,
    sylow_subgroups,
)


@dataclass(frozen=True)
class NCriticalGraph:
    vertices: frozenset
    edges: frozenset  # ordered (p, q) pairs
    provenance: tuple = field(default=(), compare=False)  # (edge, group label) pairs

    def __post_init__(self):
        for p, q in self.edges:
            if p not in self.vertices or q not in self.vertices:
                raise GroupError(f"edge ({p},{q}) has an endpoint outside the vertex set")

    def adjacency(self) -> dict[int, list[int]]:
        adj = {p: [] for p in sorted(self.vertices)}
        for p, q in sorted(self.edges):
            adj[p].append(q)
        return adj

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in sorted(self.edges)],
            "adjacency": {str(p): qs for p, qs in self.adjacency().items()},
            "provenance": [[list(e), label] for e, label in self.provenance],
        }


def _is_schmidt_in(L: SubgroupLattice, H: SubgroupHandle) -> bool:
    """Schmidt test for a subgroup using the ambient lattice's covers."""
    G = L.parent
    key = ("schmidt", H.mask)
    if key not in G.cache:
        if H.order == 1 or _nilpotent_sub(H):
            G.cache[key] = False
        else:
            G.cache[key] = all(_nilpotent_sub(M) for M in L.maximal_in(H))
    return G.cache[key]


def _nilpotent_sub(H: SubgroupHandle) -> bool:
    if H.is_whole():
        return is_nilpotent(H.parent)
    return is_nilpotent(H.as_group())


def _signature_of(X: FiniteGroup) -> tuple[int, int]:
    primes = primes_of(X.order)
    normal = [p for p in primes if normal_hall_subgroup(X, [p]) is not None]
    if len(primes) != 2 or len(normal) != 1:
        raise GroupError(f"{X.label}: Schmidt group without a two-prime, one-normal-Sylow shape")
    p = normal[0]
    q = primes[0] if primes[1] == p else primes[1]
    return p, q


def is_schmidt(G: FiniteGroup) -> bool:
    """Non-nilpotent with all maximal (hence all proper) subgroups nilpotent."""
    return _is_schmidt_in(all_subgroups(G), G.whole)


def schmidt_signature(G: FiniteGroup) -> tuple[int, int] | None:
    """``(p, q)`` with the Sylow ``p``-subgroup normal, or ``None``."""
    if not is_schmidt(G):
        return None
    return _signature_of(G)


def schmidt_diagnostics(G: FiniteGroup) -> dict:
    """Classical shape of a Schmidt group: the non-normal Sylow is cyclic."""
    sig = schmidt_signature(G)
    if sig is None:
        return {"schmidt": False}
    p, q = sig
    Q = sylow_subgroups(G, q)[0].as_group()
    return {
        "schmidt": True,
        "signature": [p, q],
        "exponents": [prime_factors(G.order)[p], prime_factors(G.order)[q]],
        "cyclic_q_sylow": Q.exponent() == Q.order,
    }


def schmidt_subgroups(G: FiniteGroup) -> list[SubgroupHandle]:
    L = all_subgroups(G)
    return [H for H in L if _is_schmidt_in(L, H)]


def n_critical_graph(G: FiniteGroup) -> NCriticalGraph:
    key = "ncgraph"
    if key not in G.cache:
        edges = {}
        for H in schmidt_subgroups(G):
            X = G if H.is_whole() else H.as_group()
            edges.setdefault(_signature_of(X), G.label)
        G.cache[key] = NCriticalGraph(frozenset(primes_of(G.order)), frozenset(edges),
                                      tuple(sorted(edges.items())))
    return G.cache[key]


def corpus_graph(groups) -> NCriticalGraph:
    vertices, provenance = set(), {}
    for G in sorted(groups, key=lambda X: X.label):
        g = n_critical_graph(G)
        vertices |= g.vertices
        for e in g.edges:
            provenance.setdefault(e, G.label)
    return NCriticalGraph(frozenset(vertices), frozenset(provenance), tuple(sorted(provenance.items())))


def edges_respect_sigma(graph: NCriticalGraph, sigma: SigmaPartition) -> bool:
    """No edge joins two different σ-blocks."""
    return all(sigma.block_of(p) == sigma.block_of(q) for p, q in graph.edges)


def sigma_decomposition_check(G: FiniteGroup, sigma: SigmaPartition) -> bool:
    """When no graph edge crosses σ-blocks, ``G`` must be the internal direct
    product of its normal Hall π-subgroups over the blocks meeting π(G)."""
    if not edges_respect_sigma(n_critical_graph(G), sigma):
        return True
    halls = []
    for block in sigma.blocks_meeting(primes_of(G.order)):
        H = normal_hall_subgroup(G, block)
        if H is None:
            return False
        halls.append(H)
    # normal subgroups of coprime orders multiplying to |G| give a direct product
    order = 1
    for H in halls:
        order *= H.order
    return order == G.order
