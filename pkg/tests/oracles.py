"""Naive reference implementations used to cross-check the library.

Nothing here calls into fitforge beyond reading a group's Cayley table.
"""
from __future__ import annotations

from itertools import product


def closure(table, seed) -> frozenset:
    """Smallest multiplicatively closed set containing ``seed`` and 0."""
    out = {0, *seed}
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            for z in (table[x][y], table[y][x]):
                z = int(z)
                if z not in out:
                    out.add(z)
                    frontier.append(z)
    return frozenset(out)


def all_subgroups_next_closure(table) -> set[frozenset]:
    """Every subgroup, as the closed sets of the closure operator above,
    enumerated with Ganter's NextClosure in lectic order."""
    n = len(table)
    current = closure(table, ())
    found = {current}
    while True:
        nxt = None
        for i in range(n - 1, -1, -1):
            if i in current:
                continue
            prefix = {x for x in current if x < i}
            B = closure(table, prefix | {i})
            if all(x >= i for x in B - current) and {x for x in B if x < i} == prefix:
                nxt = B
                break
        if nxt is None:
            return found
        found.add(nxt)
        current = nxt


def inverse(table, x) -> int:
    return next(y for y in range(len(table)) if table[x][y] == 0)


def conjugate_set(table, g, S) -> frozenset:
    gi = inverse(table, g)
    return frozenset(int(table[table[g][s]][gi]) for s in S)


def is_normal(table, H, T=None) -> bool:
    T = range(len(table)) if T is None else T
    return all(conjugate_set(table, g, H) == frozenset(H) for g in T)


def centralizer(table, S) -> frozenset:
    return frozenset(g for g in range(len(table)) if all(table[g][s] == table[s][g] for s in S))


def normalizer(table, H) -> frozenset:
    return frozenset(g for g in range(len(table)) if conjugate_set(table, g, H) == frozenset(H))


def center(table) -> frozenset:
    return centralizer(table, range(len(table)))


def check_group_axioms(table) -> None:
    n = len(table)
    for x, y, z in product(range(n), repeat=3):
        assert table[table[x][y]][z] == table[x][table[y][z]]
    for x in range(n):
        assert table[0][x] == x and table[x][0] == x
        assert any(table[x][y] == 0 and table[y][x] == 0 for y in range(n))


def subnormal_by_normal_chains(table, subgroups, H, top=None) -> bool:
    """``H`` reaches ``top`` (default the whole group) through steps ``A ⊴ B``
    among ``subgroups``."""
    whole = frozenset(range(len(table))) if top is None else frozenset(top)
    reached = {frozenset(H)}
    frontier = [frozenset(H)]
    while frontier:
        A = frontier.pop()
        if A == whole:
            return True
        for B in subgroups:
            if A < B <= whole and B not in reached and is_normal(table, A, B):
                reached.add(B)
                frontier.append(B)
    return whole in reached


def element_order(table, x) -> int:
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k
