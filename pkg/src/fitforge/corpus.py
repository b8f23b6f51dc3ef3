"""Named group constructors, the group-spec text/JSON syntax, and the
shipped corpus of small groups."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from itertools import product

import numpy as np

from .kernel import (
    DEFAULT_ORDER_BOUND,
    FiniteGroup,
    GroupError,
    as_permutation,
    compose_permutations,
    cycles_to_permutation,
    direct_product,
    generate_group,
    semidirect_product,
)


class SpecError(GroupError):
    """Unparsable or inconsistent group specification."""


# ---------------------------------------------------------------------------
# named constructors


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return generate_group([(0,)], "C1")
    return generate_group([tuple((i + 1) % n for i in range(n))], f"C{n}")


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return generate_group([(0,)], "S1")
    if n == 2:
        return generate_group([(1, 0)], "S2")
    return generate_group([cycles_to_permutation(n, range(n)), cycles_to_permutation(n, (0, 1))], f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return generate_group([tuple(range(max(n, 1)))], f"A{n}")
    return generate_group([cycles_to_permutation(n, (0, 1, i)) for i in range(2, n)], f"A{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order (``D8`` has order 8)."""
    if order % 2 or order < 4:
        raise SpecError(f"no dihedral group of order {order}")
    n = order // 2
    if n == 2:
        G = klein_four()
        G.label = f"D{order}"
        return G
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return generate_group([rot, ref], f"D{order}")


def klein_four() -> FiniteGroup:
    return generate_group([(1, 0, 3, 2), (2, 3, 0, 1)], "V4")


_QUAT = {  # unit product table on 1, i, j, k
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


def quaternion() -> FiniteGroup:
    """Q8 in its left regular representation; point ``u + 4s`` is ``(-1)^s·u``."""

    def left(unit: int) -> tuple:
        images = []
        for pt in range(8):
            u, s = pt % 4, pt // 4
            v, sign = _QUAT[(unit, u)]
            s2 = (s + (sign < 0)) % 2
            images.append(v + 4 * s2)
        return tuple(images)

    return generate_group([left(1), left(2)], "Q8")


def sl23() -> FiniteGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [v for v in product(range(3), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def act(m) -> tuple:
        (a, b), (c, d) = m
        return tuple(pos[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs)

    return generate_group([act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))], "SL23")


def affine_subgroup(p: int, k: int, label: str) -> FiniteGroup:
    """``C_p ⋊ C_m`` as the maps ``x -> a x + b`` with ``a`` of order ``m``
    generated by ``k`` mod ``p``."""
    shift = tuple((x + 1) % p for x in range(p))
    scale = tuple((k * x) % p for x in range(p))
    return generate_group([shift, scale], label)


def dicyclic12() -> FiniteGroup:
    """``C3 ⋊ C4``, the generator of C4 inverting C3."""
    c3, c4 = cyclic(3), cyclic(4)
    inv3 = c3.inverses.astype(np.int64)
    ident = np.arange(3)
    # element q of C4 acts by inversion iff it maps outside the index-2 subgroup
    sq = c4.table[c4.generators[0], c4.generators[0]]
    even = {0, int(sq)}
    action = [ident if q in even else inv3 for q in range(4)]
    return semidirect_product(c3, c4, action, label="Dic12")


_FIXED = {
    "V4": klein_four,
    "Q8": quaternion,
    "SL23": sl23,
    "SL(2,3)": sl23,
    "Dic12": dicyclic12,
    "C3:C4": dicyclic12,
    "C7:C3": lambda: affine_subgroup(7, 2, "C7:C3"),
    "F21": lambda: affine_subgroup(7, 2, "F21"),
    "C5:C4": lambda: affine_subgroup(5, 2, "C5:C4"),
    "F20": lambda: affine_subgroup(5, 2, "F20"),
}

_FAMILY = re.compile(r"^([CSAD])(\d+)$")


def named_group(name: str, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
    """Build a group from a name such as ``S4``, ``D10``, ``Q8`` or ``S3xC5``."""
    name = name.strip()
    if name in _FIXED:
        return _FIXED[name]()
    if "x" in name:
        parts = name.split("x")
        if any(not p for p in parts):
            raise SpecError(f"malformed product: {name!r}")
        G = named_group(parts[0], order_bound)
        for part in parts[1:]:
            G = direct_product(G, named_group(part, order_bound), label=f"{G.label}x{part}",
                               order_bound=order_bound)
        return G
    m = _FAMILY.match(name)
    if not m:
        raise SpecError(f"unknown group name: {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise SpecError(f"bad parameter in {name!r}")
    builder = {"C": cyclic, "S": symmetric, "A": alternating, "D": dihedral}[kind]
    return builder(n)


# ---------------------------------------------------------------------------
# specs


@dataclass
class GroupSpec:
    """A group given by name, by permutation generators, or as a semidirect
    product whose action is conjugation by point permutations."""

    label: str
    name: str | None = None
    degree: int | None = None
    generators: list | None = None
    semidirect: dict | None = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {"label": self.label}
        if self.name is not None:
            out["name"] = self.name
        if self.generators is not None:
            out["degree"] = self.degree
            out["generators"] = [list(g) for g in self.generators]
        if self.semidirect is not None:
            out["semidirect"] = self.semidirect
        if self.note:
            out["note"] = self.note
        return out

    def build(self, order_bound: int = DEFAULT_ORDER_BOUND) -> FiniteGroup:
        if self.generators is not None:
            G = generate_group(self.generators, self.label, order_bound)
        elif self.semidirect is not None:
            G = _build_semidirect(self.semidirect, self.label, order_bound)
        else:
            G = named_group(self.name or self.label, order_bound)
        G.label = self.label
        return G


def parse_group_spec(text) -> GroupSpec:
    """Parse a name (``"S4"``), a JSON object string, or an already-decoded dict."""
    if isinstance(text, dict):
        return _spec_from_dict(text)
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"bad JSON group spec: {exc}") from None
        return _spec_from_dict(data)
    _check_name(text)
    return GroupSpec(label=text, name=text)


def _check_name(name: str) -> None:
    if name in _FIXED:
        return
    parts = name.split("x")
    if len(parts) > 1:
        for part in parts:
            _check_name(part)
        return
    m = _FAMILY.match(name)
    if not m or int(m.group(2)) < 1:
        raise SpecError(f"unknown group name: {name!r}")


def _spec_from_dict(data: dict) -> GroupSpec:
    if not isinstance(data, dict):
        raise SpecError("group spec must be a JSON object")
    label = data.get("label") or data.get("name")
    if not label:
        raise SpecError("group spec needs a label")
    note = data.get("note", "")
    if "generators" in data:
        degree = data.get("degree")
        gens = data["generators"]
        if not isinstance(degree, int) or degree < 1:
            raise SpecError(f"{label}: degree must be a positive integer")
        if not isinstance(gens, list) or not gens:
            raise SpecError(f"{label}: generators must be a non-empty list")
        perms = []
        for g in gens:
            if not isinstance(g, list) or len(g) != degree:
                raise SpecError(f"{label}: generator {g} does not have degree {degree}")
            try:
                perms.append(as_permutation(g))
            except GroupError as exc:
                raise SpecError(f"{label}: {exc}") from None
        return GroupSpec(label=label, degree=degree, generators=perms, note=note)
    if "semidirect" in data:
        sd = data["semidirect"]
        if not isinstance(sd, dict) or not {"normal", "acting", "action"} <= set(sd):
            raise SpecError(f"{label}: semidirect needs normal, acting and action")
        return GroupSpec(label=label, semidirect=sd, note=note)
    if "name" in data:
        return GroupSpec(label=label, name=data["name"], note=note)
    raise SpecError(f"{label}: need one of name, generators, semidirect")


def _build_semidirect(sd: dict, label: str, order_bound: int) -> FiniteGroup:
    N = parse_group_spec(sd["normal"]).build(order_bound)
    Q = parse_group_spec(sd["acting"]).build(order_bound)
    if N.realization is None:
        raise SpecError(f"{label}: the normal factor needs a permutation realization")
    degree = N.realization.shape[1]
    pis = [as_permutation(p) for p in sd["action"]]
    if len(pis) != len(Q.generators) or any(len(p) != degree for p in pis):
        raise SpecError(f"{label}: need one degree-{degree} permutation per generator of the acting group")
    # graph of q -> pi_q inside Q x Sym(degree); it is a homomorphism iff the graph has |Q| elements
    ident = tuple(range(degree))
    images = {0: ident}
    frontier = [0]
    while frontier:
        nxt = []
        for q in frontier:
            for g, pi in zip(Q.generators, pis):
                r = Q.mul(q, g)
                img = compose_permutations(images[q], pi)
                if r in images:
                    if images[r] != img:
                        raise SpecError(f"{label}: action is not a homomorphism")
                else:
                    images[r] = img
                    nxt.append(r)
        frontier = nxt
    real = [tuple(row) for row in N.realization.tolist()]
    action = []
    for q in range(Q.order):
        pi = images[q]
        pinv = tuple(np.argsort(pi).tolist())
        row = []
        for n in real:
            conj = compose_permutations(compose_permutations(pi, n), pinv)
            try:
                row.append(N.element_of_permutation(conj))
            except GroupError:
                raise SpecError(f"{label}: action does not normalize the normal factor") from None
        action.append(row)
    return semidirect_product(N, Q, action, label=label, order_bound=order_bound)


# ---------------------------------------------------------------------------
# shipped corpus

CORPUS_NOTES = {
    "C1": "trivial group",
    "C2": "cyclic, nilpotent",
    "C3": "cyclic, nilpotent",
    "C4": "cyclic 2-group",
    "C6": "cyclic, two primes",
    "C12": "cyclic, two primes, non-elementary Sylow 2",
    "V4": "elementary abelian 2-group",
    "C2xC2xC2": "elementary abelian of rank 3",
    "S3": "supersoluble, not nilpotent; Schmidt (3,2)-group",
    "D8": "nonabelian 2-group, Frattini subgroup of order 2",
    "Q8": "quaternion group; Frattini quotient elementary abelian",
    "D10": "supersoluble, Schmidt (5,2)-group",
    "D12": "supersoluble, D12 = S3 x C2",
    "A4": "soluble, not supersoluble; Schmidt (2,3)-group",
    "Dic12": "C3 : C4, supersoluble with cyclic Sylow 2",
    "S4": "soluble, not supersoluble; chief series 1 < V4 < A4 < S4",
    "SL23": "soluble, not supersoluble; Schmidt (2,3)-group with normal Q8",
    "C7:C3": "Frobenius group of order 21, supersoluble",
    "S3xC5": "supersoluble, sigma-nilpotent for {{2,3},{5}}",
    "A4xC2": "soluble, not supersoluble, nontrivial centre",
    "A5": "simple non-abelian",
    "S5": "almost simple, F*(G) = A5",
    "C5:C4": "Frobenius group of order 20, supersoluble",
}


def corpus_specs() -> list[GroupSpec]:
    """The shipped corpus, read from the packaged JSON file."""
    text = resources.files("fitforge").joinpath("data/corpus.json").read_text()
    return load_corpus_text(text)


def load_corpus_text(text: str) -> list[GroupSpec]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"bad corpus file: {exc}") from None
    if not isinstance(data, list):
        raise SpecError("corpus file must hold a JSON array")
    return [parse_group_spec(item) for item in data]


def load_corpus(path=None, order_bound: int = DEFAULT_ORDER_BOUND) -> list[FiniteGroup]:
    specs = corpus_specs() if path is None else load_corpus_text(open(path).read())
    groups = [s.build(order_bound) for s in specs]
    return sorted(groups, key=lambda G: G.label)


def shipped_corpus_json() -> list[dict]:
    """Regenerate the corpus file contents from the named constructors."""
    out = []
    for label, note in CORPUS_NOTES.items():
        if label == "Dic12":
            spec = {"label": label, "semidirect": {
                "normal": "C3", "acting": "C4",
                "action": [[0, 2, 1]]}, "note": note}
        else:
            G = named_group(label)
            gens = [G.realization[g].tolist() for g in G.generators]
            spec = {"label": label, "degree": int(G.realization.shape[1]), "generators": gens, "note": note}
        out.append(spec)
    return out
