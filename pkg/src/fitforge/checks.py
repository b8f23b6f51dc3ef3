"""Theorem-verification harness.

Every check runs per corpus group and yields one :class:`CheckRecord`.
Hard checks fail the run on any violation; exploratory ones (``info``
verdicts) only report.  Reports are deterministic: groups are ordered by
label, subgroups by member set.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import canonical as can
from . import formations as fm
from . import schmidt as sc
from . import subnormality as sn
from .corpus import cyclic
from .kernel import FiniteGroup, SubgroupHandle, direct_product, normalizer, product_set, quotient_group
from .lattice import LatticeBoundError, all_subgroups, lattice_bound, normal_subgroups

PASS, FAIL, SKIP, INFO = "pass", "fail", "skip", "info"
TNEW_PAIR_CAP = 200


class CheckInputError(ValueError):
    """Bad check id or a formation the check is not defined for."""


@dataclass
class CheckRecord:
    check: str
    formation: str
    sigma: str
    group: str
    verdict: str
    witness: dict

    def to_json(self) -> dict:
        return {"check": self.check, "formation": self.formation, "sigma": self.sigma,
                "group": self.group, "verdict": self.verdict, "witness": self.witness}


@dataclass
class Report:
    check: str
    formation: str
    sigma: str
    records: list = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(r.verdict == FAIL for r in self.records)

    def instances(self) -> int:
        return sum(r.witness.get("instances", 0) for r in self.records)

    def summary(self) -> dict:
        counts = {v: sum(r.verdict == v for r in self.records) for v in (PASS, FAIL, SKIP, INFO)}
        counts["instances"] = self.instances()
        return counts

    def to_json(self) -> dict:
        return {"check": self.check, "formation": self.formation, "sigma": self.sigma,
                "records": [r.to_json() for r in self.records], "summary": self.summary()}

    def dumps(self) -> str:
        return pretty_json(self.to_json())


_FLAT_LIST = re.compile(r"\[\n[\d,\s-]*\]")


def pretty_json(data) -> str:
    """Indented JSON with lists of integers kept on one line."""
    text = json.dumps(data, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: re.sub(r"\s+", "", m.group(0)).replace(",", ", "), text)


class Violation(Exception):
    """Raised inside a suite with the failure witness."""

    def __init__(self, witness: dict):
        super().__init__(witness.get("step", "violation"))
        self.witness = witness


# ---------------------------------------------------------------------------
# helpers


def members(H: SubgroupHandle) -> list[int]:
    return [int(x) for x in H.array]


def _intersect(subs, default: SubgroupHandle) -> SubgroupHandle:
    subs = list(subs)
    return reduce(lambda A, B: A & B, subs) if subs else default


def _fail(step: str, ambient: FiniteGroup, **subgroups) -> Violation:
    return Violation({"step": step, "ambient": ambient.label,
                      "subgroups": {k: members(v) for k, v in subgroups.items()}})


def _require(cond: bool, step: str, ambient: FiniteGroup, **subgroups) -> None:
    if not cond:
        raise _fail(step, ambient, **subgroups)


def subgroup_class_reps(G: FiniteGroup) -> list[SubgroupHandle]:
    """One subgroup per conjugacy class, in lattice order."""
    key = "class_reps"
    if key not in G.cache:
        L = all_subgroups(G)
        seen: set[int] = set()
        reps = []
        for H in L:
            if H.mask in seen:
                continue
            reps.append(H)
            seen.update(H.conjugate(g).mask for g in range(G.order))
        G.cache[key] = reps
    return G.cache[key]


def section_pool(G: FiniteGroup) -> list[FiniteGroup]:
    """Sections ``H/K`` of ``G``: ``H`` over subgroup classes, ``K`` over the
    normal subgroups of ``H``.  Isomorphic repeats are kept."""
    key = "section_pool"
    if key not in G.cache:
        pool = []
        for i, H in enumerate(subgroup_class_reps(G)):
            X = H.as_group()
            X.label = G.label if H.is_whole() else f"{G.label}<{i}>"
            for j, K in enumerate(normal_subgroups(X)):
                if K.is_trivial():
                    pool.append(X)
                elif K.order < X.order:
                    Q = quotient_group(X, K).target
                    Q.label = f"{X.label}/{j}"
                    pool.append(Q)
        G.cache[key] = pool
    return G.cache[key]


def extended_section_pool(G: FiniteGroup) -> list[FiniteGroup]:
    """Sections of ``G`` plus their direct products with C2, C3 and C5 that
    stay within the lattice bound; per-group statements need the breadth."""
    key = "extended_pool"
    if key not in G.cache:
        pool = list(section_pool(G))
        for p in (2, 3, 5):
            Cp = cyclic(p)
            for X in section_pool(G):
                if X.order * p <= lattice_bound():
                    pool.append(direct_product(X, Cp, label=f"{X.label}xC{p}"))
        G.cache[key] = pool
    return G.cache[key]


def ambient_pool(G: FiniteGroup) -> list[FiniteGroup]:
    """``G`` together with one copy of each class of its subgroups."""
    return [X for X in section_pool(G) if "/" not in X.label[len(G.label):]]


def _local(X: FiniteGroup, S: SubgroupHandle) -> SubgroupHandle:
    """``S`` (inside the parent of ``X``) as a subgroup of ``X = H.as_group()``."""
    return X.subgroup(np.searchsorted(X.embedding, S.array).tolist())


# ---------------------------------------------------------------------------
# formation guards


def _need_hereditary(F: fm.Formation) -> None:
    if not F.hereditary:
        raise CheckInputError(f"{F.name} is not hereditary")


def _need_saturated(F: fm.Formation) -> None:
    if not F.saturated:
        raise CheckInputError(f"{F.name} is not saturated")


def _need_sigma(F: fm.Formation) -> None:
    if F.sigma is None:
        raise CheckInputError(f"{F.name} is not a sigma-nilpotent formation")


# ---------------------------------------------------------------------------
# main theorems


def _r_sn_all(G, F, ctx, subs, R) -> list[SubgroupHandle]:
    """Members of ``subs`` that are not R-K-F-subnormal."""
    L = ctx.lattice
    return [H for H in subs if not ctx.is_sn(H, L.join(H, R))]


def check_t10_1(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    ctx = sn.ksn_context(G, F)
    Ft = ctx.lattice.canonical(can.f_tilde(G))
    maxes = all_subgroups(G).maximal_in(G.whole)
    bad = _r_sn_all(G, F, ctx, maxes, Ft)
    lhs, rhs = not bad, F.member(G)
    witness = {"instances": 1, "all_maximal_ftilde_ksn": lhs, "member": rhs,
               "ftilde": members(Ft), "maximal_count": len(maxes)}
    if F.name == fm.NILPOTENT.name:
        classical = all(sn.is_subnormal(G, M, ctx.lattice.join(M, Ft)) for M in maxes)
        witness["classical_agrees"] = classical == lhs
        if classical != lhs:
            return FAIL, witness
    if lhs != rhs:
        witness["non_ksn_maximals"] = [members(M) for M in bad]
        return FAIL, witness
    return PASS, witness


def check_t10_2_neg(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    """Exploratory: a non-F group whose maximal subgroups are all F*-K-F-sn."""
    ctx = sn.ksn_context(G, F)
    Fs = ctx.lattice.canonical(can.generalized_fitting(G))
    maxes = all_subgroups(G).maximal_in(G.whole)
    lhs = not _r_sn_all(G, F, ctx, maxes, Fs)
    found = lhs and not F.member(G)
    return INFO, {"instances": 1, "all_maximal_fstar_ksn": lhs, "member": F.member(G),
                  "boundary_witness": found}


def check_t11(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    ctx = sn.ksn_context(G, F)
    L = ctx.lattice
    Fs = L.canonical(can.generalized_fitting(G))
    sylows = sn.sylow_subgroups_of(L, G.whole)
    cyclic = sn.primary_subgroups_of(L, G.whole)
    bad_s = _r_sn_all(G, F, ctx, sylows, Fs)
    bad_c = _r_sn_all(G, F, ctx, cyclic, Fs)
    values = [not bad_s, not bad_c, F.member(G)]
    witness = {"instances": 1, "sylow_fstar_ksn": values[0], "cyclic_primary_fstar_ksn": values[1],
               "member": values[2]}
    if len(set(values)) != 1:
        witness["non_ksn_sylows"] = [members(P) for P in bad_s]
        witness["non_ksn_cyclic_primary"] = [members(C) for C in bad_c]
        return FAIL, witness
    return PASS, witness


def check_tgb(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    S, C, Z = sn.s_f(G, F), sn.c_f(G, F), fm.f_hypercenter(G, F)
    witness = {"instances": 1, "s_f": members(S), "c_f": members(C), "z_f": members(Z)}
    return (PASS if S.mask == C.mask == Z.mask else FAIL), witness


def exact_factorizations(G: FiniteGroup, cap: int = TNEW_PAIR_CAP) -> list[tuple[SubgroupHandle, SubgroupHandle]]:
    """Pairs ``A ≤ B`` in lattice order with ``G = AB``; evenly thinned to ``cap``."""
    subs = list(all_subgroups(G))
    pairs = []
    for i, A in enumerate(subs):
        for B in subs[i:]:
            if A.order * B.order == G.order * (A & B).order:
                pairs.append((A, B))
    if len(pairs) > cap:
        step = (len(pairs) - 1) / (cap - 1)
        pairs = [pairs[round(k * step)] for k in range(cap)]
    return pairs


def check_tnew(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    ctx = sn.ksn_context(G, F)
    L = ctx.lattice
    Fs = L.canonical(can.generalized_fitting(G))
    member, nilpotent = F.member(G), can.is_nilpotent(G)
    pairs = exact_factorizations(G)
    held = {"sylow": 0, "cyclic_primary": 0, "conjugate_permutable": 0}
    for A, B in pairs:
        _require(len(product_set(G, A.members, B.members)) == G.order, "AB is not G", G, A=A, B=B)
        sylows = sn.sylow_subgroups_of(L, A) + sn.sylow_subgroups_of(L, B)
        cyclic = sn.primary_subgroups_of(L, A) + sn.primary_subgroups_of(L, B)
        if not _r_sn_all(G, F, ctx, sylows, Fs):
            held["sylow"] += 1
            _require(member, "Sylow condition holds but G not in formation", G, A=A, B=B)
        if not _r_sn_all(G, F, ctx, cyclic, Fs):
            held["cyclic_primary"] += 1
            _require(member, "cyclic primary condition holds but G not in formation", G, A=A, B=B)
        BF, AF = L.join(B, Fs), L.join(A, Fs)
        if (all(sn.is_conjugate_permutable(G, P, BF) for P in sn.sylow_subgroups_of(L, A))
                and all(sn.is_conjugate_permutable(G, P, AF) for P in sn.sylow_subgroups_of(L, B))):
            held["conjugate_permutable"] += 1
            _require(nilpotent, "conjugate-permutable condition holds but G not nilpotent", G, A=A, B=B)
    return PASS, {"instances": len(pairs), "member": member, "conditions_held": held}


def check_hall(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    norms = [normalizer(G, P) for P in sn.all_sylow_subgroups(G)]
    lhs = _intersect(norms, G.whole)
    rhs = can.hypercenter(G)
    witness = {"instances": 1, "sylow_normalizer_intersection": members(lhs), "hypercenter": members(rhs)}
    return (PASS if lhs.mask == rhs.mask else FAIL), witness


def kramer_condition(G: FiniteGroup) -> bool:
    L = all_subgroups(G)
    Fit = L.canonical(can.fitting(G))
    covers = {M.mask for M in L.maximal_in(Fit)}
    return all(Fit <= M or (M & Fit).mask in covers for M in L.maximal_in(G.whole))


def check_kramer(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    if not can.is_soluble(G):
        return SKIP, {"reason": "not soluble"}
    lhs, rhs = can.is_supersoluble(G), kramer_condition(G)
    witness = {"instances": 1, "supersoluble": lhs, "fitting_condition": rhs,
               "prime_index_agrees": can.is_supersoluble_by_indices(G) == lhs}
    ok = lhs == rhs and witness["prime_index_agrees"]
    return (PASS if ok else FAIL), witness


def check_forster(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    phi = can.frattini(G)
    via_socle = can._pullback_from_quotient(G, phi, can.socle)
    via_fstar = can.f_tilde_forster(G)
    witness = {"instances": 1, "ftilde_socle": members(via_socle), "ftilde_fstar": members(via_fstar)}
    return (PASS if via_socle.mask == via_fstar.mask else FAIL), witness


def check_sigma54(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    graph = sc.n_critical_graph(G)
    respects = sc.edges_respect_sigma(graph, sigma)
    ok = sc.sigma_decomposition_check(G, sigma)
    witness = {"instances": 1, "edges": [list(e) for e in sorted(graph.edges)],
               "edges_within_blocks": respects, "decomposes": ok if respects else None}
    return (PASS if ok else FAIL), witness


# ---------------------------------------------------------------------------
# propositions p1 / p2


def check_p1(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    ctx = sn.ksn_context(G, F)
    L = ctx.lattice
    S, C = sn.s_f(G, F), sn.c_f(G, F)
    S2, C2 = sn.s_f_by_scan(G, F), sn.c_f_by_scan(G, F)
    sylows = sn.all_sylow_subgroups(G)
    cyclic = [L.canonical(X) for X in sn.cyclic_primary_subgroups(G)]
    for N in normal_subgroups(G):
        if S < N:
            _require(not all(ctx.is_sn(P, L.product(P, N)) for P in sylows),
                     "normal subgroup above S_F also subnormalizes every Sylow", G, S_F=S, N=N)
        if C < N:
            _require(not all(ctx.is_sn(X, L.product(X, N)) for X in cyclic),
                     "normal subgroup above C_F also subnormalizes every cyclic primary", G, C_F=C, N=N)
    witness = {"instances": 1, "s_f": members(S), "c_f": members(C),
               "s_f_normal": S.is_normal_in(), "c_f_normal": C.is_normal_in()}
    ok = S.mask == S2.mask and C.mask == C2.mask and witness["s_f_normal"] and witness["c_f_normal"]
    return (PASS if ok else FAIL), witness


def check_p2(G: FiniteGroup, F: fm.Formation, sigma) -> tuple[str, dict]:
    S, C = sn.s_f(G, F), sn.c_f(G, F)
    W, V = fm.wbar_formation(F), fm.vstar_formation(F)
    int_w, int_v = fm.int_f(G, W), fm.int_f(G, V)
    witness = {"instances": 1, "s_f": members(S), "c_f": members(C),
               "int_wbar": members(int_w), "int_vstar": members(int_v)}
    _require(S.mask == int_w.mask, "S_F differs from Int_wbarF", G, S_F=S, Int=int_w)
    _require(C.mask == int_v.mask, "C_F differs from Int_v*F", G, C_F=C, Int=int_v)
    _require(S <= C, "S_F not inside C_F", G, S_F=S, C_F=C)
    for D in (W, V):
        closed = fm.z_closure_member(G, D)
        witness[f"z_saturated_{D.name.split(':')[0]}"] = (not closed) or D.member(G)
        _require(witness[f"z_saturated_{D.name.split(':')[0]}"], f"G = Z_{D.name}(G) but G not in {D.name}", G)
    # one application of the Z-closure is already stable
    ZF = fm.Formation(f"Z({F.name})", lambda X: fm.z_closure_member(X, F), F.hereditary, True)
    stable = fm.f_hypercenter(G, ZF).mask == fm.f_hypercenter(G, F).mask
    witness["z_closure_stable"] = stable
    _require(stable, "Z_ZF(G) differs from Z_F(G)", G)
    return PASS, witness


# ---------------------------------------------------------------------------
# lemma suites over ambient groups / sections


def _suite(G, F, pool, body) -> tuple[str, dict]:
    count = nonvacuous = 0
    for X in pool:
        c, nv = body(X, F)
        count += c
        nonvacuous += nv
    return PASS, {"instances": count, "nonvacuous": nonvacuous, "pool": len(pool)}


def _l31_body(X: FiniteGroup, F) -> tuple[int, int]:
    ctx = sn.ksn_context(X, F)
    L = ctx.lattice
    count = nv = 0
    # (3) transitivity
    for R in L:
        R_sn = ctx.is_sn(R)
        for H in L.below(R):
            count += 1
            if R_sn and ctx.is_sn(H, R):
                nv += 1
                _require(ctx.is_sn(H), "Lemma 3.1(3): H sn R sn G but H not sn G", X, H=H, R=R)
    for N in normal_subgroups(X):
        if N.is_trivial() or N.is_whole():
            continue
        qm = quotient_group(X, N)
        qctx = sn.ksn_context(qm.target, F)
        # (1) images
        for H in L:
            count += 1
            if ctx.is_sn(H):
                nv += 1
                _require(qctx.is_sn(qctx.lattice.canonical(qm.image(H))),
                         "Lemma 3.1(1): image of a K-F-sn subgroup not K-F-sn", X, H=H, N=N)
        # (2) preimages
        for Q in qctx.lattice:
            count += 1
            if qctx.is_sn(Q):
                nv += 1
                _require(ctx.is_sn(L.canonical(qm.preimage(Q))),
                         "Lemma 3.1(2): preimage of a K-F-sn subgroup not K-F-sn", X, N=N)
    return count, nv


def _l32_body(X: FiniteGroup, F) -> tuple[int, int]:
    ctx = sn.ksn_context(X, F)
    L = ctx.lattice
    count = nv = 0
    for H in L:
        H_sn = ctx.is_sn(H)
        for R in L:
            count += 1
            if not H_sn:
                continue
            nv += 1
            M = L.meet(H, R)
            _require(ctx.is_sn(M, R), "Lemma 3.2(1): H∩R not K-F-sn in R", X, H=H, R=R)
            if ctx.is_sn(R):
                _require(ctx.is_sn(M), "Lemma 3.2(2): H∩R not K-F-sn in G", X, H=H, R=R)
    return count, nv


def _lemn_body(X: FiniteGroup, F) -> tuple[int, int]:
    ctx = sn.ksn_context(X, F)
    L = ctx.lattice
    count = nv = 0
    normals = [L.canonical(N) for N in normal_subgroups(X) if not N.is_trivial()]
    for R in L:
        for H in L.below(R):
            H_sn = ctx.is_sn(H, R)
            for N in normals:
                count += 1
                if H_sn:
                    nv += 1
                    _require(ctx.is_sn(L.join(H, N), L.join(R, N)),
                             "Lemma lemN: HN not K-F-sn in RN", X, H=H, R=R, N=N)
    return count, nv


def _lattice_body(X: FiniteGroup, F) -> tuple[int, int]:
    ctx = sn.ksn_context(X, F)
    L = ctx.lattice
    good = [H for H in L if ctx.is_sn(H)]
    count = 0
    for i, H in enumerate(good):
        for R in good[i:]:
            count += 1
            _require(ctx.is_sn(L.join(H, R)), "lattice property: join not K-F-sn", X, H=H, R=R)
            _require(ctx.is_sn(L.meet(H, R)), "lattice property: meet not K-F-sn", X, H=H, R=R)
    return count, count


def _l5_body(X: FiniteGroup, F) -> tuple[int, int]:
    Z = fm.f_hypercenter(X, F)
    ZZ = fm.f_hypercenter(Z.as_group(), F)
    _require(ZZ.is_whole(), "Prop l5: Z_F(Z_F(G)) differs from Z_F(G)", X, Z=Z)
    count = 1
    for H in all_subgroups(X):
        count += 1
        if H.is_whole():
            continue
        Y = H.as_group()
        _require(_local(Y, Z & H) <= fm.f_hypercenter(Y, F),
                 "Prop l5: Z_F(G)∩H not inside Z_F(H)", X, H=H, Z=Z)
    return count, count


def _l51_body(X: FiniteGroup, F) -> tuple[int, int]:
    L = all_subgroups(X)
    Z = L.canonical(fm.f_hypercenter(X, F))
    _require(Z <= fm.int_f(X, F), "Cor l5.1: Z_F(G) not inside Int_F(G)", X, Z=Z)
    count = nv = 1
    for H in L:
        count += 1
        if F.member_subgroup(H):
            nv += 1
            _require(F.member_subgroup(L.join(H, Z)), "Cor l5.1: H Z_F(G) not in F", X, H=H, Z=Z)
    return count, nv


def _delt_body(X: FiniteGroup, F) -> tuple[int, int]:
    phi = can.frattini(X)
    lhs = fm.delta_f(X, F)
    rhs = can._pullback_from_quotient(X, phi, lambda Q: fm.f_hypercenter(Q, F))
    _require(lhs.mask == rhs.mask, "Lemma delt: Δ_F(G)/Φ(G) differs from Z_F(G/Φ(G))", X, Delta=lhs, Z_pullback=rhs)
    return 1, 1


def _pr0_body(X: FiniteGroup, F) -> tuple[int, int]:
    if can.generalized_fitting(X) <= fm.f_hypercenter(X, F):
        _require(F.member(X), "Prop pr0: F*(G) ≤ Z_F(G) but G not in F", X)
        return 1, 1
    return 1, 0


LEMMA_SUITES = {
    "L3.1": (_l31_body, ambient_pool, ()),
    "L3.2": (_l32_body, ambient_pool, (_need_hereditary,)),
    "LemN": (_lemn_body, ambient_pool, ()),
    "Lattice": (_lattice_body, ambient_pool, (_need_sigma,)),
    "L5": (_l5_body, ambient_pool, (_need_hereditary,)),
    "L5.1": (_l51_body, ambient_pool, (_need_hereditary, _need_saturated)),
    "Delt": (_delt_body, extended_section_pool, (_need_saturated,)),
    "Pr0": (_pr0_body, extended_section_pool, (_need_saturated,)),
}


def _t10_guard(F):
    _need_saturated(F)
    if not fm.contains_nilpotent(F):
        raise CheckInputError(f"{F.name} is not known to contain every nilpotent group")


def _proper_saturated(F):
    _need_saturated(F)
    if F.universal:
        raise CheckInputError("the exploratory search needs a proper formation")


MAIN_CHECKS = {
    "T1.0-1": (check_t10_1, (_t10_guard,), True),
    "T1.0-2-neg": (check_t10_2_neg, (_proper_saturated,), False),
    "T1.1": (check_t11, (_need_sigma,), True),
    "Tgb": (check_tgb, (_need_sigma,), True),
    "Tnew": (check_tnew, (_need_sigma,), True),
    "Hall": (check_hall, (), True),
    "Kramer": (check_kramer, (), True),
    "P1": (check_p1, (_need_hereditary,), True),
    "P2": (check_p2, (_need_hereditary,), True),
    "Forster": (check_forster, (), True),
    "Sigma54": (check_sigma54, (), True),
}

CHECK_IDS = tuple(MAIN_CHECKS) + tuple(LEMMA_SUITES)
DEFAULT_FORMATION = {"Tgb": "sigma_nilpotent", "T1.1": "sigma_nilpotent", "Tnew": "sigma_nilpotent",
                     "Lattice": "sigma_nilpotent", "T1.0-2-neg": "supersoluble"}


def _resolve(check: str, formation: str | None, sigma) -> tuple[fm.Formation, fm.SigmaPartition]:
    if check not in CHECK_IDS:
        raise CheckInputError(f"unknown check {check!r}; known: {', '.join(CHECK_IDS)}")
    sigma = sigma if isinstance(sigma, fm.SigmaPartition) else fm.SigmaPartition.parse(sigma)
    name = formation or DEFAULT_FORMATION.get(check, "nilpotent")
    try:
        F = fm.get_formation(name, sigma)
    except fm.FormationError as exc:
        raise CheckInputError(str(exc)) from None
    guards = MAIN_CHECKS[check][1] if check in MAIN_CHECKS else LEMMA_SUITES[check][2]
    for guard in guards:
        guard(F)
    return F, sigma


def verify(check: str, corpus: list[FiniteGroup], formation: str | None = None, sigma=None) -> Report:
    """Run one check over ``corpus``; groups are processed in label order."""
    F, sigma = _resolve(check, formation, sigma)
    report = Report(check, F.name, str(sigma))
    for G in sorted(corpus, key=lambda X: X.label):
        try:
            if G.order > lattice_bound():
                raise LatticeBoundError(f"{G.label}: order {G.order} exceeds lattice bound {lattice_bound()}")
            if check in MAIN_CHECKS:
                verdict, witness = MAIN_CHECKS[check][0](G, F, sigma)
            else:
                body, pool, _ = LEMMA_SUITES[check]
                verdict, witness = _suite(G, F, pool(G), body)
        except Violation as v:
            verdict, witness = FAIL, v.witness
        except LatticeBoundError as exc:
            verdict, witness = SKIP, {"reason": str(exc)}
        report.records.append(CheckRecord(check, F.name, str(sigma), G.label, verdict, witness))
    return report


def is_hard(check: str) -> bool:
    return check in LEMMA_SUITES or MAIN_CHECKS[check][2]


# ---------------------------------------------------------------------------
# boundary search


def search_boundary(F: fm.Formation, corpus: list[FiniteGroup]) -> Report:
    """Groups where S_F, C_F and Z_F disagree, or where w̄F / v*F membership
    goes beyond F.  Informational only."""
    report = Report("search", F.name, str(F.sigma) if F.sigma else "")
    W, V = fm.wbar_formation(F), fm.vstar_formation(F)
    for G in sorted(corpus, key=lambda X: X.label):
        try:
            S, C, Z = sn.s_f(G, F), sn.c_f(G, F), fm.f_hypercenter(G, F)
            member = F.member(G)
            witness = {
                "s_f": members(S), "c_f": members(C), "z_f": members(Z),
                "member": member, "wbar_member": W.member(G), "vstar_member": V.member(G),
            }
            witness["discrepancy"] = (len({S.mask, C.mask, Z.mask}) > 1
                                      or witness["wbar_member"] > member or witness["vstar_member"] > member)
        except LatticeBoundError as exc:
            witness = {"reason": str(exc)}
        report.records.append(CheckRecord("search", F.name, report.sigma, G.label,
                                          INFO if "reason" not in witness else SKIP, witness))
    return report


SIGMAS = ("singletons", "2,3", "2,5/3")

FULL_SUITE: tuple = (
    *(("T1.0-1", f, None) for f in ("nilpotent", "supersoluble", "soluble")),
    ("T1.0-2-neg", "supersoluble", None),
    *(("T1.1", "sigma_nilpotent", s) for s in SIGMAS),
    *(("Tgb", "sigma_nilpotent", s) for s in SIGMAS),
    *(("Tnew", "sigma_nilpotent", s) for s in SIGMAS),
    ("Hall", "nilpotent", None),
    ("Kramer", "supersoluble", None),
    *(("P1", f, None) for f in ("nilpotent", "supersoluble")),
    *(("P2", f, None) for f in ("nilpotent", "supersoluble")),
    ("L3.1", "supersoluble", None),
    ("L3.2", "supersoluble", None),
    ("LemN", "supersoluble", None),
    ("Lattice", "sigma_nilpotent", "2,3"),
    ("L5", "supersoluble", None),
    ("L5.1", "supersoluble", None),
    ("Delt", "supersoluble", None),
    ("Pr0", "supersoluble", None),
    ("Forster", "nilpotent", None),
    *(("Sigma54", "nilpotent", s) for s in SIGMAS),
)


def run_suite(corpus: list[FiniteGroup], plan=FULL_SUITE) -> list[Report]:
    return [verify(check, corpus, formation, sigma) for check, formation, sigma in plan]


def dumps_reports(reports: list[Report]) -> str:
    return pretty_json([r.to_json() for r in reports])
