"""The thirteen acceptance criteria, one test each.

Every test records a ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line, printed together at the end of the pytest run.
"""
import subprocess
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest
from oracles import all_subgroups_next_closure, check_group_axioms, subnormal_by_normal_chains

from fitforge import canonical as can
from fitforge import checks
from fitforge import formations as fm
from fitforge import schmidt as sc
from fitforge import subnormality as sn
from fitforge.corpus import load_corpus, named_group
from fitforge.lattice import all_subgroups


@contextmanager
def criterion(record_property, number, text):
    try:
        yield
    except BaseException:
        record_property("criterion", f"FAIL criterion {number}: {text}")
        raise
    record_property("criterion", f"PASS criterion {number}: {text}")


@pytest.fixture(scope="module")
def suite():
    """Full verify suite on a freshly built corpus, plus its serialized text."""
    start = time.perf_counter()
    reports = checks.run_suite(load_corpus())
    return {
        "reports": reports,
        "text": checks.dumps_reports(reports),
        "seconds": time.perf_counter() - start,
    }


def reports_for(suite, check, formation=None):
    found = [r for r in suite["reports"] if r.check == check
             and (formation is None or r.formation.startswith(formation))]
    assert found, check
    return found


def all_pass(reports):
    bad = [(r.check, r.sigma, x.group, x.verdict) for r in reports for x in r.records if x.verdict != checks.PASS]
    assert not bad, bad


def test_criterion_01_kernel_soundness(record_property):
    with criterion(record_property, 1, "kernel axioms and subgroup oracle, under 60 s"):
        start = time.perf_counter()
        corpus = load_corpus()
        for G in corpus:
            T = G.table
            idx = np.arange(G.order)
            assert (T[T] == T[:, T]).all(), G.label
            assert (T[0] == idx).all() and (T[:, 0] == idx).all(), G.label
            assert (T[idx, G.inverses] == 0).all() and (T[G.inverses, idx] == 0).all(), G.label
            if G.order <= 48:
                tab = T.tolist()
                check_group_axioms(tab)
                assert {H.members for H in all_subgroups(G)} == all_subgroups_next_closure(tab), G.label
        elapsed = time.perf_counter() - start
        assert elapsed < 60, elapsed


def test_criterion_02_canonical_values(record_property):
    with criterion(record_property, 2, "F, F*, F~, Phi and Soc oracle values by two routes"):
        S4, A5, Q8 = named_group("S4"), named_group("A5"), named_group("Q8")
        pairs = [
            (can.fitting(S4), can.fitting_by_op_product(S4), 4),
            (can.generalized_fitting(A5), can.generalized_fitting_by_scan(A5), 60),
            (can.f_tilde(Q8), can.f_tilde_forster(Q8), 8),
            (can.frattini(S4), can.frattini_by_nongenerators(S4), 1),
            (can.socle(S4), can.socle_by_lattice_scan(S4), 4),
        ]
        for formula, scan, order in pairs:
            assert formula.mask == scan.mask and formula.order == order
        assert can.fitting(S4).mask == can.socle(S4).mask  # both are V4
        assert can.fitting(S4).as_group().exponent() == 2


def test_criterion_03_forster(record_property, suite):
    with criterion(record_property, 3, "F~(G)/Phi(G) = F*(G/Phi(G)) on every corpus group"):
        all_pass(reports_for(suite, "Forster"))


def test_criterion_04_hall(record_property):
    with criterion(record_property, 4, "Sylow normalizer intersection = hypercenter, under 120 s"):
        start = time.perf_counter()
        all_pass([checks.verify("Hall", load_corpus())])
        elapsed = time.perf_counter() - start
        assert elapsed < 120, elapsed


def test_criterion_05_t11(record_property, suite):
    with criterion(record_property, 5, "Sylow / cyclic primary F*-K-N_sigma-sn iff G in N_sigma, three sigmas"):
        reports = reports_for(suite, "T1.1")
        assert sorted(r.sigma for r in reports) == sorted(checks.SIGMAS)
        all_pass(reports)


def test_criterion_06_tgb(record_property, suite):
    with criterion(record_property, 6, "S_F = C_F = Z_F for N_sigma, three sigmas"):
        reports = reports_for(suite, "Tgb")
        assert sorted(r.sigma for r in reports) == sorted(checks.SIGMAS)
        all_pass(reports)


def test_criterion_07_t10(record_property, suite):
    with criterion(record_property, 7, "maximal subgroups F~-K-F-sn iff G in F, for N, U and S"):
        reports = reports_for(suite, "T1.0-1")
        assert sorted(r.formation for r in reports) == ["nilpotent", "soluble", "supersoluble"]
        all_pass(reports)


def test_criterion_08_kramer(record_property, suite):
    with criterion(record_property, 8, "Kramer criterion on every soluble corpus group"):
        (report,) = reports_for(suite, "Kramer")
        soluble = {G.label: can.is_soluble(G) for G in load_corpus()}
        for rec in report.records:
            assert rec.verdict == (checks.PASS if soluble[rec.group] else checks.SKIP), rec.group
        assert sum(soluble.values()) == report.summary()["pass"]


def test_criterion_09_p1_p2(record_property, suite):
    with criterion(record_property, 9, "S_F = Int_wbarF, C_F = Int_v*F, S_F <= C_F, maximality, for N and U"):
        for check in ("P1", "P2"):
            reports = reports_for(suite, check)
            assert sorted(r.formation for r in reports) == ["nilpotent", "supersoluble"]
            all_pass(reports)


LEMMAS = ("L3.1", "L3.2", "LemN", "Lattice", "L5", "L5.1", "Delt", "Pr0")


def test_criterion_10_lemma_suites(record_property, suite):
    with criterion(record_property, 10, "every lemma suite has at least 1000 instances and no violation"):
        for check in LEMMAS:
            (report,) = reports_for(suite, check)
            all_pass([report])
            assert report.instances() >= 1000, (check, report.instances())


def test_criterion_11_ksn_is_subnormality(record_property):
    with criterion(record_property, 11, "K-N-sn equals classical subnormality on all corpus subgroup pairs"):
        pairs = 0
        for G in load_corpus():
            L = all_subgroups(G)
            ctx = sn.ksn_context(G, fm.NILPOTENT)
            tab, subs = G.table.tolist(), [H.members for H in L]
            for T in L:
                for H in L.below(T):
                    expected = subnormal_by_normal_chains(tab, subs, H.members, T.members)
                    assert ctx.is_sn(H, T) == expected, (G.label, H.order, T.order)
                    pairs += 1
        assert pairs > 2000


def test_criterion_12_schmidt_graphs(record_property):
    with criterion(record_property, 12, "N-critical graphs of S3, A4, S4, SL(2,3), D10"):
        expected = {"S3": {(3, 2)}, "A4": {(2, 3)}, "S4": {(3, 2), (2, 3)},
                    "SL23": {(2, 3)}, "D10": {(5, 2)}}
        for label, edges in expected.items():
            G = named_group(label)
            assert set(sc.n_critical_graph(G).edges) == edges, label
            assert sc.schmidt_subgroups(G), label


def test_criterion_13_determinism(record_property, suite):
    with criterion(record_property, 13, "two full verify runs give byte-identical reports"):
        proc = subprocess.run([sys.executable, "-m", "fitforge", "verify", "--check", "all"],
                              capture_output=True, text=True, timeout=600)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout == suite["text"] + "\n"
