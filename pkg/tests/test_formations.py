import pytest
from conftest import gen

from fitforge import canonical as can
from fitforge import formations as fm
from fitforge.kernel import quotient_group
from fitforge.lattice import all_subgroups, normal_subgroups

REGISTRY = [fm.NILPOTENT, fm.SUPERSOLUBLE, fm.SOLUBLE, fm.ABELIAN, fm.sigma_nilpotent("2,3"),
            fm.sigma_nilpotent("2,5/3")]


def test_sigma_partition_parse():
    s = fm.SigmaPartition.parse("2,3/5")
    assert s.block_of(3) == {2, 3} and s.block_of(5) == {5} and s.block_of(7) == {7}
    assert fm.SigmaPartition.parse("") == fm.SigmaPartition.parse("singletons")
    assert str(fm.SigmaPartition.parse("5/3,2")) == "2,3/5"
    for bad in ("2,3/3", "4", "x"):
        with pytest.raises(fm.FormationError):
            fm.SigmaPartition.parse(bad)


def test_registry_examples(groups, by_label):
    assert fm.get_formation("nilpotent").member(groups["C12"])
    assert fm.get_formation("sigma_nilpotent", "2,3").member(groups["S3"])
    assert not fm.get_formation("sigma_nilpotent").member(groups["S3"])
    with pytest.raises(fm.FormationError):
        fm.get_formation("metabelian")
    assert fm.get_formation("wbar:nilpotent").name == "wbar:nilpotent"


def test_sigma_nilpotent_examples(groups, by_label):
    one = fm.SigmaPartition.parse("2,3,5")
    for G in (groups["S3"], groups["A4"], by_label["S3xC5"]):
        assert fm.is_sigma_nilpotent(G, one)
    assert not fm.is_sigma_nilpotent(groups["A4"], fm.SigmaPartition.parse("2/3"))
    assert fm.is_sigma_nilpotent(by_label["S3xC5"], fm.SigmaPartition.parse("2,3/5"))


def test_sigma_nilpotent_two_routes(corpus):
    for G in corpus:
        for text in ("singletons", "2,3", "2,5/3", "2,3/5"):
            s = fm.SigmaPartition.parse(text)
            assert fm.is_sigma_nilpotent(G, s) == fm.is_sigma_nilpotent_by_decomposition(G, s), (G.label, text)
        assert fm.is_sigma_nilpotent(G, fm.SigmaPartition()) == can.is_nilpotent(G)


def test_formation_axioms_on_corpus(corpus):
    for G in corpus:
        normals = normal_subgroups(G)
        for F in REGISTRY:
            good = [N for N in normals if F.member_quotient(G.whole, N)]
            # quotients of members are members
            if F.member(G):
                assert len(good) == len(normals), (G.label, F.name)
            # subdirect products
            for A in good:
                for B in good:
                    assert F.member_quotient(G.whole, A & B), (G.label, F.name)


def test_hereditary_flag_on_corpus(corpus):
    for G in corpus:
        for F in REGISTRY:
            if F.hereditary and F.member(G):
                assert all(F.member_subgroup(H) for H in all_subgroups(G)), (G.label, F.name)


def test_saturated_flag_on_corpus(corpus):
    for G in corpus:
        Q = quotient_group(G, can.frattini(G)).target
        for F in REGISTRY:
            if F.saturated and F.member(Q):
                assert F.member(G), (G.label, F.name)
    # abelian is not saturated: Q8/Φ is abelian, Q8 is not
    Q8 = [G for G in corpus if G.label == "Q8"][0]
    assert fm.ABELIAN.member(quotient_group(Q8, can.frattini(Q8)).target) and not fm.ABELIAN.member(Q8)


def test_f_central_examples(groups):
    S4, S3 = groups["S4"], groups["S3"]
    V4 = gen(S4, [(0, 1), (2, 3)], [(0, 2), (1, 3)])
    w = fm.is_f_central_factor(S4, V4, S4.trivial, fm.SUPERSOLUBLE, construct=True)
    assert not w.verdict and w.test_group.order == 24 == w.test_order
    assert not can.is_supersoluble(w.test_group) and can.is_soluble(w.test_group)
    C3 = gen(S3, [(0, 1, 2)])
    w = fm.is_f_central_factor(S3, C3, S3.trivial, fm.SUPERSOLUBLE, construct=True)
    assert w.verdict and w.test_group.order == 6 and not w.test_group.is_abelian()
    # a central factor under N: centralizer is everything, test group is the factor
    D8 = groups["D8"]
    Z = can.center(D8)
    w = fm.is_f_central_factor(D8, Z, D8.trivial, fm.NILPOTENT, construct=True)
    assert w.verdict and w.centralizer == D8.whole and w.test_group.order == 2
    with pytest.raises(fm.FormationError):
        fm.is_f_central_factor(S4, S4.whole, S4.trivial, fm.NILPOTENT)


def test_shortcuts_match_construction(corpus):
    """The closure-property shortcuts never disagree with the test group."""
    for G in corpus:
        if G.order > 60:
            continue
        for F in (fm.NILPOTENT, fm.SUPERSOLUBLE, fm.SOLUBLE, fm.sigma_nilpotent("2,3")):
            for H, K in can.chief_series(G).factors():
                fast = fm.is_f_central_factor(G, H, K, F)
                full = fm.is_f_central_factor(G, H, K, F, construct=True)
                assert fast.verdict == full.verdict, (G.label, F.name, H.order, K.order)


def test_hypercenter_examples(groups):
    assert fm.f_hypercenter(groups["S3"], fm.NILPOTENT).order == 1
    assert fm.f_hypercenter(groups["S4"], fm.SUPERSOLUBLE).order == 1
    assert fm.f_hypercenter(groups["S3"], fm.SUPERSOLUBLE) == groups["S3"].whole


def test_hypercenter_two_routes(corpus):
    for G in corpus:
        for F in REGISTRY:
            assert fm.f_hypercenter(G, F) == fm.f_hypercenter_by_scan(G, F), (G.label, F.name)
            if F.saturated and F.hereditary and F.member(G):
                assert fm.f_hypercenter(G, F).is_whole(), (G.label, F.name)
        assert fm.f_hypercenter(G, fm.NILPOTENT) == can.hypercenter(G), G.label


def test_residual_examples(groups):
    assert fm.f_residual(groups["S3"], fm.NILPOTENT).order == 3
    assert fm.f_residual(groups["S4"], fm.ABELIAN).order == 12
    assert fm.f_residual(groups["C12"], fm.NILPOTENT).order == 1


def test_residual_properties(corpus):
    for G in corpus:
        for F in REGISTRY:
            R = fm.f_residual(G, F)
            assert F.member_quotient(G.whole, R)
            for N in normal_subgroups(G):
                if N.is_trivial() or N.is_whole():
                    continue
                qm = quotient_group(G, N)
                # (G/N)^F = G^F N / N
                assert fm.f_residual(qm.target, F) == qm.image(R), (G.label, F.name)


def test_int_f_examples(groups):
    S3, S4 = groups["S3"], groups["S4"]
    assert sorted(U.order for U in fm.f_maximal_subgroups(S3, fm.NILPOTENT)) == [2, 2, 2, 3]
    assert fm.int_f(S3, fm.NILPOTENT).order == 1
    assert fm.int_f(S4, fm.NILPOTENT).order == 1
    assert fm.int_f(groups["C12"], fm.NILPOTENT) == groups["C12"].whole


def test_delta_examples(groups):
    S3, Q8 = groups["S3"], groups["Q8"]
    assert fm.delta_f(S3, fm.NILPOTENT).order == 1
    assert fm.delta_f(Q8, fm.NILPOTENT) == Q8.whole


def test_wbar_vstar_examples(groups):
    S3 = groups["S3"]
    assert not fm.wbar_member(S3, fm.NILPOTENT)
    assert fm.wbar_member(S3, fm.SUPERSOLUBLE) and fm.vstar_member(S3, fm.SUPERSOLUBLE)
    assert fm.wbar_member(groups["C12"], fm.NILPOTENT)
    with pytest.raises(fm.FormationError):
        fm.wbar_formation(fm.Formation("x", lambda G: True, hereditary=False, saturated=True))


def test_wbar_contains_f_and_nilpotent(corpus):
    for G in corpus:
        for F in (fm.NILPOTENT, fm.SUPERSOLUBLE, fm.sigma_nilpotent("2,3")):
            W, V = fm.wbar_formation(F), fm.vstar_formation(F)
            if F.member(G) or can.is_nilpotent(G):
                assert W.member(G) and V.member(G), (G.label, F.name)


def test_wbar_nilpotent_is_nilpotent(corpus):
    """All Sylow subgroups subnormal is the classical nilpotency criterion."""
    for G in corpus:
        assert fm.wbar_member(G, fm.NILPOTENT) == can.is_nilpotent(G), G.label


def test_contains_nilpotent():
    assert fm.contains_nilpotent(fm.SUPERSOLUBLE) and fm.contains_nilpotent(fm.sigma_nilpotent("2,3"))
    assert not fm.contains_nilpotent(fm.ABELIAN)
