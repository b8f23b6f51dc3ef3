from conftest import gen
from oracles import center as oracle_center

from fitforge import canonical as can
from fitforge.corpus import cyclic
from fitforge.kernel import centralizer
from fitforge.lattice import all_subgroups


def test_center_hypercenter_examples(groups, by_label):
    S3, D8 = groups["S3"], groups["D8"]
    assert can.center(S3).order == 1 and can.hypercenter(S3).order == 1
    assert can.center(D8).order == 2 and can.hypercenter(D8) == D8.whole
    for G in (groups["C12"], by_label["V4"]):
        assert can.center(G) == G.whole == can.hypercenter(G)


def test_center_vs_oracle(small_corpus):
    for G in small_corpus:
        assert can.center(G).members == oracle_center(G.table.tolist())


def test_frattini_examples(groups, by_label):
    assert can.frattini(by_label["C2xC2xC2"]).order == 1
    assert can.frattini(groups["S4"]).order == 1
    assert can.frattini(groups["Q8"]).order == 2


def test_fitting_examples(groups):
    assert can.fitting(groups["D8"]) == groups["D8"].whole
    assert can.fitting(groups["S4"]).order == 4
    assert can.fitting(groups["A5"]).order == 1


def test_socle_examples(groups):
    assert can.socle(groups["A5"]) == groups["A5"].whole
    assert can.socle(groups["S4"]).order == 4
    assert can.socle(groups["C6"]) == groups["C6"].whole


def test_o_pi_examples(groups):
    S4, S3 = groups["S4"], groups["S3"]
    assert can.o_pi(S4, [5]).order == 1
    assert can.o_pi(S4, [2]) == gen(S4, [(0, 1), (2, 3)], [(0, 2), (1, 3)])
    assert can.o_pi(S3, [3]).order == 3


def test_fstar_examples(groups):
    assert can.generalized_fitting(groups["A5"]) == groups["A5"].whole
    assert can.generalized_fitting(groups["S4"]).order == 4


def test_ftilde_examples(groups):
    assert can.f_tilde(groups["S4"]).order == 4
    assert can.f_tilde(groups["Q8"]) == groups["Q8"].whole


def test_predicates(groups):
    C12, S3, S4 = groups["C12"], groups["S3"], groups["S4"]
    assert can.is_nilpotent(C12) and can.is_supersoluble(C12) and can.is_soluble(C12)
    assert can.is_supersoluble(S3) and not can.is_nilpotent(S3)
    assert can.is_soluble(S4) and not can.is_supersoluble(S4)
    assert not can.is_soluble(groups["A5"])
    assert can.is_pi_group(S3, [2, 3]) and not can.is_pi_group(S3, [2])


def test_two_routes_agree(corpus):
    for G in corpus:
        assert can.frattini(G) == can.frattini_by_nongenerators(G), G.label
        assert can.fitting(G) == can.fitting_by_op_product(G), G.label
        assert can.socle(G) == can.socle_by_lattice_scan(G), G.label
        assert can.generalized_fitting(G) == can.generalized_fitting_by_scan(G), G.label
        assert can.f_tilde(G) == can.f_tilde_forster(G), G.label


def test_nilpotent_vs_lattice_definition(corpus):
    """Nilpotent iff the upper central series reaches the group."""
    for G in corpus:
        assert can.is_nilpotent(G) == can.hypercenter(G).is_whole(), G.label


def test_supersoluble_two_criteria(corpus):
    for G in corpus:
        if can.is_soluble(G):
            assert can.is_supersoluble(G) == can.is_supersoluble_by_indices(G), G.label


def test_fitting_family_inclusions(corpus):
    for G in corpus:
        F, Fs, Ft = can.fitting(G), can.generalized_fitting(G), can.f_tilde(G)
        assert F <= Fs and F <= Ft and Fs <= Ft, G.label
        assert centralizer(G, Fs) <= Fs and centralizer(G, Ft) <= Ft, G.label
        if can.is_soluble(G):
            assert F == Fs == Ft, G.label
            assert centralizer(G, F) <= F, G.label


def test_canonical_report(corpus):
    for G in corpus:
        can.canonical_report(G)


def test_trivial_group():
    G = cyclic(1)
    rep = can.canonical_report(G)
    assert all(H.order == 1 for H in (rep.center, rep.frattini, rep.fitting, rep.socle, rep.fstar, rep.ftilde))


def test_quasinilpotent_simple(groups):
    assert can.is_quasinilpotent(groups["A5"])
    assert not can.is_quasinilpotent(groups["S3"])


def test_all_subgroups_of_q8_contain_center(groups):
    Q8 = groups["Q8"]
    Z = can.center(Q8)
    assert all(Z <= H for H in all_subgroups(Q8) if H.order > 1)
