import pytest
from conftest import gen
from oracles import subnormal_by_normal_chains

from fitforge import canonical as can
from fitforge import formations as fm
from fitforge import subnormality as sn
from fitforge.kernel import GroupError
from fitforge.lattice import all_subgroups, sylow_subgroups

N, U = fm.NILPOTENT, fm.SUPERSOLUBLE


def test_trivial_chain(groups):
    S4 = groups["S4"]
    chain = sn.is_k_f_subnormal(S4, S4.whole, N)
    assert chain is not None and len(chain) == 0


def test_s3_examples(groups):
    S3 = groups["S3"]
    T = gen(S3, [(0, 1)])
    assert sn.is_k_f_subnormal(S3, T, N) is None
    chain = sn.is_k_f_subnormal(S3, T, U)
    assert chain.kinds == ("quotient",) and [X.order for X in chain.links] == [2, 6]


def test_wrong_parent_rejected(groups):
    with pytest.raises(GroupError):
        sn.is_k_f_subnormal(groups["S3"], groups["S4"].whole, N)


def test_r_k_f_examples(groups):
    S4 = groups["S4"]
    V4 = can.generalized_fitting(S4)
    D8 = sylow_subgroups(S4, 2)[0]
    C3 = sylow_subgroups(S4, 3)[0]
    assert sn.is_r_k_f_subnormal(S4, D8, V4, N)
    assert not sn.is_r_k_f_subnormal(S4, C3, V4, N)
    assert sn.is_r_k_f_subnormal(S4, D8, S4.trivial, N)


def test_weak_subnormalizer_examples(groups):
    S3 = groups["S3"]
    T, C3 = gen(S3, [(0, 1)]), gen(S3, [(0, 1, 2)])
    assert sn.weak_k_f_subnormalizers(S3, T, N).maximals == (T,)
    assert sn.weak_k_f_subnormalizers(S3, C3, N).maximals == (S3.whole,)


def test_weak_subnormalizer_invariants(corpus):
    for G in corpus:
        if G.order > 60:
            continue
        ctx = sn.ksn_context(G, U)
        L = ctx.lattice
        for H in L:
            tops = sn.weak_k_f_subnormalizers(G, H, U).maximals
            assert tops
            for T in tops:
                assert ctx.is_sn(H, T)
                assert not any(T < M and ctx.is_sn(H, M) for M in L)
            if H.is_normal_in():
                assert tops == (G.whole,)


def test_chains_validate(corpus):
    for G in corpus:
        for F in (N, U, fm.sigma_nilpotent("2,3")):
            for H in all_subgroups(G):
                chain = sn.is_k_f_subnormal(G, H, F)
                if chain is not None:
                    chain.validate(F)
                    assert chain.links[0] == H and chain.links[-1].is_whole()


def test_ksn_nilpotent_is_classical_subnormality(corpus):
    for G in corpus:
        L = all_subgroups(G)
        ctx = sn.ksn_context(G, N)
        for T in L:
            for H in L.below(T):
                assert ctx.is_sn(H, T) == sn.is_subnormal(G, H, T), (G.label, H.order, T.order)


def test_classical_subnormality_vs_chain_oracle(small_corpus):
    for G in small_corpus:
        tab = G.table.tolist()
        L = all_subgroups(G)
        subs = [H.members for H in L]
        for T in L:
            for H in L.below(T):
                expected = subnormal_by_normal_chains(tab, subs, H.members, T.members)
                assert sn.is_subnormal(G, H, T) == expected, G.label


def test_s_f_c_f_examples(groups, by_label):
    S3 = groups["S3"]
    assert sn.s_f(groups["D8"], N) == groups["D8"].whole
    assert sn.c_f(groups["C12"], N) == groups["C12"].whole
    assert sn.s_f(S3, N).order == 1 and sn.c_f(S3, N).order == 1
    assert sn.s_f(S3, fm.sigma_nilpotent("2,3")) == S3.whole
    # computed value, compared with Z_U rather than assumed equal
    assert sn.c_f(groups["S4"], U).order == 1 == fm.f_hypercenter(groups["S4"], U).order
    with pytest.raises(fm.FormationError):
        sn.s_f(S3, fm.Formation("x", lambda G: True, hereditary=False, saturated=True))


def test_trivial_subgroup_is_intersection_neutral(corpus):
    for G in corpus:
        for F in (N, U):
            ctx = sn.ksn_context(G, F)
            assert ctx.weak_subnormalizers(G.trivial) == [G.whole]


def test_conjugate_permutable_examples(groups):
    S3, S4 = groups["S3"], groups["S4"]
    T = gen(S3, [(0, 1)])
    assert not sn.is_conjugate_permutable(S3, T, S3.whole)
    assert sn.is_conjugate_permutable(S3, T, T)
    V4 = gen(S4, [(0, 1), (2, 3)], [(0, 2), (1, 3)])
    assert sn.is_conjugate_permutable(S4, V4, S4.whole)


def test_s_f_below_c_f(corpus):
    for G in corpus:
        for F in (N, U, fm.sigma_nilpotent("2,5/3")):
            assert sn.s_f(G, F) <= sn.c_f(G, F), (G.label, F.name)
