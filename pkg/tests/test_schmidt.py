import pytest

from fitforge import schmidt as sc
from fitforge.canonical import is_nilpotent
from fitforge.corpus import named_group
from fitforge.formations import SigmaPartition
from fitforge.kernel import GroupError

FROZEN_GRAPHS = {
    "S3": {(3, 2)}, "A4": {(2, 3)}, "S4": {(3, 2), (2, 3)}, "SL23": {(2, 3)}, "D10": {(5, 2)},
    "C7:C3": {(7, 3)}, "C6": set(), "Q8": set(),
}


@pytest.mark.parametrize("label,edges", sorted(FROZEN_GRAPHS.items()))
def test_graphs(by_label, label, edges):
    assert set(sc.n_critical_graph(by_label[label]).edges) == edges


def test_signatures(groups):
    assert sc.schmidt_signature(groups["S3"]) == (3, 2)
    assert sc.schmidt_signature(groups["A4"]) == (2, 3)
    assert sc.schmidt_signature(groups["SL23"]) == (2, 3)
    assert sc.schmidt_signature(groups["S4"]) is None
    assert not sc.is_schmidt(groups["C12"])


def test_corpus_graph(groups):
    assert sc.corpus_graph([]).edges == frozenset()
    assert set(sc.corpus_graph([groups["S3"], groups["A4"]]).edges) == {(3, 2), (2, 3)}
    assert sc.corpus_graph([groups["C6"], groups["Q8"]]).edges == frozenset()
    g = sc.corpus_graph([groups["S3"], groups["A4"]])
    assert dict(g.provenance) == {(2, 3): "A4", (3, 2): "S3"}


def test_graph_rejects_dangling_edge():
    with pytest.raises(GroupError):
        sc.NCriticalGraph(frozenset({2}), frozenset({(2, 3)}))


def test_schmidt_structure(corpus):
    for G in corpus:
        for H in sc.schmidt_subgroups(G):
            X = G if H.is_whole() else H.as_group()
            d = sc.schmidt_diagnostics(X)
            assert d["schmidt"] and d["cyclic_q_sylow"], G.label
            assert not is_nilpotent(X)


def test_nilpotent_groups_have_no_edges(corpus):
    for G in corpus:
        if is_nilpotent(G):
            assert not sc.n_critical_graph(G).edges


def test_sigma_decomposition_examples(by_label):
    assert sc.sigma_decomposition_check(by_label["D8"], SigmaPartition())
    assert sc.sigma_decomposition_check(by_label["S3"], SigmaPartition.parse("2,3"))
    assert sc.sigma_decomposition_check(by_label["S3xC5"], SigmaPartition.parse("2,3/5"))
    assert sc.edges_respect_sigma(sc.n_critical_graph(by_label["S3xC5"]), SigmaPartition.parse("2,3/5"))


def test_sigma_decomposition_on_corpus(corpus):
    for G in corpus:
        for text in ("singletons", "2,3", "2,5/3", "2,3/5", "2,3,5", "2,3,7/5"):
            assert sc.sigma_decomposition_check(G, SigmaPartition.parse(text)), (G.label, text)


def test_s3_graph_has_no_reverse_edge():
    assert (2, 3) not in sc.n_critical_graph(named_group("S3")).edges
