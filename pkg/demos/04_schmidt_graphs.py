"""N-critical graphs: an edge p -> q for each Schmidt subgroup with normal
Sylow p-subgroup and cyclic Sylow q-subgroup."""
from fitforge import schmidt as sc
from fitforge.corpus import load_corpus, named_group
from fitforge.formations import SigmaPartition

for label in ("S3", "A4", "S4", "SL23", "D10", "A5"):
    G = named_group(label)
    edges = sorted(sc.n_critical_graph(G).edges)
    sigs = sorted({sc.schmidt_signature(H.as_group() if not H.is_whole() else G)
                   for H in sc.schmidt_subgroups(G)})
    print(f"{label:<5} edges={edges}  Schmidt subgroup signatures={sigs}")

corpus = load_corpus()
graph = sc.corpus_graph(corpus)
print("corpus graph:", graph.adjacency())
for edge, label in graph.provenance:
    print(f"  {edge} first seen in {label}")

# if no edge crosses sigma blocks, G splits into normal Hall subgroups over the blocks
sigma = SigmaPartition.parse("2,3/5")
for G in corpus:
    g = sc.n_critical_graph(G)
    if g.edges and sc.edges_respect_sigma(g, sigma):
        print(f"{G.label}: edges stay inside {sigma}, decomposes: {sc.sigma_decomposition_check(G, sigma)}")
