"""S_F, C_F and Z_F side by side over the shipped corpus.

For sigma-nilpotent formations the three subgroups coincide on every group.
For the supersoluble formation they need not; the table shows what the
corpus actually gives.
"""
from fitforge import formations as fm
from fitforge import subnormality as sn
from fitforge.corpus import load_corpus

FORMATIONS = [fm.NILPOTENT, fm.sigma_nilpotent("2,3"), fm.SUPERSOLUBLE]

print(f"{'group':<10}" + "".join(f"{F.name:>26}" for F in FORMATIONS))
print(f"{'':<10}" + "".join(f"{'S_F  C_F  Z_F':>26}" for _ in FORMATIONS))
for G in load_corpus():
    cells = []
    for F in FORMATIONS:
        S, C, Z = sn.s_f(G, F), sn.c_f(G, F), fm.f_hypercenter(G, F)
        mark = " " if S.mask == C.mask == Z.mask else "*"
        cells.append(f"{S.order:>4} {C.order:>4} {Z.order:>4}{mark}")
    print(f"{G.label:<10}" + "".join(f"{c:>26}" for c in cells))
print("* marks a group where the three subgroups differ")
