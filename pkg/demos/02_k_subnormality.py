"""K-F-subnormal chains in S3 and S4.

A transposition in S3 is not subnormal, so it has no K-N-subnormal chain.
Relax the formation to the supersoluble groups and a one-step chain appears,
because S3 modulo the core of <(0 1)> is S3 itself, which is supersoluble.
"""
from fitforge import formations as fm
from fitforge import subnormality as sn
from fitforge.corpus import named_group
from fitforge.cli import parse_subgroup_arg


def describe(chain):
    if chain is None:
        return "no chain"
    orders = " <= ".join(str(X.order) for X in chain.links)
    return f"{orders}  steps={list(chain.kinds)}"


S3 = named_group("S3")
T = parse_subgroup_arg(S3, "(0 1)")
for F in (fm.NILPOTENT, fm.SUPERSOLUBLE):
    print(f"S3, <(0 1)>, {F.name:<12}: {describe(sn.is_k_f_subnormal(S3, T, F))}")

# weak subnormalizers: maximal overgroups in which H is still K-F-subnormal
for gens in ("(0 1)", "(0 1 2)"):
    H = parse_subgroup_arg(S3, gens)
    tops = sn.weak_k_f_subnormalizers(S3, H, fm.NILPOTENT).maximals
    print(f"weak N-subnormalizers of <{gens}> in S3 have orders {[X.order for X in tops]}")

S4 = named_group("S4")
D8 = parse_subgroup_arg(S4, "(0 1 2 3); (0 2)")
C3 = parse_subgroup_arg(S4, "(0 1 2)")
V4 = parse_subgroup_arg(S4, "(0 1)(2 3); (0 2)(1 3)")
print("S4: D8 is V4-K-N-subnormal:", sn.is_r_k_f_subnormal(S4, D8, V4, fm.NILPOTENT))
print("S4: C3 is V4-K-N-subnormal:", sn.is_r_k_f_subnormal(S4, C3, V4, fm.NILPOTENT))
