"""Fitting-type subgroups of a few small groups.

Prints F, F*, F~, Phi and the socle, then shows where F* and F~ part ways:
in SL(2,3) the Frattini subgroup is the centre, so F~ sees through it.
"""
from fitforge import canonical as can
from fitforge.corpus import named_group


def show(label):
    G = named_group(label)
    row = {
        "F": can.fitting(G).order,
        "F*": can.generalized_fitting(G).order,
        "F~": can.f_tilde(G).order,
        "Phi": can.frattini(G).order,
        "Soc": can.socle(G).order,
    }
    cells = "  ".join(f"{k}={v:<3}" for k, v in row.items())
    print(f"{label:<6} |G|={G.order:<4} {cells}")


if __name__ == "__main__":
    for label in ("S3", "S4", "A4", "Q8", "SL23", "A5", "S5", "D12"):
        show(label)

    # F~ is defined through G/Phi(G); check the two ways of computing it agree
    for label in ("SL23", "S4", "Q8"):
        G = named_group(label)
        same = can.f_tilde(G).mask == can.f_tilde_forster(G).mask
        print(f"{label}: socle route and F*(G/Phi) route agree: {same}")
