"""Command line: ``verify``, ``compute``, ``search`` and ``graph``.

Exit codes: 0 when every hard check passes, 1 on a hard-check failure,
2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import canonical as can
from . import checks
from . import formations as fm
from . import schmidt as sc
from . import subnormality as sn
from .corpus import SpecError, load_corpus, parse_group_spec
from .kernel import FiniteGroup, GroupError, SubgroupHandle, cycles_to_permutation, subgroup_closure
from .lattice import LatticeBoundError, all_subgroups

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _subgroup_json(H: SubgroupHandle) -> dict:
    X = H.parent if H.is_whole() else H.as_group()
    return {"members": checks.members(H), "order": H.order, "fingerprint": X.fingerprint()}


def parse_subgroup_arg(G: FiniteGroup, text: str | None) -> SubgroupHandle:
    """Generators as element indices (``[3, 5]``), image lists
    (``[[1,0,2]]``) or disjoint cycles (``(0 1)(2 3); (0 2)``)."""
    if not text:
        raise InputError("this invariant needs --arg with subgroup generators")
    text = text.strip()
    try:
        if text.startswith("["):
            data = json.loads(text)
            if not isinstance(data, list):
                raise InputError("--arg must be a JSON list")
            if all(isinstance(x, int) for x in data):
                gens = data
            elif all(isinstance(x, list) for x in data):
                gens = [G.element_of_permutation(p) for p in data]
            else:
                raise InputError("--arg mixes element indices and permutations")
        else:
            if G.realization is None:
                raise InputError(f"{G.label} has no permutation realization; use element indices")
            degree = G.realization.shape[1]
            gens = []
            for part in text.split(";"):
                cycles = [[int(x) for x in c.replace(",", " ").split()]
                          for c in re.findall(r"\(([^)]*)\)", part)]
                if not cycles:
                    raise InputError(f"cannot read generator {part.strip()!r}")
                gens.append(G.element_of_permutation(cycles_to_permutation(degree, *cycles)))
    except (json.JSONDecodeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"unparsable subgroup argument {text!r}: {exc}") from None
    for g in gens:
        if not 0 <= g < G.order:
            raise InputError(f"element index {g} out of range for {G.label}")
    return subgroup_closure(G, gens)


SUBGROUP_INVARIANTS = {
    "center": lambda G, F: can.center(G),
    "hypercenter": lambda G, F: can.hypercenter(G),
    "frattini": lambda G, F: can.frattini(G),
    "fitting": lambda G, F: can.fitting(G),
    "socle": lambda G, F: can.socle(G),
    "fstar": lambda G, F: can.generalized_fitting(G),
    "ftilde": lambda G, F: can.f_tilde(G),
    "zf": lambda G, F: fm.f_hypercenter(G, F),
    "intf": lambda G, F: fm.int_f(G, F),
    "deltaf": lambda G, F: fm.delta_f(G, F),
    "sf": lambda G, F: sn.s_f(G, F),
    "cf": lambda G, F: sn.c_f(G, F),
    "residual": lambda G, F: fm.f_residual(G, F),
}
INVARIANTS = tuple(SUBGROUP_INVARIANTS) + ("ncgraph", "schmidt", "ksn", "weaksub")


def compute(invariant: str, G: FiniteGroup, F: fm.Formation, arg: str | None = None) -> dict:
    name = invariant.removesuffix("(H)")
    out = {"group": G.label, "invariant": name}
    if name in SUBGROUP_INVARIANTS:
        out.update(_subgroup_json(SUBGROUP_INVARIANTS[name](G, F)))
        if name in ("zf", "intf", "deltaf", "sf", "cf", "residual"):
            out["formation"] = F.name
    elif name == "ncgraph":
        out["graph"] = sc.n_critical_graph(G).to_json()
    elif name == "schmidt":
        out.update(sc.schmidt_diagnostics(G))
    elif name == "ksn":
        H = all_subgroups(G).canonical(parse_subgroup_arg(G, arg))
        chain = sn.is_k_f_subnormal(G, H, F)
        out.update({"formation": F.name, "subgroup": _subgroup_json(H), "subnormal": chain is not None})
        if chain is not None:
            out["chain"] = [checks.members(X) for X in chain.links]
            out["steps"] = list(chain.kinds)
    elif name == "weaksub":
        H = all_subgroups(G).canonical(parse_subgroup_arg(G, arg))
        ws = sn.weak_k_f_subnormalizers(G, H, F)
        out.update({"formation": F.name, "subgroup": _subgroup_json(H),
                    "weak_subnormalizers": [_subgroup_json(T) for T in ws.maximals]})
    else:
        raise InputError(f"unknown invariant {invariant!r}; known: {', '.join(INVARIANTS)}")
    return out


def _corpus(path: str | None) -> list[FiniteGroup]:
    return load_corpus(path)


def cmd_verify(args) -> int:
    corpus = _corpus(args.corpus)
    if args.check == "all":
        reports = checks.run_suite(corpus)
        print(checks.dumps_reports(reports))
        return EXIT_FAIL if any(r.failed and checks.is_hard(r.check) for r in reports) else EXIT_OK
    report = checks.verify(args.check, corpus, args.formation, args.sigma)
    print(report.dumps())
    for r in report.records:
        if r.verdict == checks.SKIP:
            print(f"notice: {r.group} skipped: {r.witness.get('reason')}", file=sys.stderr)
    return EXIT_FAIL if report.failed and checks.is_hard(args.check) else EXIT_OK


def cmd_compute(args) -> int:
    G = parse_group_spec(args.group).build()
    F = fm.get_formation(args.formation, args.sigma)
    print(checks.pretty_json(compute(args.invariant, G, F, args.arg)))
    return EXIT_OK


def cmd_search(args) -> int:
    F = fm.get_formation(args.formation, args.sigma)
    print(checks.search_boundary(F, _corpus(args.corpus)).dumps())
    return EXIT_OK


def cmd_graph(args) -> int:
    corpus = sorted(_corpus(args.corpus), key=lambda G: G.label)
    out = {
        "corpus": sc.corpus_graph(corpus).to_json(),
        "groups": {G.label: sc.n_critical_graph(G).to_json() for G in corpus},
    }
    print(checks.pretty_json(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fitforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a theorem check over the corpus")
    v.add_argument("--check", required=True, help=f"one of: all, {', '.join(checks.CHECK_IDS)}")
    v.add_argument("--formation", help="registry name; defaults per check")
    v.add_argument("--sigma", help='sigma partition, e.g. "2,3/5"')
    v.add_argument("--corpus", help="JSON array of group specs (default: shipped corpus)")
    v.set_defaults(run=cmd_verify)

    c = sub.add_parser("compute", help="compute one invariant of one group")
    c.add_argument("--invariant", required=True, help=", ".join(INVARIANTS))
    c.add_argument("--group", required=True, help="name (S4, C3xC5, ...) or JSON spec")
    c.add_argument("--arg", help="subgroup generators for ksn / weaksub")
    c.add_argument("--formation", default="nilpotent")
    c.add_argument("--sigma")
    c.set_defaults(run=cmd_compute)

    s = sub.add_parser("search", help="exploratory boundary search (never fails)")
    s.add_argument("--formation", required=True)
    s.add_argument("--sigma")
    s.add_argument("--corpus")
    s.set_defaults(run=cmd_search)

    g = sub.add_parser("graph", help="N-critical graph of a corpus")
    g.add_argument("--corpus")
    g.set_defaults(run=cmd_graph)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (InputError, checks.CheckInputError, SpecError, fm.FormationError,
            LatticeBoundError, GroupError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
