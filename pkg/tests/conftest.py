import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fitforge.corpus import load_corpus, named_group  # noqa: E402
from fitforge.kernel import cycles_to_permutation, subgroup_closure  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def by_label(corpus):
    return {G.label: G for G in corpus}


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [G for G in corpus if G.order <= 48]


def elem(G, *cycles):
    """Element of a permutation group given by disjoint cycles."""
    degree = G.realization.shape[1]
    return G.element_of_permutation(cycles_to_permutation(degree, *cycles))


def gen(G, *elements):
    """Subgroup generated by elements, each a tuple of cycles."""
    return subgroup_closure(G, [elem(G, *cyc) for cyc in elements])


@pytest.fixture(scope="session")
def groups():
    return {name: named_group(name) for name in ("S3", "S4", "A4", "A5", "Q8", "C6", "C12", "D8", "SL23", "D10")}


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            lines += [value for name, value in getattr(rep, "user_properties", ()) if name == "criterion"]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
