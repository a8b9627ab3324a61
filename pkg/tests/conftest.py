import pytest

from permpoly.corpus import (
    complete_bipartite,
    cycle_graph,
    path_graph,
    reconstruct_figure1,
    star_graph,
)
from permpoly.graph import Graph, disjoint_union, empty_graph

K1 = empty_graph(1)
K2 = path_graph(2)
P4 = path_graph(4)
P5 = path_graph(5)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
C6 = cycle_graph(6)
C8 = cycle_graph(8)
K13 = star_graph(3)
K14 = star_graph(4)
K23 = complete_bipartite(2, 3)
C4_C4 = disjoint_union(C4, C4)
C4_K1 = disjoint_union(C4, K1)


def poly(*desc):
    """Polynomial from descending coefficients, e.g. poly(1, 0, 4, 0, 4)."""
    from permpoly.polynomial import IntPolynomial

    return IntPolynomial.from_descending(desc)


@pytest.fixture(scope="session")
def figure1() -> Graph:
    return reconstruct_figure1()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
