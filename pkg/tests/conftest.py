import pytest

from chordalcenters import Graph


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def sun3_graph():
    """Triangle 0,1,2 plus degree-two tips: 3~{0,1}, 4~{1,2}, 5~{2,0}."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])


FIG1_EDGES_1BASED = [
    (7, 6), (7, 8), (6, 8), (5, 9), (5, 8), (5, 6), (5, 3), (5, 2),
    (5, 1), (1, 2), (2, 3), (3, 9), (3, 8), (3, 4), (4, 9), (9, 8),
]


def fig1_graph():
    """The 9-vertex fixture with label i at index i-1."""
    return Graph(9, [(a - 1, b - 1) for a, b in FIG1_EDGES_1BASED])


def multi_path_example(t=2):
    """Three length-t paths hung off two joined cliques, one via a sub-clique.

    Returns (graph, a0, b0, c0) where {a0, b0} is a diametrical pair that is
    not t-stretched while {a0, c0} is.  Built with |A| = |B| = 2 and the c
    path attached to a single vertex of B.
    """
    # a path: 0..t-1 (a0 = 0), b path: t..2t-1, c path: 2t..3t-1
    # cliques: A = {3t, 3t+1}, B = {3t+2, 3t+3}; c tail joins B' = {3t+2}
    a0, b0, c0 = 0, t, 2 * t
    A = [3 * t, 3 * t + 1]
    B = [3 * t + 2, 3 * t + 3]
    edges = []
    for base in (a0, b0, c0):
        edges += [(base + i, base + i + 1) for i in range(t - 1)]
    edges += [(a0 + t - 1, x) for x in A]
    edges += [(b0 + t - 1, x) for x in B]
    edges += [(c0 + t - 1, B[0])]
    edges += [(A[0], A[1]), (B[0], B[1])]
    edges += [(x, y) for x in A for y in B]
    return Graph(3 * t + 4, edges), a0, b0, c0


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k1():
    return complete_graph(1)


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def sun3():
    return sun3_graph()
