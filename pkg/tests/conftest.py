import itertools
import os
from pathlib import Path

import numpy as np
import pytest

from symqaoa.graphs import Graph, cut_sizes, graph_from_edges

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = Path(os.environ.get("SYMQAOA_DATA_DIR", REPO_ROOT / "data"))
RESULTS_DIR = Path(os.environ.get("SYMQAOA_RESULTS_DIR", REPO_ROOT / "results"))

CORPUS_PATH = DATA_DIR / "graph8c.g6"


@pytest.fixture(scope="session")
def corpus_path():
    """The 8-vertex connected corpus, generated on first use."""
    if not CORPUS_PATH.exists():
        from symqaoa.corpus import generate_connected
        from symqaoa.graphs import write_graph6_file

        CORPUS_PATH.parent.mkdir(parents=True, exist_ok=True)
        write_graph6_file(CORPUS_PATH, generate_connected(8))
    return CORPUS_PATH


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return graph_from_edges(n, edges)


def dense_circuit_expectation(g: Graph, gammas, betas) -> float:
    """Independent oracle: dense matrix exponentials, no diagonal shortcuts.

    Builds each layer unitary as expm of the full cost and mixer Hamiltonians
    and applies it by matrix-vector products.
    """
    from scipy.linalg import expm

    n = g.n
    dim = 1 << n
    x = np.arange(dim)
    cut = cut_sizes(g).astype(float)

    def pauli_x(v):
        # X_v flips bit v of the basis index
        m = np.zeros((dim, dim))
        m[x ^ (1 << v), x] = 1.0
        return m

    gammas = np.atleast_2d(gammas)
    betas = np.atleast_2d(betas)
    state = np.full(dim, 2.0 ** (-n / 2.0), dtype=complex)
    for gamma, beta in zip(gammas, betas):
        h_cost = np.zeros((dim, dim))
        for k, (u, v) in enumerate(g.edges):
            indicator = (((x >> u) ^ (x >> v)) & 1).astype(float)
            h_cost += gamma[k] * np.diag(indicator)
        h_mix = np.zeros((dim, dim))
        for v in range(n):
            h_mix += beta[v] * pauli_x(v)
        state = expm(-1j * h_cost) @ state
        state = expm(-1j * h_mix) @ state
    return float(np.real(np.conj(state) @ (cut * state)))


def brute_force_max_cut(g: Graph) -> int:
    """Independent Max-Cut oracle: plain itertools enumeration."""
    best = 0
    for bits in itertools.product((0, 1), repeat=g.n):
        best = max(best, sum(1 for u, v in g.edges if bits[u] != bits[v]))
    return best
