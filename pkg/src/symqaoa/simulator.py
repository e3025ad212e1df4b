"""Exact statevector simulation of the multi-angle QAOA circuit for Max-Cut.

Basis state index x encodes vertex v's side in bit v. The cost layer is a
diagonal phase (the cost operator per edge has eigenvalues 0/1, so no global
phase is dropped); the mixer is n commuting single-qubit X rotations applied
over strided amplitude pairs. Inner loops are numba-compiled.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .graphs import Graph, cut_sizes
from .tying import ParameterTying, expand

SIM_VERTEX_BUDGET = 24


def initial_state(n: int) -> np.ndarray:
    """Uniform superposition over all 2^n basis states."""
    if n > SIM_VERTEX_BUDGET:
        raise ValueError(f"statevector budget is n <= {SIM_VERTEX_BUDGET}, got {n}")
    return np.full(1 << n, 2.0 ** (-n / 2.0), dtype=np.complex128)


@njit(cache=True)
def _cost_phase(state, eu, ev, gamma):
    n_states = state.shape[0]
    for x in range(n_states):
        phase = 0.0
        for k in range(eu.shape[0]):
            if ((x >> eu[k]) ^ (x >> ev[k])) & 1:
                phase += gamma[k]
        state[x] = state[x] * (np.cos(phase) - 1j * np.sin(phase))


@njit(cache=True)
def _mixer(state, beta):
    n_states = state.shape[0]
    for v in range(beta.shape[0]):
        c = np.cos(beta[v])
        s = np.sin(beta[v])
        step = 1 << v
        for base in range(0, n_states, step << 1):
            for off in range(base, base + step):
                a0 = state[off]
                a1 = state[off + step]
                state[off] = c * a0 - 1j * s * a1
                state[off + step] = c * a1 - 1j * s * a0


@njit(cache=True)
def _expectation(state, cut):
    e = 0.0
    for x in range(state.shape[0]):
        e += (state[x].real ** 2 + state[x].imag ** 2) * cut[x]
    return e


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    return eu, ev


def apply_cost_layer(state: np.ndarray, g: Graph, gamma) -> np.ndarray:
    """Multiply each amplitude by exp(-i * sum of gamma over edges x cuts)."""
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (g.m,):
        raise ValueError(f"gamma has length {gamma.size}, expected {g.m}")
    out = state.copy()
    eu, ev = _edge_arrays(g)
    _cost_phase(out, eu, ev, gamma)
    return out


def apply_mixer_layer(state: np.ndarray, beta) -> np.ndarray:
    """Apply exp(-i beta_v X_v) to every qubit v."""
    beta = np.asarray(beta, dtype=float)
    n = state.shape[0].bit_length() - 1
    if beta.shape != (n,):
        raise ValueError(f"beta has length {beta.size}, expected {n}")
    out = state.copy()
    _mixer(out, beta)
    return out


def expectation(state: np.ndarray, cut: np.ndarray) -> float:
    """<state| H_c |state> for the diagonal cost operator cut[x]."""
    if state.shape != cut.shape:
        raise ValueError("statevector and cut table dimensions differ")
    return float(_expectation(state, cut.astype(np.float64)))


def run_circuit(
    g: Graph, t: ParameterTying, compact, p: int = 1
) -> tuple[np.ndarray, float]:
    """Full p-layer circuit from the uniform superposition; returns (state, <H_c>)."""
    gammas, betas = expand(t, compact, p)
    state = initial_state(g.n)
    for layer in range(p):
        state = apply_cost_layer(state, g, gammas[layer])
        state = apply_mixer_layer(state, betas[layer])
    return state, expectation(state, cut_sizes(g))


@njit(cache=True)
def _objective(compact, gi, bi, num_gamma, width, p, eu, ev, cut, n, state):
    n_states = state.shape[0]
    amp = 2.0 ** (-n / 2.0)
    for x in range(n_states):
        state[x] = amp
    for layer in range(p):
        off = layer * width
        for x in range(n_states):
            phase = 0.0
            for k in range(eu.shape[0]):
                if ((x >> eu[k]) ^ (x >> ev[k])) & 1:
                    phase += compact[off + gi[k]]
            state[x] = state[x] * (np.cos(phase) - 1j * np.sin(phase))
        for v in range(n):
            b = compact[off + num_gamma + bi[v]]
            c = np.cos(b)
            s = np.sin(b)
            step = 1 << v
            for base in range(0, n_states, step << 1):
                for o in range(base, base + step):
                    a0 = state[o]
                    a1 = state[o + step]
                    state[o] = c * a0 - 1j * s * a1
                    state[o + step] = c * a1 - 1j * s * a0
    e = 0.0
    for x in range(n_states):
        e += (state[x].real ** 2 + state[x].imag ** 2) * cut[x]
    return e


class CircuitObjective:
    """Reusable compact-parameters -> expectation evaluator for one (graph, tying).

    Precomputes the edge and tying index arrays and reuses one statevector
    buffer, so repeated evaluations inside an optimizer stay cheap.
    """

    def __init__(self, g: Graph, t: ParameterTying, p: int = 1):
        if g.n > SIM_VERTEX_BUDGET:
            raise ValueError(f"statevector budget is n <= {SIM_VERTEX_BUDGET}")
        self.graph = g
        self.tying = t
        self.p = p
        self.dim = p * t.params_per_layer
        self._gi = np.asarray(t.gamma_index, dtype=np.int64)
        self._bi = np.asarray(t.beta_index, dtype=np.int64)
        self._eu, self._ev = _edge_arrays(g)
        self._cut = cut_sizes(g).astype(np.float64)
        self._state = np.empty(1 << g.n, dtype=np.complex128)

    def __call__(self, compact) -> float:
        compact = np.asarray(compact, dtype=float)
        if compact.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} parameters, got {compact.size}")
        return float(
            _objective(
                compact,
                self._gi,
                self._bi,
                self.tying.num_gamma,
                self.tying.params_per_layer,
                self.p,
                self._eu,
                self._ev,
                self._cut,
                self.graph.n,
                self._state,
            )
        )
