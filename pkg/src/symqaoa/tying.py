"""Parameter-sharing schemes: map per-edge/per-vertex angles to compact vectors.

Compact vectors are layer-major with the gamma block before the beta block in
each layer:

    [g_0 .. g_{num_gamma-1}, b_0 .. b_{num_beta-1}] * p layers
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .symmetry import OrbitPartition

SCHEMES = ("plain-qaoa", "ma", "max-sym", "best-1sym", "rand-group")


@dataclass(frozen=True)
class ParameterTying:
    """Assignment of edges and vertices to compact parameter slots."""

    scheme: str
    gamma_index: tuple[int, ...]  # canonical edge index -> gamma slot
    beta_index: tuple[int, ...]  # vertex -> beta slot

    def __post_init__(self):
        for name, idx in (("gamma", self.gamma_index), ("beta", self.beta_index)):
            if idx and sorted(set(idx)) != list(range(max(idx) + 1)):
                raise ValueError(f"{name}_index slots not contiguous from 0")

    @property
    def num_gamma(self) -> int:
        return max(self.gamma_index) + 1 if self.gamma_index else 0

    @property
    def num_beta(self) -> int:
        return max(self.beta_index) + 1 if self.beta_index else 0

    @property
    def params_per_layer(self) -> int:
        return self.num_gamma + self.num_beta


def tie_plain(g: Graph) -> ParameterTying:
    """One gamma for all edges, one beta for all vertices."""
    return ParameterTying("plain-qaoa", (0,) * g.m, (0,) * g.n)


def tie_ma(g: Graph) -> ParameterTying:
    """Every edge and vertex gets its own angle."""
    return ParameterTying("ma", tuple(range(g.m)), tuple(range(g.n)))


def tie_from_partition(
    p: OrbitPartition, scheme: str = "max-sym"
) -> ParameterTying:
    """Tie angles across orbits: same orbit, same angle."""
    return ParameterTying(scheme, p.edge_orbit, p.vertex_orbit)


def tie_random(g: Graph, target_v: int, target_e: int, seed) -> ParameterTying:
    """Uniformly random surjective grouping with the given group counts.

    Assignments are rejection-sampled until every vertex group and every edge
    group is nonempty, then relabeled by smallest member for stable ids.
    """
    if not (1 <= target_v <= g.n):
        raise ValueError(f"target_v={target_v} infeasible for n={g.n}")
    if not (1 <= target_e <= g.m):
        raise ValueError(f"target_e={target_e} infeasible for m={g.m}")
    rng = np.random.default_rng(seed)

    def sample(count: int, groups: int) -> tuple[int, ...]:
        while True:
            a = rng.integers(0, groups, size=count)
            if len(np.unique(a)) == groups:
                return _relabel(a)

    return ParameterTying(
        "rand-group", sample(g.m, target_e), sample(g.n, target_v)
    )


def _relabel(a) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for x in a:
        x = int(x)
        if x not in remap:
            remap[x] = len(remap)
        out.append(remap[x])
    return tuple(out)


def expand(t: ParameterTying, compact, p: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Expand a compact vector to per-layer angle arrays.

    Returns (gammas, betas) with shapes (p, |E|) and (p, n).
    """
    compact = np.asarray(compact, dtype=float)
    width = t.params_per_layer
    if compact.shape != (p * width,):
        raise ValueError(
            f"compact vector has length {compact.size}, expected {p * width}"
        )
    gi = np.asarray(t.gamma_index, dtype=np.intp)
    bi = np.asarray(t.beta_index, dtype=np.intp)
    layers = compact.reshape(p, width)
    gammas = layers[:, gi] if gi.size else np.zeros((p, 0))
    betas = layers[:, t.num_gamma + bi] if bi.size else np.zeros((p, 0))
    return gammas, betas


def embed_plain(t: ParameterTying, compact_plain, p: int = 1) -> np.ndarray:
    """Lift a plain-QAOA compact vector into tying t's compact space.

    The result expands to the same per-edge/per-vertex angles (each layer's
    single gamma replicated across gamma slots, likewise beta).
    """
    compact_plain = np.asarray(compact_plain, dtype=float)
    if compact_plain.shape != (2 * p,):
        raise ValueError(f"plain compact vector must have length {2 * p}")
    out = np.empty(p * t.params_per_layer)
    for layer in range(p):
        off = layer * t.params_per_layer
        out[off : off + t.num_gamma] = compact_plain[2 * layer]
        out[off + t.num_gamma : off + t.params_per_layer] = compact_plain[2 * layer + 1]
    return out


def embed_into_ma(t: ParameterTying, compact, p: int = 1) -> np.ndarray:
    """Lift a tied compact vector into the ma compact space (full expansion)."""
    gammas, betas = expand(t, compact, p)
    return np.concatenate(
        [np.concatenate([gammas[layer], betas[layer]]) for layer in range(p)]
    )


def parameter_box(t: ParameterTying, p: int = 1) -> np.ndarray:
    """Per-component (low, high) bounds: gammas in [0, 2pi), betas in [0, pi)."""
    box = np.empty((p * t.params_per_layer, 2))
    for layer in range(p):
        off = layer * t.params_per_layer
        box[off : off + t.num_gamma] = (0.0, 2.0 * np.pi)
        box[off + t.num_gamma : off + t.params_per_layer] = (0.0, np.pi)
    return box
