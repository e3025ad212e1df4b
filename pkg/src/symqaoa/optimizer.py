"""Derivative-free maximization of the circuit expectation.

Nelder-Mead simplex with the standard coefficients (reflection 1, expansion 2,
contraction 1/2, shrink 1/2), run from several seeded random starts. Seeds for
every (graph, scheme, restart) combination derive from one master seed through
numpy's SeedSequence spawn keys, so whole sweeps replay exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

DEFAULT_RESTARTS = 10
DEFAULT_TOL = 1e-6
DEFAULT_MAX_EVALS_PER_DIM = 1000
INITIAL_SIMPLEX_STEP = 0.1


class OptimizationError(RuntimeError):
    pass


@dataclass
class ObjectiveSpec:
    """A deterministic objective to maximize over a box."""

    dim: int
    evaluate: Callable[[np.ndarray], float]
    box: np.ndarray  # (dim, 2) per-component (low, high); used for start sampling

    def sample_start(self, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.box[:, 0], self.box[:, 1])


@dataclass
class OptResult:
    best_params: np.ndarray
    best_value: float
    evaluations: int
    restarts_used: int
    per_restart: list[tuple[np.ndarray, float]] = field(default_factory=list)


def nelder_mead(
    obj: ObjectiveSpec,
    x0: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_evals: int | None = None,
) -> tuple[np.ndarray, float, int]:
    """Maximize obj from x0; returns (x, value, evaluations).

    Terminates when the spread of simplex values falls below tol or the
    evaluation budget is exhausted. The initial simplex is x0 plus a step of
    0.1 along each coordinate.
    """
    if obj.dim < 1:
        raise ValueError("objective must have at least one parameter")
    if tol <= 0:
        raise ValueError("tol must be positive")
    dim = obj.dim
    if max_evals is None:
        max_evals = DEFAULT_MAX_EVALS_PER_DIM * dim
    evals = 0

    def f(x: np.ndarray) -> float:
        nonlocal evals
        evals += 1
        val = obj.evaluate(x)
        if not np.isfinite(val):
            raise OptimizationError(f"non-finite objective value {val} at {x}")
        return val

    x0 = np.asarray(x0, dtype=float)
    simplex = np.tile(x0, (dim + 1, 1))
    for i in range(dim):
        simplex[i + 1, i] += INITIAL_SIMPLEX_STEP
    values = np.array([f(x) for x in simplex])
    # the simplex is kept unordered; track extremes and the vertex sum instead
    # of re-sorting, so each iteration is O(dim)
    total = simplex.sum(axis=0)

    while evals < max_evals:
        i_best = int(np.argmax(values))
        i_worst = int(np.argmin(values))
        if values[i_best] - values[i_worst] < tol:
            break
        second_worst = np.partition(values, 1)[1]

        worst = simplex[i_worst]
        centroid = (total - worst) / dim

        def replace_worst(x, fx):
            nonlocal total
            total = total - simplex[i_worst] + x
            simplex[i_worst] = x
            values[i_worst] = fx

        reflected = 2.0 * centroid - worst
        fr = f(reflected)
        if fr > values[i_best]:
            expanded = centroid + 2.0 * (centroid - worst)
            fe = f(expanded)
            if fe > fr:
                replace_worst(expanded, fe)
            else:
                replace_worst(reflected, fr)
        elif fr > second_worst:
            replace_worst(reflected, fr)
        else:
            if fr > values[i_worst]:
                contracted = centroid + 0.5 * (reflected - centroid)
                fc = f(contracted)
                accept = fc >= fr
            else:
                contracted = centroid + 0.5 * (worst - centroid)
                fc = f(contracted)
                accept = fc > values[i_worst]
            if accept:
                replace_worst(contracted, fc)
            else:
                best_x = simplex[i_best].copy()
                for i in range(dim + 1):
                    if i == i_best:
                        continue
                    simplex[i] = best_x + 0.5 * (simplex[i] - best_x)
                    values[i] = f(simplex[i])
                total = simplex.sum(axis=0)

    best = int(np.argmax(values))
    return simplex[best].copy(), float(values[best]), evals


def derive_seed(master_seed: int, *key: int) -> np.random.SeedSequence:
    """Splittable per-task seed: SeedSequence(master) spawned at a fixed key.

    The key is a tuple of small integers such as (graph_id, scheme_id,
    restart); identical keys always yield identical random streams.
    """
    return np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(key))


def multistart_optimize(
    obj: ObjectiveSpec,
    restarts: int = DEFAULT_RESTARTS,
    seed: np.random.SeedSequence | int = 0,
    tol: float = DEFAULT_TOL,
    max_evals_per_start: int | None = None,
    extra_starts: Sequence[np.ndarray] = (),
) -> OptResult:
    """Best Nelder-Mead result over seeded random starts plus optional warm starts.

    Random starts are uniform within the objective's box, one independent
    stream per restart. `extra_starts` (e.g. embedded optima of a coarser
    parameter tying) are appended after the random restarts.
    """
    if restarts < 1:
        raise ValueError("need at least one restart")
    base = (
        seed
        if isinstance(seed, np.random.SeedSequence)
        else np.random.SeedSequence(seed)
    )
    streams = base.spawn(restarts)
    starts = [obj.sample_start(np.random.default_rng(s)) for s in streams]
    starts.extend(np.asarray(x, dtype=float) for x in extra_starts)

    per_restart: list[tuple[np.ndarray, float]] = []
    total_evals = 0
    failures: list[str] = []
    for x0 in starts:
        try:
            x, val, ev = nelder_mead(obj, x0, tol=tol, max_evals=max_evals_per_start)
        except OptimizationError as exc:
            failures.append(str(exc))
            continue
        total_evals += ev
        per_restart.append((x, val))
    if not per_restart:
        raise OptimizationError(
            f"all {len(starts)} starts aborted: {'; '.join(failures)}"
        )
    best_x, best_val = max(per_restart, key=lambda t: t[1])
    return OptResult(
        best_params=best_x.copy(),
        best_value=best_val,
        evaluations=total_evals,
        restarts_used=len(per_restart),
        per_restart=per_restart,
    )
