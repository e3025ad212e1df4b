"""Evaluation quantities: approximation ratio r, objective-gap ratio k,
parameter-reduction ratio l, and corpus-level aggregates."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

K_ZERO_OBJECTIVE_TOL = 1e-6  # |f_ma - f_variant| below this counts as k = 0
DEGENERATE_DENOM_TOL = 1e-9
HISTOGRAM_BIN_WIDTH = 0.05


class DegenerateDenominator(ArithmeticError):
    """f_ma and f_qaoa coincide, so k is undefined for this record."""


def approx_ratio(found: float, exact: int) -> float:
    """found expectation / exact Max-Cut value."""
    if exact < 1:
        raise ValueError("approximation ratio undefined for graphs with no cut")
    return found / exact


def k_ratio(f_ma: float, f_variant: float, f_qaoa: float) -> float:
    """Position of a variant between ma (k=0) and plain QAOA (k=1)."""
    denom = f_ma - f_qaoa
    if abs(denom) < DEGENERATE_DENOM_TOL:
        raise DegenerateDenominator(
            f"f_ma ({f_ma}) and f_qaoa ({f_qaoa}) coincide within {DEGENERATE_DENOM_TOL}"
        )
    return (f_ma - f_variant) / denom


def l_ratio(n_edges: int, n_vertices: int, n_edge_orbits: int, n_vertex_orbits: int) -> float:
    """Fraction of the ma-to-plain parameter gap removed by a tying."""
    denom = n_edges + n_vertices - 2
    if denom <= 0:
        raise ValueError("l undefined: graph has only 2 parameters to begin with")
    return (n_edges + n_vertices - (n_edge_orbits + n_vertex_orbits)) / denom


@dataclass(frozen=True)
class SchemeSummary:
    scheme: str
    count: int
    degenerate_count: int
    fraction_k_zero: float
    mean_k_all: float
    mean_k_positive: float
    mean_l: float
    mean_param_reduction: float  # (P_ma - P_scheme) / P_ma over k > 0 records
    mean_objective_decrease: float  # (f_ma - f_scheme) / f_ma over k > 0 records
    k_histogram: dict[float, int]
    r_diff_histogram: dict[float, int]


def _mean(values) -> float:
    """Order-independent mean (summed in sorted order)."""
    return float(np.mean(np.sort(np.asarray(values)))) if len(values) else float("nan")


def _histogram(values, width: float = HISTOGRAM_BIN_WIDTH) -> dict[float, int]:
    """Counts keyed by left bin edge."""
    hist: dict[float, int] = {}
    for v in values:
        edge = round(np.floor(v / width) * width, 10)
        hist[edge] = hist.get(edge, 0) + 1
    return dict(sorted(hist.items()))


def aggregate(records) -> dict[str, SchemeSummary]:
    """Per-scheme summary over variant-scheme run records.

    Records need attributes/keys: scheme, k (may be None for degenerate
    denominators), l, best_expectation, f_ma, r, r_ma, num_params, num_params_ma.
    A record counts as k = 0 when its objective sits within
    K_ZERO_OBJECTIVE_TOL of the ma objective.
    """
    if not records:
        raise ValueError("no records to aggregate")
    by_scheme: dict[str, list] = {}
    for rec in records:
        get = rec.get if isinstance(rec, dict) else lambda k, r=rec: getattr(r, k)
        by_scheme.setdefault(get("scheme"), []).append(get)

    out: dict[str, SchemeSummary] = {}
    for scheme, gets in sorted(by_scheme.items()):
        ks, ls, r_diffs = [], [], []
        k_zero = degenerate = 0
        pos_k, pos_param_red, pos_obj_dec = [], [], []
        for get in gets:
            ls.append(get("l"))
            r_diffs.append(get("r_ma") - get("r"))
            if get("k") is None:
                degenerate += 1
                continue
            is_zero = abs(get("f_ma") - get("best_expectation")) < K_ZERO_OBJECTIVE_TOL
            k = 0.0 if is_zero else get("k")
            ks.append(k)
            if is_zero:
                k_zero += 1
            else:
                pos_k.append(k)
                pos_param_red.append(
                    (get("num_params_ma") - get("num_params")) / get("num_params_ma")
                )
                pos_obj_dec.append(
                    (get("f_ma") - get("best_expectation")) / get("f_ma")
                )
        n_valid = len(ks)
        out[scheme] = SchemeSummary(
            scheme=scheme,
            count=len(gets),
            degenerate_count=degenerate,
            fraction_k_zero=k_zero / n_valid if n_valid else float("nan"),
            mean_k_all=_mean(ks),
            mean_k_positive=_mean(pos_k),
            mean_l=_mean(ls),
            mean_param_reduction=_mean(pos_param_red),
            mean_objective_decrease=_mean(pos_obj_dec),
            k_histogram=_histogram(ks),
            r_diff_histogram=_histogram(r_diffs),
        )
    return out
