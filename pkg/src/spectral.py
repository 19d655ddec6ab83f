"""
ToughCycles - Spectral radii and threshold formulas

Largest eigenvalues of A(G) and Q(G) = D(G) + A(G) by power iteration with a
certified stopping rule: for a positive vector x and an entrywise
non-negative irreducible M, min_i (Mx)_i / x_i <= lambda_max <= max_i (Mx)_i / x_i,
and the Rayleigh quotient is a second lower bound. Iteration stops when the
bracket is at most 2 * tol wide.
"""
import csv
import io
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Union

import numpy as np

from . import config
from .errors import ConvergenceError, DisconnectedGraphError, InvalidParameterError
from .graph_core import Graph, iter_bits

logger = logging.getLogger("toughcycles.spectral")

THEOREM_FLOORS: Dict[int, int] = {1: 7, 2: 16, 3: 28}

STALL_WINDOW = 500
MAX_RESTARTS = 3


@dataclass(frozen=True)
class SpectralEstimate:
    value: float
    tolerance: float
    lower: float
    upper: float
    iterations: int

    def __float__(self) -> float:
        return self.value


class QMode(str, Enum):
    PRINTED = "printed"
    CORRECTED = "corrected"


# ============ Matrices ============

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=float)
    for u in range(g.n):
        for v in iter_bits(g.rows[u]):
            a[u, v] = 1.0
    return a


def signless_laplacian_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return a + np.diag(a.sum(axis=1))


# ============ Power iteration ============

def _certified_top_eigenvalue(matrix: np.ndarray, tol: float, seed: int = config.DEFAULT_SEED) -> SpectralEstimate:
    n = matrix.shape[0]
    rng = np.random.default_rng(seed)
    x = np.ones(n)
    total = 0
    for restart in range(MAX_RESTARTS + 1):
        best_width = math.inf
        width_at_window = math.inf
        for step in range(config.POWER_MAX_ITER):
            total += 1
            y = matrix @ x
            ratios = y / x
            upper = float(ratios.max())
            lower = max(float(ratios.min()), float(x @ y) / float(x @ x))
            width = upper - lower
            if width <= 2 * tol:
                return SpectralEstimate(
                    value=(lower + upper) / 2, tolerance=tol, lower=lower, upper=upper, iterations=total
                )
            best_width = min(best_width, width)
            x = y / np.linalg.norm(y)
            if step and step % STALL_WINDOW == 0:
                if best_width > 0.999 * width_at_window:
                    break
                width_at_window = best_width
        logger.debug(f"power iteration stalled (restart {restart}, bracket width {best_width:.3e})")
        x = rng.uniform(0.5, 1.5, size=n)
    raise ConvergenceError(f"power iteration did not certify tol={tol} within {total} iterations")


def _require_connected(g: Graph, operation: str, tol: float) -> None:
    if tol <= 0:
        raise InvalidParameterError(f"tolerance must be > 0, got {tol}")
    if g.n == 0:
        raise InvalidParameterError(f"{operation} needs at least one vertex")
    if not g.is_connected():
        raise DisconnectedGraphError(operation)


def adjacency_spectral_radius(
    g: Graph, tol: float = config.DEFAULT_TOL, seed: int = config.DEFAULT_SEED
) -> SpectralEstimate:
    """rho(G), the largest adjacency eigenvalue (written mu(G) in some sources).

    Iterates on A + I: a connected bipartite graph has -rho in its spectrum, and
    the shift makes rho + 1 strictly dominant.
    """
    _require_connected(g, "adjacency_spectral_radius", tol)
    if g.n == 1:
        return SpectralEstimate(value=0.0, tolerance=tol, lower=0.0, upper=0.0, iterations=0)
    shifted = _certified_top_eigenvalue(adjacency_matrix(g) + np.eye(g.n), tol, seed)
    return SpectralEstimate(
        value=shifted.value - 1.0,
        tolerance=tol,
        lower=shifted.lower - 1.0,
        upper=shifted.upper - 1.0,
        iterations=shifted.iterations,
    )


def signless_laplacian_radius(
    g: Graph, tol: float = config.DEFAULT_TOL, seed: int = config.DEFAULT_SEED
) -> SpectralEstimate:
    """q(G); Q is non-negative with a positive diagonal, so no shift is needed."""
    _require_connected(g, "signless_laplacian_radius", tol)
    if g.n == 1:
        return SpectralEstimate(value=0.0, tolerance=tol, lower=0.0, upper=0.0, iterations=0)
    return _certified_top_eigenvalue(signless_laplacian_matrix(g), tol, seed)


# ============ Edge bounds ============

def rho_edge_bound(n: int, m: int) -> float:
    """sqrt(2m - n + 1); tight exactly for K_n and K_{1,n-1}."""
    if n < 1 or not 0 <= m <= n * (n - 1) // 2:
        raise InvalidParameterError(f"need n >= 1 and 0 <= m <= n(n-1)/2, got n={n}, m={m}")
    radicand = 2 * m - n + 1
    if radicand < 0:
        raise InvalidParameterError(f"2m - n + 1 = {radicand} is negative for n={n}, m={m}")
    return math.sqrt(radicand)


def q_edge_bound_exact(n: int, m: int) -> Fraction:
    if n < 2:
        raise InvalidParameterError(f"q edge bound needs n >= 2, got {n}")
    return Fraction(2 * m, n - 1) + n - 2


def q_edge_bound(n: int, m: int) -> float:
    """2m/(n-1) + n - 2; tight exactly for K_n and K_{1,n-1}."""
    return float(q_edge_bound_exact(n, m))


# ============ Theorem thresholds ============

def _require_t(t: int) -> None:
    if t not in THEOREM_FLOORS:
        raise InvalidParameterError(f"t must be 1, 2 or 3, got {t}")


def in_theorem_range(n: int, t: int) -> bool:
    _require_t(t)
    return n >= THEOREM_FLOORS[t]


def _require_theorem_range(n: int, t: int) -> None:
    if not in_theorem_range(n, t):
        raise InvalidParameterError(
            f"the pancyclicity thresholds apply for t={t} only when n >= {THEOREM_FLOORS[t]}, got n={n}"
        )


def edge_threshold(n: int, t: int) -> int:
    """C(n - 2t, 2) + 3t^2: enough edges to force a t-tough graph pancyclic or bipartite."""
    _require_theorem_range(n, t)
    return comb(n - 2 * t, 2) + 3 * t * t


def rho_threshold_radicand(n: int, t: int) -> int:
    _require_t(t)
    return n * n - 4 * t * n - 2 * n + 10 * t * t + 2 * t + 1


def hamiltonicity_rho_radicand(n: int, t: int) -> int:
    _require_t(t)
    return n * n - 4 * t * n - 2 * n + 10 * t * t + 2 * t - 1


def rho_threshold(n: int, t: int) -> float:
    radicand = rho_threshold_radicand(n, t)
    if radicand < 0:
        raise InvalidParameterError(f"spectral threshold radicand {radicand} is negative for n={n}, t={t}")
    return math.sqrt(radicand)


def hamiltonicity_rho_threshold(n: int, t: int) -> float:
    radicand = hamiltonicity_rho_radicand(n, t)
    if radicand < 0:
        raise InvalidParameterError(f"Hamiltonicity threshold radicand {radicand} is negative for n={n}, t={t}")
    return math.sqrt(radicand)


def in_hamiltonicity_range(n: int, t: int) -> bool:
    """n >= 8t for t in {1, 2}; n > 9t for t = 3."""
    _require_t(t)
    return n > 9 * t if t == 3 else n >= 8 * t


def q_threshold_exact(n: int, t: int, mode: Union[QMode, str] = QMode.CORRECTED) -> Fraction:
    """Signless-Laplacian threshold.

    PRINTED is the published numerator 2n^2 + 10t^2 - 4tn + 2t - n; it exceeds
    2(n-1) >= q(G) for every n, so its hypothesis never holds. CORRECTED uses
    2 * edge_threshold, the value the edge bound actually needs; the two differ
    by exactly n^2 / (n - 1).
    """
    mode = QMode(mode)
    _require_theorem_range(n, t)
    if mode is QMode.PRINTED:
        numerator = 2 * n * n + 10 * t * t - 4 * t * n + 2 * t - n
    else:
        numerator = 2 * edge_threshold(n, t)
    return Fraction(numerator, n - 1) + n - 2


def q_threshold(n: int, t: int, mode: Union[QMode, str] = QMode.CORRECTED) -> float:
    return float(q_threshold_exact(n, t, mode))


def threshold_rows(t: int, n_min: int, n_max: int) -> List[Dict[str, object]]:
    _require_t(t)
    rows = []
    for n in range(max(n_min, THEOREM_FLOORS[t]), n_max + 1):
        rows.append({
            "n": n,
            "t": t,
            "edge_threshold": edge_threshold(n, t),
            "rho_threshold": rho_threshold(n, t),
            "q_printed": q_threshold(n, t, QMode.PRINTED),
            "q_corrected": q_threshold(n, t, QMode.CORRECTED),
        })
    return rows


def thresholds_csv(rows: List[Dict[str, object]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=["n", "t", "edge_threshold", "rho_threshold", "q_printed", "q_corrected"],
        lineterminator="\n",
    )
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (f"{v:.12g}" if isinstance(v, float) else v) for k, v in row.items()})
    return buffer.getvalue()
