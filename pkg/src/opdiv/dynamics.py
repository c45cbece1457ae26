"""Steady-state follower opinions and ODE validation of the averaging dynamics.

The converged opinions solve Lff · x_f = −Lfl · x_l, a small dense symmetric
positive-definite system; the explicit-Euler integrator exists to cross-check
that algebraic answer, not to replace it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LeaderOrderViolation, SolveFailure, UnstableStep
from .graphs import Graph, LeaderConfig, laplacian_blocks

RESIDUAL_TOL = 1e-10  # per follower, scaled by n_f at the check


@dataclass(frozen=True)
class OpinionVector:
    """Converged follower opinions, keyed by follower node label."""

    values: dict  # follower node -> opinion in [0, 1]

    @property
    def followers(self) -> tuple:
        return tuple(sorted(self.values))

    def as_array(self) -> np.ndarray:
        """Opinions in ascending follower-label order."""
        return np.array([self.values[v] for v in self.followers])

    def to_csv(self) -> str:
        """Serialize as `node,opinion` rows with 12 significant digits."""
        lines = ["node,opinion"]
        lines.extend(f"{v},{self.values[v]:.12g}" for v in self.followers)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Trajectory:
    """Euler integration record: states[i] holds follower opinions at times[i]."""

    times: np.ndarray  # shape (T,)
    states: np.ndarray  # shape (T, n_f), columns in `followers` order
    followers: tuple

    def final(self) -> OpinionVector:
        return OpinionVector(dict(zip(self.followers, self.states[-1])))


def _leader_states(lc: LeaderConfig, leader_order: tuple) -> np.ndarray:
    return np.array([0.0 if v in lc.zeros else 1.0 for v in leader_order])


def steady_state(g: Graph, lc: LeaderConfig) -> OpinionVector:
    """Solve the grounded-Laplacian system for the converged opinion vector."""
    blocks = laplacian_blocks(g, lc)
    rhs = -blocks.Lfl @ _leader_states(lc, blocks.leader_order)
    try:
        x = np.linalg.solve(blocks.Lff, rhs)
    except np.linalg.LinAlgError as exc:
        raise SolveFailure(f"grounded Laplacian solve failed: {exc}") from exc
    residual = np.linalg.norm(blocks.Lff @ x - rhs)
    n_f = len(x)
    if residual > RESIDUAL_TOL * n_f:
        raise SolveFailure(f"residual {residual:.3e} exceeds {RESIDUAL_TOL * n_f:.3e}")
    return OpinionVector({v: float(o) for v, o in zip(blocks.followers, x)})


def path_closed_form(n: int, k: int, j: int) -> OpinionVector:
    """Closed-form steady state on a path with l0 at node k and l1 at node j, k < j.

    Followers strictly between the leaders interpolate linearly, (v−k)/(j−k);
    followers below k sit at 0 and followers above j at 1.
    """
    if k >= j:
        raise LeaderOrderViolation(f"need k < j, got k={k}, j={j}")
    if not (1 <= k and j <= n):
        raise LeaderOrderViolation(f"leaders ({k},{j}) outside 1..{n}")
    values = {}
    for v in range(1, n + 1):
        if v == k or v == j:
            continue
        if v < k:
            values[v] = 0.0
        elif v > j:
            values[v] = 1.0
        else:
            values[v] = (v - k) / (j - k)
    return OpinionVector(values)


def default_step(g: Graph) -> float:
    max_deg = max(g.degree(v) for v in range(1, g.n + 1))
    return 1.0 / (2.0 * max_deg)


def simulate(
    g: Graph,
    lc: LeaderConfig,
    x0: dict,
    step: float = None,
    horizon: float = None,
) -> Trajectory:
    """Explicit-Euler integration of the follower dynamics ẋ_f = −Lff x_f − Lfl x_l.

    x0 maps nodes to initial opinions in [0, 1]; leader entries are ignored and
    pinned to 0/1. Raises UnstableStep when the step exceeds the 2/λ_max Euler
    stability bound.
    """
    blocks = laplacian_blocks(g, lc)
    followers = blocks.followers
    if step is None:
        step = default_step(g)
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    lam_max = float(np.linalg.eigvalsh(blocks.Lff)[-1])
    bound = 2.0 / lam_max
    if step > bound:
        raise UnstableStep(f"step {step} exceeds explicit-Euler bound 2/λ_max = {bound:.6g}")
    if horizon is None:
        # slowest mode decays like exp(-λ_min t); aim its residual below 1e-8
        lam_min = float(np.linalg.eigvalsh(blocks.Lff)[0])
        horizon = 20.0 / lam_min

    x = np.array([float(x0[v]) for v in followers])
    if np.any(x < 0) or np.any(x > 1):
        raise ValueError("initial opinions must lie in [0, 1]")
    rhs_leaders = blocks.Lfl @ _leader_states(lc, blocks.leader_order)

    nsteps = max(1, int(np.ceil(horizon / step)))
    times = np.empty(nsteps + 1)
    states = np.empty((nsteps + 1, len(followers)))
    times[0] = 0.0
    states[0] = x
    for i in range(1, nsteps + 1):
        x = x + step * (-blocks.Lff @ x - rhs_leaders)
        times[i] = i * step
        states[i] = x
    return Trajectory(times=times, states=states, followers=followers)
