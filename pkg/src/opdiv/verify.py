"""Exhaustive and randomized sweeps checking the predictors against brute force.

Each sweep returns a list of counterexample strings (empty means verified) so
the CLI and the test suite share one implementation. All randomness is seeded;
a sweep is a deterministic function of its arguments.
"""
from __future__ import annotations

import bisect
import math
import random
from collections import deque

from . import graphs
from .diversity import bin_opinions, max_diversity
from .dynamics import steady_state
from .placement import (
    TIE_TOL,
    brute_force_best,
    check_balanced_tree_placement,
    predict_cycle,
    predict_path,
    predict_y_tree,
)
from .resistance import grounded_inverse, leader_set_resistance, pairwise_resistance

NUM_TOL = 1e-9
DEFAULT_SEED = 20180212


def random_tree(n: int, rng: random.Random) -> graphs.Graph:
    """Uniform random labeled tree on n nodes via a Prüfer sequence."""
    if n == 2:
        return graphs.build_graph(2, [(1, 2)])
    seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    return graphs.build_graph(n, prufer_edges(n, seq))


def prufer_edges(n: int, seq: list) -> list:
    degree = {v: 1 for v in range(1, n + 1)}
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in degree if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            bisect.insort(leaves, v)
    edges.append((leaves[0], leaves[1]))
    return edges


def audit_theorem2(max_n: int) -> list:
    """Report, per (n, k), whether the stated R=2 placement j attains the optimum.

    The stated rule is j = n−k+1 for k < n/2 and j = n−k otherwise; rows where
    it produces an invalid node (j = k or j < 1) or a suboptimal one are
    reported verbatim. This is an audit, not a pass/fail check.
    """
    lines = []
    for n in range(4, max_n + 1):
        for k in range(1, n + 1):
            result = brute_force_best(graphs.path(n), k, 2)
            j = n - k + 1 if k < n / 2 else n - k
            if j == k or not 1 <= j <= n:
                verdict = f"invalid (j={j})"
            elif j in result.argmax_simpson and j in result.argmax_shannon:
                verdict = "optimal"
            else:
                verdict = (
                    f"suboptimal (argmax_simpson={sorted(result.argmax_simpson)}, "
                    f"argmax_shannon={sorted(result.argmax_shannon)})"
                )
            lines.append(f"path n={n} k={k}: stated j={j}: {verdict}")
    return lines


def verify_paths(max_n: int) -> list:
    """Theorem sweeps on paths: farthest-endpoint at R=n_f, mirror node at R=2."""
    bad = []
    for n in range(4, max_n + 1):
        g = graphs.path(n)
        for k in range(1, n + 1):
            for R in (n - 2, 2):
                result = brute_force_best(g, k, R)
                pred = predict_path(n, k, "nf" if R != 2 else 2)
                if not (pred <= result.argmax_simpson and pred <= result.argmax_shannon):
                    bad.append(
                        f"path n={n} k={k} R={R}: predicted {sorted(pred)} not in argmax "
                        f"(simpson {sorted(result.argmax_simpson)}, "
                        f"shannon {sorted(result.argmax_shannon)})"
                    )
            # post-Theorem-1 shortfall: optimal Simpson = 1 − m(m−1)/(n_f(n_f−1))
            # with m zeros-side followers for the better endpoint
            n_f = n - 2
            m = min(k - 1, n - k)
            expect = 1.0 - m * (m - 1) / (n_f * (n_f - 1))
            result = brute_force_best(g, k, n_f)
            attained = max(s.simpson for s in result.scores.values())
            if abs(attained - expect) > NUM_TOL:
                bad.append(f"path n={n} k={k}: Simpson optimum {attained} != {expect}")
    return bad


def verify_cycles(max_n: int) -> list:
    """Theorem sweeps on cycles with l0 = 1, at R = n_f and R = 2."""
    bad = []
    for n in range(4, max_n + 1):
        g = graphs.cycle(n)
        n_f = n - 2
        result = brute_force_best(g, 1, n_f)
        expected = predict_cycle(n, "nf")
        if result.argmax_simpson != expected or result.argmax_shannon != expected:
            bad.append(
                f"cycle n={n} R=nf: argmax (simpson {sorted(result.argmax_simpson)}, "
                f"shannon {sorted(result.argmax_shannon)}) != {sorted(expected)}"
            )
        best = result.scores[min(expected)]
        if abs(best.simpson - 1.0) > NUM_TOL or abs(best.shannon - math.log(n_f)) > NUM_TOL:
            bad.append(f"cycle n={n} R=nf: optimum {best} not maximal diversity")

        result = brute_force_best(g, 1, 2)
        expected = predict_cycle(n, 2)
        if result.argmax_simpson != expected or result.argmax_shannon != expected:
            bad.append(
                f"cycle n={n} R=2: argmax (simpson {sorted(result.argmax_simpson)}, "
                f"shannon {sorted(result.argmax_shannon)}) != {sorted(expected)}"
            )
        best = result.scores[min(expected)]
        for measure, got in (("simpson", best.simpson), ("shannon", best.shannon)):
            bound = max_diversity(n_f, 2, measure)
            if abs(got - bound) > NUM_TOL:
                bad.append(f"cycle n={n} R=2 {measure}: optimum {got} != bound {bound}")
    return bad


def verify_ytrees(max_arm: int) -> list:
    """Theorem sweep on Y-trees: farthest leaf and its neighbor, R = n_f."""
    bad = []
    for a0 in range(1, max_arm + 1):
        for a1 in range(1, max_arm + 1):
            for a2 in range(1, max_arm + 1):
                g = graphs.y_tree(a0, a1, a2)
                pred = predict_y_tree(g, 1)
                result = brute_force_best(g, 1, g.n - 2)
                if not (pred <= result.argmax_simpson and pred <= result.argmax_shannon):
                    bad.append(
                        f"ytree({a0},{a1},{a2}): predicted {sorted(pred)} not in argmax "
                        f"(simpson {sorted(result.argmax_simpson)}, "
                        f"shannon {sorted(result.argmax_shannon)})"
                    )
    return bad


def verify_trees_r2(max_n: int, n_trees: int = 200, seed: int = DEFAULT_SEED) -> list:
    """Balanced-placement certification: whenever the check passes, the
    placement must attain the brute-force optimum for both measures at R = 2."""
    rng = random.Random(seed)
    bad = []
    for _ in range(n_trees):
        n = rng.randrange(5, max_n + 1)
        g = random_tree(n, rng)
        results = {}
        for l0 in range(1, n + 1):
            for l1 in range(1, n + 1):
                if l1 == l0:
                    continue
                if not check_balanced_tree_placement(g, l0, l1):
                    continue
                if l0 not in results:
                    results[l0] = brute_force_best(g, l0, 2)
                r = results[l0]
                if l1 not in r.argmax_simpson or l1 not in r.argmax_shannon:
                    bad.append(
                        f"tree n={n} edges={sorted(g.edges)} l0={l0} l1={l1}: certified "
                        f"but argmax (simpson {sorted(r.argmax_simpson)}, "
                        f"shannon {sorted(r.argmax_shannon)})"
                    )
    return bad


def _merged_components(g: graphs.Graph, leaders: set, removed: int) -> list:
    """Connected components of followers after merging leaders and deleting one node."""
    ground = 0  # sentinel for the merged leader node
    adj = {ground: set()}
    for v in range(1, g.n + 1):
        if v in leaders or v == removed:
            continue
        adj[v] = set()
    for u, v in g.edges:
        cu = ground if u in leaders else u
        cv = ground if v in leaders else v
        if cu in adj and cv in adj and cu != cv:
            adj[cu].add(cv)
            adj[cv].add(cu)
    comps = []
    seen = set()
    for s in adj:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        seen.add(s)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def verify_appendix(max_n: int, n_trees: int = 200, seed: int = DEFAULT_SEED) -> list:
    """Resistance lemmas on random trees with leaf leader pairs.

    Checks cutpoint additivity through every separating follower, the
    branch-opinion equality at junctions on the leader path, the cut identity
    Lff⁻¹(u,u) − r(u,t) − Lff⁻¹(t,t) = 0, and consistency of the grounded
    inverse with the steady-state solve.
    """
    rng = random.Random(seed)
    bad = []
    trees = 0
    while trees < n_trees:
        n = rng.randrange(5, max_n + 1)
        g = random_tree(n, rng)
        leaves = sorted(v for v in range(1, n + 1) if g.degree(v) == 1)
        if len(leaves) < 2:
            continue
        l0, l1 = rng.sample(leaves, 2)
        trees += 1
        label = f"tree n={n} edges={sorted(g.edges)} l0={l0} l1={l1}"
        lc = graphs.single_pair(l0, l1)
        gi = grounded_inverse(g, lc)
        followers = sorted(gi.follower_index)

        # cutpoint additivity through every separating follower x
        for x in followers:
            comps = _merged_components(g, {l0, l1}, x)
            for i, cu in enumerate(comps):
                for cv in comps[i + 1 :]:
                    for u in sorted(cu - {0}):
                        for v in sorted(cv - {0}):
                            lhs = pairwise_resistance(gi, u, v)
                            rhs = pairwise_resistance(gi, u, x) + pairwise_resistance(gi, x, v)
                            if abs(lhs - rhs) > NUM_TOL:
                                bad.append(
                                    f"{label}: r({u},{v})={lhs} != r({u},{x})+r({x},{v})={rhs}"
                                )

        # branch-opinion equality and the cut identity at junctions
        x = steady_state(g, lc)
        spine = graphs.tree_path(g, l0, l1)
        for t in spine[1:-1]:
            if g.degree(t) < 3:
                continue
            for u in followers:
                if u == t or u in spine:
                    continue
                if t in graphs.tree_path(g, u, l0) and t in graphs.tree_path(g, u, l1):
                    if abs(x.values[u] - x.values[t]) > NUM_TOL:
                        bad.append(f"{label}: opinion({u})={x.values[u]} != opinion({t})={x.values[t]}")
                    ident = (
                        leader_set_resistance(gi, u)
                        - pairwise_resistance(gi, u, t)
                        - leader_set_resistance(gi, t)
                    )
                    if abs(ident) > NUM_TOL:
                        bad.append(f"{label}: cut identity at u={u}, t={t} off by {ident}")

        # grounded inverse vs. steady state
        blocks = graphs.laplacian_blocks(g, lc)
        xl = [0.0 if v in lc.zeros else 1.0 for v in blocks.leader_order]
        recon = -gi.inv @ (blocks.Lfl @ xl)
        for v in followers:
            if abs(recon[gi.follower_index[v]] - x.values[v]) > NUM_TOL:
                bad.append(f"{label}: inverse-based opinion mismatch at node {v}")
    return bad


SUITES = {
    "paths": lambda bound: verify_paths(bound),
    "cycles": lambda bound: verify_cycles(bound),
    "ytrees": lambda bound: verify_ytrees(bound),
    "trees-R2": lambda bound: verify_trees_r2(bound),
    "appendix": lambda bound: verify_appendix(bound),
}
