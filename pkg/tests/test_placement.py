import json
import math

import pytest

from opdiv import (
    brute_force_best,
    check_balanced_tree_placement,
    cycle,
    max_diversity,
    path,
    predict_cycle,
    predict_path,
    predict_y_tree,
    y_tree,
)
from opdiv.errors import LeaderNotLeaf, NotATree, NotAYTree, TooFewFollowers
from opdiv.verify import verify_cycles, verify_paths, verify_trees_r2, verify_ytrees


class TestBruteForce:
    def test_fig3_measures_disagree(self, fig3):
        r = brute_force_best(fig3, 1, 9)
        assert r.argmax_simpson == {10, 11}
        assert r.argmax_shannon == {5, 6}

    def test_path6_far_end(self):
        r = brute_force_best(path(6), 1, 4)
        assert r.argmax_simpson == {6} and r.argmax_shannon == {6}

    def test_cycle5_neighbors(self):
        r = brute_force_best(cycle(5), 1, 4)
        assert r.argmax_simpson == {2, 5} and r.argmax_shannon == {2, 5}

    def test_full_score_table(self, fig3):
        r = brute_force_best(fig3, 1, 9)
        assert set(r.scores) == set(range(2, 12))

    def test_too_small(self):
        with pytest.raises(TooFewFollowers):
            brute_force_best(path(3), 1, 2)

    def test_json_round_trip(self, fig3):
        payload = json.loads(brute_force_best(fig3, 1, 9).to_json())
        assert payload["argmax_simpson"] == [10, 11]
        assert payload["scores"]["5"]["shannon"] == pytest.approx(1.003, abs=5e-4)


class TestPredictPath:
    def test_far_end(self):
        assert predict_path(10, 3, "nf") == {10}

    def test_near_end(self):
        assert predict_path(10, 8, "nf") == {1}

    def test_endpoint_tie(self):
        assert predict_path(9, 5, "nf") == {1, 9}

    def test_mirror_r2(self):
        assert predict_path(10, 3, 2) == {8}

    def test_r2_far_l0(self):
        assert predict_path(10, 10, 2) == {1}

    def test_sound_against_brute_force(self):
        assert verify_paths(14) == []


class TestPredictCycle:
    def test_neighbors_full_resolution(self):
        assert predict_cycle(6, "nf") == {2, 6}

    def test_r2_odd_followers_all_tie(self):
        assert predict_cycle(7, 2) == {2, 3, 4, 5, 6, 7}

    def test_r2_even_followers(self):
        assert predict_cycle(8, 2) == {2, 4, 6, 8}

    def test_sound_against_brute_force(self):
        assert verify_cycles(14) == []

    def test_reflection_symmetry(self):
        # argmax sets are invariant under the cycle reflection fixing l0=1
        for n in range(4, 13):
            for R in (n - 2, 2):
                r = brute_force_best(cycle(n), 1, R)
                for s in (r.argmax_simpson, r.argmax_shannon):
                    assert s == {1 if v == 1 else n + 2 - v for v in s}

    def test_max_diversity_attained(self):
        for n in range(4, 13):
            n_f = n - 2
            r = brute_force_best(cycle(n), 1, n_f)
            best = r.scores[2]
            assert best.simpson == pytest.approx(1.0)
            assert best.shannon == pytest.approx(math.log(n_f))


class TestPredictYTree:
    def test_longest_arm_and_neighbor(self):
        g = y_tree(2, 4, 2)
        # center is node 3; arm1 is nodes 4..7 with leaf 7
        assert predict_y_tree(g, 1) == {7, 6}

    def test_tie_includes_both_arms(self):
        g = y_tree(2, 3, 3)
        assert predict_y_tree(g, 1) == {6, 5, 9, 8}

    def test_arm_of_one_uses_center(self):
        g = y_tree(3, 1, 1)  # center 4, leaves 5 and 6 both at distance 4
        assert predict_y_tree(g, 1) == {4, 5, 6}

    def test_fig3_rejected(self, fig3):
        with pytest.raises(NotAYTree):
            predict_y_tree(fig3, 1)

    def test_l0_must_be_leaf(self):
        with pytest.raises(LeaderNotLeaf):
            predict_y_tree(y_tree(2, 2, 2), 2)

    def test_sound_against_brute_force(self):
        assert verify_ytrees(4) == []


class TestBalancedTreePlacement:
    def test_fig3_node_11_certified(self, fig3):
        assert check_balanced_tree_placement(fig3, 1, 11)

    def test_fig3_node_10_not_certified_but_optimal(self, fig3):
        assert not check_balanced_tree_placement(fig3, 1, 10)
        assert 10 in brute_force_best(fig3, 1, 2).argmax_simpson

    def test_path_leaders_at_ends(self):
        assert check_balanced_tree_placement(path(6), 1, 6)

    def test_rejects_cycles(self):
        with pytest.raises(NotATree):
            check_balanced_tree_placement(cycle(5), 1, 3)

    def test_certified_implies_optimal(self):
        assert verify_trees_r2(12, n_trees=60) == []


class TestDiversityBounds:
    def test_attained_never_exceeds_bound(self):
        for n in range(4, 13):
            n_f = n - 2
            for g in (path(n), cycle(n)):
                for R in (n_f, 2):
                    r = brute_force_best(g, 1, R)
                    for s in r.scores.values():
                        assert s.simpson <= max_diversity(n_f, R, "simpson") + 1e-9
                        assert s.shannon <= max_diversity(n_f, R, "shannon") + 1e-9

    def test_path_shortfall_formula(self):
        # optimal Simpson on a path falls short of 1 by m(m−1)/(n_f(n_f−1))
        # where m followers sit behind the nearer endpoint
        for n in range(5, 15):
            for k in range(1, n + 1):
                n_f = n - 2
                r = brute_force_best(path(n), k, n_f)
                m = min(k - 1, n - k)
                expect = 1 - m * (m - 1) / (n_f * (n_f - 1))
                assert max(s.simpson for s in r.scores.values()) == pytest.approx(expect)


class TestTableRendering:
    def test_three_decimals_half_up(self, fig3):
        table = brute_force_best(fig3, 1, 9).to_table()
        assert "0.639" in table and "1.003" in table
        rows = table.strip().splitlines()
        assert len(rows) == 11  # header + 10 candidates
