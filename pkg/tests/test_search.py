"""Exhaustive enumeration, certificates, determinism, and the sampler."""

import math

import pytest

from sgraph import (
    SignedGraph,
    has_negative_c4,
    is_balanced,
    sgio,
    switching_class_representatives,
    switching_equivalent,
    switching_isomorphic,
)
from sgraph.core import underlying_positive
from sgraph.errors import BadParamsError, BudgetExceededError
from sgraph.extremal import bound_fixed_sizes, extremal_graph
from sgraph.search import (
    CONFIRMED,
    SearchSpace,
    certificate_csv_row,
    CSV_HEADER,
    enumerate_admissible,
    spot_check_random,
    verify_fixed_order,
    verify_fixed_sizes,
)


def brute_admissible_class_count(r: int, s: int) -> int:
    """Independent oracle: every subset of complete-bipartite edge slots,
    every signature on it, grouped into switching orbits, filtered by the
    honest detectors.  Exponential; keep to tiny (r, s)."""
    slots = [(a, r + b) for a in range(r) for b in range(s)]
    n = r + s
    total = 0
    for mask in range(1 << len(slots)):
        pairs = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        m = len(pairs)
        seen = [False] * (1 << m)
        for sig in range(1 << m):
            if seen[sig]:
                continue
            # flood the switching orbit of this signature
            orbit = [sig]
            seen[sig] = True
            while orbit:
                cur = orbit.pop()
                for v in range(n):
                    flipped = cur
                    for i, (a, b) in enumerate(pairs):
                        if (a == v) != (b == v):
                            flipped ^= 1 << i
                    if not seen[flipped]:
                        seen[flipped] = True
                        orbit.append(flipped)
            g = SignedGraph(
                n,
                tuple(
                    (a, b, -1 if sig >> i & 1 else 1)
                    for i, (a, b) in enumerate(pairs)
                ),
            )
            if not is_balanced(g) and has_negative_c4(g) is None:
                total += 1
    return total


class TestEnumeration:
    def test_3_3_admissible_count_golden(self):
        stats = enumerate_admissible(SearchSpace(3, 3), lambda ac: None)
        # frozen from the independent orbit-grouping oracle below
        assert stats.admissible == 6
        assert stats.graphs == 512
        assert stats.classes == 848
        assert stats.balanced_skipped == 512

    def test_3_3_admissible_count_matches_brute_oracle(self):
        assert brute_admissible_class_count(3, 3) == 6

    def test_visited_graphs_are_admissible(self):
        seen = []

        def visitor(ac):
            g = ac.signed_graph()
            assert not is_balanced(g)
            assert has_negative_c4(g) is None
            seen.append(g)

        stats = enumerate_admissible(SearchSpace(3, 3), visitor)
        assert len(seen) == stats.admissible

    def test_all_positive_never_visited(self):
        def visitor(ac):
            assert ac.cotree_bits != 0
            assert any(s == -1 for *_, s in ac.signed_graph().edges)

        enumerate_admissible(SearchSpace(3, 3), visitor)

    def test_restricted_to_c6_underlying(self):
        construction, _ = extremal_graph(3, 3)
        reps = list(switching_class_representatives(underlying_positive(construction)))
        assert len(reps) == 2  # 2^(6-6+1)
        admissible = [
            g for g in reps if not is_balanced(g) and has_negative_c4(g) is None
        ]
        assert len(admissible) == 1

    def test_budget_guards(self):
        with pytest.raises(BudgetExceededError):
            enumerate_admissible(SearchSpace(4, 5), lambda ac: None)
        with pytest.raises(BudgetExceededError):
            SearchSpace(5, 5, stretch=True).check_budget()
        with pytest.raises(BadParamsError):
            SearchSpace(2, 5)

    def test_connected_only_reduces_graphs(self):
        all_stats = enumerate_admissible(SearchSpace(3, 3), lambda ac: None)
        conn_stats = enumerate_admissible(
            SearchSpace(3, 3, connected_only=True), lambda ac: None
        )
        assert conn_stats.graphs < all_stats.graphs
        assert conn_stats.graphs + conn_stats.graphs_skipped == all_stats.graphs


class TestVerifyFixedSizes:
    def test_3_3_confirmed(self):
        cert = verify_fixed_sizes(3, 3)
        assert cert.verdict == CONFIRMED
        assert abs(cert.observed_max - math.sqrt(3)) <= 1e-8
        assert cert.unique and not cert.disconnected_tie
        construction, _ = extremal_graph(3, 3)
        assert switching_isomorphic(sgio.loads(cert.witnesses[0]), construction)

    def test_3_4_confirmed(self):
        cert = verify_fixed_sizes(3, 4)
        assert cert.verdict == CONFIRMED
        assert abs(cert.observed_max - math.sqrt(5)) <= 1e-8

    def test_determinism_across_jobs(self):
        c1 = verify_fixed_sizes(3, 4, jobs=1)
        c2 = verify_fixed_sizes(3, 4, jobs=2)
        assert c1.result.stats.to_dict() == c2.result.stats.to_dict()
        assert c1.observed_max == c2.observed_max
        assert c1.witnesses == c2.witnesses

    def test_witness_roundtrip_bit_exact(self):
        cert = verify_fixed_sizes(3, 3)
        for text in cert.witnesses:
            assert sgio.dumps(sgio.loads(text)) == text

    def test_maximizers_pass_filters(self):
        cert = verify_fixed_sizes(3, 4)
        for g in cert.result.maximizers:
            assert not is_balanced(g)
            assert has_negative_c4(g) is None

    def test_canonical_mode_agrees(self):
        plain = verify_fixed_sizes(3, 3)
        canon = verify_fixed_sizes(3, 3, canonical_underlying=True)
        assert canon.verdict == CONFIRMED
        assert abs(canon.observed_max - plain.observed_max) <= 1e-12
        assert canon.result.stats.graphs < plain.result.stats.graphs

    def test_connected_only_agrees(self):
        cert = verify_fixed_sizes(3, 3, connected_only=True)
        assert cert.verdict == CONFIRMED

    def test_csv_row_shape(self):
        cert = verify_fixed_sizes(3, 3)
        row = certificate_csv_row(cert)
        assert len(row.split(",")) == len(CSV_HEADER.split(","))

    def test_json_fields(self):
        cert = verify_fixed_sizes(3, 3)
        doc = cert.to_json_dict()
        for key in ("verdict", "claimed_bound", "observed_max", "unique",
                    "witnesses", "tolerance", "stats"):
            assert key in doc


class TestVerifyFixedOrder:
    def test_n6(self):
        cert = verify_fixed_order(6)
        assert cert.verdict == CONFIRMED
        assert cert.winning_split == (3, 3)
        assert abs(cert.observed_max - math.sqrt(3)) <= 1e-8

    def test_n7(self):
        cert = verify_fixed_order(7)
        assert cert.verdict == CONFIRMED
        assert cert.winning_split == (3, 4)
        assert abs(cert.observed_max - math.sqrt(5)) <= 1e-8

    def test_n8_split_maxima_increase(self):
        cert = verify_fixed_order(8, jobs=2)
        assert cert.verdict == CONFIRMED
        maxima = [c.observed_max for c in cert.per_split]
        assert maxima == sorted(maxima) and maxima[0] < maxima[1]

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            verify_fixed_order(5)


class TestSpotCheck:
    def test_small_space_no_violations(self):
        report = spot_check_random(3, 4, trials=400, seed=7)
        assert report.violations == 0
        assert report.trials == 400
        assert report.max_observed <= bound_fixed_sizes(3, 4) + 1e-8

    def test_zero_trials(self):
        report = spot_check_random(5, 5, trials=0, seed=1)
        assert report.violations == 0 and report.max_observed == 0.0

    def test_determinism(self):
        a = spot_check_random(4, 4, trials=100, seed=3)
        b = spot_check_random(4, 4, trials=100, seed=3)
        keys = ("violations", "resampled", "max_observed", "bound")
        assert {k: getattr(a, k) for k in keys} == {k: getattr(b, k) for k in keys}

    def test_beyond_exhaustive_budget(self):
        report = spot_check_random(5, 5, trials=50, seed=11)
        assert report.violations == 0


class TestStretch:
    def test_3_6_confirmed(self):
        cert = verify_fixed_sizes(3, 6, stretch=True, jobs=2)
        assert cert.verdict == CONFIRMED
        assert abs(cert.observed_max - 3.0) <= 1e-8
