from fractions import Fraction
import itertools

import pytest

import fpcomm


def brute_rank(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c] * inv
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def all_matrices(n, p):
    for entries in itertools.product(range(p), repeat=n * n):
        yield [list(entries[i * n:(i + 1) * n]) for i in range(n)]


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (2, 3)])
def test_census_matches_enumeration(n, p):
    counts = [0] * (n + 1)
    for m in all_matrices(n, p):
        counts[brute_rank(m, p)] += 1
        assert fpcomm.mat_rank(m, p) == brute_rank(m, p)
    assert [fpcomm.count_rank_matrices(n, p, r) for r in range(n + 1)] == counts
    assert fpcomm.rank_ratio_alpha(n, p) == Fraction(counts[n], counts[n - 1])


def test_big_counts_are_exact_ints():
    total = sum(fpcomm.count_rank_matrices(6, 5, r) for r in range(7))
    assert total == 5 ** 36


def test_theta_hat_matches_dft():
    n, p = 2, 2
    theta = [1.0 if brute_rank(m, p) == n else 0.0 for m in all_matrices(n, p)]
    hat = fpcomm.dft(theta, p, n * n)
    for idx, m in enumerate(all_matrices(n, p)):
        # all_matrices yields big-endian order; the library indexes entries little-endian.
        little = sum(v * p ** k for k, v in enumerate(e for row in m for e in row))
        assert abs(hat[little] - float(fpcomm.theta_hat(m, p))) < 1e-12
    assert fpcomm.theta_hat_l1(n, p) == sum(abs(Fraction(c.real).limit_denominator(1 << 20)) for c in hat)


def test_witness_bound_is_tight_at_n1():
    cert = fpcomm.rank_witness_bound(1, 2, Fraction(1, 4))
    assert Fraction(cert["bound"]) == Fraction(3, 4)
    assert fpcomm.rank_bound_constant(10, 2, 0.25) > 0.028
    assert fpcomm.rank_bound_constant(10, 3, 0.25) > 0.08


def test_uniformizing_reports():
    assert fpcomm.verify_uniformizing("ham", 4, k=1)["pass"]
    assert fpcomm.verify_uniformizing("rank", 2, p=2, family="rank-two-sided")["pass"]
    left = fpcomm.verify_uniformizing("rank", 2, p=2, family="rank-left")
    assert not left["pass"]
    assert Fraction(left["maxTVDeviationExact"]) == Fraction(2, 3)


def test_cli_round_trip_and_errors():
    code, doc = fpcomm.cli("verify", "census", "--n", 2, "--p", 3)
    assert code == 0 and doc["pass"] and doc["schemaVersion"] == 1
    code, _, _ = fpcomm.run_cli(["verify", "census", "--n", "2"])
    assert code == 2
    with pytest.raises(fpcomm.FpcommError):
        fpcomm.verify_uniformizing("no-such-problem", 2)
