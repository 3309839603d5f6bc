from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omegalap.criterion import (
    CriterionQuery,
    InternalInconsistency,
    binomial_collapse,
    certificate,
    criterion_scan,
    dense_first_row_powers,
    diagonal_collapse_check,
    no_cancellation_check,
    reach_set,
)
from omegalap.graphs import FAMILIES, Ray, WeightScheme, distance
from omegalap.operators import (
    BandedOperator,
    QuasiadjacencyPair,
    affine_reduce,
    build_laplacian,
    power_entry,
)
from omegalap.scalars import GaussianRational

from oracles import as_pair, bfs_distance, dense_entry, first_row_powers, section

F = Fraction
ZERO, ONE = (F(0), F(0)), (F(1), F(0))


def pair_for(family="ray", weights="uniform", alpha=0, beta=1, field="rational"):
    g = FAMILIES[family]()
    _, pair = build_laplacian(g, WeightScheme(weights), field)
    return g, affine_reduce(alpha, beta, pair)


def oracle_reach(family, weights, n, k_max):
    N = k_max + n + 1 if family == "ray" else None
    M = section(family, weights, ZERO, ONE, N)
    reached = set(range(1, n + 1))
    # rows i <= n of M^k: permute row i to the top by symmetric relabeling is
    # unnecessary for n = 1
    assert n == 1
    for row in first_row_powers(M, k_max):
        reached.update(j + 1 for j, v in enumerate(row) if v != ZERO)
    return reached


# ---- reach sets ------------------------------------------------------------

def test_reach_set_pure_diagonal():
    diag = BandedOperator.diagonal(Ray(), lambda k: F(k, 3))
    for k_max in (1, 5, 20):
        assert reach_set(diag, 3, k_max) == {1, 2, 3}


@pytest.mark.parametrize("k_max, expected", [(4, set(range(1, 6))), (9, set(range(1, 11)))])
def test_reach_set_normalized_ray(k_max, expected):
    _, pair = pair_for("ray", "normalized")
    assert oracle_reach("ray", "normalized", 1, k_max) == expected
    assert reach_set(pair, 1, k_max) == expected


def test_reach_set_counts_every_row_up_to_n():
    _, pair = pair_for("ray", "uniform")
    assert reach_set(pair, 3, 2) == set(range(1, 6))


def test_criterion_query():
    _, pair = pair_for("ray", "normalized")
    assert CriterionQuery(pair, 1, 3, 2).violated() is False
    assert CriterionQuery(pair, 1, 3, 3).violated() is True
    diag = BandedOperator.diagonal(Ray(), lambda k: 2)
    assert CriterionQuery(diag, 2, 2, 50).violated() is False
    with pytest.raises(ValueError):
        CriterionQuery(pair, 3, 2, 1)


# ---- certificates ----------------------------------------------------------

@pytest.mark.parametrize("weights, alpha, beta, m, l, k, value", [
    ("normalized", 0, 1, 3, 4, 3, F(-1, 4)),
    ("uniform", 0, 1, 3, 4, 3, F(-1)),
    ("normalized", 0, 1, 1, 2, 1, F(-1)),
])
def test_certificate_examples(weights, alpha, beta, m, l, k, value):
    g, pair = pair_for("ray", weights, alpha, beta)
    cert = certificate(g, pair, m)
    assert (cert.m, cert.l, cert.k, cert.value, cert.cross_check) == (m, l, k, value, value)
    assert as_pair(value) == dense_entry("ray", weights, ZERO, ONE, k, l)


def test_certificate_lambda_form_normalized_ray():
    # normalized weights: Laplacian = Id - B, i.e. lambda = 1
    g, pair = pair_for("ray", "normalized")
    assert all(pair.diagonal_entry(k) == 1 for k in range(1, 10))
    assert certificate(g, pair, 3).value == F(-1, 4)


class MixedSigns(QuasiadjacencyPair):
    """Ray 'quasiadjacency' with b_{3,2} = -1, violating the sign ray."""

    @property
    def B(self):
        def row(k):
            return [(w, F(-1) if (k, w) == (3, 2) else F(1)) for w in self.graph.neighbors(k)]
        return BandedOperator(self.graph, row, 1)


def mixed_signs():
    g = Ray()
    return MixedSigns(g, lambda k: 0, 1, lambda k: [(w, 1) for w in g.neighbors(k)])


def test_certificate_traps_inconsistent_operator():
    g = Ray()

    class Doubled(QuasiadjacencyPair):
        def operator(self):
            op = super().operator()
            return BandedOperator(g, lambda k: [(l, 2 * a) for l, a in op.row(k)], 1)

    doubled = Doubled(g, lambda k: 0, 1, lambda k: [(w, 1) for w in g.neighbors(k)])
    with pytest.raises(InternalInconsistency):
        certificate(g, doubled, 2)


def test_criterion_scan_normalized_ray_closed_form():
    g, pair = pair_for("ray", "normalized")
    rows = criterion_scan(g, pair, 1, range(1, 9))
    assert [(c.m, c.l, c.k) for c in rows] == [(m, m + 1, m) for m in range(1, 9)]
    assert [c.value for c in rows] == [F((-1) ** m, 2 ** (m - 1)) for m in range(1, 9)]
    for c in rows:
        assert as_pair(c.value) == dense_entry("ray", "normalized", ZERO, ONE, c.k, c.l)


@pytest.mark.parametrize("family, weights", [("line", "uniform"), ("binary_tree", "normalized")])
def test_criterion_scan_other_families(family, weights):
    g, pair = pair_for(family, weights)
    rows = criterion_scan(g, pair, 1, range(1, 9))
    for c in rows:
        assert c.value != 0
        assert c.k == bfs_distance(family, 1, c.l)
        assert as_pair(c.value) == dense_entry(family, weights, ZERO, ONE, c.k, c.l)


def test_criterion_scan_budget():
    g, pair = pair_for("ray")
    with pytest.raises(ValueError):
        criterion_scan(g, pair, 1, [5], k_max=3)


# ---- collapse identities -------------------------------------------------

def test_binomial_collapse_examples():
    _, pair = pair_for("ray", "normalized")
    assert binomial_collapse(1, pair, 4, 3) == [0, 0, 0, F(-1, 4)]
    terms = binomial_collapse(1, pair, 2, 3)
    assert terms[1] == -3 and terms[2] == 0
    # walks 2-1-2-1 and 2-3-2-1 give (B^3)_{1,2} = 1/2 + 1/4
    assert terms[3] == F(-3, 4)
    expected = dense_entry("ray", "normalized", ZERO, ONE, 3, 2, N=8)
    assert expected == (F(-15, 4), 0)
    assert sum(terms) == F(-15, 4)


def test_binomial_collapse_lambda_zero():
    _, pair = pair_for("binary_tree", "uniform")
    terms = binomial_collapse(0, pair, 4, 2)
    assert terms[:-1] == [0, 0]
    assert terms[-1] == power_entry(pair.B, 2, 1, 4)


@pytest.mark.parametrize("family, weights, l, k, both", [
    ("ray", "uniform", 4, 3, F(-1)),
    ("ray", "normalized", 5, 4, F(1, 8)),
    ("binary_tree", "uniform", 4, 2, F(1)),
])
def test_diagonal_collapse_examples(family, weights, l, k, both):
    _, pair = pair_for(family, weights)
    assert diagonal_collapse_check(pair, l, k)
    assert power_entry(pair, k, 1, l) == both
    assert as_pair(both) == dense_entry(family, weights, ZERO, ONE, k, l, N=8)


def test_no_cancellation_examples():
    _, normalized = pair_for("ray", "normalized")
    _, uniform = pair_for("ray", "uniform")
    assert power_entry(normalized.B, 2, 1, 2) == 0
    assert no_cancellation_check(normalized, 1, 2, 2)
    assert power_entry(uniform.B, 2, 1, 1) == 1
    assert no_cancellation_check(uniform, 1, 1, 2)
    scaled = affine_reduce(0, -3, normalized)
    assert scaled.sign == F(-1, 3)
    assert power_entry(scaled.B, 3, 1, 4) == F(-27, 4)
    assert no_cancellation_check(scaled, 1, 4, 3)


def test_no_cancellation_detects_sign_violation():
    bad = mixed_signs()
    # walks 2-1-2 and 2-3-2 cancel: 1*1 + 1*(-1)
    assert power_entry(bad.B, 2, 2, 2) == 0
    assert not no_cancellation_check(bad, 2, 2, 2)
    assert not no_cancellation_check(bad, 3, 2, 1)
    assert no_cancellation_check(bad, 1, 2, 1)


# ---- properties ------------------------------------------------------------

@pytest.mark.parametrize("family", list(FAMILIES))
@pytest.mark.parametrize("weights", ["uniform", "normalized"])
def test_vanishing_below_distance(family, weights):
    g, pair = pair_for(family, weights)
    for l in range(2, 13):
        d = distance(g, 1, l, 50)
        assert all(power_entry(pair.B, j, 1, l) == 0 for j in range(d))
        assert power_entry(pair.B, d, 1, l) != 0


@pytest.mark.parametrize("family", list(FAMILIES))
@pytest.mark.parametrize("alpha, beta", [(0, 1), (2, -3), (F(1, 2), F(1, 3))])
def test_sign_ray_of_powers(family, alpha, beta):
    _, pair = pair_for(family, "normalized", alpha, beta)
    for i in range(1, 5):
        for l in range(1, 9):
            for k in range(0, 9):
                assert no_cancellation_check(pair, i, l, k)


def test_sign_ray_of_powers_gaussian():
    i = GaussianRational(0, 1)
    _, pair = pair_for("grid2d", "uniform", i, 1 + i, "gaussian")
    for l in range(1, 10):
        for k in range(0, 6):
            assert no_cancellation_check(pair, 1, l, k)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["ray", "binary_tree", "grid2d"]),
       st.sampled_from([F(0), F(1), F(-2), F(3, 2)]),
       st.integers(2, 10), st.integers(1, 8))
def test_binomial_identity(family, lam, l, k):
    g = FAMILIES[family]()
    _, lap = build_laplacian(g, WeightScheme("normalized"))
    # lambda Id - B
    op = QuasiadjacencyPair(g, lambda v: lam, lap.sign, lap.magnitudes)
    assert sum(binomial_collapse(lam, op, l, k)) == power_entry(op, k, 1, l)


def test_binomial_identity_complex_lambda():
    g = Ray()
    _, lap = build_laplacian(g, WeightScheme("uniform"), "gaussian")
    lam = GaussianRational(0, 1)
    op = QuasiadjacencyPair(g, lambda v: lam, lap.sign, lap.magnitudes, "gaussian")
    for l in range(2, 11):
        for k in range(1, 9):
            assert sum(binomial_collapse(lam, op, l, k), GaussianRational(0)) == power_entry(op, k, 1, l)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(FAMILIES)), st.sampled_from(["uniform", "normalized"]),
       st.integers(2, 30))
def test_diagonal_collapse_property(family, weights, l):
    g, pair = pair_for(family, weights, F(5, 7), F(-2))
    k = distance(g, 1, l, 100)
    assert diagonal_collapse_check(pair, l, k)


@pytest.mark.parametrize("family", list(FAMILIES))
def test_reach_grows_with_budget(family):
    _, pair = pair_for(family, "uniform")
    sizes = [len(reach_set(pair, 1, k)) for k in (1, 2, 4, 8, 16)]
    assert all(a < b for a, b in zip(sizes, sizes[1:]))


def test_dense_first_row_powers_matches_flint():
    _, pair = pair_for("caterpillar", "normalized", 2, -3)
    ours = dense_first_row_powers(pair, 12, 5)
    ref = first_row_powers(section("caterpillar", "normalized", (F(2), 0), (F(-3), 0), 12), 5)
    assert [[as_pair(v) for v in row] for row in ours] == ref
