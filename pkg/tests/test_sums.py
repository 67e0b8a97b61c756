import math

import pytest

from asymknuth.dims import dim_rectangle
from asymknuth.errors import SpecError
from asymknuth.sums import (
    LogReal,
    SumSpec,
    error_term,
    log_sum_exp,
    mixed_sum,
    mixed_sum_exact,
    rectangle_decomposition,
    s_beta,
    s_exact,
    s_power_exact,
)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_s_exact_examples():
    assert s_exact(2, 3) == 5
    assert s_exact(3, 4) == 23
    assert s_exact(3, 3) == 6
    for N in range(0, 10):
        assert s_exact(1, N) == 1
        assert s_exact(N or 1, N) == math.factorial(N)


def test_knuth_degeneration():
    for N in range(0, 31):
        assert s_exact(2, N) == catalan(N)
    for n in range(1, 12):
        assert error_term(2, n) == 0


def test_rectangle_decomposition_examples():
    assert rectangle_decomposition(2, 2) == 14
    assert rectangle_decomposition(3, 1) == 5
    for n in range(1, 5):
        assert rectangle_decomposition(1, n) == 1


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_proposition_identity(d, n):
    assert rectangle_decomposition(d, n) == dim_rectangle(d, 2 * n)
    assert s_exact(d, d * n) == dim_rectangle(d, 2 * n) + error_term(d, n)


def test_error_term_examples():
    assert error_term(3, 1) == 1
    assert s_exact(3, 3) - dim_rectangle(3, 2) == 1


@pytest.mark.parametrize("d", [3, 4, 5])
def test_error_term_positive(d):
    for n in range(1, 7):
        assert error_term(d, n) > 0


def test_logreal_arithmetic():
    a, b = LogReal.from_int(3), LogReal.from_int(5)
    assert float(a + b) == pytest.approx(8)
    assert float(a * b) == pytest.approx(15)
    assert (a + LogReal.zero()).log_value == a.log_value
    assert (a * LogReal.zero()).is_zero
    assert float(a ** 2) == pytest.approx(9)
    assert LogReal.from_int(0).is_zero


def test_log_sum_exp_is_stable():
    assert log_sum_exp([1000.0, 1000.0]) == pytest.approx(1000 + math.log(2))
    assert log_sum_exp([-1000.0, -1000.0]) == pytest.approx(-1000 + math.log(2))
    assert log_sum_exp([]) == -math.inf


def test_s_beta_examples():
    assert s_beta(3, 4, 2).log_value == pytest.approx(math.log(s_exact(3, 12)), abs=1e-9)
    for n in (1, 5, 30):
        assert s_beta(1, n, 1.7).log_value == pytest.approx(0.0, abs=1e-12)
    assert s_beta(2, 1, 4).log_value == pytest.approx(math.log(2), abs=1e-12)


@pytest.mark.parametrize("d,n", [(2, 300), (3, 200), (4, 40), (5, 20), (6, 10)])
def test_s_beta_two_matches_exact(d, n):
    assert abs(s_beta(d, n, 2).log_value - math.log(s_exact(d, d * n))) < 1e-9


@pytest.mark.parametrize("d,n,k", [(3, 10, 4), (4, 6, 6), (2, 20, 4)])
def test_even_beta_log_and_exact_agree(d, n, k):
    assert s_beta(d, n, k).log_value == pytest.approx(math.log(s_power_exact(d, d * n, k)), rel=1e-9)


def test_mixed_sum_examples():
    assert mixed_sum(3, 1, SumSpec(1, 2)).log_value == pytest.approx(math.log(5), abs=1e-9)
    assert mixed_sum(2, 1, SumSpec(0, 2)).log_value == pytest.approx(math.log(2), abs=1e-9)
    # alpha == beta drops the complement factor: a restricted beta-sum
    assert mixed_sum(3, 3, SumSpec(2, 2)).log_value == pytest.approx(
        math.log(mixed_sum_exact(3, 3, 2, 2)), abs=1e-9)


@pytest.mark.parametrize("d,n", [(2, 10), (3, 7), (4, 5), (5, 3)])
def test_mixed_sum_one_two_is_rectangle(d, n):
    assert mixed_sum(d, n, SumSpec(1, 2)).log_value == pytest.approx(
        math.log(dim_rectangle(d, 2 * n)), abs=1e-9)
    assert mixed_sum_exact(d, n, 1, 2) == dim_rectangle(d, 2 * n)


@pytest.mark.parametrize("alpha,beta", [(0.3, 1.0), (0.0, 2.0), (1.0, 4.0), (0.25, 0.5)])
@pytest.mark.parametrize("d,n", [(3, 6), (4, 4)])
def test_mixed_sum_complement_symmetry(alpha, beta, d, n):
    a = mixed_sum(d, n, SumSpec(alpha, beta)).log_value
    b = mixed_sum(d, n, SumSpec(beta - alpha, beta)).log_value
    assert abs(a - b) < 1e-12


def test_spec_errors():
    with pytest.raises(SpecError):
        SumSpec(3, 2)
    with pytest.raises(SpecError):
        SumSpec(0, 0)
    with pytest.raises(SpecError):
        mixed_sum(3, 2, (-1, 2))
    with pytest.raises(SpecError):
        s_beta(3, 2, 0)


def test_results_do_not_depend_on_workers():
    assert s_exact(4, 40, workers=2) == s_exact(4, 40)
    assert error_term(3, 10, workers=3) == error_term(3, 10)
    assert s_beta(3, 30, 1.5, workers=2).log_value == s_beta(3, 30, 1.5).log_value
    spec = SumSpec(0.5, 1.0)
    assert mixed_sum(3, 30, spec, workers=2).log_value == mixed_sum(3, 30, spec).log_value
