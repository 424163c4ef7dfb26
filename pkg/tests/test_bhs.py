"""Series evaluator against direct term-by-term summation, termination
detection, the stopping rule, and the q-binomial theorem."""

import math
from random import Random

import pytest

from qsk.bhs import SeriesSpec, check_qbinomial, default_max_terms, eval_phi
from qsk.errors import DivergentSeries, NoConvergence, ZeroDenominator
from qsk.qpoch import QBase, poch_finite, poch_infinite


def direct_phi(num, den, q, z, kmax):
    """Term-by-term evaluation straight from the defining sum, with the
    ((-1)^k q^C(k,2))^(1+s-r) factor formed explicitly."""
    e = 1 + len(den) - len(num)
    total = 0.0 + 0.0j
    for k in range(kmax + 1):
        term = z**k
        for a in num:
            term *= poch_finite(a, q, k)
        term /= poch_finite(q, q, k)
        for b in den:
            term /= poch_finite(b, q, k)
        term *= ((-1.0) ** k * q ** math.comb(k, 2)) ** e
        total += term
    return total


def test_qbinomial_collapse_at_a_equals_q():
    # 1phi0(q; -; q, z) = (qz; q)_inf / (z; q)_inf = 1/(1-z)
    res = eval_phi(SeriesSpec((0.5,), (), 0.3, QBase(0.5)))
    assert res.value.real == pytest.approx(1.0 / 0.7, rel=1e-13)
    assert not res.terminated


def test_zero_argument_gives_one():
    for num, den in [((0.3,), (0.7,)), ((), (0.4,)), ((0.2, 0.5), (0.6,))]:
        res = eval_phi(SeriesSpec(num, den, 0.0, QBase(0.5)))
        assert res.value == 1.0


def test_terminating_three_term_sum():
    q = 0.5
    spec = SeriesSpec((q**-2, 0.3), (0.7,), 0.5, QBase(q))
    res = eval_phi(spec)
    assert res.terminated and res.terms_used == 3
    assert res.value == pytest.approx(direct_phi((q**-2, 0.3), (0.7,), q, 0.5, 2),
                                      rel=1e-13)


def test_termination_at_unit_parameter():
    res = eval_phi(SeriesSpec((1.0, 0.3), (0.7,), 0.5, QBase(0.5)))
    assert res.terminated and res.terms_used == 1 and res.value == 1.0


def test_sign_convention_against_direct_sum():
    """For r = s the k-th term carries (-1)^k q^C(k,2); checked against
    the explicit definition on random specs, including r < s and r > s
    terminating cases."""
    rng = Random(77)
    for _ in range(20):
        q = rng.uniform(0.3, 0.8)
        shape = rng.choice([(1, 1), (2, 2), (0, 1), (0, 2), (2, 0), (1, 2)])
        r, s = shape
        n = rng.randint(1, 6)
        num = [q**-n] if r else []
        num += [complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.3, 0.3))
                for _ in range(max(0, r - 1))]
        den = [complex(rng.uniform(0.1, 0.8)) for _ in range(s)]
        z = complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.3, 0.3))
        if r == 0:
            # non-terminating is fine for r <= s
            spec = SeriesSpec((), tuple(den), z, QBase(q))
            res = eval_phi(spec)
            ref = direct_phi((), den, q, z, res.terms_used + 40)
        else:
            spec = SeriesSpec(tuple(num), tuple(den), z, QBase(q))
            res = eval_phi(spec)
            ref = direct_phi(num, den, q, z, n)
        assert res.value == pytest.approx(ref, rel=1e-11, abs=1e-13)


def test_terminating_series_is_polynomial_in_z():
    """Finite differences of order n+1 in z annihilate the value."""
    q = 0.5
    n = 4
    h = 0.21

    def f(z):
        return eval_phi(SeriesSpec((q**-n, 0.4), (0.3,), z, QBase(q))).value

    diff = sum((-1) ** i * math.comb(n + 1, i) * f(0.05 + i * h)
               for i in range(n + 2))
    scale = max(abs(f(0.05 + i * h)) for i in range(n + 2))
    assert abs(diff) <= 1e-9 * (1.0 + scale)


def test_divergence_rejection():
    with pytest.raises(DivergentSeries):
        eval_phi(SeriesSpec((0.3, 0.4), (), 0.2, QBase(0.5)))  # 2phi0
    with pytest.raises(DivergentSeries):
        eval_phi(SeriesSpec((0.3, 0.4), (0.2,), 1.1, QBase(0.5)))  # |z| >= 1


def test_zero_denominator_detection():
    # denominator parameter q^-1 zeroes the k = 1 ratio factor
    with pytest.raises(ZeroDenominator):
        eval_phi(SeriesSpec((0.3,), (2.0,), 0.5, QBase(0.5)))


def test_no_convergence_cap():
    with pytest.raises(NoConvergence):
        eval_phi(SeriesSpec((0.9,), (0.3,), 0.99, QBase(0.9)), max_terms=8)


def test_monotone_tail_stopping():
    """Non-terminating 2phi1 with 0 < z < 1: term ratio tends to z, so the
    stopping rule fires and the tail estimate matches the truncation."""
    q = 0.6
    spec = SeriesSpec((0.5, 0.25), (0.4,), 0.7, QBase(q))
    res = eval_phi(spec, tol=1e-14)
    long = direct_phi((0.5, 0.25), (0.4,), q, 0.7, res.terms_used + 200)
    assert res.value == pytest.approx(long, rel=1e-12)
    assert res.last_term_magnitude < 1e-12 * abs(res.value)


def test_qbinomial_residuals():
    assert check_qbinomial(0.0, 0.5, 0.5) < 1e-12
    assert check_qbinomial(0.3, 0.6, 0.4) < 1e-11
    # a = q^3: right side telescopes to 1/(z; q)_3
    q = 0.5
    res = check_qbinomial(q**3, 0.2, q)
    assert res < 1e-12
    rhs = poch_infinite(q**3 * 0.2, q) / poch_infinite(0.2, q)
    assert rhs == pytest.approx((1.0 / poch_finite(0.2, q, 3)).real, rel=1e-12)


def test_qbinomial_random_grid():
    rng = Random(5)
    for _ in range(60):
        q = rng.uniform(0.2, 0.8)
        a = complex(rng.uniform(-1.2, 1.2), rng.uniform(-0.5, 0.5))
        z = complex(rng.uniform(-0.85, 0.85), 0.0)
        assert check_qbinomial(a, z, q) < 1e-10


def test_max_terms_env_override(monkeypatch):
    monkeypatch.setenv("QSK_MAX_TERMS", "123")
    assert default_max_terms() == 123
    monkeypatch.delenv("QSK_MAX_TERMS")
    assert default_max_terms() == 10000
