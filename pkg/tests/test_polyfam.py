"""Family evaluators against hand expansions, recurrences, alternate
series forms, and their weight/norm closed forms."""

import itertools
import math
from random import Random

import pytest

from qsk.errors import IllConditioned, PreconditionViolation, ZeroParameter
from qsk.polyfam import (
    AWParams,
    FamilyId,
    LqLParams,
    QBase,
    QLagParams,
    UltraParams,
    askey_wilson,
    askey_wilson_phi43,
    askey_wilson_sequence,
    aw_norm,
    aw_weight,
    cont_q_ultra,
    cont_q_ultra_sequence,
    little_q_laguerre,
    little_q_laguerre_phi20,
    little_q_laguerre_phi21,
    lql_norm,
    q_laguerre,
    q_laguerre_phi21,
    qlag_bilateral_norm,
    qlag_continuous_norm,
    qlag_jackson_norm,
    qlag_weight,
    ultra_norm,
    ultra_weight,
)
from qsk.qpoch import poch_finite, poch_infinite


B5 = QBase(0.5)


def test_param_validation():
    with pytest.raises(PreconditionViolation):
        UltraParams(0.0, B5)
    with pytest.raises(PreconditionViolation):
        UltraParams(1.2, B5)
    with pytest.raises(PreconditionViolation):
        LqLParams(2.5, B5)  # aq = 1.25 >= 1
    with pytest.raises(PreconditionViolation):
        QLagParams(-1.0, B5)
    AWParams(1.5, 0.2, 0.1, -0.3, B5)  # bare evaluation allows |a| >= 1


def test_all_families_are_one_at_degree_zero():
    assert askey_wilson(0, 0.3, AWParams(0.3, 0.2, 0.1, 0.05, B5)) == 1.0
    assert cont_q_ultra(0, -0.4, UltraParams(0.5, B5)) == 1.0
    assert little_q_laguerre(0, 0.7, LqLParams(0.5, B5)) == 1.0
    assert q_laguerre(0, 1.3, QLagParams(0.5, B5)) == 1.0


# --- Askey-Wilson ----------------------------------------------------------


def brute_aw_n1(x, a, b, c, d, q):
    """Two-term expansion of the defining series at n = 1."""
    th = math.acos(x)
    e = complex(math.cos(th), math.sin(th))
    k1 = (
        (1 - q**-1)
        * (1 - a * b * c * d)
        * (1 - a * e)
        * (1 - a / e)
        / ((1 - q) * (1 - a * b) * (1 - a * c) * (1 - a * d))
        * q
    )
    return (1 + k1) * (1 - a * b) * (1 - a * c) * (1 - a * d) / a


def test_aw_n1_hand_expansion():
    for x in (-0.7, 0.0, 0.42, 1.0):
        got = askey_wilson(1, x, AWParams(0.3, 0.3, 0.3, 0.3, B5))
        want = brute_aw_n1(x, 0.3, 0.3, 0.3, 0.3, 0.5)
        assert got.real == pytest.approx(want.real, rel=1e-12)
        assert abs(got.imag) < 1e-12


def test_aw_recurrence_matches_definition_for_small_n():
    """The balanced-series form loses about n(n-1)/2 * log10(1/q) digits
    to cancellation, so the cross-check tolerance widens with degree."""
    rng = Random(3)
    for _ in range(25):
        q = rng.uniform(0.3, 0.8)
        ps = AWParams(*(rng.uniform(-0.6, 0.6) or 0.3 for _ in range(4)), QBase(q))
        if abs(ps.a) < 0.05:
            continue
        x = math.cos(rng.uniform(0.2, 2.9))
        for n in range(6):
            stable = askey_wilson(n, x, ps)
            defn = askey_wilson_phi43(n, x, ps)
            noise = 1e-13 * q ** (-n * (n - 1) / 2.0) / abs(ps.a) ** n
            assert abs(stable - defn) <= max(1e-12, noise) * (1.0 + abs(defn))


def test_aw_parameter_permutation_invariance():
    rng = Random(4)
    for _ in range(50):
        q = rng.uniform(0.3, 0.8)
        vals = [rng.choice((-1, 1)) * rng.uniform(0.05, 0.6) for _ in range(4)]
        x = math.cos(rng.uniform(0.2, 2.9))
        n = rng.randint(0, 6)
        ref = askey_wilson(n, x, AWParams(*vals, QBase(q)))
        for perm in itertools.permutations(vals):
            v = askey_wilson(n, x, AWParams(*perm, QBase(q)))
            assert abs(v - ref) <= 1e-10 * (1.0 + abs(ref))


def test_aw_real_for_conjugate_pairs():
    p = AWParams(0.3 + 0.2j, 0.3 - 0.2j, 0.4, -0.2, B5)
    for n in (1, 3, 5):
        v = askey_wilson(n, 0.37, p)
        assert abs(v.imag) < 1e-10 * (1.0 + abs(v))


def test_aw_zero_parameter():
    with pytest.raises(ZeroParameter):
        askey_wilson(2, 0.3, AWParams(0.0, 0.2, 0.1, 0.05, B5))
    with pytest.raises(PreconditionViolation):
        askey_wilson(2, 1.5, AWParams(0.3, 0.2, 0.1, 0.05, B5))


# --- continuous q-ultraspherical -------------------------------------------


def test_cqu_n1_closed_form():
    # C_1 = 2x(1-beta)/(1-q)
    assert cont_q_ultra(1, 1.0, UltraParams(0.5, B5)) == pytest.approx(2.0)
    for x, beta, q in ((0.3, 0.4, 0.5), (-0.8, -0.6, 0.3), (0.05, 0.9, 0.7)):
        got = cont_q_ultra(1, x, UltraParams(beta, QBase(q)))
        assert got == pytest.approx(2 * x * (1 - beta) / (1 - q), rel=1e-13)


def test_cqu_definition_matches_recurrence():
    rng = Random(6)
    for _ in range(30):
        q = rng.uniform(0.25, 0.85)
        beta = rng.choice((-1, 1)) * rng.uniform(0.05, 0.9)
        x = math.cos(rng.uniform(0.1, 3.0))
        p = UltraParams(beta, QBase(q))
        seq = cont_q_ultra_sequence(12, x, p)
        for n in range(13):
            assert cont_q_ultra(n, x, p) == pytest.approx(
                seq[n], rel=1e-11, abs=1e-11
            )


def test_cqu_large_degree_switchover_is_continuous():
    p = UltraParams(0.4, B5)
    seq = cont_q_ultra_sequence(40, 0.3, p)
    for n in (29, 30, 31, 35, 40):
        assert cont_q_ultra(n, 0.3, p) == pytest.approx(seq[n], rel=1e-10, abs=1e-12)


# --- little q-Laguerre -----------------------------------------------------


def test_lql_n1_closed_form():
    # p_1 = 1 - x/(1-aq)
    p = LqLParams(0.5, B5)
    assert little_q_laguerre(1, 0.5, p) == pytest.approx(1.0 / 3.0, rel=1e-13)
    for x in (0.1, 0.25, 1.0):
        assert little_q_laguerre(1, x, p) == pytest.approx(1 - x / 0.75, rel=1e-12)


def test_lql_at_zero_is_one():
    p = LqLParams(0.8, B5)
    for n in range(9):
        assert little_q_laguerre(n, 0.0, p) == pytest.approx(1.0, rel=1e-12)


def test_lql_form_agreement():
    """2phi1 and 2phi0 forms agree where the 2phi1 sum is well conditioned
    (small degree or small x)."""
    rng = Random(7)
    for _ in range(40):
        q = rng.uniform(0.3, 0.8)
        a = rng.uniform(0.1, 0.9 / q)
        p = LqLParams(a, QBase(q))
        n = rng.randint(1, 6)
        x = rng.uniform(0.01, 1.0)
        v21 = little_q_laguerre_phi21(n, x, p)
        v20 = little_q_laguerre_phi20(n, x, p)
        assert abs(v21 - v20) <= 1e-10 * (1.0 + abs(v21))


def test_lql_exact_at_lattice_top():
    # p_n(1; a | q) = 1/(q^-n / a; q)_n, a single surviving term
    q = 0.5
    p = LqLParams(0.5, B5)
    for n in (2, 5, 9, 14):
        exact = (1.0 / poch_finite(q**-n / 0.5, q, n)).real
        assert little_q_laguerre(n, 1.0, p) == pytest.approx(exact, rel=1e-12)


# --- q-Laguerre ------------------------------------------------------------


def test_qlag_n1_closed_form():
    # L_1 = (1 - q^(alpha+1) - q^(alpha+1) x)/(1-q)
    assert q_laguerre(1, 1.0, QLagParams(0.0, B5)) == pytest.approx(0.0, abs=1e-14)
    for alpha, x, q in ((0.5, 0.3, 0.5), (2.0, 1.7, 0.3), (-0.5, 0.9, 0.7)):
        got = q_laguerre(1, x, QLagParams(alpha, QBase(q)))
        want = (1 - q ** (alpha + 1) - q ** (alpha + 1) * x) / (1 - q)
        assert got == pytest.approx(want, rel=1e-12)


def test_qlag_at_zero():
    # L_n(0) = (q^(alpha+1); q)_n / (q; q)_n
    q = 0.5
    p = QLagParams(0.75, B5)
    for n in range(8):
        want = (poch_finite(q**1.75, q, n) / poch_finite(q, q, n)).real
        assert q_laguerre(n, 0.0, p) == pytest.approx(want, rel=1e-12)


def test_qlag_form_agreement():
    rng = Random(8)
    for _ in range(40):
        q = rng.uniform(0.3, 0.8)
        p = QLagParams(rng.uniform(-0.75, 2.5), QBase(q))
        n = rng.randint(0, 8)
        x = rng.uniform(0.0, 3.0)
        v11 = q_laguerre(n, x, p)
        v21 = q_laguerre_phi21(n, x, p)
        assert abs(v11 - v21) <= 1e-10 * (1.0 + abs(v11))


# --- degree property --------------------------------------------------------


@pytest.mark.parametrize(
    "family,n",
    [(FamilyId.ASKEY_WILSON, 4), (FamilyId.CONT_Q_ULTRA, 5),
     (FamilyId.LITTLE_Q_LAGUERRE, 4), (FamilyId.Q_LAGUERRE, 5)],
)
def test_degree_property(family, n):
    """Finite differences of order n+1 in x annihilate the polynomial."""
    q = 0.5
    if family is FamilyId.ASKEY_WILSON:
        p = AWParams(0.3, 0.2, 0.1, 0.05, B5)
        f = lambda x: askey_wilson(n, x, p).real
        x0, h = -0.6, 0.17
    elif family is FamilyId.CONT_Q_ULTRA:
        p = UltraParams(0.4, B5)
        f = lambda x: cont_q_ultra(n, x, p)
        x0, h = -0.6, 0.17
    elif family is FamilyId.LITTLE_Q_LAGUERRE:
        p = LqLParams(0.5, B5)
        f = lambda x: little_q_laguerre(n, x, p)
        x0, h = 0.05, 0.11
    else:
        p = QLagParams(0.5, B5)
        f = lambda x: q_laguerre(n, x, p)
        x0, h = 0.1, 0.3
    vals = [f(x0 + i * h) for i in range(n + 2)]
    diff = sum((-1) ** i * math.comb(n + 1, i) * v for i, v in enumerate(vals))
    assert abs(diff) <= 1e-8 * (1.0 + max(abs(v) for v in vals))


# --- weights ----------------------------------------------------------------


def test_aw_weight_against_long_products():
    q = 0.5
    p = AWParams(0.3, 0.2, 0.1, 0.05, B5)
    x = 0.0
    th = math.acos(x)
    e = complex(math.cos(th), math.sin(th))

    def long_prod(u, nfac=200):
        out = 1.0 + 0.0j
        for j in range(nfac):
            out *= 1.0 - u * q**j
        return out

    want = abs(long_prod(e * e) / (
        long_prod(0.3 * e) * long_prod(0.2 * e) * long_prod(0.1 * e)
        * long_prod(0.05 * e))) ** 2
    assert aw_weight(x, p) == pytest.approx(want, rel=1e-12)
    # endpoint behavior and positivity
    assert aw_weight(1.0, p) == 0.0
    assert aw_weight(-1.0, p) == 0.0
    for xx in (-0.9, -0.3, 0.4, 0.77):
        assert aw_weight(xx, p) > 0.0


def test_aw_weight_trivial_denominator():
    p = AWParams(0.0, 0.0, 0.0, 0.0, B5)
    x = 0.35
    th = math.acos(x)
    e2 = complex(math.cos(2 * th), math.sin(2 * th))
    assert aw_weight(x, p) == pytest.approx(abs(poch_infinite(e2, B5)) ** 2,
                                            rel=1e-12)


def test_ultra_weight():
    q = 0.5
    p = UltraParams(0.4, B5)
    x = 0.5
    th = math.acos(x)
    e2 = complex(math.cos(2 * th), math.sin(2 * th))

    def long_prod(u, nfac=200):
        out = 1.0 + 0.0j
        for j in range(nfac):
            out *= 1.0 - u * q**j
        return out

    assert ultra_weight(x, p) == pytest.approx(
        abs(long_prod(e2) / long_prod(0.4 * e2)) ** 2, rel=1e-11
    )
    for xx in (-0.95, -0.2, 0.66):
        assert ultra_weight(xx, p) >= 0.0
    assert ultra_weight(1.0, p) == 0.0


def test_qlag_weight():
    p = QLagParams(0.5, B5)
    x = 1.7
    want = x**0.5 / poch_infinite(-x, B5).real
    assert qlag_weight(x, p) == pytest.approx(want, rel=1e-13)
    with pytest.raises(PreconditionViolation):
        qlag_weight(0.0, p)


# --- norm constants ----------------------------------------------------------


def test_aw_norm_h0():
    q = 0.5
    a, b, c, d = 0.3, 0.2, 0.1, 0.05
    p = AWParams(a, b, c, d, B5)
    abcd = a * b * c * d
    want = poch_infinite(abcd, q).real
    for u in (q, a * b, a * c, a * d, b * c, b * d, c * d):
        want /= poch_infinite(u, q).real
    assert aw_norm(0, p) == pytest.approx(want, rel=1e-12)


def test_ultra_norm_n0():
    q, beta = 0.5, 0.4
    p = UltraParams(beta, B5)
    want = (
        2.0 * math.pi
        * poch_infinite(beta, q).real * poch_infinite(q * beta, q).real
        / (poch_infinite(beta * beta, q).real * poch_infinite(q, q).real)
    )
    assert ultra_norm(0, p) == pytest.approx(want, rel=1e-12)


def test_lql_norm_n0():
    p = LqLParams(0.5, B5)
    assert lql_norm(0, p) == pytest.approx(1.0 / poch_infinite(0.25, 0.5).real,
                                           rel=1e-13)


def test_qlag_continuous_norm_branches():
    q = 0.5
    # integer branch at alpha = 2
    p_int = QLagParams(2.0, B5)
    val_int = qlag_continuous_norm(1, p_int)
    assert val_int > 0.0
    # continuity: alpha = 2 +- 1e-5 brackets the integer value
    lo = qlag_continuous_norm(1, QLagParams(2.0 - 1e-5, B5))
    hi = qlag_continuous_norm(1, QLagParams(2.0 + 1e-5, B5))
    assert min(lo, hi) <= val_int * (1 + 1e-4) and val_int * (1 - 1e-4) <= max(lo, hi)
    assert lo == pytest.approx(val_int, rel=1e-4)
    assert hi == pytest.approx(val_int, rel=1e-4)
    # the ill-conditioned guard band
    with pytest.raises(IllConditioned):
        qlag_continuous_norm(1, QLagParams(2.0 + 1e-9, B5))
    # generic sine branch is positive
    assert qlag_continuous_norm(0, QLagParams(0.5, B5)) > 0.0
    assert qlag_continuous_norm(0, QLagParams(-0.5, B5)) > 0.0


def test_qlag_discrete_norms_positive():
    p = QLagParams(0.5, B5)
    for n in range(4):
        assert qlag_bilateral_norm(n, p, 1.3) > 0.0
        assert qlag_jackson_norm(n, p) > 0.0
    with pytest.raises(PreconditionViolation):
        qlag_bilateral_norm(0, p, -1.0)
