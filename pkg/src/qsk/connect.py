"""Connection coefficients with one free parameter for the four families,
plus pointwise verification of the resulting expansions.

Each operation expands a degree-n polynomial with source parameters as a
finite combination of the same family with one parameter replaced:

* Askey-Wilson:      p_n(x; a,b,c,d)   = sum_k  c_k p_k(x; alpha,b,c,d)
* q-ultraspherical:  C_n(x; beta)      = sum_k  c_k C_(n-2k)(x; gamma)
* little q-Laguerre: p_n(x; a)         = sum_j  c_j p_j(x; b)
* q-Laguerre:        L_n^(alpha)       = sum_j  c_j L_j^(beta)

Coefficients mixing large q^(+-binom) power factors with large-argument
Pochhammer symbols are assembled through a renormalizing product that
shifts magnitude into a running q-exponent, so intermediates stay inside
double range well past n = 20.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateDenominator, PreconditionViolation
from .polyfam import (
    AWParams,
    FamilyId,
    LqLParams,
    QLagParams,
    UltraParams,
    family_eval,
)
from .qpoch import QBase, QLike, as_base, poch_finite

_RENORM_HI = 1e80
_RENORM_LO = 1e-80


@dataclass(frozen=True)
class ConnectionExpansion:
    """Expansion of one polynomial over the same family with a shifted
    parameter.  ``coefficients`` holds (target degree, value) pairs; for
    the q-ultraspherical family the degrees are n, n-2, n-4, ...
    (parity preserving), for the other families 0..n."""

    family: FamilyId
    n: int
    source_params: object
    target_params: object
    coefficients: tuple[tuple[int, complex], ...]

    def coefficient(self, degree: int) -> complex:
        for k, v in self.coefficients:
            if k == degree:
                return v
        return complex(0.0)


def _renorm_product(q: float, qpower: float, factors: Iterable[complex]) -> complex:
    """q**qpower times the product of ``factors`` with magnitude shifted
    into the exponent whenever the mantissa leaves [1e-80, 1e80]."""
    lnq = math.log(q)
    mant = complex(1.0)
    power = float(qpower)
    for f in factors:
        mant *= f
        m = abs(mant)
        if m > _RENORM_HI or (0.0 < m < _RENORM_LO):
            shift = round(math.log(m) / lnq)
            mant *= math.exp(-shift * lnq)
            power += shift
    arg = power * lnq
    if arg > 700.0:
        return complex(0.0)  # q**power underflows; the coefficient is negligible
    if arg < -700.0:
        raise OverflowError("connection coefficient overflows double range")
    return mant * math.exp(arg)


def aw_connection(
    n: int,
    a: complex,
    b: complex,
    c: complex,
    d: complex,
    alpha: complex,
    q: QLike,
) -> ConnectionExpansion:
    """Askey-Wilson coefficients

    c_k = alpha^(n-k) (a/alpha; q)_(n-k) (abcd q^(n-1); q)_k
          (q, bc, bd, cd; q)_n
          / ((q, bc, bd, cd, alpha*bcd q^(k-1); q)_k
             (q, alpha*bcd q^(2k); q)_(n-k)),  k = 0..n.
    """
    qv = as_base(q)
    if n < 0:
        raise PreconditionViolation("n must be >= 0")
    if abs(alpha) == 0.0:
        raise PreconditionViolation("free parameter alpha must be nonzero")
    a, b, c, d, alpha = (complex(v) for v in (a, b, c, d, alpha))
    bcd = b * c * d
    abcd = a * bcd
    shared = poch_finite(qv, qv, n) * poch_finite(b * c, qv, n) * poch_finite(
        b * d, qv, n
    ) * poch_finite(c * d, qv, n)
    coeffs = []
    for k in range(n + 1):
        num = (
            alpha ** (n - k)
            * poch_finite(a / alpha, qv, n - k)
            * poch_finite(abcd * qv ** (n - 1), qv, k)
            * shared
        )
        den = (
            poch_finite(qv, qv, k)
            * poch_finite(b * c, qv, k)
            * poch_finite(b * d, qv, k)
            * poch_finite(c * d, qv, k)
            * poch_finite(alpha * bcd * qv ** (k - 1), qv, k)
            * poch_finite(qv, qv, n - k)
            * poch_finite(alpha * bcd * qv ** (2 * k), qv, n - k)
        )
        if abs(den) < 1e-280:
            raise DegenerateDenominator(
                f"vanishing denominator Pochhammer at k={k}"
            )
        coeffs.append((k, num / den))
    base = QBase(qv)
    return ConnectionExpansion(
        FamilyId.ASKEY_WILSON,
        n,
        AWParams(a, b, c, d, base),
        AWParams(alpha, b, c, d, base),
        tuple(coeffs),
    )


def ultra_connection(n: int, beta: float, gamma: float, q: QLike) -> ConnectionExpansion:
    """q-ultraspherical coefficients: the multiplier of C_(n-2k)(x; gamma) is

        (1 - gamma q^(n-2k)) gamma^k (beta/gamma; q)_k (beta; q)_(n-k)
        / ((1 - gamma) (q; q)_k (q gamma; q)_(n-k)),  k = 0..floor(n/2).
    """
    qv = as_base(q)
    if n < 0:
        raise PreconditionViolation("n must be >= 0")
    base = QBase(qv)
    src = UltraParams(beta, base)
    tgt = UltraParams(gamma, base)
    coeffs = []
    for k in range(n // 2 + 1):
        val = (
            (1.0 - gamma * qv ** (n - 2 * k))
            * gamma**k
            * poch_finite(beta / gamma, qv, k)
            * poch_finite(beta, qv, n - k)
            / (
                (1.0 - gamma)
                * poch_finite(qv, qv, k)
                * poch_finite(qv * gamma, qv, n - k)
            )
        )
        coeffs.append((n - 2 * k, val))
    return ConnectionExpansion(FamilyId.CONT_Q_ULTRA, n, src, tgt, tuple(coeffs))


def lql_connection(n: int, a: float, b: float, q: QLike) -> ConnectionExpansion:
    """Little q-Laguerre coefficients: the multiplier of p_j(x; b) is

        q^(-C(n,2) + C(j,2) + n(n-j)) (-a)^(n-j)
        (q^(n-j+1), qb; q)_j (b q^(1+j-n) / a; q)_(n-j)
        / ((qa; q)_n (q; q)_j).

    The net q-power C(n-j+1, 2) is folded into the large-argument
    Pochhammer factor by factor: each paired term is q^m - bq/a, m = 1..n-j,
    so no intermediate ever leaves double range.
    """
    qv = as_base(q)
    if n < 0:
        raise PreconditionViolation("n must be >= 0")
    base = QBase(qv)
    src = LqLParams(a, base)
    tgt = LqLParams(b, base)
    den_n = poch_finite(qv * a, qv, n).real
    if abs(den_n) < 1e-280:
        raise DegenerateDenominator("(qa; q)_n vanishes")
    ratio = b * qv / a
    coeffs = []
    for j in range(n + 1):
        paired = 1.0
        for m in range(1, n - j + 1):
            paired *= qv**m - ratio
        val = (
            (-a) ** (n - j)
            * poch_finite(qv ** (n - j + 1), qv, j).real
            * poch_finite(qv * b, qv, j).real
            * paired
            / (den_n * poch_finite(qv, qv, j).real)
        )
        coeffs.append((j, complex(val)))
    return ConnectionExpansion(FamilyId.LITTLE_Q_LAGUERRE, n, src, tgt, tuple(coeffs))


def qlag_connection(n: int, alpha: float, beta: float, q: QLike) -> ConnectionExpansion:
    """q-Laguerre coefficients: the multiplier of L_j^(beta) is

        q^(n(alpha-beta)) (-1)^(n-j) q^C(n-j,2)
        (q^(n-j+1); q)_j (q^(j-n+beta-alpha+1); q)_(n-j) / (q; q)_n.
    """
    qv = as_base(q)
    if n < 0:
        raise PreconditionViolation("n must be >= 0")
    base = QBase(qv)
    src = QLagParams(alpha, base)
    tgt = QLagParams(beta, base)
    qq_n = poch_finite(qv, qv, n).real
    coeffs = []
    for j in range(n + 1):
        m = n - j
        v = j - n + beta - alpha + 1.0
        factors = [1.0 - qv ** (v + i) for i in range(m)]
        factors.append(poch_finite(qv ** (m + 1), qv, j).real / qq_n)
        val = (-1.0) ** m * _renorm_product(
            qv, n * (alpha - beta) + math.comb(m, 2), factors
        )
        coeffs.append((j, val))
    return ConnectionExpansion(FamilyId.Q_LAGUERRE, n, src, tgt, tuple(coeffs))


# ---------------------------------------------------------------------------
# pointwise verification
# ---------------------------------------------------------------------------


def sample_points(family: FamilyId, q: float, count: int = 20) -> list[float]:
    """Sample abscissas matched to each family's natural support:
    Chebyshev nodes on [-1, 1], the lattice q^k, or {0, q^k, q^-k}."""
    if family in (FamilyId.ASKEY_WILSON, FamilyId.CONT_Q_ULTRA):
        return [
            math.cos(math.pi * (2 * i + 1) / (2.0 * count)) for i in range(count)
        ]
    if family is FamilyId.LITTLE_Q_LAGUERRE:
        return [q**k for k in range(count)]
    pts = [0.0]
    k = 1
    while len(pts) < count:
        pts.append(q**k)
        if len(pts) < count:
            pts.append(q**-k)
        k += 1
    return pts[:count]


def expansion_residual(
    exp: ConnectionExpansion, points: Sequence[float] | None = None
) -> float:
    """Max over sample points of

        |sum_k c_k p_k(x; target) - p_n(x; source)| / (1 + max |p_n|).
    """
    q = _base_of(exp.source_params).q
    if points is None:
        points = sample_points(exp.family, q)
    worst = 0.0
    peak = 0.0
    for x in points:
        lhs = sum(
            v * family_eval(exp.family, deg, x, exp.target_params)
            for deg, v in exp.coefficients
        )
        rhs = family_eval(exp.family, exp.n, x, exp.source_params)
        worst = max(worst, abs(lhs - rhs))
        peak = max(peak, abs(rhs))
    return worst / (1.0 + peak)


def compose_ultra(
    first: ConnectionExpansion, second: ConnectionExpansion
) -> ConnectionExpansion:
    """Compose two q-ultraspherical expansions (beta -> gamma -> delta)."""
    if first.family is not FamilyId.CONT_Q_ULTRA or second.family is not FamilyId.CONT_Q_ULTRA:
        raise PreconditionViolation("composition implemented for the symmetric family")
    q = _base_of(first.source_params).q
    out: dict[int, complex] = {}
    for deg, v in first.coefficients:
        inner = ultra_connection(
            deg, first.target_params.beta, second.target_params.beta, q
        )
        for d2, w in inner.coefficients:
            out[d2] = out.get(d2, 0.0) + v * w
    coeffs = tuple(sorted(out.items(), reverse=True))
    return ConnectionExpansion(
        FamilyId.CONT_Q_ULTRA,
        first.n,
        first.source_params,
        second.target_params,
        coeffs,
    )


def _base_of(params) -> QBase:
    return params.base
