"""Catalog of generating-function identities and their numeric verification.

Two kinds of entries share one report format:

* sources (tags SRC_*): classical generating functions of the form
  closed form = sum_n coef_n(t) p_n(x), indexed by their equation numbers
  in the Koekoek/Lesky/Swarttouw reference catalog;
* generalized identities (tags T2..T15): the same closed forms re-expanded
  over the family with one parameter replaced, whose coefficients pick up
  an extra r_phi_s factor.

``verify_identity`` evaluates the closed-form side once, assembles the
series side with outer truncation escalated 16, 32, 64, ... until two
successive truncations agree to the context tolerance, and reports the
residual.  Out-of-domain points are still evaluated but flagged.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Callable, Optional

from .bhs import SeriesSpec, eval_phi
from .context import EvalContext, ParamPoint
from .errors import InsufficientTruncation, PreconditionViolation
from .polyfam import (
    AWParams,
    LqLParams,
    QLagParams,
    UltraParams,
    askey_wilson,
    cont_q_ultra,
    little_q_laguerre,
    little_q_laguerre_scaled,
    q_laguerre,
)
from .qpoch import poch_all, poch_finite, poch_infinite

# Terms this small relative to the partial sum, six in a row, end the
# outer accumulation early: everything past them is numerically zero.
_EXHAUSTED_TOL = 1e-17
_EXHAUSTED_STREAK = 6


class IdentityId(str, Enum):
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"
    T11 = "T11"
    T13 = "T13"
    T14 = "T14"
    T15 = "T15"
    SRC_AW_14113 = "SRC_AW_14113"
    SRC_CQU_141027 = "SRC_CQU_141027"
    SRC_CQU_141028 = "SRC_CQU_141028"
    SRC_CQU_141029 = "SRC_CQU_141029"
    SRC_CQU_141030 = "SRC_CQU_141030"
    SRC_CQU_141031 = "SRC_CQU_141031"
    SRC_CQU_141032 = "SRC_CQU_141032"
    SRC_CQU_141033 = "SRC_CQU_141033"
    SRC_LQL_142011 = "SRC_LQL_142011"
    SRC_QL_142114 = "SRC_QL_142114"
    SRC_QL_142115 = "SRC_QL_142115"
    SRC_QL_142116 = "SRC_QL_142116"


GENERALIZED: tuple[IdentityId, ...] = tuple(
    t for t in IdentityId if not t.value.startswith("SRC")
)
SOURCES: tuple[IdentityId, ...] = tuple(
    t for t in IdentityId if t.value.startswith("SRC")
)


@dataclass(frozen=True)
class DomainPredicate:
    """Validity region of one identity: a bound on |t| plus parameter
    range checks, both taken verbatim from the identity's hypotheses."""

    t_bound: Callable[[ParamPoint, float], float]
    params_ok: Callable[[ParamPoint, float], bool]
    describe: str

    def contains(self, point: ParamPoint, q: float) -> bool:
        if not self.params_ok(point, q):
            return False
        return abs(point.get("t")) < self.t_bound(point, q)


@dataclass(frozen=True)
class IdentityReport:
    id: str
    q: float
    point: ParamPoint
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    n_terms_outer: int
    n_terms_inner: int
    in_domain: bool


@dataclass(frozen=True)
class _Entry:
    tag: IdentityId
    source: Optional[IdentityId]
    free_param: Optional[str]  # name of the connection parameter, None for sources
    domain: DomainPredicate
    lhs: Callable[[ParamPoint, EvalContext], complex]
    coef: Callable[[int, ParamPoint, EvalContext], complex]
    inner: Optional[Callable[[int, ParamPoint, EvalContext], SeriesSpec]]
    poly: Callable[[int, float, ParamPoint, EvalContext], complex]
    sample: Callable[[Random, float], ParamPoint]
    describe: str
    # Optional whole-term evaluator returning (value, inner_terms).  Used
    # where coefficient and polynomial carry huge canceling q-power
    # scales that must be combined in exponent space.
    term: Optional[Callable[[int, ParamPoint, EvalContext], tuple[complex, int]]] = None


def _expi(x: float) -> complex:
    """e^(i theta) for x = cos(theta), theta in [0, pi]."""
    if abs(x) > 1.0 + 1e-12:
        raise PreconditionViolation(f"need |x| <= 1, got {x!r}")
    return cmath.exp(1j * math.acos(max(-1.0, min(1.0, x))))


def _phi(num, den, z, ctx: EvalContext) -> complex:
    spec = SeriesSpec(tuple(num), tuple(den), z, ctx.base)
    return eval_phi(spec, tol=ctx.series_tol, max_terms=ctx.max_terms).value


def _pinf(a: complex, ctx: EvalContext) -> complex:
    return poch_infinite(a, ctx.base, ctx.series_tol)


def _pair(w: complex, q: float, n: int) -> complex:
    # (sqrt(w); q)_n (-sqrt(w); q)_n, assembled without taking the root
    return poch_finite(w, q * q, n)


def _tpick(rng: Random, bound: float) -> float:
    return rng.choice((-1.0, 1.0)) * rng.uniform(0.05, 0.9) * bound


def _xcos(rng: Random) -> float:
    return math.cos(rng.uniform(0.15, math.pi - 0.15))


def _signed(rng: Random, lo: float, hi: float) -> float:
    return rng.choice((-1.0, 1.0)) * rng.uniform(lo, hi)


# ---------------------------------------------------------------------------
# Askey-Wilson block
# ---------------------------------------------------------------------------


def _aw_ok(names: str):
    def ok(pt: ParamPoint, q: float) -> bool:
        if abs(pt.real("x")) > 1.0:
            return False
        return all(abs(pt.get(n)) < 1.0 for n in names)

    return ok


def _lhs_aw(pt: ParamPoint, ctx: EvalContext) -> complex:
    a, b, c, d, t = (pt.get(n) for n in "abcdt")
    e = _expi(pt.real("x"))
    f1 = _phi((a * e, b * e), (a * b,), t / e, ctx)
    f2 = _phi((c / e, d / e), (c * d,), t * e, ctx)
    return f1 * f2


def _coef_src_aw(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    a, b, c, d, t = (pt.get(nm) for nm in "abcdt")
    return t**n / poch_all((q, a * b, c * d), q, n)


def _poly_aw_source(n: int, x: float, pt: ParamPoint, ctx: EvalContext) -> complex:
    p = AWParams(pt.get("a"), pt.get("b"), pt.get("c"), pt.get("d"), ctx.base)
    return askey_wilson(n, x, p, tol=ctx.series_tol)


def _poly_aw_target(n: int, x: float, pt: ParamPoint, ctx: EvalContext) -> complex:
    p = AWParams(pt.get("alpha"), pt.get("b"), pt.get("c"), pt.get("d"), ctx.base)
    return askey_wilson(n, x, p, tol=ctx.series_tol)


def _coef_t2(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    a, b, c, d, al, t = (pt.get(nm) for nm in ("a", "b", "c", "d", "alpha", "t"))
    abcd = a * b * c * d
    albcd = al * b * c * d
    num = poch_finite(albcd / q, q, n) * _pair(abcd / q, q, n) * _pair(abcd, q, n)
    den = (
        poch_all((q, a * b, c * d, abcd / q), q, n)
        * _pair(albcd / q, q, n)
        * _pair(albcd, q, n)
    )
    return t**n * num / den


def _inner_t2(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    a, b, c, d, al, t = (pt.get(nm) for nm in ("a", "b", "c", "d", "alpha", "t"))
    abcd = a * b * c * d
    qn = q**n
    return SeriesSpec(
        (a / al, b * c * qn, b * d * qn, abcd * q ** (2 * n - 1)),
        (a * b * qn, abcd * q ** (n - 1), al * b * c * d * q ** (2 * n)),
        al * t,
        ctx.base,
    )


def _sample_aw(rng: Random, q: float, with_alpha: bool) -> ParamPoint:
    vals = {nm: _signed(rng, 0.08, 0.6) for nm in "abcd"}
    if with_alpha:
        vals["alpha"] = _signed(rng, 0.08, 0.6)
    vals["t"] = _tpick(rng, (1.0 - q) ** 3 if with_alpha else 1.0)
    vals["x"] = _xcos(rng)
    return ParamPoint.of(**vals)


# ---------------------------------------------------------------------------
# continuous q-ultraspherical block
# ---------------------------------------------------------------------------


def _cqu_ok(names: str, complex_names: str = ""):
    def ok(pt: ParamPoint, q: float) -> bool:
        if abs(pt.real("x")) > 1.0:
            return False
        for nm in names:
            v = pt.get("beta" if nm == "b" else "gamma" if nm == "g" else "alpha")
            if abs(v.imag) > 1e-14:
                return False
            if not (0.0 < abs(v.real) < 1.0):
                return False
        for nm in complex_names:
            v = pt.get("gamma" if nm == "g" else nm)
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                return False
        return True

    return ok


def _poly_cqu(param: str):
    def poly(n: int, x: float, pt: ParamPoint, ctx: EvalContext) -> complex:
        p = UltraParams(pt.real(param), ctx.base)
        return complex(cont_q_ultra(n, x, p, tol=ctx.series_tol))

    return poly


def _lhs_t3(pt: ParamPoint, ctx: EvalContext) -> complex:
    t, beta = pt.get("t"), pt.get("beta")
    e = _expi(pt.real("x"))
    num = _pinf(t * beta * e, ctx) * _pinf(t * beta / e, ctx)
    den = _pinf(t * e, ctx) * _pinf(t / e, ctx)
    return num / den


def _coef_t3(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    return (
        poch_finite(beta, q, n)
        * (1.0 - gamma * q**n)
        * t**n
        / ((1.0 - gamma) * poch_finite(q * gamma, q, n))
    )


def _inner_t3(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    return SeriesSpec(
        (beta / gamma, beta * q**n), (gamma * q ** (n + 1),), gamma * t * t, ctx.base
    )


def _lhs_29(pt: ParamPoint, ctx: EvalContext) -> complex:
    # (t/e; q)_inf * 2phi1(beta, beta e^2; beta^2; q, t/e)
    t, beta = pt.get("t"), pt.get("beta")
    e = _expi(pt.real("x"))
    return _pinf(t / e, ctx) * _phi((beta, beta * e * e), (beta * beta,), t / e, ctx)


def _coef_t4(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    return (
        poch_finite(beta, q, n)
        * q ** math.comb(n, 2)
        * (1.0 - gamma * q**n)
        * (-beta * t) ** n
        / (
            (1.0 - gamma)
            * poch_finite(beta * beta, q, n)
            * poch_finite(q * gamma, q, n)
        )
    )


def _half_powers(beta: complex, q: float, n: int) -> tuple[complex, complex]:
    # beta*q^(n/2) and beta*q^((n+1)/2)
    rq = math.sqrt(q)
    return beta * rq**n, beta * rq ** (n + 1)


def _inner_t4(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    h0, h1 = _half_powers(beta, q, n)
    return SeriesSpec(
        (beta / gamma, beta * q**n),
        (gamma * q ** (n + 1), h0, -h0, h1, -h1),
        gamma * (beta * t) ** 2 * q ** (2 * n + 1),
        ctx.base,
    )


def _lhs_28(pt: ParamPoint, ctx: EvalContext) -> complex:
    # 2phi1(beta, beta e^2; beta^2; q, t/e) / (t e; q)_inf
    t, beta = pt.get("t"), pt.get("beta")
    e = _expi(pt.real("x"))
    return _phi((beta, beta * e * e), (beta * beta,), t / e, ctx) / _pinf(t * e, ctx)


def _coef_t5(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    return (
        poch_finite(beta, q, n)
        * (1.0 - gamma * q**n)
        * t**n
        / (
            (1.0 - gamma)
            * poch_finite(beta * beta, q, n)
            * poch_finite(q * gamma, q, n)
        )
    )


def _inner_t5(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    h0, h1 = _half_powers(beta, q, n)
    return SeriesSpec(
        (beta / gamma, beta * q**n, 0.0, 0.0, 0.0, 0.0),
        (gamma * q ** (n + 1), h0, -h0, h1, -h1),
        gamma * t * t,
        ctx.base,
    )


def _lhs_33(pt: ParamPoint, ctx: EvalContext) -> complex:
    # (gamma t e; q)_inf / (t e; q)_inf * 3phi2(gamma, beta, beta e^2;
    #                                           beta^2, gamma t e; q, t/e)
    t, beta, gamma = pt.get("t"), pt.get("beta"), pt.get("gamma")
    e = _expi(pt.real("x"))
    pref = _pinf(gamma * t * e, ctx) / _pinf(t * e, ctx)
    return pref * _phi(
        (gamma, beta, beta * e * e), (beta * beta, gamma * t * e), t / e, ctx
    )


def _coef_t6(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, al, t = (pt.get(nm) for nm in ("beta", "gamma", "alpha", "t"))
    return (
        poch_finite(beta, q, n)
        * poch_finite(gamma, q, n)
        * (1.0 - al * q**n)
        * t**n
        / ((1.0 - al) * poch_finite(beta * beta, q, n) * poch_finite(q * al, q, n))
    )


def _inner_t6(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, al, t = (pt.get(nm) for nm in ("beta", "gamma", "alpha", "t"))
    s0 = cmath.sqrt(gamma * q**n)
    s1 = s0 * math.sqrt(q)
    h0, h1 = _half_powers(beta, q, n)
    return SeriesSpec(
        (beta / al, beta * q**n, s0, -s0, s1, -s1),
        (al * q ** (n + 1), h0, -h0, h1, -h1),
        al * t * t,
        ctx.base,
    )


def _sqrt_ladder(beta: complex, q: float, n: int):
    """Principal roots of beta q^n, beta q^(n+1/2), beta q^(n+1), beta q^(n+3/2);
    higher entries derived from the first by real sqrt(q) scalings so the
    whole ladder shares one branch choice."""
    w0 = cmath.sqrt(beta * q**n)
    rq = math.sqrt(math.sqrt(q))  # q^(1/4): each half-step scales the root
    return w0, w0 * rq ** 1, w0 * rq ** 2, w0 * rq ** 3


def _lhs_31(pt: ParamPoint, ctx: EvalContext) -> complex:
    t, beta = pt.get("t"), pt.get("beta")
    e = _expi(pt.real("x"))
    r = cmath.sqrt(beta)
    rq = r * math.sqrt(ctx.q)
    f1 = _phi((r * e, -r * e), (-beta,), t / e, ctx)
    f2 = _phi((rq / e, -rq / e), (-ctx.q * beta,), t * e, ctx)
    return f1 * f2


def _coef_t7(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    rq = math.sqrt(q)
    num = poch_all((beta, beta * rq, -beta * rq), q, n) * (1.0 - gamma * q**n) * t**n
    den = (1.0 - gamma) * poch_all((beta * beta, -q * beta, q * gamma), q, n)
    return num / den


def _inner_t7(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    w0, u1, v1, u2 = _sqrt_ladder(beta, q, n)
    h0, h1 = _half_powers(beta, q, n)
    v2 = w0 * q  # sqrt(beta q^(n+2)) on the same branch as w0
    num = (beta / gamma, beta * q**n, u1, -u1, u2, -u2,
           1j * u1, -1j * u1, 1j * u2, -1j * u2)
    den = (gamma * q ** (n + 1), h0, -h0, h1, -h1,
           1j * v1, -1j * v1, 1j * v2, -1j * v2)
    return SeriesSpec(num, den, gamma * t * t, ctx.base)


def _lhs_30(pt: ParamPoint, ctx: EvalContext) -> complex:
    t, beta = pt.get("t"), pt.get("beta")
    q = ctx.q
    e = _expi(pt.real("x"))
    r = cmath.sqrt(beta)
    rq = r * math.sqrt(q)
    brq = beta * math.sqrt(q)
    f1 = _phi((r * e, rq * e), (brq,), t / e, ctx)
    f2 = _phi((-r / e, -rq / e), (brq,), t * e, ctx)
    return f1 * f2


def _coef_t8(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    rq = math.sqrt(q)
    num = poch_all((beta, -beta, -beta * rq), q, n) * (1.0 - gamma * q**n) * t**n
    den = (1.0 - gamma) * poch_all((beta * beta, beta * rq, q * gamma), q, n)
    return num / den


def _inner_t8(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    w0, u1, v1, u2 = _sqrt_ladder(beta, q, n)
    h0, h1 = _half_powers(beta, q, n)
    num = (beta / gamma, beta * q**n, 1j * w0, -1j * w0, 1j * v1, -1j * v1,
           1j * u1, -1j * u1, 1j * u2, -1j * u2)
    den = (gamma * q ** (n + 1), h0, -h0, h1, -h1, u1, -u1, u2, -u2)
    return SeriesSpec(num, den, gamma * t * t, ctx.base)


def _lhs_32(pt: ParamPoint, ctx: EvalContext) -> complex:
    t, beta = pt.get("t"), pt.get("beta")
    q = ctx.q
    e = _expi(pt.real("x"))
    r = cmath.sqrt(beta)
    rq = r * math.sqrt(q)
    brq = beta * math.sqrt(q)
    f1 = _phi((r * e, -rq * e), (-brq,), t / e, ctx)
    f2 = _phi((rq / e, -r / e), (-brq,), t * e, ctx)
    return f1 * f2


def _coef_t9(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    rq = math.sqrt(q)
    num = poch_all((beta, -beta, beta * rq), q, n) * (1.0 - gamma * q**n) * t**n
    den = (1.0 - gamma) * poch_all((beta * beta, -beta * rq, q * gamma), q, n)
    return num / den


def _inner_t9(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    beta, gamma, t = pt.get("beta"), pt.get("gamma"), pt.get("t")
    w0, u1, v1, u2 = _sqrt_ladder(beta, q, n)
    h0, h1 = _half_powers(beta, q, n)
    num = (beta / gamma, beta * q**n, 1j * w0, -1j * w0, 1j * v1, -1j * v1,
           u1, -u1, u2, -u2)
    den = (gamma * q ** (n + 1), h0, -h0, h1, -h1,
           1j * u1, -1j * u1, 1j * u2, -1j * u2)
    return SeriesSpec(num, den, gamma * t * t, ctx.base)


def _sample_cqu(rng: Random, q: float, bound_fn, names=("beta", "gamma"),
                complex_gamma: bool = False) -> ParamPoint:
    vals: dict[str, complex] = {}
    for nm in names:
        vals[nm] = _signed(rng, 0.1, 0.8)
    if complex_gamma:
        mag = rng.uniform(0.1, 0.8)
        ph = rng.uniform(0.0, 2.0 * math.pi)
        vals["gamma"] = mag * cmath.exp(1j * ph)
    pt = ParamPoint.of(x=_xcos(rng), t=0.0, **vals)
    return pt.replace(t=_tpick(rng, bound_fn(pt, q)))


# ---------------------------------------------------------------------------
# little q-Laguerre block
# ---------------------------------------------------------------------------


def _lql_ok(names: str):
    def ok(pt: ParamPoint, q: float) -> bool:
        for nm in names:
            v = pt.get(nm)
            if abs(v.imag) > 1e-14 or not (0.0 < v.real < 1.0 / q):
                return False
        return True

    return ok


def _lhs_lql(pt: ParamPoint, ctx: EvalContext) -> complex:
    t, x, a = pt.get("t"), pt.get("x"), pt.get("a")
    q = ctx.q
    pref = _pinf(t, ctx) / _pinf(x * t, ctx)
    return pref * _phi((), (a * q,), a * q * x * t, ctx)


def _coef_t11(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    a, b, t = pt.get("a"), pt.get("b"), pt.get("t")
    return (
        q ** math.comb(n, 2)
        * (-t) ** n
        * poch_finite(b * q, q, n)
        / (poch_finite(q, q, n) * poch_finite(a * q, q, n))
    )


def _inner_t11(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    a, b, t = pt.get("a"), pt.get("b"), pt.get("t")
    return SeriesSpec((a / b,), (a * q ** (n + 1),), b * q ** (n + 1) * t, ctx.base)


def _coef_src_lql(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    t = pt.get("t")
    return (-t) ** n * q ** math.comb(n, 2) / poch_finite(q, q, n)


def _lql_term(coef_mant):
    """Whole-term evaluator for the lattice-family expansions: the
    coefficient's q^C(n,2) and the polynomial's q^(-C(n,2))-scale growth
    cancel, so both are combined in exponent space."""

    def term(n: int, pt: ParamPoint, ctx: EvalContext) -> tuple[complex, int]:
        q = ctx.q
        x = pt.real("x")
        target = pt.real("b") if pt.has("b") else pt.real("a")
        mant, e = little_q_laguerre_scaled(n, x, LqLParams(target, ctx.base))
        cm = coef_mant(n, pt, ctx)
        inner_terms = 0
        inner_val = complex(1.0)
        entry = _CATALOG[IdentityId("T11")] if pt.has("b") else None
        if entry is not None:
            res = eval_phi(entry.inner(n, pt, ctx), tol=ctx.series_tol,
                           max_terms=ctx.max_terms)
            inner_val = res.value
            inner_terms = res.terms_used
        arg = (math.comb(n, 2) + e) * math.log(q)
        if arg < -700.0:
            return complex(0.0), inner_terms
        return cm * mant * inner_val * math.exp(arg), inner_terms

    return term


def _coef_mant_t11(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    a, b, t = pt.get("a"), pt.get("b"), pt.get("t")
    return (
        (-t) ** n
        * poch_finite(b * q, q, n)
        / (poch_finite(q, q, n) * poch_finite(a * q, q, n))
    )


def _coef_mant_src_lql(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    return (-pt.get("t")) ** n / poch_finite(q, q, n)


def _poly_lql(param: str):
    def poly(n: int, x: float, pt: ParamPoint, ctx: EvalContext) -> complex:
        p = LqLParams(pt.real(param), ctx.base)
        return complex(little_q_laguerre(n, x, p, tol=ctx.series_tol))

    return poly


def _tb_t11(pt: ParamPoint, q: float) -> float:
    a = pt.real("a")
    return min((1.0 - q) * (1.0 - a * q) / a, 1.0)


def _sample_lql(rng: Random, q: float, with_b: bool) -> ParamPoint:
    a = rng.uniform(0.1, 0.9 / q)
    vals = {"a": a}
    if with_b:
        vals["b"] = rng.uniform(0.1, 0.9 / q)
    pt = ParamPoint.of(x=rng.uniform(0.05, 1.0), t=0.0, **vals)
    return pt.replace(t=_tpick(rng, _tb_t11(pt, q)))


# ---------------------------------------------------------------------------
# q-Laguerre block
# ---------------------------------------------------------------------------


def _qlag_ok(names: tuple[str, ...], complex_gamma: bool = False):
    def ok(pt: ParamPoint, q: float) -> bool:
        if pt.real("x") < 0.0:
            return False
        for nm in names:
            v = pt.get(nm)
            if abs(v.imag) > 1e-14 or v.real <= -1.0:
                return False
        if complex_gamma:
            v = pt.get("gamma")
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                return False
        return True

    return ok


def _lhs_ql14(pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    t, x, al = pt.get("t"), pt.get("x"), pt.real("alpha")
    return _phi((), (q ** (al + 1.0),), -x * t * q ** (al + 1.0), ctx) / _pinf(t, ctx)


def _lhs_ql15(pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    t, x, al = pt.get("t"), pt.get("x"), pt.real("alpha")
    return _pinf(t, ctx) * _phi(
        (), (q ** (al + 1.0), t), -x * t * q ** (al + 1.0), ctx
    )


def _lhs_ql16(pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    t, x, al, gamma = pt.get("t"), pt.get("x"), pt.real("alpha"), pt.get("gamma")
    pref = _pinf(gamma * t, ctx) / _pinf(t, ctx)
    return pref * _phi(
        (gamma,), (q ** (al + 1.0), gamma * t), -x * t * q ** (al + 1.0), ctx
    )


def _coef_t13(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    al, be, t = pt.real("alpha"), pt.real("beta"), pt.get("t")
    return (q ** (al - be) * t) ** n / poch_finite(q ** (al + 1.0), q, n)


def _inner_t13(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    al, be, t = pt.real("alpha"), pt.real("beta"), pt.get("t")
    return SeriesSpec(
        (q ** (al - be), 0.0), (q ** (al + n + 1.0),), t, ctx.base
    )


def _coef_t14(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    al, be, t = pt.real("alpha"), pt.real("beta"), pt.get("t")
    return (
        (-t * q ** (al - be)) ** n
        * q ** math.comb(n, 2)
        / poch_finite(q ** (al + 1.0), q, n)
    )


def _inner_t14(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    al, be, t = pt.real("alpha"), pt.real("beta"), pt.get("t")
    return SeriesSpec((q ** (al - be),), (q ** (al + n + 1.0),), t * q**n, ctx.base)


def _coef_t15(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    al, be, t, gamma = pt.real("alpha"), pt.real("beta"), pt.get("t"), pt.get("gamma")
    return (
        poch_finite(gamma, q, n)
        * (t * q ** (al - be)) ** n
        / poch_finite(q ** (al + 1.0), q, n)
    )


def _inner_t15(n: int, pt: ParamPoint, ctx: EvalContext) -> SeriesSpec:
    q = ctx.q
    al, be, t, gamma = pt.real("alpha"), pt.real("beta"), pt.get("t"), pt.get("gamma")
    return SeriesSpec(
        (q ** (al - be), gamma * q**n), (q ** (al + n + 1.0),), t, ctx.base
    )


def _coef_src_ql14(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    return pt.get("t") ** n / poch_finite(q ** (pt.real("alpha") + 1.0), q, n)


def _coef_src_ql15(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    return (
        (-pt.get("t")) ** n
        * q ** math.comb(n, 2)
        / poch_finite(q ** (pt.real("alpha") + 1.0), q, n)
    )


def _coef_src_ql16(n: int, pt: ParamPoint, ctx: EvalContext) -> complex:
    q = ctx.q
    return (
        poch_finite(pt.get("gamma"), q, n)
        * pt.get("t") ** n
        / poch_finite(q ** (pt.real("alpha") + 1.0), q, n)
    )


def _poly_ql(param: str):
    def poly(n: int, x: float, pt: ParamPoint, ctx: EvalContext) -> complex:
        p = QLagParams(pt.real(param), ctx.base)
        return complex(q_laguerre(n, x, p, tol=ctx.series_tol))

    return poly


def _tb_t13(pt: ParamPoint, q: float) -> float:
    return (1.0 - q ** (pt.real("alpha") + 1.0)) * (1.0 - q)


def _sample_ql(rng: Random, q: float, bound_fn, with_beta: bool,
               complex_gamma: bool = False) -> ParamPoint:
    vals: dict[str, complex] = {"alpha": rng.uniform(-0.75, 2.5)}
    if with_beta:
        vals["beta"] = rng.uniform(-0.75, 2.5)
    if complex_gamma:
        mag = rng.uniform(0.1, 0.8)
        ph = rng.uniform(0.0, 2.0 * math.pi)
        vals["gamma"] = mag * cmath.exp(1j * ph)
    pt = ParamPoint.of(x=rng.uniform(0.05, 2.0), t=0.0, **vals)
    bound = bound_fn(pt, q)
    if with_beta:
        # The re-expanded series carries the coefficient q^(n(alpha-beta))
        # on its top entry, so it only converges for |t| < q^(beta-alpha)
        # when beta > alpha; the theorem's stated bound overlooks this.
        # Sample strictly inside the provable region.
        gap = pt.real("beta") - pt.real("alpha")
        if gap > 0.0:
            bound = min(bound, q**gap)
    return pt.replace(t=_tpick(rng, bound))


# ---------------------------------------------------------------------------
# catalog assembly
# ---------------------------------------------------------------------------


def _tb_const(c: float):
    return lambda pt, q: c


def _tb_t4(pt: ParamPoint, q: float) -> float:
    return 1.0 - pt.real("beta") ** 2


def _tb_t7(pt: ParamPoint, q: float) -> float:
    b = abs(pt.get("beta"))
    g = abs(pt.get("gamma"))
    return min((1.0 - b * b) * (1.0 + math.sqrt(q) * b) * (1.0 - q * g), 1.0)


def _tb_t9(pt: ParamPoint, q: float) -> float:
    b = abs(pt.get("beta"))
    return min((1.0 - b * b) * (1.0 + math.sqrt(q) * b), 1.0)


def _tb_t15(pt: ParamPoint, q: float) -> float:
    return 1.0 - q


_CATALOG: dict[IdentityId, _Entry] = {}


def _add(entry: _Entry) -> None:
    _CATALOG[entry.tag] = entry


I = IdentityId

_add(_Entry(
    I.SRC_AW_14113, None, None,
    DomainPredicate(_tb_const(1.0), _aw_ok("abcd"),
                    "|t| < 1, max(|a|,|b|,|c|,|d|) < 1, x in [-1,1]"),
    _lhs_aw, _coef_src_aw, None, _poly_aw_source,
    lambda rng, q: _sample_aw(rng, q, with_alpha=False),
    "product of two 2phi1 factors = sum t^n p_n(x;a,b,c,d) / (q,ab,cd;q)_n",
))
_add(_Entry(
    I.T2, I.SRC_AW_14113, "alpha",
    DomainPredicate(
        lambda pt, q: (1.0 - q) ** 3,
        lambda pt, q: _aw_ok("abcd")(pt, q) and abs(pt.get("alpha")) < 1.0,
        "|t| < (1-q)^3, max moduli < 1 including the free parameter",
    ),
    _lhs_aw, _coef_t2, _inner_t2, _poly_aw_target,
    lambda rng, q: _sample_aw(rng, q, with_alpha=True),
    "re-expansion of the two-factor 2phi1 product over p_n(x;alpha,b,c,d)",
))

_add(_Entry(
    I.SRC_CQU_141027, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b"), "|t| < 1, beta in (-1,1)\\{0}"),
    _lhs_t3,
    lambda n, pt, ctx: pt.get("t") ** n,
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",)),
    "(t beta e, t beta/e; q)_inf / (t e, t/e; q)_inf = sum C_n(x;beta) t^n",
))
_add(_Entry(
    I.T3, I.SRC_CQU_141027, "gamma",
    DomainPredicate(_tb_const(1.0), _cqu_ok("bg"),
                    "|t| < 1, beta, gamma in (-1,1)\\{0}"),
    _lhs_t3, _coef_t3, _inner_t3, _poly_cqu("gamma"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0)),
    "re-expansion of the Pochhammer-quotient generating function",
))
_add(_Entry(
    I.SRC_CQU_141029, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b"), "|t| < 1, beta in (-1,1)\\{0}"),
    _lhs_29,
    lambda n, pt, ctx: (
        ctx.q ** math.comb(n, 2)
        * (-pt.get("beta") * pt.get("t")) ** n
        / poch_finite(pt.get("beta") ** 2, ctx.q, n)
    ),
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",)),
    "(t/e; q)_inf 2phi1(beta, beta e^2; beta^2; q, t/e) expansion",
))
_add(_Entry(
    I.T4, I.SRC_CQU_141029, "gamma",
    DomainPredicate(_tb_t4, _cqu_ok("bg"),
                    "|t| < 1 - beta^2, beta, gamma in (-1,1)\\{0}"),
    _lhs_29, _coef_t4, _inner_t4, _poly_cqu("gamma"),
    lambda rng, q: _sample_cqu(rng, q, _tb_t4),
    "re-expansion with a 2phi5 coefficient factor",
))
_add(_Entry(
    I.SRC_CQU_141028, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b"), "|t| < 1, beta in (-1,1)\\{0}"),
    _lhs_28,
    lambda n, pt, ctx: pt.get("t") ** n / poch_finite(pt.get("beta") ** 2, ctx.q, n),
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",)),
    "2phi1(beta, beta e^2; beta^2; q, t/e) / (t e; q)_inf expansion",
))
_add(_Entry(
    I.T5, I.SRC_CQU_141028, "gamma",
    DomainPredicate(_tb_t4, _cqu_ok("bg"),
                    "|t| < 1 - beta^2, beta, gamma in (-1,1)\\{0}"),
    _lhs_28, _coef_t5, _inner_t5, _poly_cqu("gamma"),
    lambda rng, q: _sample_cqu(rng, q, _tb_t4),
    "re-expansion with a 6phi5 coefficient factor",
))
_add(_Entry(
    I.SRC_CQU_141033, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b", "g"),
                    "|t| < 1, beta in (-1,1)\\{0}, gamma complex"),
    _lhs_33,
    lambda n, pt, ctx: (
        poch_finite(pt.get("gamma"), ctx.q, n)
        * pt.get("t") ** n
        / poch_finite(pt.get("beta") ** 2, ctx.q, n)
    ),
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",),
                               complex_gamma=True),
    "(gamma t e; q)_inf / (t e; q)_inf 3phi2 expansion",
))
_add(_Entry(
    I.T6, I.SRC_CQU_141033, "alpha",
    DomainPredicate(
        _tb_t4,
        lambda pt, q: _cqu_ok("b", "g")(pt, q)
        and 0.0 < abs(pt.real("alpha")) < 1.0
        and abs(pt.get("alpha").imag) <= 1e-14,
        "|t| < 1 - beta^2, alpha, beta in (-1,1)\\{0}, gamma complex",
    ),
    _lhs_33, _coef_t6, _inner_t6, _poly_cqu("alpha"),
    lambda rng, q: _sample_cqu(rng, q, _tb_t4, names=("beta", "alpha"),
                               complex_gamma=True),
    "re-expansion with a 6phi5 coefficient factor, complex gamma allowed",
))
_add(_Entry(
    I.SRC_CQU_141031, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b"), "|t| < 1, beta in (-1,1)\\{0}"),
    _lhs_31,
    lambda n, pt, ctx: (
        poch_all(
            (pt.get("beta") * math.sqrt(ctx.q), -pt.get("beta") * math.sqrt(ctx.q)),
            ctx.q, n,
        )
        * pt.get("t") ** n
        / poch_all((pt.get("beta") ** 2, -ctx.q * pt.get("beta")), ctx.q, n)
    ),
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",)),
    "square-root-parameter 2phi1 pair expansion (denominator -beta)",
))
_add(_Entry(
    I.T7, I.SRC_CQU_141031, "gamma",
    DomainPredicate(_tb_t7, _cqu_ok("bg"),
                    "|t| < min{(1-b^2)(1+sqrt(q)|b|)(1-q|g|), 1}"),
    _lhs_31, _coef_t7, _inner_t7, _poly_cqu("gamma"),
    lambda rng, q: _sample_cqu(rng, q, _tb_t7),
    "re-expansion with a 10phi9 coefficient factor",
))
_add(_Entry(
    I.SRC_CQU_141030, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b"), "|t| < 1, beta in (-1,1)\\{0}"),
    _lhs_30,
    lambda n, pt, ctx: (
        poch_all(
            (-pt.get("beta"), -pt.get("beta") * math.sqrt(ctx.q)), ctx.q, n
        )
        * pt.get("t") ** n
        / poch_all(
            (pt.get("beta") ** 2, pt.get("beta") * math.sqrt(ctx.q)), ctx.q, n
        )
    ),
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",)),
    "square-root-parameter 2phi1 pair expansion (denominator beta q^(1/2))",
))
_add(_Entry(
    I.T8, I.SRC_CQU_141030, "gamma",
    DomainPredicate(_tb_t7, _cqu_ok("bg"),
                    "|t| < min{(1-b^2)(1+sqrt(q)|b|)(1-q|g|), 1}"),
    _lhs_30, _coef_t8, _inner_t8, _poly_cqu("gamma"),
    lambda rng, q: _sample_cqu(rng, q, _tb_t7),
    "re-expansion with a 10phi9 coefficient factor",
))
_add(_Entry(
    I.SRC_CQU_141032, None, None,
    DomainPredicate(_tb_const(1.0), _cqu_ok("b"), "|t| < 1, beta in (-1,1)\\{0}"),
    _lhs_32,
    lambda n, pt, ctx: (
        poch_all(
            (-pt.get("beta"), pt.get("beta") * math.sqrt(ctx.q)), ctx.q, n
        )
        * pt.get("t") ** n
        / poch_all(
            (pt.get("beta") ** 2, -pt.get("beta") * math.sqrt(ctx.q)), ctx.q, n
        )
    ),
    None, _poly_cqu("beta"),
    lambda rng, q: _sample_cqu(rng, q, _tb_const(1.0), names=("beta",)),
    "square-root-parameter 2phi1 pair expansion (denominator -beta q^(1/2))",
))
_add(_Entry(
    I.T9, I.SRC_CQU_141032, "gamma",
    DomainPredicate(_tb_t9, _cqu_ok("bg"),
                    "|t| < min{(1-b^2)(1+sqrt(q)|b|), 1}"),
    _lhs_32, _coef_t9, _inner_t9, _poly_cqu("gamma"),
    lambda rng, q: _sample_cqu(rng, q, _tb_t9),
    "re-expansion with a 10phi9 coefficient factor",
))
_add(_Entry(
    I.SRC_LQL_142011, None, None,
    DomainPredicate(_tb_t11, _lql_ok("a"),
                    "|t| < min{(1-q)(1-aq)/a, 1}, 0 < aq < 1"),
    _lhs_lql, _coef_src_lql, None, _poly_lql("a"),
    lambda rng, q: _sample_lql(rng, q, with_b=False),
    "(t;q)_inf/(xt;q)_inf 0phi1 = sum (-1)^n q^C(n,2) p_n(x;a) t^n / (q;q)_n",
    term=_lql_term(_coef_mant_src_lql),
))
_add(_Entry(
    I.T11, I.SRC_LQL_142011, "b",
    DomainPredicate(_tb_t11, _lql_ok("ab"),
                    "|t| < min{(1-q)(1-aq)/a, 1}, a, b in (0, 1/q)"),
    _lhs_lql, _coef_t11, _inner_t11, _poly_lql("b"),
    lambda rng, q: _sample_lql(rng, q, with_b=True),
    "re-expansion with a 1phi1 coefficient factor",
    term=_lql_term(_coef_mant_t11),
))
_add(_Entry(
    I.SRC_QL_142114, None, None,
    DomainPredicate(_tb_t13, _qlag_ok(("alpha",)),
                    "|t| < (1-q^(alpha+1))(1-q), alpha > -1"),
    _lhs_ql14, _coef_src_ql14, None, _poly_ql("alpha"),
    lambda rng, q: _sample_ql(rng, q, _tb_t13, with_beta=False),
    "0phi1 / (t;q)_inf = sum L_n^(alpha)(x) t^n / (q^(alpha+1);q)_n",
))
_add(_Entry(
    I.T13, I.SRC_QL_142114, "beta",
    DomainPredicate(_tb_t13, _qlag_ok(("alpha", "beta")),
                    "|t| < (1-q^(alpha+1))(1-q), alpha, beta > -1"),
    _lhs_ql14, _coef_t13, _inner_t13, _poly_ql("beta"),
    lambda rng, q: _sample_ql(rng, q, _tb_t13, with_beta=True),
    "re-expansion with a 2phi1 coefficient factor",
))
_add(_Entry(
    I.SRC_QL_142115, None, None,
    DomainPredicate(_tb_t13, _qlag_ok(("alpha",)),
                    "|t| < (1-q^(alpha+1))(1-q), alpha > -1"),
    _lhs_ql15, _coef_src_ql15, None, _poly_ql("alpha"),
    lambda rng, q: _sample_ql(rng, q, _tb_t13, with_beta=False),
    "(t;q)_inf 0phi2 = sum (-t)^n q^C(n,2) L_n^(alpha)(x) / (q^(alpha+1);q)_n",
))
_add(_Entry(
    I.T14, I.SRC_QL_142115, "beta",
    DomainPredicate(_tb_t13, _qlag_ok(("alpha", "beta")),
                    "|t| < (1-q^(alpha+1))(1-q), alpha, beta > -1"),
    _lhs_ql15, _coef_t14, _inner_t14, _poly_ql("beta"),
    lambda rng, q: _sample_ql(rng, q, _tb_t13, with_beta=True),
    "re-expansion with a 1phi1 coefficient factor",
))
_add(_Entry(
    I.SRC_QL_142116, None, None,
    DomainPredicate(_tb_t15, _qlag_ok(("alpha",), complex_gamma=True),
                    "|t| < 1-q, alpha > -1, gamma complex"),
    _lhs_ql16, _coef_src_ql16, None, _poly_ql("alpha"),
    lambda rng, q: _sample_ql(rng, q, _tb_t15, with_beta=False,
                              complex_gamma=True),
    "(gamma t;q)_inf/(t;q)_inf 1phi2 expansion",
))
_add(_Entry(
    I.T15, I.SRC_QL_142116, "beta",
    DomainPredicate(_tb_t15, _qlag_ok(("alpha", "beta"), complex_gamma=True),
                    "|t| < 1-q, alpha, beta > -1, gamma complex"),
    _lhs_ql16, _coef_t15, _inner_t15, _poly_ql("beta"),
    lambda rng, q: _sample_ql(rng, q, _tb_t15, with_beta=True,
                              complex_gamma=True),
    "re-expansion with a 2phi1 coefficient factor, complex gamma allowed",
))


# ---------------------------------------------------------------------------
# evaluation and verification
# ---------------------------------------------------------------------------


class _RhsAccumulator:
    """Caches the outer terms coef_n * poly_n(x) * inner_n so truncation
    escalation reuses lower orders, and stops extending once terms are
    numerically exhausted."""

    def __init__(self, entry: _Entry, point: ParamPoint, ctx: EvalContext) -> None:
        self.entry = entry
        self.point = point
        self.ctx = ctx
        self.x = point.real("x")
        self.terms: list[complex] = []
        self.partials: list[complex] = [complex(0.0)]
        self.max_inner = 0
        self.exhausted = False
        self._streak = 0

    def _extend(self, n_terms: int) -> None:
        while len(self.terms) < n_terms and not self.exhausted:
            n = len(self.terms)
            if self.entry.term is not None and self.x > 0.0:
                term, inner_used = self.entry.term(n, self.point, self.ctx)
                self.max_inner = max(self.max_inner, inner_used)
            else:
                coef = self.entry.coef(n, self.point, self.ctx)
                term = complex(0.0)
                if coef != 0.0:
                    term = coef * self.entry.poly(n, self.x, self.point, self.ctx)
                    if term != 0.0 and self.entry.inner is not None:
                        spec = self.entry.inner(n, self.point, self.ctx)
                        res = eval_phi(spec, tol=self.ctx.series_tol,
                                       max_terms=self.ctx.max_terms)
                        self.max_inner = max(self.max_inner, res.terms_used)
                        term *= res.value
            self.terms.append(term)
            self.partials.append(self.partials[-1] + term)
            if abs(term) <= _EXHAUSTED_TOL * (1.0 + abs(self.partials[-1])):
                self._streak += 1
                if self._streak >= _EXHAUSTED_STREAK:
                    self.exhausted = True
            else:
                self._streak = 0

    def partial(self, n_terms: int) -> complex:
        self._extend(n_terms)
        return self.partials[min(n_terms, len(self.terms))]

    def last_term_magnitude(self, n_terms: int) -> float:
        self._extend(n_terms)
        idx = min(n_terms, len(self.terms)) - 1
        return abs(self.terms[idx]) if idx >= 0 else 0.0


def entry_for(tag: IdentityId | str) -> _Entry:
    return _CATALOG[IdentityId(tag)]


def list_identities() -> list[dict[str, str]]:
    out = []
    for tag in IdentityId:
        e = _CATALOG[tag]
        out.append(
            {
                "tag": tag.value,
                "kind": "source" if e.source is None else "generalized",
                "source": e.source.value if e.source else "",
                "domain": e.domain.describe,
                "about": e.describe,
            }
        )
    return out


def source_of(tag: IdentityId | str) -> Optional[IdentityId]:
    return entry_for(tag).source


def in_domain(tag: IdentityId | str, point: ParamPoint, ctx: EvalContext) -> bool:
    return entry_for(tag).domain.contains(point, ctx.q)


def t_bound(tag: IdentityId | str, point: ParamPoint, ctx: EvalContext) -> float:
    return entry_for(tag).domain.t_bound(point, ctx.q)


def sample_point(tag: IdentityId | str, rng: Random, q: float) -> ParamPoint:
    return entry_for(tag).sample(rng, q)


def inner_series_spec(
    tag: IdentityId | str, n: int, point: ParamPoint, ctx: EvalContext
) -> SeriesSpec:
    """The r_phi_s factor multiplying the degree-n polynomial on the
    series side of a generalized identity (used by the orthogonality
    corollaries, whose closed forms contain the same factor)."""
    e = entry_for(tag)
    if e.inner is None:
        raise PreconditionViolation(f"{e.tag.value} is a source, no inner factor")
    return e.inner(n, point, ctx)


def outer_coefficient(
    tag: IdentityId | str, n: int, point: ParamPoint, ctx: EvalContext
) -> complex:
    return entry_for(tag).coef(n, point, ctx)


def eval_lhs(tag: IdentityId | str, point: ParamPoint, ctx: EvalContext) -> complex:
    """Closed-form side of the identity at the point (x comes from the point)."""
    return entry_for(tag).lhs(point, ctx)


def eval_rhs(
    tag: IdentityId | str, point: ParamPoint, ctx: EvalContext, n_outer: int
) -> complex:
    """Series side truncated to ``n_outer`` terms.

    Raises InsufficientTruncation when the last retained term is still
    larger than the context tolerance times the partial sum.
    """
    if n_outer < 1:
        raise PreconditionViolation("n_outer must be >= 1")
    acc = _RhsAccumulator(entry_for(tag), point, ctx)
    value = acc.partial(n_outer)
    if acc.last_term_magnitude(n_outer) > ctx.tol * (1.0 + abs(value)):
        raise InsufficientTruncation(
            f"outer sum for {IdentityId(tag).value} not settled at {n_outer} terms"
        )
    return value


def _verify(tag: IdentityId, point: ParamPoint, ctx: EvalContext) -> IdentityReport:
    entry = _CATALOG[tag]
    lhs = entry.lhs(point, ctx)
    acc = _RhsAccumulator(entry, point, ctx)
    n_outer = ctx.outer_start
    rhs = acc.partial(n_outer)
    while n_outer * 2 <= ctx.outer_cap:
        nxt = acc.partial(n_outer * 2)
        n_outer *= 2
        if abs(nxt - rhs) <= ctx.tol * (1.0 + abs(nxt)):
            rhs = nxt
            break
        rhs = nxt
    abs_res = abs(lhs - rhs)
    rel_res = abs_res / (1.0 + max(abs(lhs), abs(rhs)))
    return IdentityReport(
        id=tag.value,
        q=ctx.q,
        point=point,
        lhs=lhs,
        rhs=rhs,
        abs_residual=abs_res,
        rel_residual=rel_res,
        n_terms_outer=n_outer,
        n_terms_inner=acc.max_inner,
        in_domain=entry.domain.contains(point, ctx.q),
    )


def verify_identity(
    tag: IdentityId | str, point: ParamPoint, ctx: EvalContext
) -> IdentityReport:
    """Verify a generalized identity (T tags) at one parameter point."""
    t = IdentityId(tag)
    if t not in GENERALIZED:
        raise PreconditionViolation(f"{t.value} is not a generalized identity")
    return _verify(t, point, ctx)


def verify_source(
    tag: IdentityId | str, point: ParamPoint, ctx: EvalContext
) -> IdentityReport:
    """Verify a source generating function (SRC tags) at one parameter point."""
    t = IdentityId(tag)
    if t not in SOURCES:
        raise PreconditionViolation(f"{t.value} is not a source identity")
    return _verify(t, point, ctx)


# ---------------------------------------------------------------------------
# integrand factors for the orthogonality corollaries
# ---------------------------------------------------------------------------


def lhs_integrand_factor(
    tag: IdentityId | str, x: float, point: ParamPoint, ctx: EvalContext
) -> complex:
    """The x-dependent closed-form factor inside a corollary's functional.

    For the interval families this is the full identity LHS; for the
    Laguerre-type corollaries the x-independent Pochhammer prefactors are
    moved to the closed-form side, leaving the bare phi kernel (with the
    lattice quotient 1/(tx; q)_inf in the little q-Laguerre case).
    """
    t = IdentityId(tag)
    q = ctx.q
    if t in (I.T2, I.T3, I.T4, I.T5, I.T6, I.T7, I.T8, I.T9):
        return eval_lhs(t, point.replace(x=x), ctx)
    tt = point.get("t")
    if t is I.T11:
        a = point.get("a")
        return _phi((), (a * q,), a * q * tt * x, ctx) / _pinf(tt * x, ctx)
    al = point.real("alpha")
    qa1 = q ** (al + 1.0)
    if t is I.T13:
        return _phi((), (qa1,), -x * tt * qa1, ctx)
    if t is I.T14:
        return _phi((), (qa1, tt), -x * tt * qa1, ctx)
    if t is I.T15:
        return _phi((point.get("gamma"),), (qa1, point.get("gamma") * tt),
                    -x * tt * qa1, ctx)
    raise PreconditionViolation(f"no integrand factor for {t.value}")
