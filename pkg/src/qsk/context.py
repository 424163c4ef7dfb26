"""Shared plumbing: the global numeric policy and named parameter points."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping

from .errors import PreconditionViolation
from .qpoch import QBase


@dataclass(frozen=True)
class EvalContext:
    """Global numeric policy for one verification run.

    q              base, real in (0, 1)
    tol            agreement tolerance for truncation escalation
    series_tol     term tolerance for series and infinite products
    max_terms      cap on series terms
    outer_start    first outer truncation order tried (doubled on escalation)
    outer_cap      cap on the outer truncation order
    quad_order     Gauss-Legendre order for interval quadrature
    panel_order    Gauss-Legendre order per geometric panel on (0, inf)
    lattice_cap    cap on one-sided lattice sums
    window         initial half-width of bilateral sums
    window_cap     cap on the bilateral half-width
    """

    q: float
    tol: float = 1e-9
    series_tol: float = 1e-15
    max_terms: int = 10000
    outer_start: int = 16
    outer_cap: int = 2048
    quad_order: int = 256
    panel_order: int = 24
    lattice_cap: int = 4000
    window: int = 60
    window_cap: int = 600

    def __post_init__(self) -> None:
        QBase(self.q)  # validates
        for name in ("tol", "series_tol"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise PreconditionViolation(f"{name} must be finite and > 0")
        for name in ("max_terms", "outer_start", "outer_cap", "quad_order",
                     "panel_order", "lattice_cap", "window", "window_cap"):
            if getattr(self, name) < 1:
                raise PreconditionViolation(f"{name} must be >= 1")

    @property
    def base(self) -> QBase:
        return QBase(self.q)

    def with_q(self, q: float) -> "EvalContext":
        return replace(self, q=q)


@dataclass(frozen=True)
class ParamPoint:
    """A named set of (complex or real) parameters for one identity or
    family: entries like a, b, c, d, alpha, beta, gamma, t, x, n.

    The base q is not part of a point; it lives in the EvalContext.
    """

    values: tuple[tuple[str, complex], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        norm = tuple(sorted((str(k), complex(v)) for k, v in self.values))
        names = [k for k, _ in norm]
        if len(set(names)) != len(names):
            raise PreconditionViolation("duplicate parameter name")
        object.__setattr__(self, "values", norm)

    @classmethod
    def of(cls, **kwargs: complex) -> "ParamPoint":
        return cls(tuple(kwargs.items()))

    def get(self, name: str) -> complex:
        for k, v in self.values:
            if k == name:
                return v
        raise KeyError(name)

    def real(self, name: str) -> float:
        return self.get(name).real

    def intval(self, name: str) -> int:
        return int(round(self.get(name).real))

    def has(self, name: str) -> bool:
        return any(k == name for k, _ in self.values)

    def as_dict(self) -> dict[str, complex]:
        return dict(self.values)

    def replace(self, **kwargs: complex) -> "ParamPoint":
        d = self.as_dict()
        d.update({k: complex(v) for k, v in kwargs.items()})
        return ParamPoint.of(**d)

    def canonical(self) -> str:
        """Stable text form used for hashing and report ordering."""
        parts = [f"{k}={v.real:.17g}{v.imag:+.17g}j" for k, v in self.values]
        return ";".join(parts)

    def __iter__(self) -> Iterator[tuple[str, complex]]:
        return iter(self.values)


def point_from_mapping(values: Mapping[str, complex]) -> ParamPoint:
    return ParamPoint(tuple(values.items()))
