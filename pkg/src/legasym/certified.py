"""Result carriers: a value plus a certified absolute error bound."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class ExpansionRegime(str, enum.Enum):
    """Which expansion family produced a value."""

    LARGE_NU_INVERSE_FACTORIAL = "large-nu-inverse-factorial"
    LARGE_NU_FACTORIAL = "large-nu-factorial"
    LARGE_MU = "large-mu"
    TERMINATING = "terminating-exact"


# Rounding cushion added on top of the certified truncation bound: the
# theorems bound the mathematical remainder; evaluating the partial sums
# in binary64 adds rounding noise of a few eps times the magnitude scale.
ROUNDING_SLOP = 1e-13


@dataclass(frozen=True)
class BoundBreakdown:
    """One remainder contribution before and after prefactor propagation.

    final is inner_bound * prefactor_mag exactly; CertifiedValue.abs_bound
    sums the finals of all contributions and adds the rounding cushion.
    """

    inner_bound: float
    prefactor_mag: float

    @property
    def final(self) -> float:
        return self.inner_bound * self.prefactor_mag


@dataclass(frozen=True)
class CertifiedValue:
    """An evaluated function value with a certified absolute error bound.

    abs_bound bounds |value - true value| (prefactor magnitudes included).
    terms holds the truncation orders (N, M) — M is None for single-series
    expansions.  terminated means every neglected coefficient vanishes
    exactly, so abs_bound is pure rounding slop (<= 1e-12 relative to the
    magnitude scale).
    """

    value: complex
    abs_bound: float
    regime: ExpansionRegime
    terms: tuple[int, int | None]
    terminated: bool = False
    bound_kind: str | None = None
    breakdown: tuple[BoundBreakdown, ...] = field(default=())
    scale: float = 0.0

    def __post_init__(self):
        if self.abs_bound < 0.0:
            raise ValueError("abs_bound must be nonnegative")


def assemble(value: complex,
             pieces: list[tuple[float, float]],
             regime: ExpansionRegime,
             terms: tuple[int, int | None],
             terminated: bool,
             mag_scale: float,
             bound_kind: str | None = None) -> CertifiedValue:
    """Build a CertifiedValue from (inner_bound, prefactor_mag) pieces."""
    breakdown = tuple(BoundBreakdown(b, p) for b, p in pieces)
    total = sum(x.final for x in breakdown)
    bound = total + ROUNDING_SLOP * mag_scale
    if terminated:
        regime = ExpansionRegime.TERMINATING
    return CertifiedValue(value=value, abs_bound=bound, regime=regime,
                          terms=terms, terminated=terminated,
                          bound_kind=bound_kind, breakdown=breakdown,
                          scale=mag_scale)


def rescale(cv: CertifiedValue, factor: complex,
            bound_kind: str | None = None) -> CertifiedValue:
    """Exact multiplication of a certified value by a known constant."""
    f = abs(factor)
    return CertifiedValue(value=cv.value * factor,
                          abs_bound=cv.abs_bound * f,
                          regime=cv.regime, terms=cv.terms,
                          terminated=cv.terminated,
                          bound_kind=bound_kind or cv.bound_kind,
                          breakdown=tuple(
                              BoundBreakdown(b.inner_bound,
                                             b.prefactor_mag * f)
                              for b in cv.breakdown),
                          scale=cv.scale * f)


def combine(value: complex,
            parts: list[tuple[complex, CertifiedValue]],
            regime: ExpansionRegime,
            terms: tuple[int, int | None],
            bound_kind: str | None = None) -> CertifiedValue:
    """Linear combination sum_k c_k * parts_k with triangle-inequality bound."""
    bound = 0.0
    scale = 0.0
    breakdown: list[BoundBreakdown] = []
    terminated = all(cv.terminated for _, cv in parts)
    for c, cv in parts:
        f = abs(c)
        bound += f * cv.abs_bound
        scale += f * cv.scale
        breakdown.extend(BoundBreakdown(b.inner_bound, b.prefactor_mag * f)
                         for b in cv.breakdown)
    if terminated:
        regime = ExpansionRegime.TERMINATING
    return CertifiedValue(value=value, abs_bound=bound, regime=regime,
                          terms=terms, terminated=terminated,
                          bound_kind=bound_kind, breakdown=tuple(breakdown),
                          scale=scale)
