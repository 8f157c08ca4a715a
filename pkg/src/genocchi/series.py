"""Truncated power series in exponential form.

A series is stored by its differential coefficients a_0..a_N, meaning
f(t) = sum a_n t^n / n!, so a_n is the n-th derivative of f at 0. In this
basis the product of two series is the binomial convolution
(f*g)_n = sum_k C(n,k) f_k g_{n-k}, and a series whose differential
coefficients are all integers is called an IDC series. IDC series are
closed under addition, multiplication, and argument scaling by an
integer; they are not closed under reciprocal, but a_0 / f(a_0 t) is
again IDC whenever f is (see idc_reciprocal_scaled).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import ConsistencyError

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class EgfSeries:
    """Differential coefficients a_0..a_N of a series truncated at order N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its order-0 coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]


def _require_same_order(f: EgfSeries, g: EgfSeries, op: str) -> None:
    if f.order != g.order:
        raise ValueError(f"{op} needs equal truncation orders, got {f.order} and {g.order}")


def series_add(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _require_same_order(f, g, "series_add")
    return EgfSeries(tuple(x + y for x, y in zip(f.coeffs, g.coeffs)))


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Binomial convolution: out_n = sum_k C(n,k) f_k g_{n-k}."""
    _require_same_order(f, g, "series_mul")
    out = []
    for n in range(f.order + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += comb(n, k) * f.coeffs[k] * g.coeffs[n - k]
        out.append(acc)
    return EgfSeries(tuple(out))


def series_reciprocal(f: EgfSeries) -> EgfSeries:
    """The series r with f*r = 1 up to the truncation order, by triangular
    back-substitution. Requires a nonzero constant term."""
    if f.coeffs[0] == 0:
        raise ValueError("series_reciprocal needs a nonzero constant term")
    inv0 = 1 / f.coeffs[0]
    out = [inv0]
    for n in range(1, f.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += comb(n, k) * f.coeffs[k] * out[n - k]
        out.append(-inv0 * acc)
    return EgfSeries(tuple(out))


def series_scale_arg(f: EgfSeries, c) -> EgfSeries:
    """The series of t -> f(c*t); coefficient n picks up a factor c^n."""
    c = Fraction(c)
    out = []
    power = Fraction(1)
    for a_n in f.coeffs:
        out.append(power * a_n)
        power *= c
    return EgfSeries(tuple(out))


def series_shift_down(f: EgfSeries) -> EgfSeries:
    """For f with f(0) = 0, the series of f(t)/t, one order shorter:
    coefficient m becomes a_{m+1} / (m+1)."""
    if f.coeffs[0] != 0:
        raise ValueError("series_shift_down needs a vanishing constant term")
    if f.order < 1:
        raise ValueError("series_shift_down needs order >= 1")
    return EgfSeries(tuple(f.coeffs[m + 1] / (m + 1) for m in range(f.order)))


def exp_sum_series(a: int, order: int) -> EgfSeries:
    """The series of 1 + e^t + e^{2t} + ... + e^{(a-1)t} for a >= 2; its
    differential coefficients are the power sums d_n = sum_{k<a} k^n with
    d_0 = a."""
    if a < 2:
        raise ValueError(f"exp_sum_series needs a >= 2, got {a}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [Fraction(a)]
    for n in range(1, order + 1):
        coeffs.append(Fraction(sum(k**n for k in range(1, a))))
    return EgfSeries(tuple(coeffs))


def is_idc(f: EgfSeries) -> bool:
    """Whether every differential coefficient is an integer."""
    return all(c.denominator == 1 for c in f.coeffs)


def idc_reciprocal_scaled(f: EgfSeries) -> EgfSeries:
    """The series of a_0 / f(a_0 t) where a_0 = f(0) != 0. When f is IDC the
    result is IDC as well; that closure is checked on every call."""
    if f.coeffs[0] == 0:
        raise ValueError("idc_reciprocal_scaled needs a nonzero constant term")
    a0 = f.coeffs[0]
    rec = series_reciprocal(series_scale_arg(f, a0))
    result = EgfSeries(tuple(a0 * c for c in rec.coeffs))
    if is_idc(f) and not is_idc(result):
        raise ConsistencyError(
            "scaled reciprocal of an IDC series came out non-integral"
        )
    return result
