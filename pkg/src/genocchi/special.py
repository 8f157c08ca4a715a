"""Bernoulli numbers, Genocchi numbers, and their generalization to an
integer base a >= 2, each computable by two independent routes.

Conventions, fixed by the generating functions used here:

  t / (e^t - 1)                      B_n   (so B_1 = -1/2)
  2t / (e^t + 1)                     G_n   (so G_1 = +1)
  a*t / (1 + e^t + ... + e^{(a-1)t}) G_{n,a}

G_{n,2} = G_n, and G_{0,a} = 0 for every a because of the factor t in the
numerator. The second route expresses G_{n,a} for n >= 1 as the Bernoulli
sum  sum_{k<n} C(n,k) B_k a^k, which must agree exactly with the series
route; that equivalence is one of the verified properties, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import ConsistencyError, den, factorize, is_prime, padic_valuation, primes_up_to
from .series import EgfSeries, exp_sum_series, series_mul, series_reciprocal


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0..B_max_index. Construction checks the anchor
    values B_0 = 1 and B_1 = -1/2 and that odd indices >= 3 vanish."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a Bernoulli table needs at least B_0")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if self.values[0] != 1:
            raise ValueError(f"B_0 must be 1, got {self.values[0]}")
        if len(self.values) > 1 and self.values[1] != Fraction(-1, 2):
            raise ValueError(f"B_1 must be -1/2, got {self.values[1]}")
        for n in range(3, len(self.values), 2):
            if self.values[n] != 0:
                raise ValueError(f"B_{n} must vanish, got {self.values[n]}")

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


def _bernoulli_recurrence(max_index: int) -> list[Fraction]:
    # sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1, solved for B_n
    values = [Fraction(1)]
    for n in range(1, max_index + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += comb(n + 1, k) * values[k]
        values.append(-acc / (n + 1))
    return values


def bernoulli_table(max_index: int) -> BernoulliTable:
    """B_0..B_max_index, computed as the series reciprocal of (e^t - 1)/t
    (differential coefficient n is 1/(n+1)) and cross-checked against the
    classical recurrence before being returned."""
    if max_index < 0:
        raise ValueError(f"max_index must be nonnegative, got {max_index}")
    gen = EgfSeries(tuple(Fraction(1, n + 1) for n in range(max_index + 1)))
    by_series = series_reciprocal(gen).coeffs
    by_recurrence = _bernoulli_recurrence(max_index)
    if list(by_series) != by_recurrence:
        raise ConsistencyError(
            "series and recurrence routes to the Bernoulli numbers disagree"
        )
    return BernoulliTable(by_series)


def _integral_values(coeffs, what: str) -> list[int]:
    out = []
    for n, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ConsistencyError(f"{what} came out non-integral at index {n}: {c}")
        out.append(c.numerator)
    return out


def genocchi_table(n_max: int) -> list[int]:
    """G_0..G_n_max from 2t / (e^t + 1)."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    denom = EgfSeries((Fraction(2),) + (Fraction(1),) * n_max)
    numer = [Fraction(0)] * (n_max + 1)
    if n_max >= 1:
        numer[1] = Fraction(2)
    prod = series_mul(EgfSeries(tuple(numer)), series_reciprocal(denom))
    return _integral_values(prod.coeffs, "Genocchi number")


def genocchi(n: int) -> int:
    """The n-th Genocchi number."""
    return genocchi_table(n)[n]


def gen_genocchi_table(a: int, n_max: int, order: int | None = None) -> list[int]:
    """G_{0,a}..G_{n_max,a} from a*t / (1 + e^t + ... + e^{(a-1)t}), truncated
    at `order` (default n_max). Non-integral output aborts: integrality is a
    structural fact here, not an input condition."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if order is None:
        order = n_max
    if order < n_max:
        raise ValueError(f"order {order} is below n_max {n_max}")
    denom = exp_sum_series(a, order)
    numer = [Fraction(0)] * (order + 1)
    if order >= 1:
        numer[1] = Fraction(a)
    prod = series_mul(EgfSeries(tuple(numer)), series_reciprocal(denom))
    return _integral_values(prod.coeffs[: n_max + 1], f"generalized Genocchi (a={a})")


def gen_genocchi_egf(n: int, a: int) -> int:
    """G_{n,a} by the generating-function route."""
    return gen_genocchi_table(a, n)[n]


def gen_genocchi_bernoulli(n: int, a: int, table: BernoulliTable) -> Fraction:
    """G_{n,a} by the Bernoulli-sum route: sum_{k<n} C(n,k) B_k a^k for
    n >= 1. The result is a Fraction on purpose; its integrality is part of
    what gets verified against the generating-function route."""
    if n < 1:
        raise ValueError(f"the Bernoulli-sum route needs n >= 1, got {n}")
    if a < 2:
        raise ValueError(f"base must satisfy a >= 2, got {a}")
    if table.max_index < n - 1:
        raise ValueError(
            f"Bernoulli table covers indices up to {table.max_index}, need {n - 1}"
        )
    acc = Fraction(0)
    power = 1
    for k in range(n):
        acc += comb(n, k) * table.values[k] * power
        power *= a
    return acc


def von_staudt_clausen_sum(n: int, table: BernoulliTable) -> Fraction:
    """B_n + sum of 1/p over primes p with (p-1) dividing n, for even n >= 2.
    The sum is an integer; callers check that."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"the correction sum is defined for even n >= 2, got {n}")
    if table.max_index < n:
        raise ValueError(
            f"Bernoulli table covers indices up to {table.max_index}, need {n}"
        )
    acc = table.values[n]
    for d in range(1, n + 1):
        if n % d == 0 and is_prime(d + 1):
            acc += Fraction(1, d + 1)
    return acc


def check_valuation_bound(n: int, table: BernoulliTable, prime_bound: int = 100) -> bool:
    """Whether nu_p(B_n) >= -1 for every prime p <= prime_bound and for every
    prime dividing den(B_n). Equivalent to den(B_n) being squarefree when the
    second scan passes."""
    if table.max_index < n:
        raise ValueError(
            f"Bernoulli table covers indices up to {table.max_index}, need {n}"
        )
    x = table.values[n]
    for p in primes_up_to(prime_bound):
        if not padic_valuation(x, p) >= -1:
            return False
    for p, _ in factorize(den(x)):
        if not padic_valuation(x, p) >= -1:
            return False
    return True
