"""Grid verification of arithmetic properties of the generalized Genocchi
numbers, with exact counterexample capture.

Every claim is checked with integer or rational arithmetic only; a grid
run either reports zero failures or pins each failing point with the
observed and expected values. A mutation mode perturbs a single table
value on purpose, so the harness can demonstrate that it is capable of
rejecting a false statement.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from time import perf_counter

from .exact import ConsistencyError, congruent_mod, coprime_part, num
from .series import EgfSeries, idc_reciprocal_scaled
from .special import (
    BernoulliTable,
    bernoulli_table,
    check_valuation_bound,
    gen_genocchi_bernoulli,
    gen_genocchi_egf,
    gen_genocchi_table,
    genocchi,
    genocchi_table,
    von_staudt_clausen_sum,
)

PROP1_DEFAULT_ORDER = 30
PROP1_COEFF_RANGE = (-9, 9)
PROP1_CONSTANT_RANGE = (1, 5)


class TheoremId(Enum):
    """The verifiable statements. Values double as CLI tokens."""

    LEMMA_N_DIV = "lemma_n_div"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    COROLLARY2 = "corollary2"
    GCD_COROLLARY = "gcd_corollary"
    ODD_GENOCCHI = "odd_genocchi"
    VSC_INTEGRALITY = "vsc_integrality"
    PROP1_IDC = "prop1_idc"
    PROP2_EQUIV = "prop2_equiv"


# statements that draw points from an a-range; the others ignore it
_A_BASED = frozenset(
    {
        TheoremId.LEMMA_N_DIV,
        TheoremId.THEOREM1,
        TheoremId.THEOREM2,
        TheoremId.COROLLARY2,
        TheoremId.GCD_COROLLARY,
        TheoremId.PROP2_EQUIV,
    }
)

# statements checked only at even n
_EVEN_ONLY = frozenset({TheoremId.ODD_GENOCCHI, TheoremId.VSC_INTEGRALITY})

_MIN_N = {
    TheoremId.LEMMA_N_DIV: 1,
    TheoremId.THEOREM1: 1,
    TheoremId.THEOREM2: 2,
    TheoremId.COROLLARY2: 1,
    TheoremId.GCD_COROLLARY: 2,
    TheoremId.ODD_GENOCCHI: 2,
    TheoremId.VSC_INTEGRALITY: 2,
    TheoremId.PROP1_IDC: 1,
    TheoremId.PROP2_EQUIV: 1,
}

_NEEDS_BERNOULLI = frozenset({TheoremId.VSC_INTEGRALITY, TheoremId.PROP2_EQUIV})


@dataclass(frozen=True)
class GridFailure:
    """One failing grid point. `a` is None for statements that do not range
    over a base."""

    n: int
    a: int | None
    observed: str
    expected: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one grid run. Reports of identical runs compare equal;
    elapsed_s is excluded from the comparison."""

    theorem: TheoremId
    n_range: tuple[int, int]
    a_range: tuple[int, int] | None
    checked: int
    failures: tuple[GridFailure, ...]
    notes: tuple[str, ...] = ()
    elapsed_s: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_lemma_n_divides(n: int, a: int, g: int | None = None) -> bool:
    """n divides a^(n-1) * G_{n,a}."""
    _require_point(n, a, min_n=1)
    if g is None:
        g = gen_genocchi_egf(n, a)
    return (pow(a, n - 1, n) * g) % n == 0


def check_theorem1(n: int, a: int, g: int | None = None) -> bool:
    """The greatest divisor of n coprime with a divides G_{n,a}."""
    _require_point(n, a, min_n=1)
    if g is None:
        g = gen_genocchi_egf(n, a)
    return g % coprime_part(n, a) == 0


def check_theorem2(n: int, a: int, g: int | None = None):
    """G_{n,a} = 1 - (n/2)*a (mod a), as a congruence over Q. Returns the
    full CongruenceJudgment rather than a bare bool."""
    _require_point(n, a, min_n=2)
    if g is None:
        g = gen_genocchi_egf(n, a)
    return congruent_mod(Fraction(g), 1 - Fraction(n, 2) * a, a)


def _corollary2_target(n: int, a: int) -> int:
    # odd a: G = 1 (mod a) for all n; even a: 1 for even n, 1 + a/2 for odd n
    if a % 2 == 1 or n % 2 == 0:
        return 1
    return 1 + a // 2


def check_corollary2(n: int, a: int, g: int | None = None) -> bool:
    """The residue of G_{n,a} mod a, split by the parities of a and n."""
    if a < 2:
        raise ValueError(f"base must satisfy a >= 2, got {a}")
    min_n = 1 if a % 2 == 1 else 2
    if n < min_n:
        raise ValueError(f"needs n >= {min_n} for a = {a}, got n = {n}")
    if g is None:
        g = gen_genocchi_egf(n, a)
    return (g - _corollary2_target(n, a)) % a == 0


def check_gcd_corollary(n: int, a: int, g: int | None = None) -> bool:
    """gcd(G_{n,a}, a) is 1 or 2, and is 2 exactly when a = 2 (mod 4) and
    n is odd."""
    _require_point(n, a, min_n=2)
    if g is None:
        g = gen_genocchi_egf(n, a)
    d = gcd(g, a)
    should_be_two = a % 4 == 2 and n % 2 == 1
    return d in (1, 2) and (d == 2) == should_be_two


def check_even_genocchi_odd(n: int, g: int | None = None) -> bool:
    """G_n is an odd integer for even n >= 2."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"needs even n >= 2, got {n}")
    if g is None:
        g = genocchi(n)
    return g % 2 == 1


def _require_point(n: int, a: int, min_n: int) -> None:
    if n < min_n:
        raise ValueError(f"needs n >= {min_n}, got {n}")
    if a < 2:
        raise ValueError(f"base must satisfy a >= 2, got {a}")


def _prop1_trial_series(trial: int, order: int) -> EgfSeries:
    # deterministic per trial: the trial index seeds the generator
    rng = random.Random(trial)
    lo, hi = PROP1_COEFF_RANGE
    coeffs = [rng.randint(*PROP1_CONSTANT_RANGE)]
    coeffs += [rng.randint(lo, hi) for _ in range(order)]
    return EgfSeries(tuple(Fraction(c) for c in coeffs))


def _column_n_values(theorem: TheoremId, a: int | None, n_lo: int, n_hi: int) -> range:
    if theorem in _EVEN_ONLY:
        start = n_lo if n_lo % 2 == 0 else n_lo + 1
        return range(start, n_hi + 1, 2)
    if theorem is TheoremId.COROLLARY2 and a is not None and a % 2 == 0:
        return range(max(n_lo, 2), n_hi + 1)
    return range(n_lo, n_hi + 1)


def _evaluate_column(task) -> tuple[int, list[GridFailure]]:
    """Check every n of one a-column. Shaped as a single-argument callable so
    it can run under a process pool."""
    theorem, a, n_lo, n_hi, order, mutate, bern_values = task
    table = gen_genocchi_table(a, n_hi, order)
    if mutate is not None and mutate[1] == a and mutate[0] <= n_hi:
        table = list(table)
        table[mutate[0]] += 1
    bern = BernoulliTable(bern_values) if bern_values is not None else None
    failures: list[GridFailure] = []
    checked = 0
    for n in _column_n_values(theorem, a, n_lo, n_hi):
        checked += 1
        g = table[n]
        if theorem is TheoremId.LEMMA_N_DIV:
            if not check_lemma_n_divides(n, a, g):
                r = (pow(a, n - 1, n) * g) % n
                failures.append(
                    GridFailure(n, a, f"a^(n-1)*G = {r} (mod {n}) with G = {g}", f"0 (mod {n})")
                )
        elif theorem is TheoremId.THEOREM1:
            pi = coprime_part(n, a)
            if g % pi != 0:
                failures.append(
                    GridFailure(n, a, f"G = {g} = {g % pi} (mod {pi})", f"0 (mod {pi})")
                )
        elif theorem is TheoremId.THEOREM2:
            judgment = check_theorem2(n, a, g)
            if not judgment.holds:
                diff = Fraction(g) - (1 - Fraction(n, 2) * a)
                failures.append(
                    GridFailure(
                        n, a, f"num(G - (1 - n*a/2)) = {num(diff)}", f"0 (mod {a})"
                    )
                )
        elif theorem is TheoremId.COROLLARY2:
            if not check_corollary2(n, a, g):
                target = _corollary2_target(n, a)
                failures.append(
                    GridFailure(
                        n, a, f"G = {g % a} (mod {a})", f"{target % a} (mod {a})"
                    )
                )
        elif theorem is TheoremId.GCD_COROLLARY:
            if not check_gcd_corollary(n, a, g):
                d = gcd(g, a)
                failures.append(
                    GridFailure(
                        n,
                        a,
                        f"gcd(G, a) = {d} with G = {g}",
                        "1, or 2 exactly when a = 2 (mod 4) and n is odd",
                    )
                )
        else:  # PROP2_EQUIV
            by_sum = gen_genocchi_bernoulli(n, a, bern)
            if by_sum != g:
                failures.append(
                    GridFailure(
                        n, a, f"series route {g}, Bernoulli route {by_sum}", "exact equality"
                    )
                )
    return checked, failures


def _evaluate_rowless(theorem, n_lo, n_hi, order, mutate, bern):
    """The a-independent statements: one pass over n."""
    failures: list[GridFailure] = []
    checked = 0
    if theorem is TheoremId.ODD_GENOCCHI:
        table = genocchi_table(n_hi)
        if mutate is not None:
            table = list(table)
            table[mutate[0]] += 1
        for n in _column_n_values(theorem, None, n_lo, n_hi):
            checked += 1
            g = table[n]
            if not check_even_genocchi_odd(n, g):
                failures.append(GridFailure(n, None, f"G_{n} = {g}", "an odd integer"))
    elif theorem is TheoremId.VSC_INTEGRALITY:
        for n in _column_n_values(theorem, None, n_lo, n_hi):
            checked += 1
            s = von_staudt_clausen_sum(n, bern)
            if s.denominator != 1:
                failures.append(
                    GridFailure(n, None, f"B_n + sum 1/p = {s}", "an integer")
                )
            if not check_valuation_bound(n, bern):
                failures.append(
                    GridFailure(
                        n, None, f"some nu_p(B_{n}) < -1", "nu_p >= -1 at every prime"
                    )
                )
    else:  # PROP1_IDC
        trial_order = order if order is not None else PROP1_DEFAULT_ORDER
        for trial in range(n_lo, n_hi + 1):
            checked += 1
            f = _prop1_trial_series(trial, trial_order)
            try:
                idc_reciprocal_scaled(f)
            except ConsistencyError:
                failures.append(
                    GridFailure(
                        trial,
                        None,
                        f"scaled reciprocal left the integers (trial {trial})",
                        f"integer coefficients through order {trial_order}",
                    )
                )
    return checked, failures


def run_grid(
    theorem: TheoremId,
    n_range: tuple[int, int],
    a_range: tuple[int, int] | None = None,
    *,
    order: int | None = None,
    jobs: int = 1,
    mutate: tuple[int, int] | None = None,
    bernoulli: BernoulliTable | None = None,
) -> VerificationReport:
    """Check one statement over an inclusive (n, a) grid.

    Ranges are adjusted to the statement's hypotheses (recorded in notes);
    an empty grid after adjustment is an error. `mutate` = (n, a) bumps that
    one table value by 1 before checking, to prove the harness can fail.
    Failures come back sorted by (n, a); two identical runs produce equal
    reports apart from elapsed_s.
    """
    start = perf_counter()
    notes: list[str] = []
    n_lo, n_hi = n_range
    min_n = _MIN_N[theorem]
    if n_lo < min_n:
        notes.append(f"n raised from {n_lo} to {min_n} ({theorem.value} hypothesis)")
        n_lo = min_n
    if theorem in _EVEN_ONLY and n_lo % 2 != 0:
        notes.append(f"{theorem.value} checks even n only")
    if n_lo > n_hi or not _column_n_values(theorem, None, n_lo, n_hi):
        raise ValueError(f"empty n-range for {theorem.value}: {n_range}")

    uses_a = theorem in _A_BASED
    a_lo = a_hi = None
    if uses_a:
        if a_range is None:
            raise ValueError(f"{theorem.value} needs an a-range")
        a_lo, a_hi = a_range
        if a_lo < 2:
            notes.append(f"a raised from {a_lo} to 2 (bases start at 2)")
            a_lo = 2
        if a_lo > a_hi:
            raise ValueError(f"empty a-range for {theorem.value}: {a_range}")
        if theorem is TheoremId.COROLLARY2:
            notes.append("even bases checked for n >= 2, odd bases for n >= 1")
    elif a_range is not None:
        notes.append(f"{theorem.value} does not range over a; a-range ignored")

    _validate_mutation(theorem, mutate, n_lo, n_hi, a_lo, a_hi)
    if mutate is not None:
        notes.append(f"mutation applied at (n={mutate[0]}, a={mutate[1]})")

    bern = None
    if theorem in _NEEDS_BERNOULLI:
        bern = bernoulli if bernoulli is not None else bernoulli_table(n_hi)
        needed = n_hi - 1 if theorem is TheoremId.PROP2_EQUIV else n_hi
        if bern.max_index < needed:
            raise ValueError(
                f"Bernoulli table covers indices up to {bern.max_index}, grid needs {needed}"
            )

    failures: list[GridFailure] = []
    checked = 0
    if uses_a:
        bern_values = bern.values if theorem is TheoremId.PROP2_EQUIV else None
        tasks = [
            (theorem, a, n_lo, n_hi, order, mutate, bern_values)
            for a in range(a_lo, a_hi + 1)
        ]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_evaluate_column, tasks))
        else:
            results = [_evaluate_column(t) for t in tasks]
        for col_checked, col_failures in results:
            checked += col_checked
            failures.extend(col_failures)
    else:
        checked, failures = _evaluate_rowless(theorem, n_lo, n_hi, order, mutate, bern)

    failures.sort(key=lambda fl: (fl.n, fl.a if fl.a is not None else 0))
    return VerificationReport(
        theorem=theorem,
        n_range=(n_lo, n_hi),
        a_range=(a_lo, a_hi) if uses_a else None,
        checked=checked,
        failures=tuple(failures),
        notes=tuple(notes),
        elapsed_s=perf_counter() - start,
    )


def _validate_mutation(theorem, mutate, n_lo, n_hi, a_lo, a_hi) -> None:
    if mutate is None:
        return
    if theorem in (TheoremId.VSC_INTEGRALITY, TheoremId.PROP1_IDC):
        raise ValueError(f"mutation is not supported for {theorem.value}")
    mn, ma = mutate
    if theorem is TheoremId.ODD_GENOCCHI:
        if ma != 2:
            raise ValueError("odd_genocchi tables are the a = 2 column; use a = 2")
        if not (n_lo <= mn <= n_hi) or mn % 2 != 0:
            raise ValueError(f"mutation target n = {mn} is not a checked even index")
        return
    if not (a_lo <= ma <= a_hi):
        raise ValueError(f"mutation target a = {ma} is outside [{a_lo}, {a_hi}]")
    if mn not in _column_n_values(theorem, ma, n_lo, n_hi):
        raise ValueError(f"mutation target n = {mn} is outside the checked range")
