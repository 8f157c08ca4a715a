"""Exact Bernoulli and generalized Genocchi numbers, with machine
verification of their divisibility and congruence properties."""

from .exact import (
    INFINITY,
    CongruenceJudgment,
    ConsistencyError,
    Rat,
    congruent_mod,
    coprime_part,
    den,
    factorize,
    is_prime,
    num,
    padic_valuation,
    primes_up_to,
)
from .series import (
    DEFAULT_ORDER,
    EgfSeries,
    exp_sum_series,
    idc_reciprocal_scaled,
    is_idc,
    series_add,
    series_mul,
    series_reciprocal,
    series_scale_arg,
    series_shift_down,
)
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
from .verify import (
    GridFailure,
    TheoremId,
    VerificationReport,
    check_corollary2,
    check_even_genocchi_odd,
    check_gcd_corollary,
    check_lemma_n_divides,
    check_theorem1,
    check_theorem2,
    run_grid,
)
from .cache import (
    CacheCorruptionError,
    get_or_build,
    load_bernoulli_cache,
    save_bernoulli_cache,
)

__version__ = "0.1.0"

__all__ = [
    "BernoulliTable",
    "CacheCorruptionError",
    "CongruenceJudgment",
    "ConsistencyError",
    "DEFAULT_ORDER",
    "EgfSeries",
    "GridFailure",
    "INFINITY",
    "Rat",
    "TheoremId",
    "VerificationReport",
    "bernoulli_table",
    "check_corollary2",
    "check_even_genocchi_odd",
    "check_gcd_corollary",
    "check_lemma_n_divides",
    "check_theorem1",
    "check_theorem2",
    "check_valuation_bound",
    "congruent_mod",
    "coprime_part",
    "den",
    "exp_sum_series",
    "factorize",
    "gen_genocchi_bernoulli",
    "gen_genocchi_egf",
    "gen_genocchi_table",
    "genocchi",
    "genocchi_table",
    "get_or_build",
    "idc_reciprocal_scaled",
    "is_idc",
    "is_prime",
    "load_bernoulli_cache",
    "num",
    "padic_valuation",
    "primes_up_to",
    "run_grid",
    "save_bernoulli_cache",
    "series_add",
    "series_mul",
    "series_reciprocal",
    "series_scale_arg",
    "series_shift_down",
    "von_staudt_clausen_sum",
]
