"""Exact q-Bernoulli numbers and sums of powers of consecutive q-integers."""

from .algebra import (
    DEFAULT_ORDER_CAP,
    EpsSeries,
    IdentityError,
    OrderCapExceeded,
    OrderTooSmall,
    PoleAtOne,
    QPoly,
    QRat,
    SeriesError,
    l_series,
    laurent_at_1,
    limit_at_1,
    q,
    qrat_normalize,
    subst_power,
)
from .bernoulli import (
    L,
    BetaCache,
    LExt,
    beta_classical_limit,
    beta_difference,
    beta_explicit,
    beta_poly,
    beta_poly_alt,
    beta_recurrence,
    classical_bernoulli,
)
from .faulhaber import (
    SumMethod,
    bernoulli_closed_form_rhs,
    classical_faulhaber,
    powersum,
    powersum_bernoulli,
    powersum_via_beta_diff,
)
from .qsums import (
    WeightedSumSpec,
    power_sum_oracle,
    powersum_closed_s1,
    powersum_closed_s2,
    powersum_infinite,
    powersum_partial,
    powersum_via_recurrence,
    q_integer,
    q_integer_power,
    square_sum_limit_closed_form,
    telescoping_identity_lhs,
    weighted_power_sum,
)

__version__ = "0.1.0"
