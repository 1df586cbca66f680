"""
Power sums from q-Bernoulli numbers
===================================

``(n+1) S_n(k) = sum_{l<=n} C(n+1,l) q^(kl) beta_l [k]^(n+1-l)
+ (q^((n+1)k) - 1) beta_(n+1)``.  All the ``L`` parts cancel and a
polynomial remains.  Flipping the sign of the last term breaks the identity.
"""

from qfaulhaber import (
    SumMethod,
    bernoulli_closed_form_rhs,
    classical_faulhaber,
    powersum,
)

# %%
# Every route to S_n(k) gives the same polynomial.
n, k = 3, 4
for method in SumMethod:
    print(f"{method.value:>10}: {powersum(n, k, method)}")

# %%
# With the last-term sign reversed, n = k = 1 no longer gives S_1(1) = 0.
print(bernoulli_closed_form_rhs(1, 1))
print(bernoulli_closed_form_rhs(1, 1, flipped_sign=True))

# %%
# q -> 1 gives back the classical sums, e.g. 1^2 + ... + 9^2.
print(classical_faulhaber(2, 10), (2 * 9 ** 3 + 3 * 9 ** 2 + 9) // 6)
