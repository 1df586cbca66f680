"""
q-Bernoulli numbers
===================

``beta_0 = (q-1)/log q`` is not a rational function of q, so every
q-Bernoulli number is a pair ``(a, b)`` meaning ``a + b*L`` with
``L = (q-1)/log q``.  Two independent constructions agree, and the limit
``q -> 1`` gives the classical Bernoulli numbers.
"""

from qfaulhaber import (
    beta_classical_limit,
    beta_explicit,
    beta_poly,
    beta_recurrence,
    classical_bernoulli,
)

# %%
# The first few values from the umbral recurrence.
for n in range(4):
    print(f"beta_{n} = {beta_recurrence(n)}")

# %%
# The explicit binomial sum gives the same values.
print(all(beta_recurrence(n) == beta_explicit(n) for n in range(10)))

# %%
# The rational and L parts each blow up at q = 1; their combination does
# not.
for n in range(11):
    print(n, beta_classical_limit(n), classical_bernoulli(n))

# %%
# beta_n(1) = beta_n once n >= 2.
print([beta_poly(n, 1) == beta_recurrence(n) for n in range(2, 8)])
