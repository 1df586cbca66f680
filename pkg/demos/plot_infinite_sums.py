"""
Infinite sums for |q| < 1
=========================

For ``|q| < 1`` the sum ``sum_{l>=0} q^l [l]_q^n`` converges.  Expanding
``[l]^n`` binomially gives an exact rational value, which we compare with
the k -> infinity limit of the n = 2 closed form and with partial sums.
"""

from fractions import Fraction

from qfaulhaber import powersum_infinite, powersum_partial, square_sum_limit_closed_form

x = Fraction(9, 10)

# %%
# Exact value, shifted by one power of q to match the closed form.
value = x * powersum_infinite(2, x)
print(value, value == square_sum_limit_closed_form(x))

# %%
# Partial sums approach it from below.
for terms in (50, 100, 200, 500):
    gap = value - x * powersum_partial(2, x, terms)
    print(f"{terms:4d} terms: gap = {float(gap):.3e}")
