"""
q-integers and sums of their powers
===================================

``[k]_q = 1 + q + ... + q^(k-1)`` reduces to ``k`` at ``q = 1``.  Sums such
as ``S_n(k) = sum_{l<k} q^l [l]_q^n`` are polynomials in q with nonnegative
integer coefficients, and setting ``q = 1`` recovers the ordinary power sum.
"""

from qfaulhaber import (
    limit_at_1,
    power_sum_oracle,
    powersum_closed_s1,
    powersum_closed_s2,
    powersum_via_recurrence,
    q,
    q_integer,
    telescoping_identity_lhs,
)

# %%
# A few q-integers and their value at q = 1.
for k in range(6):
    print(f"[{k}]_q = {q_integer(k)}    -> {limit_at_1(q_integer(k))}")

# %%
# The first power sums, expanded by brute force.
for n in range(4):
    print(f"S_{n}(4) = {power_sum_oracle(n, 4)}")

# %%
# Closed forms for n = 1 and n = 2.  The n = 2 form carries one extra
# factor of q.
k = 5
print(powersum_closed_s1(k) == power_sum_oracle(1, k))
print(powersum_closed_s2(k) == q * power_sum_oracle(2, k))

# %%
# Telescoping: sum_{i<n} C(n,i) sum_l q^((n-i) l) [l]^i = [k]^n.  Only the
# weight q^l is raised to the power n - i.
n, k = 3, 3
print(telescoping_identity_lhs(n, k) == q_integer(k) ** n)
print("at q = 2:", telescoping_identity_lhs(n, k)(2))

# %%
# Solving the telescoping identity for its last term gives a recurrence.
print(powersum_via_recurrence(4, 4))
print(powersum_via_recurrence(4, 4) == power_sum_oracle(4, 4))
