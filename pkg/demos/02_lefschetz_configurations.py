"""Which fixed-point configurations can an automorphism of prime order have?

For a Calabi-Yau threefold the holomorphic Lefschetz formula says that the
contributions 1/det(1 - dg) of the fixed points add up to 1 - w^r, where
w^r is the trace of g on H^{0,3}. Everything here is exact arithmetic in
Q(w).
"""
from cyfix.lefschetz import (
    FixedConfig,
    admissible_primes,
    conti_check,
    contribution,
    solve_configs,
    verify_config,
)
from cyfix.localtypes import make_type

# If all fixed points are terminal, the count q must be 24p / (p^2 - 1).
print('primes where that count is an integer:', [(a.p, a.q) for a in admissible_primes(1000)])

# The solver enumerates every multiset of types, so uniqueness is a search result.
for p, r in [(2, 1), (3, 1), (3, 2)]:
    sols = solve_configs(p, r, 64)
    print(f'p={p} r={r}: {len(sols)} configuration(s) with at most 64 points -> {[str(c) for c in sols]}')

# Symplectic order 3: points of type (1,1,1) and (2,2,2) come in pairs.
for c in solve_configs(3, 0, 8):
    print('  ', c)

# One fixed point of type (1,1,1) contributes an imaginary number; its conjugate is the (2,2,2) term.
x1, x2 = contribution(make_type(3, (1, 1, 1))), contribution(make_type(3, (2, 2, 2)))
print(f'x1 = {x1}, x2 = {x2}, x1 + x2 = {x1 + x2}')

# Order 5, non-symplectic: every solution satisfies n = 5 + q2.
print()
for c in solve_configs(5, 4, 8):
    rep = verify_config(c)
    print(f'{c.size} points: {rep.counts}  {c}')

# The scalar S_0 test is only a necessary condition.
c = FixedConfig(5, 4, ((make_type(5, (4, 1, 1)), 5),))
print()
print(f'5 x (4,1,1): S_0 test {conti_check(c)}, identity holds: {verify_config(c).valid}')
