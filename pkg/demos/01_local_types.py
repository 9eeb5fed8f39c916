"""Singularity types of isolated fixed points.

A fixed point of an automorphism g of prime order p is recorded by the
exponents (a1, a2, a3) of the eigenvalues of dg. The quotient singularity
is terminal when det(dg) is itself one of the eigenvalues; the age test
gives the same answer, and we check that here on every type of order 5.
"""
from cyfix.localtypes import classify, enumerate_isolated_types, make_type, partition_order5

t = make_type(3, (1, 1, 2))
c = classify(t)
print(f'{t}: s={c.s}, terminal={c.is_terminal}, canonical={c.is_canonical}')
print('  ages by unit:', {u: str(a) for u, a in c.ages.items()})

# a Gorenstein type: the determinant is 1, so no eigenvalue can equal it
c = classify(make_type(3, (1, 1, 1)))
print(f'3:(1,1,1): gorenstein={c.is_gorenstein}, terminal={c.is_terminal}')

print()
terminal, other, symplectic = partition_order5()
print(f'order 5 has {len(enumerate_isolated_types(5))} isolated types')
print('  terminal          :', [t.exps for t in terminal])
print('  non-terminal      :', [t.exps for t in other])
print('  determinant one   :', [t.exps for t in symplectic])

for t in enumerate_isolated_types(5):
    c = classify(t)   # raises if the two terminal criteria ever disagree
print('determinant and age criteria agree on all of them')
