"""The product gh in the Klein four-group on (P^1)^4 fixes a surface.

With A(x:y) = (x:-y), gh sends (x1, x2, x3, x4) to (A x2, A x1, A x4, A x3).
A point is fixed exactly when x2 = A x1 and x4 = A x3, which leaves x1 and
x3 free. Any hypersurface meets this surface in a curve, so gh cannot act
freely on an anticanonical Y.
"""
from cyfix.ambient import (
    MonomialAutomorphism,
    compose,
    fixed_components,
    generate_group,
    invariant_sections,
    restricts_nonzero_on,
)
from cyfix.pipelines import load_example

data = load_example('p1x4-klein')
g, h = (MonomialAutomorphism.from_json(data['generators'][k]) for k in 'gh')
gh = compose(g, h)
print('gh =', gh)
for c in fixed_components(gh):
    print(f'  fixed component of dimension {c.dimension}: {c.format()}')

basis = invariant_sections(generate_group({'g': g, 'h': h}), (2, 2, 2, 2))
surface = fixed_components(gh)[0]
print(f'{len(basis)} invariant sections; some restrict nonzero to the surface: '
      f'{restricts_nonzero_on(basis, surface)}')
print('so Y cuts the surface in a curve of fixed points of gh')
