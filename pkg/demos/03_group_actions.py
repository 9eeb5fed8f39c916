"""Group actions on products of projective spaces, end to end.

Each worked example is a JSON file under cyfix/data. The pipeline builds
the group, finds the fixed components of each listed element, intersects
them with an invariant anticanonical hypersurface Y, and compares the
result with the expected values stored in the same file.
"""
from cyfix.pipelines import EXAMPLE_NAMES, load_example, run_example

for name in EXAMPLE_NAMES:
    rep = run_example(load_example(name))
    print(f'== {name}: {rep["title"]}')
    print(f'   group of order {rep["group"]["order"]}, invariant sections of degree '
          f'{rep["divisor"]}: {rep["invariant_basis_size"]}')
    for w, el in rep['elements'].items():
        kinds = [c['kind'] for c in el['components']]
        print(f'   Fix({w}) on X: {kinds}; points on Y: {el["points_on_Y"]}')
    if 'orbits' in rep:
        o = rep['orbits']
        print(f'   {o["component_count"]} fixed components of the reflections fall into '
              f'{o["orbit_count"]} orbits of sizes {o["orbit_sizes"]}')
    for c in rep['checks']:
        if not c['passed']:
            print(f'   check failed: {c["name"]} ({c["detail"]})')
    print()
