"""End-to-end runs of the group-action examples shipped in ``cyfix/data``.

Each data file names generators, relations, a divisor class for the
invariant hypersurface Y, the elements whose fixed loci are studied, and a
block of expected values. :func:`run_example` recomputes everything from the
generators and compares against ``expect``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any, Mapping, Optional

from .ambient import (
    FixedComponent,
    InvariantSection,
    MonomialAutomorphism,
    anticanonical_multidegree,
    apply_to_section,
    base_point_check,
    burnside_count,
    common_fixed_locus,
    component_orbit_partition,
    evaluate_word,
    fixed_components,
    generate_group,
    intersect_curve_divisor,
    invariant_sections,
    order_of,
    restricts_nonzero_on,
    verify_relations,
)
from .lefschetz import admissible_primes, solve_configs, verify_config
from .localtypes import is_prime, is_terminal

__all__ = ['EXAMPLE_NAMES', 'load_example', 'run_example', 'component_on_Y', 'points_on_Y']

EXAMPLE_NAMES = ('p2p2', 'fermat5', 'p1x4-klein', 'd16xz2')


def load_example(name: str) -> dict:
    if name not in EXAMPLE_NAMES:
        raise KeyError(f'unknown example {name!r}; choose from {", ".join(EXAMPLE_NAMES)}')
    text = resources.files('cyfix').joinpath('data').joinpath(f'{name}.json').read_text()
    return json.loads(text)


def _section_from_json(terms) -> InvariantSection:
    out = []
    for mono, q in terms:
        out.append((tuple(tuple(int(e) for e in f) for f in mono), Fraction(q) % 1))
    return InvariantSection(tuple(sorted(out, key=lambda kv: kv[0], reverse=True)))


def component_on_Y(basis, c: FixedComponent, degree) -> dict:
    """How the generic member of the linear system meets one fixed component."""
    rec: dict[str, Any] = {'component': c.to_json()}
    if c.is_point():
        on = not base_point_check(basis, c)
        rec.update(kind='point', base_point=on, points_on_Y=1 if on else 0)
    elif c.dimension == 1:
        contained = not restricts_nonzero_on(basis, c)
        rec.update(kind='curve', contained=contained, intersection=intersect_curve_divisor(c, degree),
                   points_on_Y=None if contained else intersect_curve_divisor(c, degree))
    else:
        contained = not restricts_nonzero_on(basis, c)
        # a hypersurface section of a positive-dimensional variety of dim >= 2 is never finite
        rec.update(kind=f'dim{c.dimension}', contained=contained, points_on_Y=None)
    return rec


def points_on_Y(records) -> Optional[int]:
    total = 0
    for r in records:
        if r['points_on_Y'] is None:
            return None
        total += r['points_on_Y']
    return total


def _lefschetz_crosscheck(p: int, count: int) -> dict:
    adm = {a.p: a.q for a in admissible_primes(p)}
    sols = [c for r in range(1, p) for c in solve_configs(p, r, count) if c.size == count]
    terminal = [c for c in sols if all(is_terminal(t) for t, _ in c.points)]
    sizes = sorted({c.size for r in range(1, p) for c in solve_configs(p, r, count)})
    return {
        'p': p,
        'points': count,
        'terminal_count': adm.get(p),
        'matches_terminal_count': adm.get(p) == count,
        'nonsymplectic_solutions': len(sols),
        'all_terminal_solutions': len(terminal),
        'all_solution_sizes_up_to_count': sizes,
        'conti_ok': all(verify_config(c).conti_ok for c in sols),
    }


def run_example(data: Mapping) -> dict:
    """Run the full pipeline; returns a JSON-ready report with a 'checks' list."""
    names = {k: MonomialAutomorphism.from_json(v) for k, v in data['generators'].items()}
    dims = tuple(data['dims'])
    group = generate_group(names)
    report: dict[str, Any] = {'name': data['name'], 'title': data.get('title', ''), 'dims': list(dims)}

    words = {w: evaluate_word(w, names, dims) for w in data.get('elements', [])}
    report['group'] = {
        'order': group.order,
        'generators': {k: v.to_json() for k, v in names.items()},
        'element_orders': {k: order_of(v) for k, v in names.items()},
        'relations': list(data.get('relations', [])),
        'relations_hold': verify_relations(group, data.get('relations', [])),
    }

    degree = anticanonical_multidegree(dims) if data.get('divisor', 'anticanonical') == 'anticanonical' \
        else tuple(data['divisor'])
    basis = invariant_sections(group, degree)
    report['divisor'] = list(degree)
    report['invariant_basis_size'] = len(basis)
    hyper = None
    if 'hypersurface' in data:
        hyper = _section_from_json(data['hypersurface'])
        report['hypersurface_invariant'] = all(apply_to_section(g, hyper) == hyper for g in group.elements)
    y_basis = [hyper] if hyper is not None else basis

    elements = {}
    for w, g in words.items():
        comps = fixed_components(g)
        recs = [component_on_Y(y_basis, c, degree) for c in comps]
        count = points_on_Y(recs)
        rec = {
            'element': g.to_json(),
            'order': order_of(g),
            'components': recs,
            'component_count': len(comps),
            'curve_count': sum(1 for c in comps if c.dimension == 1),
            'max_dimension': max(c.dimension for c in comps),
            'curve_intersections': [r['intersection'] for r in recs if r['kind'] == 'curve'],
            'points_on_Y': count,
        }
        p = rec['order']
        if count and is_prime(p):
            rec['lefschetz'] = _lefschetz_crosscheck(p, count)
        elements[w] = rec
    report['elements'] = elements

    commons = {}
    for pair in data.get('common_fixed', []):
        a, b = (words.get(x) or evaluate_word(x, names, dims) for x in pair)
        locus = common_fixed_locus(a, b)
        commons[','.join(pair)] = {
            'components': [c.to_json() for c in locus],
            'count': len(locus),
            'all_points': all(c.is_point() for c in locus),
            'avoided_by_Y': all(c.is_point() and base_point_check(y_basis, c) for c in locus),
        }
    report['common_fixed'] = commons

    if 'burnside' in data:
        claimed = data['burnside'].get('claimed_counts', {})
        counts = {}
        used_claims = []
        for w, rec in elements.items():
            if rec['points_on_Y'] is not None:
                counts[w] = rec['points_on_Y']
            elif w in claimed:
                counts[w] = int(claimed[w])
                used_claims.append(w)
            else:
                counts[w] = None
        disjoint = all(c['avoided_by_Y'] for c in commons.values())
        burn = None
        if all(v is not None for v in counts.values()) and disjoint:
            fix = {group.elements[0]: sum(counts.values())}
            for w, v in counts.items():
                fix[words[w]] = v
            burn = burnside_count(group, fix)
        report['burnside'] = {
            'fixed_counts': counts,
            'identity_count': sum(v for v in counts.values() if v is not None),
            'claimed_inputs': used_claims,
            'disjoint_on_Y': disjoint,
            'count': burn,
        }

    if 'orbit_family' in data:
        reps = [evaluate_word(w, names, dims) for w in data['orbit_family']]
        family = sorted({group.conjugate(b, a) for a in reps for b in group.elements},
                        key=lambda x: group.index[x])
        tagged = [(a, c) for a in family for c in fixed_components(a)]
        orbits = component_orbit_partition(group, tagged)
        report['orbits'] = {
            'family_size': len(family),
            'component_count': len({c for _, c in tagged}),
            'curves': len({c for _, c in tagged if c.dimension == 1}),
            'orbit_count': len(orbits),
            'orbit_sizes': [len(o) for o in orbits],
            'orbit_dimensions': [o[0].dimension for o in orbits],
        }

    if 'free_subgroup' in data:
        sub = generate_group({k: names[k] for k in data['free_subgroup']})
        dims_max = {group.index[x]: max(c.dimension for c in fixed_components(x))
                    for x in sub.elements[1:]}
        report['free_subgroup'] = {
            'generators': list(data['free_subgroup']),
            'order': sub.order,
            'finite_fixed_locus_on_X': all(d == 0 for d in dims_max.values()),
        }

    report['checks'] = _checks(data.get('expect', {}), report)
    report['ok'] = all(c['passed'] for c in report['checks'])
    return report


def _checks(expect: Mapping, report: Mapping) -> list[dict]:
    out = []

    def add(name, passed, detail):
        out.append({'name': name, 'passed': bool(passed), 'detail': detail})

    els = report['elements']
    if 'group_order' in expect:
        add('group order', report['group']['order'] == expect['group_order'],
            f"{report['group']['order']} (expected {expect['group_order']})")
    if report['group']['relations']:
        add('relations', report['group']['relations_hold'], ', '.join(report['group']['relations']))
    for k, v in expect.get('element_orders', {}).items():
        got = report['group']['element_orders'][k]
        add(f'order of {k}', got == v, f'{got} (expected {v})')
    if 'hypersurface_invariant' in report:
        add('hypersurface invariant', report['hypersurface_invariant'], '')
    for field in ('component_count', 'curve_count', 'curve_intersections', 'points_on_Y'):
        for k, v in expect.get(field, {}).items():
            got = els[k][field]
            add(f'{field.replace("_", " ")} of {k}', got == v, f'{got} (expected {v})')
    for k, v in expect.get('lefschetz_unique', {}).items():
        lf = els[k].get('lefschetz', {})
        add(f'Lefschetz: {k} has the unique non-symplectic point count',
            lf.get('nonsymplectic_solutions', 0) >= 1 and lf.get('all_solution_sizes_up_to_count') == [v]
            and lf.get('all_terminal_solutions') == lf.get('nonsymplectic_solutions'),
            f"sizes {lf.get('all_solution_sizes_up_to_count')} (expected [{v}])")
    for k, v in expect.get('lefschetz_terminal', {}).items():
        lf = els[k].get('lefschetz', {})
        add(f'Lefschetz: {k} has the terminal point count',
            lf.get('matches_terminal_count') and lf.get('terminal_count') == v and lf.get('all_terminal_solutions', 0) >= 1,
            f"{lf.get('points')} points, terminal count {lf.get('terminal_count')}")
    for k, v in expect.get('common_fixed_count', {}).items():
        cf = report['common_fixed'][k]
        add(f'common fixed points of {k}', cf['count'] == v and cf['all_points'],
            f"{cf['count']} (expected {v})")
        add(f'common fixed points of {k} avoided by Y', cf['avoided_by_Y'], '')
    for k in expect.get('free_on_Y', []):
        rec = els[k]
        free = rec['points_on_Y'] == 0
        add(f'{k} acts freely on Y', free,
            f"fixed locus on X has max dimension {rec['max_dimension']}; points on Y: {rec['points_on_Y']}")
    if 'burnside' in expect:
        b = report.get('burnside', {})
        note = f" (uses claimed counts for {', '.join(b.get('claimed_inputs', []))})" if b.get('claimed_inputs') else ''
        add('Burnside count', b.get('count') == expect['burnside'],
            f"{b.get('count')} (expected {expect['burnside']}){note}")
    if 'min_orbits' in expect:
        o = report.get('orbits', {})
        add('component orbits', o.get('orbit_count', 0) >= expect['min_orbits'],
            f"{o.get('orbit_count')} (expected >= {expect['min_orbits']})")
    if expect.get('finite_fixed_locus_on_X') == 'free_subgroup':
        fs = report.get('free_subgroup', {})
        add('subgroup elements have finite fixed loci on X', fs.get('finite_fixed_locus_on_X'),
            f"subgroup of order {fs.get('order')}")
    return out
