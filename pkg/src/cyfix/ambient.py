"""Monomial automorphisms of products of projective spaces.

An automorphism of X = P^n1 x ... x P^nm is written g = (A_1, ..., A_m) o sigma,
where sigma permutes the factors and each A_i is a generalized permutation
matrix whose nonzero entries are roots of unity. The action is

    (g . x)_i = A_i x_sigma(i)

so factor i of the image is read off factor sigma(i) of the source.

Roots of unity are stored additively as exponents in Q/Z (a Fraction q in
[0, 1) stands for exp(2 pi i q)). Composition never needs addition of field
elements; cyclotomic arithmetic is only used when sections are evaluated.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .exactnum import CyclotomicNumber, cyc_root, cyc_zero

__all__ = [
    'Ambient',
    'MonomialMatrix',
    'MonomialAutomorphism',
    'FixedComponent',
    'FiniteActionGroup',
    'InvariantSection',
    'AmbientError',
    'identity',
    'compose',
    'inverse',
    'power',
    'order_of',
    'generate_group',
    'evaluate_word',
    'verify_relations',
    'fixed_components',
    'apply_to_component',
    'common_fixed_locus',
    'anticanonical_multidegree',
    'intersect_curve_divisor',
    'invariant_sections',
    'apply_to_section',
    'evaluate_section',
    'base_point_check',
    'restricts_nonzero_on',
    'burnside_count',
    'component_orbits',
    'component_orbit_partition',
    'DEFAULT_GROUP_CAP',
]

DEFAULT_GROUP_CAP = 512

Root = Fraction


class AmbientError(ValueError):
    pass


def _t(q) -> Fraction:
    return Fraction(q) % 1


def _lcm_denominators(qs: Iterable[Fraction]) -> int:
    out = 1
    for q in qs:
        out = out * q.denominator // math.gcd(out, q.denominator)
    return out


@dataclass(frozen=True)
class Ambient:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise AmbientError('an ambient needs at least one factor')
        if any(d < 1 for d in dims):
            raise AmbientError(f'factor dimensions must be positive, got {dims}')
        object.__setattr__(self, 'dims', dims)

    @property
    def m(self) -> int:
        return len(self.dims)

    def __str__(self):
        return ' x '.join(f'P^{d}' for d in self.dims)


# -- generalized permutation matrices --

@dataclass(frozen=True)
class MonomialMatrix:
    """Row j maps x to exp(2 pi i roots[j]) * x[cols[j]]."""
    cols: tuple[int, ...]
    roots: tuple[Fraction, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.cols)
        if sorted(cols) != list(range(len(cols))):
            raise AmbientError(f'not a permutation pattern: {cols}')
        if len(self.roots) != len(cols):
            raise AmbientError('cols and roots differ in length')
        object.__setattr__(self, 'cols', cols)
        object.__setattr__(self, 'roots', tuple(_t(q) for q in self.roots))

    @property
    def size(self) -> int:
        return len(self.cols)

    @classmethod
    def identity(cls, size: int) -> 'MonomialMatrix':
        return cls(tuple(range(size)), (Fraction(0),) * size)

    @classmethod
    def diagonal(cls, roots: Sequence) -> 'MonomialMatrix':
        return cls(tuple(range(len(roots))), tuple(roots))

    @classmethod
    def from_entries(cls, size: int, entries: Iterable[tuple[int, int, int]], root_order: int) -> 'MonomialMatrix':
        cols: list[Optional[int]] = [None] * size
        roots: list[Fraction] = [Fraction(0)] * size
        for row, col, e in entries:
            if not (0 <= row < size and 0 <= col < size):
                raise AmbientError(f'entry ({row}, {col}) outside a {size}x{size} matrix')
            if cols[row] is not None:
                raise AmbientError(f'row {row} has two nonzero entries')
            cols[row] = col
            roots[row] = Fraction(e, root_order)
        if any(c is None for c in cols):
            raise AmbientError('every row needs exactly one nonzero entry')
        return cls(tuple(cols), tuple(roots))

    def to_entries(self) -> tuple[int, list[list[int]]]:
        n = _lcm_denominators(self.roots)
        return n, [[j, c, int(q * n)] for j, (c, q) in enumerate(zip(self.cols, self.roots))]

    def __matmul__(self, other: 'MonomialMatrix') -> 'MonomialMatrix':
        if self.size != other.size:
            raise AmbientError('matrix sizes differ')
        cols = tuple(other.cols[c] for c in self.cols)
        roots = tuple(q + other.roots[c] for c, q in zip(self.cols, self.roots))
        return MonomialMatrix(cols, roots)

    def inverse(self) -> 'MonomialMatrix':
        cols = [0] * self.size
        roots = [Fraction(0)] * self.size
        for j, (c, q) in enumerate(zip(self.cols, self.roots)):
            cols[c] = j
            roots[c] = -q
        return MonomialMatrix(tuple(cols), tuple(roots))

    def normalized(self) -> 'MonomialMatrix':
        """Projective representative: the entry in row 0 becomes 1."""
        q0 = self.roots[0]
        return MonomialMatrix(self.cols, tuple(q - q0 for q in self.roots))

    def apply(self, vec: Sequence):
        """Apply to a vector in exponent form (None for zero coordinates).

        Entries may be bare roots or (label, root) pairs; the root is shifted.
        """
        out = []
        for c, q in zip(self.cols, self.roots):
            v = vec[c]
            if v is None:
                out.append(None)
            elif isinstance(v, tuple):
                out.append((v[0], _t(v[1] + q)))
            else:
                out.append(_t(v + q))
        return tuple(out)

    def eigenvectors(self) -> list[tuple[Fraction, tuple[Optional[Fraction], ...]]]:
        """Eigenpairs (mu, v), one per coordinate cycle and root of the cycle product.

        For a coordinate cycle of length L with entry product exp(2 pi i E),
        the eigenvalues are the L-th roots (E + m) / L; each eigenvector is
        supported on its cycle, so eigenvectors with equal mu have disjoint
        supports.
        """
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.cols[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.cols[j]
            L = len(cyc)
            E = sum((self.roots[j] for j in cyc), Fraction(0))
            for m in range(L):
                mu = _t((E + m) / L)
                vec: list[Optional[Fraction]] = [None] * self.size
                q = Fraction(0)
                for j in cyc:
                    vec[j] = q
                    # M x = mu x  gives  x[cols[j]] = mu x[j] / exp(roots[j])
                    q = _t(q + mu - self.roots[j])
                out.append((mu, tuple(vec)))
        return out


# -- automorphisms --

class MonomialAutomorphism:
    """Element of Aut(P^n1 x ... x P^nm) of the form (A_i) o sigma.

    ``sigma[i]`` is the (0-based) factor that feeds factor i. Matrices are
    stored projectively normalized, so structural equality is equality in
    the automorphism group.
    """

    __slots__ = ('dims', 'sigma', 'mats', '_hash')

    def __init__(self, dims: Sequence[int], sigma: Sequence[int], mats: Sequence[MonomialMatrix]):
        dims = Ambient(tuple(dims)).dims
        sigma = tuple(int(s) for s in sigma)
        if sorted(sigma) != list(range(len(dims))):
            raise AmbientError(f'sigma {sigma} is not a permutation of {len(dims)} factors')
        if len(mats) != len(dims):
            raise AmbientError('one matrix per factor is required')
        for i, (s, a) in enumerate(zip(sigma, mats)):
            if dims[s] != dims[i]:
                raise AmbientError(f'sigma sends a P^{dims[s]} to a P^{dims[i]}')
            if a.size != dims[i] + 1:
                raise AmbientError(f'matrix {i} has size {a.size}, expected {dims[i] + 1}')
        object.__setattr__(self, 'dims', dims)
        object.__setattr__(self, 'sigma', sigma)
        object.__setattr__(self, 'mats', tuple(a.normalized() for a in mats))
        object.__setattr__(self, '_hash', hash((dims, sigma, self.mats)))

    def __setattr__(self, name, value):
        raise AttributeError('MonomialAutomorphism is immutable')

    @classmethod
    def from_cycles(cls, dims: Sequence[int], cycles: Iterable[Sequence[int]] = (),
                    mats: Optional[Sequence[Optional[MonomialMatrix]]] = None) -> 'MonomialAutomorphism':
        """Build from 1-based cycle notation, e.g. cycles=[(1, 3, 2, 4)].

        The cycles describe sigma itself: (a b ...) means sigma(a) = b, so
        position a of the image reads factor b.
        """
        m = len(dims)
        sigma = list(range(m))
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                sigma[a] = b
        mats = list(mats) if mats is not None else [None] * m
        mats = [a if a is not None else MonomialMatrix.identity(d + 1) for a, d in zip(mats, dims)]
        return cls(dims, sigma, mats)

    @property
    def ambient(self) -> Ambient:
        return Ambient(self.dims)

    @property
    def root_order(self) -> int:
        return _lcm_denominators(q for a in self.mats for q in a.roots)

    def is_identity(self) -> bool:
        return self == identity(self.dims)

    def __eq__(self, other):
        if not isinstance(other, MonomialAutomorphism):
            return NotImplemented
        return self.dims == other.dims and self.sigma == other.sigma and self.mats == other.mats

    def __hash__(self):
        return self._hash

    def __mul__(self, other: 'MonomialAutomorphism') -> 'MonomialAutomorphism':
        return compose(self, other)

    def __pow__(self, k: int) -> 'MonomialAutomorphism':
        return power(self, k)

    def sort_key(self):
        return (self.sigma, tuple((a.cols, a.roots) for a in self.mats))

    def __repr__(self):
        perm = [s + 1 for s in self.sigma]
        mats = []
        for a in self.mats:
            if a == MonomialMatrix.identity(a.size):
                mats.append('id')
            else:
                mats.append('[' + ' '.join(f'{c}:{q}' for c, q in zip(a.cols, a.roots)) + ']')
        return f'({", ".join(mats)}) o {perm}'

    def to_json(self) -> dict:
        mats = []
        for a in self.mats:
            n, entries = a.to_entries()
            mats.append({'size': a.size, 'entries': entries, 'root_order': n})
        # one-line notation of the factor permutation, 1-based: position i reads factor sigma(i)
        return {'dims': list(self.dims), 'sigma': [s + 1 for s in self.sigma], 'mats': mats}

    @classmethod
    def from_json(cls, data: Mapping) -> 'MonomialAutomorphism':
        dims = [int(d) for d in data['dims']]
        if 'cycles' in data:
            base = cls.from_cycles(dims, data['cycles'])
            sigma = base.sigma
        else:
            sigma = [int(s) - 1 for s in data.get('sigma', range(1, len(dims) + 1))]
        raw = data.get('mats')
        if raw is None:
            raw = [None] * len(dims)
        mats = []
        for d, spec in zip(dims, raw):
            if spec is None:
                mats.append(MonomialMatrix.identity(d + 1))
            else:
                mats.append(MonomialMatrix.from_entries(int(spec.get('size', d + 1)),
                                                        [tuple(e) for e in spec['entries']],
                                                        int(spec.get('root_order', 1))))
        return cls(dims, sigma, mats)


def identity(dims: Sequence[int]) -> MonomialAutomorphism:
    dims = tuple(dims)
    return MonomialAutomorphism(dims, range(len(dims)), [MonomialMatrix.identity(d + 1) for d in dims])


def compose(g: MonomialAutomorphism, h: MonomialAutomorphism) -> MonomialAutomorphism:
    """g o h: (g h x)_i = A_i B_sigma_g(i) x_sigma_h(sigma_g(i))."""
    if g.dims != h.dims:
        raise AmbientError(f'ambient mismatch: {g.dims} vs {h.dims}')
    sigma = tuple(h.sigma[s] for s in g.sigma)
    mats = [a @ h.mats[s] for a, s in zip(g.mats, g.sigma)]
    return MonomialAutomorphism(g.dims, sigma, mats)


def inverse(g: MonomialAutomorphism) -> MonomialAutomorphism:
    m = len(g.dims)
    sigma = [0] * m
    mats: list[Optional[MonomialMatrix]] = [None] * m
    for i, s in enumerate(g.sigma):
        # x_s = A_i^{-1} y_i
        sigma[s] = i
        mats[s] = g.mats[i].inverse()
    return MonomialAutomorphism(g.dims, sigma, mats)


def power(g: MonomialAutomorphism, k: int) -> MonomialAutomorphism:
    base = g if k >= 0 else inverse(g)
    result = identity(g.dims)
    k = abs(k)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def order_of(g: MonomialAutomorphism, cap: int = DEFAULT_GROUP_CAP) -> int:
    if cap < 1:
        raise ValueError('cap must be at least 1')
    e = identity(g.dims)
    x = g
    for k in range(1, cap + 1):
        if x == e:
            return k
        x = compose(x, g)
    raise AmbientError(f'order exceeds cap {cap}')


@dataclass
class FiniteActionGroup:
    elements: list[MonomialAutomorphism]
    table: list[list[int]]
    generators: dict[str, MonomialAutomorphism]
    index: dict[MonomialAutomorphism, int] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: MonomialAutomorphism, b: MonomialAutomorphism) -> MonomialAutomorphism:
        return self.elements[self.table[self.index[a]][self.index[b]]]

    def inv(self, a: MonomialAutomorphism) -> MonomialAutomorphism:
        i = self.index[a]
        row = self.table[i]
        return self.elements[row.index(0)]

    def conjugate(self, b: MonomialAutomorphism, a: MonomialAutomorphism) -> MonomialAutomorphism:
        """b a b^-1."""
        return self.mul(self.mul(b, a), self.inv(b))


def _named(gens) -> dict[str, MonomialAutomorphism]:
    if isinstance(gens, Mapping):
        return dict(gens)
    gens = list(gens)
    if len(gens) > 26:
        raise ValueError('too many unnamed generators')
    return {chr(ord('a') + i): g for i, g in enumerate(gens)}


def generate_group(gens, cap: int = DEFAULT_GROUP_CAP) -> FiniteActionGroup:
    """Closure of the generators under composition, identity first, breadth-first order."""
    named = _named(gens)
    gl = list(named.values())
    if not gl:
        raise ValueError('at least one generator is required')
    dims = gl[0].dims
    if any(g.dims != dims for g in gl):
        raise AmbientError('generators act on different ambients')
    e = identity(dims)
    elements = [e]
    index = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gl:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise AmbientError(f'group order exceeds cap {cap}')
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    table = [[index[compose(a, b)] for b in elements] for a in elements]
    return FiniteActionGroup(elements, table, named, index)


_TOKEN = re.compile(r'\s*(?:([A-Za-z])\s*(?:\^\s*\{?\s*(-?\d+)\s*\}?)?|(1))\s*')


def evaluate_word(word: str, names: Mapping[str, MonomialAutomorphism],
                  dims: Optional[Sequence[int]] = None) -> MonomialAutomorphism:
    """Evaluate a word such as 'g^3 k h^-1' ('1' is the identity)."""
    if dims is None:
        dims = next(iter(names.values())).dims
    result = identity(dims)
    pos = 0
    word = word.strip()
    if not word:
        raise ValueError('empty word')
    while pos < len(word):
        m = _TOKEN.match(word, pos)
        if not m or m.end() == pos:
            raise ValueError(f'cannot parse word {word!r} at position {pos}')
        sym, exp, one = m.groups()
        if sym is not None:
            if sym not in names:
                raise KeyError(f'unknown generator symbol {sym!r}')
            result = compose(result, power(names[sym], int(exp) if exp else 1))
        pos = m.end()
    return result


def verify_relations(group: FiniteActionGroup, relations: Iterable[str],
                     names: Optional[Mapping[str, MonomialAutomorphism]] = None) -> bool:
    """True iff every relation holds; 'a=b=c' chains, a bare word means '= 1'."""
    names = dict(names) if names is not None else group.generators
    for g in names.values():
        if g not in group:
            raise AmbientError(f'generator {g!r} is not in the group')
    dims = group.elements[0].dims
    for rel in relations:
        sides = [s for s in rel.split('=')]
        if len(sides) == 1:
            sides.append('1')
        values = [evaluate_word(s, names, dims) for s in sides]
        if any(v != values[0] for v in values[1:]):
            return False
    return True


# -- fixed loci --

Coord = Optional[tuple[int, Fraction]]


class FixedComponent:
    """A linear component of a fixed locus, given by a monomial parametrization.

    ``coords[i][j]`` is None (coordinate identically zero) or (b, q), meaning
    x_ij = exp(2 pi i q) * t_b. Parameters are grouped into ``blocks``; each
    block is a projective space P^(len-1), and the component is the image of
    the product of the blocks. The stored form is canonical, so two
    components compare equal iff they are the same subvariety.
    """

    __slots__ = ('dims', 'coords', 'blocks', 'description', '_key')

    def __init__(self, dims: Sequence[int], coords: Sequence[Sequence[Coord]], description: str = ''):
        dims = tuple(dims)
        canon, blocks, _ = _canonicalize(dims, coords)
        object.__setattr__(self, 'dims', dims)
        object.__setattr__(self, 'coords', canon)
        object.__setattr__(self, 'blocks', blocks)
        object.__setattr__(self, 'description', description)
        object.__setattr__(self, '_key', (dims, canon))

    def __setattr__(self, name, value):
        raise AttributeError('FixedComponent is immutable')

    @property
    def dimension(self) -> int:
        return sum(len(b) - 1 for b in self.blocks)

    def block_of_factor(self, i: int) -> Optional[int]:
        for c in self.coords[i]:
            if c is not None:
                for k, b in enumerate(self.blocks):
                    if c[0] in b:
                        return k
        return None

    @property
    def multidegree(self) -> Optional[tuple[int, ...]]:
        """Degrees against the hyperplane class of each factor; defined for dimension <= 1."""
        if self.dimension > 1:
            return None
        return tuple(1 if len(self.blocks[self.block_of_factor(i)]) == 2 else 0
                     for i in range(len(self.dims)))

    def is_point(self) -> bool:
        return self.dimension == 0

    def point(self) -> tuple[tuple[Optional[Fraction], ...], ...]:
        """Coordinates of a dimension-0 component in exponent form."""
        if not self.is_point():
            raise AmbientError('component is not a point')
        return tuple(tuple(None if c is None else c[1] for c in f) for f in self.coords)

    def __eq__(self, other):
        if not isinstance(other, FixedComponent):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def sort_key(self):
        return (self.dimension, tuple(tuple((2, 0, 0) if c is None else (1, c[0], c[1]) for c in f)
                                      for f in self.coords))

    def __repr__(self):
        return f'FixedComponent(dim={self.dimension}, {self.format()})'

    def format(self) -> str:
        names = {}
        for k, b in enumerate(self.blocks):
            for idx, p in enumerate(b):
                names[p] = f't{k}' if len(b) == 1 else f't{k}{idx}'
        out = []
        for f in self.coords:
            parts = []
            for c in f:
                if c is None:
                    parts.append('0')
                    continue
                b, q = c
                if len(self._block(b)) > 1:
                    coef = '' if q == 0 else ('-' if q == Fraction(1, 2) else f'e({q})')
                    parts.append(coef + names[b])
                else:
                    parts.append('1' if q == 0 else ('-1' if q == Fraction(1, 2) else f'e({q})'))
            out.append('(' + ':'.join(parts) + ')')
        return ' x '.join(out)

    def _block(self, b):
        for blk in self.blocks:
            if b in blk:
                return blk
        return ()

    def to_json(self) -> dict:
        return {
            'dimension': self.dimension,
            'multidegree': list(self.multidegree) if self.multidegree is not None else None,
            'blocks': [len(b) for b in self.blocks],
            'coords': [[None if c is None else [c[0], [c[1].numerator, c[1].denominator]] for c in f]
                       for f in self.coords],
            'text': self.format(),
            'description': self.description,
        }


def _canonicalize(dims, coords):
    """Normal form of a monomial parametrization.

    Returns (coords, blocks, subst) where subst maps each old parameter of a
    positive-dimensional block to (new parameter, shift) with
    t_new = exp(2 pi i shift) * t_old.
    """
    coords = [list(f) for f in coords]
    if len(coords) != len(dims) or any(len(f) != d + 1 for f, d in zip(coords, dims)):
        raise AmbientError('coordinate data does not match the ambient')
    # parameters sharing a factor belong to one projective block
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    factor_params = []
    for f in coords:
        ps = []
        for c in f:
            if c is not None and c[0] not in ps:
                ps.append(c[0])
        if not ps:
            raise AmbientError('a factor has all coordinates zero')
        for p in ps:
            parent.setdefault(p, p)
        for p in ps[1:]:
            parent[find(p)] = find(ps[0])
        factor_params.append(ps)
    groups: dict = {}
    for p in parent:
        groups.setdefault(find(p), set()).add(p)
    for i, ps in enumerate(factor_params):
        if len({find(p) for p in ps}) > 1:
            raise AmbientError('a factor mixes parameters of different blocks')

    # (first factor, first coordinate) orders blocks; single-parameter blocks
    # are points and are split per factor so linkage carries no meaning
    entries = []
    for root, ps in groups.items():
        factors = [i for i, fp in enumerate(factor_params) if find(fp[0]) == root]
        if len(ps) == 1:
            for i in factors:
                entries.append((i, 0, ('pt', i), None))
        else:
            i0 = factors[0]
            first = {}
            for j, c in enumerate(coords[i0]):
                if c is not None and c[0] not in first:
                    first[c[0]] = (j, c[1])
            if set(first) != ps:
                raise AmbientError('block parameters missing from the first factor of the block')
            entries.append((i0, min(j for j, _ in first.values()), ('blk', root), (ps, first)))
    entries.sort(key=lambda e: (e[0], e[1]))

    new_coords = [list(f) for f in coords]
    blocks = []
    subst = {}
    nxt = 0
    for i0, _, kind, data in entries:
        if kind[0] == 'pt':
            i = kind[1]
            label = nxt
            nxt += 1
            blocks.append((label,))
            new_coords[i] = [None if c is None else (label, c[1]) for c in coords[i]]
        else:
            ps, first = data
            order = sorted(ps, key=lambda p: first[p][0])
            labels = []
            for p in order:
                subst[p] = (nxt, -first[p][1])
                labels.append(nxt)
                nxt += 1
            blocks.append(tuple(labels))
            for i, fp in enumerate(factor_params):
                if fp[0] in ps:
                    new_coords[i] = [None if c is None else (subst[c[0]][0], _t(c[1] + subst[c[0]][1]))
                                     for c in coords[i]]
    # per-factor projective scaling: first nonzero coordinate gets root 0
    final = []
    for f in new_coords:
        q0 = next(c[1] for c in f if c is not None)
        final.append(tuple(None if c is None else (c[0], _t(c[1] - q0)) for c in f))
    return tuple(final), tuple(blocks), subst


def _cycles(sigma: Sequence[int]) -> list[list[int]]:
    """Cycles i0, sigma(i0), sigma(sigma(i0)), ..."""
    seen = set()
    out = []
    for i in range(len(sigma)):
        if i in seen:
            continue
        cyc = [i]
        seen.add(i)
        j = sigma[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = sigma[j]
        out.append(cyc)
    return out


def fixed_components(g: MonomialAutomorphism) -> list[FixedComponent]:
    """Irreducible components of Fix(g) on the ambient.

    On a sigma-cycle i0 -> i1 = sigma(i0) -> ..., a fixed point satisfies
    x_i0 ~ M x_i0 with M = A_i0 A_i1 ... A_i(l-1), and the remaining factors
    are determined by x_ik = A_ik ... A_i(l-1) x_i0. Each choice of an
    eigenvalue of M on every sigma-cycle gives one component.
    """
    dims = g.dims
    per_cycle = []
    label = 0
    for cyc in _cycles(g.sigma):
        M = MonomialMatrix.identity(dims[cyc[0]] + 1)
        for i in cyc:
            M = M @ g.mats[i]
        eig: dict[Fraction, list] = {}
        for mu, vec in M.eigenvectors():
            eig.setdefault(mu, []).append(vec)
        options = []
        for mu in sorted(eig):
            vecs = eig[mu]
            x0: list[Coord] = [None] * (dims[cyc[0]] + 1)
            for v in vecs:
                for j, q in enumerate(v):
                    if q is not None:
                        x0[j] = (label, q)
                label += 1
            assign = {cyc[0]: tuple(x0)}
            cur = tuple(x0)
            for i in reversed(cyc[1:]):
                cur = g.mats[i].apply(cur)
                assign[i] = cur
            options.append((mu, assign))
        per_cycle.append((cyc, options))

    comps = []
    for choice in itertools.product(*[opts for _, opts in per_cycle]):
        coords: list = [None] * len(dims)
        desc = []
        for (cyc, _), (mu, assign) in zip(per_cycle, choice):
            for i, v in assign.items():
                coords[i] = v
            desc.append(f'cycle {tuple(i + 1 for i in cyc)}: eigenvalue e({mu})')
        comps.append(FixedComponent(dims, coords, '; '.join(desc)))
    comps.sort(key=FixedComponent.sort_key)
    return comps


def apply_to_component(g: MonomialAutomorphism, c: FixedComponent) -> FixedComponent:
    if g.dims != c.dims:
        raise AmbientError('ambient mismatch')
    coords = [g.mats[i].apply(c.coords[s]) for i, s in enumerate(g.sigma)]
    return FixedComponent(c.dims, coords, c.description)


def _induced_action(h: MonomialAutomorphism, c: FixedComponent) -> Optional[MonomialAutomorphism]:
    """Action of h on the parameter space of c, when h maps c onto itself.

    Only blocks of positive dimension carry parameters; returns None when
    c has none (c is a point).
    """
    coords = [h.mats[i].apply(c.coords[s]) for i, s in enumerate(h.sigma)]
    canon, blocks, subst = _canonicalize(c.dims, coords)
    if canon != c.coords:
        raise AmbientError('element does not preserve the component')
    big = [b for b in c.blocks if len(b) > 1]
    if not big:
        return None
    where = {p: (k, j) for k, b in enumerate(big) for j, p in enumerate(b)}
    # h x(t) = x(t') with t'_new = exp(2 pi i shift) t_old
    sigma = [0] * len(big)
    rows: list[list] = [[None] * len(b) for b in big]
    for old, (new, shift) in subst.items():
        k_old, j_old = where[old]
        k_new, j_new = where[new]
        sigma[k_new] = k_old
        rows[k_new][j_new] = (j_old, shift)
    mats = [MonomialMatrix(tuple(r[0] for r in row), tuple(r[1] for r in row)) for row in rows]
    return MonomialAutomorphism([len(b) - 1 for b in big], sigma, mats)


def common_fixed_locus(g: MonomialAutomorphism, h: MonomialAutomorphism) -> list[FixedComponent]:
    """Fix(g) intersected with Fix(h), for commuting g and h.

    h permutes the components of Fix(g); a component it preserves carries
    an induced monomial action on its parameter space, whose own fixed
    components are pushed forward.
    """
    if compose(g, h) != compose(h, g):
        raise AmbientError('common_fixed_locus needs commuting elements')
    out = []
    for c in fixed_components(g):
        if apply_to_component(h, c) != c:
            continue
        induced = _induced_action(h, c)
        if induced is None:
            out.append(c)
            continue
        big = [b for b in c.blocks if len(b) > 1]
        where = {p: (k, j) for k, b in enumerate(big) for j, p in enumerate(b)}
        for sub in fixed_components(induced):
            coords = []
            for f in c.coords:
                row = []
                for x in f:
                    if x is None:
                        row.append(None)
                        continue
                    b, q = x
                    if b not in where:
                        row.append((('pt', b), q))
                        continue
                    k, j = where[b]
                    y = sub.coords[k][j]
                    row.append(None if y is None else (y[0], _t(q + y[1])))
                coords.append(row)
            out.append(FixedComponent(c.dims, coords, c.description))
    out = sorted(set(out), key=FixedComponent.sort_key)
    return out


# -- divisors and intersection numbers --

def anticanonical_multidegree(amb: Union[Ambient, Sequence[int]]) -> tuple[int, ...]:
    dims = amb.dims if isinstance(amb, Ambient) else tuple(amb)
    return tuple(d + 1 for d in dims)


def intersect_curve_divisor(c: FixedComponent, d: Sequence[int]) -> int:
    if c.dimension != 1:
        raise AmbientError(f'intersection with a divisor needs a curve, got dimension {c.dimension}')
    e = c.multidegree
    if len(d) != len(e):
        raise AmbientError('multidegree lengths differ')
    return sum(a * b for a, b in zip(d, e))


# -- invariant sections --

Monomial = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class InvariantSection:
    """sum of exp(2 pi i q) * monomial over ``terms``."""
    terms: tuple[tuple[Monomial, Fraction], ...]

    def __len__(self):
        return len(self.terms)

    def format(self, max_terms: int = 6) -> str:
        parts = []
        for mono, q in self.terms[:max_terms]:
            coef = '' if q == 0 else ('-' if q == Fraction(1, 2) else f'e({q})*')
            body = '*'.join(f'x{i}{j}' + (f'^{e}' if e > 1 else '')
                            for i, f in enumerate(mono) for j, e in enumerate(f) if e)
            parts.append(coef + (body or '1'))
        more = f' + ... ({len(self.terms)} terms)' if len(self.terms) > max_terms else ''
        return ' + '.join(parts).replace('+ -', '- ') + more

    def to_json(self) -> dict:
        return {'terms': [[[list(f) for f in mono], [q.numerator, q.denominator]] for mono, q in self.terms]}


def _monomials(dims: Sequence[int], degree: Sequence[int]) -> list[Monomial]:
    per = []
    for n, d in zip(dims, degree):
        fs = []
        for combo in itertools.combinations_with_replacement(range(n + 1), d):
            e = [0] * (n + 1)
            for j in combo:
                e[j] += 1
            fs.append(tuple(e))
        per.append(sorted(fs, reverse=True))
    return [tuple(m) for m in itertools.product(*per)]


def _pullback_monomial(g: MonomialAutomorphism, mono: Monomial) -> tuple[Monomial, Fraction]:
    """mono(R_g x) = exp(2 pi i q) * mono'(x); returns (mono', q)."""
    new = [[0] * (d + 1) for d in g.dims]
    q = Fraction(0)
    for i, (s, a) in enumerate(zip(g.sigma, g.mats)):
        for j, e in enumerate(mono[i]):
            if e:
                new[s][a.cols[j]] += e
                q += e * a.roots[j]
    return tuple(tuple(f) for f in new), _t(q)


def invariant_sections(group: Union[FiniteActionGroup, Sequence[MonomialAutomorphism]],
                       degree: Sequence[int]) -> list[InvariantSection]:
    """Basis of polynomials of the given multidegree fixed by every element.

    An element acts through its normalized matrix representative R_g, by
    f -> f o R_g. Monomials are grouped into orbits; propagating coefficients
    along the orbit either closes up consistently (one basis element, the
    weighted orbit sum) or hits a loop with nontrivial root product (none).
    """
    elements = list(group.elements if isinstance(group, FiniteActionGroup) else group)
    dims = elements[0].dims
    degree = tuple(degree)
    if len(degree) != len(dims):
        raise AmbientError('multidegree length does not match the ambient')
    for g in elements:
        if any(degree[s] != degree[i] for i, s in enumerate(g.sigma)):
            raise AmbientError(f'multidegree {degree} is not preserved by the factor permutation')
    monos = _monomials(dims, degree)
    seen = set()
    basis = []
    for m0 in monos:
        if m0 in seen:
            continue
        coef = {m0: Fraction(0)}
        ok = True
        queue = deque([m0])
        seen.add(m0)
        while queue:
            m = queue.popleft()
            for g in elements:
                m2, q = _pullback_monomial(g, m)
                # invariance: coefficient of m2 equals coef[m] * exp(2 pi i q)
                want = _t(coef[m] + q)
                if m2 in coef:
                    if coef[m2] != want:
                        ok = False
                else:
                    coef[m2] = want
                    seen.add(m2)
                    queue.append(m2)
        if ok:
            basis.append(InvariantSection(tuple(sorted(coef.items(), key=lambda kv: kv[0], reverse=True))))
    return basis


def apply_to_section(g: MonomialAutomorphism, f: InvariantSection) -> InvariantSection:
    """f o R_g, with like monomials combined."""
    acc: dict[Monomial, list[Fraction]] = {}
    for mono, q in f.terms:
        m2, q2 = _pullback_monomial(g, mono)
        acc.setdefault(m2, []).append(_t(q + q2))
    terms = []
    for m2, qs in acc.items():
        if len(qs) != 1:
            raise AmbientError('pullback merged monomials; compare with evaluate_section instead')
        terms.append((m2, qs[0]))
    return InvariantSection(tuple(sorted(terms, key=lambda kv: kv[0], reverse=True)))


def _cyc_sum(roots: Iterable[Fraction]) -> CyclotomicNumber:
    roots = list(roots)
    n = _lcm_denominators(roots)
    total = cyc_zero(n)
    for q in roots:
        total = total + cyc_root(n, int(q * n))
    return total


def evaluate_section(f: InvariantSection, point: Sequence[Sequence[Optional[Fraction]]]) -> CyclotomicNumber:
    """Value at a point whose coordinates are roots of unity or zero (exponent form)."""
    roots = []
    for mono, q in f.terms:
        total = q
        for fe, fx in zip(mono, point):
            for e, x in zip(fe, fx):
                if e:
                    if x is None:
                        break
                    total += e * x
            else:
                continue
            break
        else:
            roots.append(_t(total))
    return _cyc_sum(roots)


def _as_point(point) -> tuple[tuple[Optional[Fraction], ...], ...]:
    if isinstance(point, FixedComponent):
        return point.point()
    out = []
    for f in point:
        row = []
        for x in f:
            row.append(None if x is None else _t(x))
        if all(x is None for x in row):
            raise AmbientError('malformed point: a factor has all coordinates zero')
        out.append(tuple(row))
    return tuple(out)


def base_point_check(basis: Sequence[InvariantSection], point) -> bool:
    """True iff some basis element is nonzero at the point (so it is not a base point)."""
    pt = _as_point(point)
    return any(not evaluate_section(f, pt).is_zero() for f in basis)


def restricts_nonzero_on(basis: Sequence[InvariantSection], c: FixedComponent) -> bool:
    """True iff some basis element does not vanish identically on the component."""
    for f in basis:
        acc: dict[tuple, list[Fraction]] = {}
        for mono, q in f.terms:
            total = q
            tmono: dict = {}
            dead = False
            for fe, fc in zip(mono, c.coords):
                for e, x in zip(fe, fc):
                    if not e:
                        continue
                    if x is None:
                        dead = True
                        break
                    total += e * x[1]
                    tmono[x[0]] = tmono.get(x[0], 0) + e
                if dead:
                    break
            if not dead:
                acc.setdefault(tuple(sorted(tmono.items())), []).append(_t(total))
        if any(not _cyc_sum(qs).is_zero() for qs in acc.values()):
            return True
    return False


# -- counting --

def burnside_count(group: FiniteActionGroup, fix_sizes: Mapping) -> int:
    """(1/|G|) sum of |Fix(g)|; keys are group elements or element indices."""
    total = 0
    for i, g in enumerate(group.elements):
        if g in fix_sizes:
            v = fix_sizes[g]
        elif i in fix_sizes:
            v = fix_sizes[i]
        else:
            raise KeyError(f'no fixed-point count for element {i}: {g!r}')
        if v < 0:
            raise ValueError('fixed-point counts must be nonnegative')
        total += v
    if total % group.order:
        raise ValueError(f'Burnside average {total}/{group.order} is not an integer')
    return total // group.order


def component_orbit_partition(group: FiniteActionGroup,
                              tagged: Iterable[tuple[MonomialAutomorphism, FixedComponent]]
                              ) -> list[list[FixedComponent]]:
    """Orbits of the group on the distinct components of a conjugation-closed family.

    Checks b(Fix(a)) = Fix(b a b^-1) on every component along the way.
    """
    tagged = list(tagged)
    tags = {a for a, _ in tagged}
    for a in tags:
        if a not in group:
            raise AmbientError(f'tag {a!r} is not a group element')
        for b in group.elements:
            if group.conjugate(b, a) not in tags:
                raise AmbientError('family is not closed under conjugation')
    by_tag: dict = {}
    for a, c in tagged:
        by_tag.setdefault(a, set()).add(c)
    for a, cs in by_tag.items():
        for b in group.elements:
            target = by_tag[group.conjugate(b, a)]
            for c in cs:
                if apply_to_component(b, c) not in target:
                    raise AmbientError('b(Fix(a)) is not a component of Fix(b a b^-1)')
    comps = sorted({c for _, c in tagged}, key=FixedComponent.sort_key)
    seen = set()
    orbits = []
    for c in comps:
        if c in seen:
            continue
        orb = sorted({apply_to_component(b, c) for b in group.elements}, key=FixedComponent.sort_key)
        seen.update(orb)
        orbits.append(orb)
    return orbits


def component_orbits(group: FiniteActionGroup,
                     tagged: Iterable[tuple[MonomialAutomorphism, FixedComponent]]) -> int:
    return len(component_orbit_partition(group, tagged))
