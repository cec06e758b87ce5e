"""Matrix units of CA_k(n) built level by level along the Bratteli diagram.

At level l (integer or half-integer) with m = floor(l):

* blocks mu with |mu| = m are seeded from Young's units of S_m, cut down by
  the complement of the idempotent z that sums the level's other diagonal
  units;
* blocks mu with |mu| <= m - 1 come from quasi-units
  e(P-, T(P)) p_l e(T(Q), Q-) built from the level l - 1/2 units, which are
  then rescaled into an exact system by ``normalize``.

All units are elements of the order-k algebra: lower-level algebras sit
inside it through the extra identity strands.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import AlgebraElement, PartitionAlgebra
from .bratteli import (
    enumerate_vt,
    level_str,
    syt_index,
    t_map,
    t_map_half,
    twice,
    vertices_at,
)
from .diagram import DEFAULT_MAX_K, p_half, p_int
from .errors import ConstructionOrderError, DegenerateParameter, ResourceLimit
from .young import to_element, young_unit_group

Units = dict  # (P, Q) -> AlgebraElement


@dataclass
class MatrixUnitSystem:
    """Matrix units at one level, grouped by block."""

    algebra: PartitionAlgebra
    twice_level: int
    blocks: dict = field(default_factory=dict)  # mu -> tuple of paths
    units: Units = field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.algebra.k

    def unit(self, p, q) -> AlgebraElement:
        return self.units[(tuple(p), tuple(q))]

    def diagonal(self):
        for mu, paths in self.blocks.items():
            for p in paths:
                yield p, self.units[(p, p)]

    def block_sizes(self) -> dict:
        return {mu: len(paths) for mu, paths in self.blocks.items()}

    def paths(self):
        for mu, paths in self.blocks.items():
            yield from paths


def p_element(level, k: int, algebra: PartitionAlgebra | None = None) -> AlgebraElement:
    """p_l as an element of the order-k algebra (l may be a half-integer)."""
    if algebra is None:
        algebra = PartitionAlgebra(k)
    t = twice(level)
    if t < 2 or t > 2 * k:
        raise IndexError(f"p element needs 1 <= level <= {k}")
    d = p_int(t // 2, k) if t % 2 == 0 else p_half(t // 2, k)
    return algebra.basis(d)


def _idempotent_scale(u: AlgebraElement) -> object:
    """c with u*u == c*u; raises if u is zero or not a scaled idempotent."""
    if not u:
        raise DegenerateParameter("zero quasi-unit")
    sq = u * u
    c = sq.proportionality(u)
    if c is None:
        raise DegenerateParameter("quasi-unit is not proportional to an idempotent")
    if not c:
        raise DegenerateParameter("quasi-unit squares to zero")
    return c


def seed_units(
    shape: tuple,
    twice_level: int,
    z: AlgebraElement,
    algebra: PartitionAlgebra,
) -> Units:
    """Units (1 - z) s^shape_{P,Q} for the block of shape |shape| = floor(level)."""
    shape = tuple(shape)
    if sum(shape) != twice_level // 2:
        raise ConstructionOrderError("seeding needs |shape| equal to floor(level)")
    paths = enumerate_vt(Fraction(twice_level, 2), shape)
    one_minus_z = algebra.one() - z

    def index(p):
        # a half-level top path ends with a constant step
        return syt_index(p if twice_level % 2 == 0 else p[:-1])

    out = {}
    if not shape:
        for p in paths:
            out[(p, p)] = one_minus_z
        return out
    for p in paths:
        for q in paths:
            s = to_element(young_unit_group(shape, index(p), index(q)), algebra)
            out[(p, q)] = one_minus_z * s
    return out


def t_of(p: tuple) -> tuple:
    return t_map(p) if (len(p) - 1) % 2 == 0 else t_map_half(p)


def recurse_units(
    mu: tuple,
    twice_level: int,
    below: Units,
    algebra: PartitionAlgebra,
    pairs=None,
) -> Units:
    """Quasi-units for block mu at the given level from the level below."""
    paths = enumerate_vt(Fraction(twice_level, 2), mu)
    p_el = p_element(Fraction(twice_level, 2), algebra.k, algebra)
    left_cache: dict = {}
    right_cache: dict = {}

    def left(p):
        if p not in left_cache:
            key = (p[:-1], t_of(p))
            if key not in below:
                raise ConstructionOrderError(f"missing unit {key} below level {level_str(twice_level)}")
            left_cache[p] = below[key] * p_el
        return left_cache[p]

    def right(q):
        if q not in right_cache:
            key = (t_of(q), q[:-1])
            if key not in below:
                raise ConstructionOrderError(f"missing unit {key} below level {level_str(twice_level)}")
            right_cache[q] = below[key]
        return right_cache[q]

    if pairs is None:
        pairs = [(p, q) for p in paths for q in paths]
    out = {}
    for p, q in pairs:
        u = left(p) * right(q)
        if not u:
            raise DegenerateParameter(f"zero quasi-unit for {p}, {q}")
        out[(p, q)] = u
    return out


def normalize(quasi: Callable, paths: tuple) -> Units:
    """Turn quasi-units into exact matrix units for one block.

    ``quasi(p, q)`` returns the quasi-unit for a pair.  The first path is the
    reference R0; only pairs involving R0 or a diagonal are consulted.
    """
    r0 = paths[0]
    diag = {}
    for p in paths:
        u = quasi(p, p)
        diag[p] = u / _idempotent_scale(u)
    to_ref = {r0: diag[r0]}
    from_ref = {r0: diag[r0]}
    e0 = diag[r0]
    for p in paths[1:]:
        f = diag[p] * quasi(p, r0) * e0
        g = e0 * quasi(r0, p) * diag[p]
        fg = f * g
        c = fg.proportionality(diag[p])
        if c is None or not c:
            raise DegenerateParameter(f"degenerate normalisation for {p}")
        to_ref[p] = f / c
        from_ref[p] = g
    out = {}
    for p in paths:
        for q in paths:
            if p == q:
                out[(p, p)] = diag[p]
            elif q == r0:
                out[(p, q)] = to_ref[p]
            elif p == r0:
                out[(p, q)] = from_ref[q]
            else:
                out[(p, q)] = to_ref[p] * from_ref[q]
    return out


def build_level(twice_level: int, below: Units, algebra: PartitionAlgebra) -> MatrixUnitSystem:
    """Units at one level from the units one half-step below."""
    m = twice_level // 2
    system = MatrixUnitSystem(algebra, twice_level)
    z = algebra.zero()
    top = []
    for mu in vertices_at(twice_level):
        paths = enumerate_vt(Fraction(twice_level, 2), mu)
        system.blocks[mu] = paths
        if sum(mu) == m:
            top.append(mu)
            continue
        quasi_cache: dict = {}

        def quasi(p, q, mu=mu):
            if (p, q) not in quasi_cache:
                quasi_cache.update(recurse_units(mu, twice_level, below, algebra, [(p, q)]))
            return quasi_cache[(p, q)]

        block = normalize(quasi, paths)
        system.units.update(block)
        for p in paths:
            z = z + block[(p, p)]
    for mu in top:
        system.units.update(seed_units(mu, twice_level, z, algebra))
    return system


def build_tower(k: int, algebra: PartitionAlgebra | None = None, max_k: int = DEFAULT_MAX_K):
    """Yield the systems for levels 0, 1/2, 1, ..., k inside the order-k algebra."""
    if k > max_k:
        raise ResourceLimit(f"k = {k} exceeds the limit {max_k}")
    if algebra is None:
        algebra = PartitionAlgebra(k)
    if algebra.k != k:
        raise ValueError("algebra order must equal k")
    root = ((),)
    system = MatrixUnitSystem(algebra, 0, {(): (root,)}, {(root, root): algebra.one()})
    yield system
    for t in range(1, 2 * k + 1):
        system = build_level(t, system.units, algebra)
        yield system


def build_system(k: int, algebra: PartitionAlgebra | None = None, max_k: int = DEFAULT_MAX_K) -> MatrixUnitSystem:
    """Matrix-unit system of CA_k(n) (symbolic unless a specialised algebra is given)."""
    system = None
    for system in build_tower(k, algebra, max_k):
        pass
    return system


def check_axioms(system: MatrixUnitSystem) -> list:
    """All pairs (a, b) of unit keys whose product breaks the matrix-unit rule."""
    zero = system.algebra.zero()
    bad = []
    for a, ua in system.units.items():
        for b, ub in system.units.items():
            expected = system.units[(a[0], b[1])] if a[1] == b[0] else zero
            if ua * ub != expected:
                bad.append((a, b))
    return bad


def check_axioms_randomized(system: MatrixUnitSystem, rng, trials: int = 1) -> list:
    """Row-wise randomized form of ``check_axioms`` in exact arithmetic.

    For each unit e_{P,Q}, compares e_{P,Q} (sum y_{R,S} e_{R,S}) with
    sum_S y_{Q,S} e_{P,S} for random integer weights y.  Returns the keys
    whose row failed.
    """
    alg = system.algebra
    keys = list(system.units)
    failures = []
    for a in keys:
        for _ in range(trials):
            y = {b: rng.randint(-10**9, 10**9) for b in keys}
            right = alg.zero()
            rhs = alg.zero()
            for b in keys:
                right = right + system.units[b].scale(y[b])
                if b[0] == a[1]:
                    rhs = rhs + system.units[(a[0], b[1])].scale(y[b])
            if system.units[a] * right != rhs:
                failures.append(a)
                break
    return failures


def completeness_defect(system: MatrixUnitSystem) -> AlgebraElement:
    """one - (sum of diagonal units); zero for a complete system."""
    total = system.algebra.zero()
    for _, u in system.diagonal():
        total = total + u
    return system.algebra.one() - total
