"""The diagram-indexed monoid basis {m_pi} of CA_k(n) and its product rule."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, PartitionAlgebra
from .bijections import diagram_rsk, diagram_rsk_inverse, diagram_to_pair
from .diagram import (
    DEFAULT_MAX_K,
    PartitionDiagram,
    enumerate_diagrams,
    identity,
    reverse,
)
from .errors import InvalidPair, RuleMismatch
from .hrunits import MatrixUnitSystem, build_system


def _column(k: int) -> tuple:
    return (1,) * k


def _sign_path(system: MatrixUnitSystem) -> tuple:
    paths = system.blocks[_column(system.k)]
    return paths[0]


def m_unit(p, q, system: MatrixUnitSystem) -> AlgebraElement:
    """The element m_{P,Q} built from the matrix units."""
    p, q = tuple(map(tuple, p)), tuple(map(tuple, q))
    if p[-1] != q[-1]:
        raise InvalidPair(f"paths end at {p[-1]} and {q[-1]}")
    k = system.k
    s = _sign_path(system)
    e0 = system.unit(s, s)
    if k == 1:
        # (1^k) and (k) coincide here, so the (k) clause is taken by the
        # identity diagram and the other unit stands alone
        return system.algebra.one() if p[-1] == (1,) else system.unit(p, q)
    if p == q and p[-1] == _column(k):
        return e0
    if p == q and p[-1] == (k,):
        return system.algebra.one()
    return e0 + system.unit(p, q)


def m_of_diagram(d: PartitionDiagram, system: MatrixUnitSystem) -> AlgebraElement:
    p, q = diagram_to_pair(d)
    return m_unit(p, q, system)


def rule_product(a: PartitionDiagram, b: PartitionDiagram) -> PartitionDiagram:
    """Index of m_a m_b given by the combinatorial rule."""
    k = a.k
    if a == identity(k):
        return b
    if b == identity(k):
        return a
    a1, a2 = diagram_rsk(a)
    b1, b2 = diagram_rsk(b)
    if a2 != b1:
        return reverse(k)
    return diagram_rsk_inverse(a1, b2)


@dataclass
class MonoidBasis:
    system: MatrixUnitSystem
    elements: dict  # PartitionDiagram -> AlgebraElement

    @property
    def k(self) -> int:
        return self.system.k

    @property
    def identity_key(self) -> PartitionDiagram:
        return identity(self.k)

    @property
    def absorbing_key(self) -> PartitionDiagram:
        return reverse(self.k)

    def __getitem__(self, d: PartitionDiagram) -> AlgebraElement:
        return self.elements[d]


def monoid_basis(k: int, system: MatrixUnitSystem | None = None, max_k: int = DEFAULT_MAX_K) -> MonoidBasis:
    if system is None:
        system = build_system(k, max_k=max_k)
    diagrams = enumerate_diagrams(k, max_k)
    return MonoidBasis(system, {d: m_of_diagram(d, system) for d in diagrams})


def rule_table(k: int, max_k: int = DEFAULT_MAX_K) -> list:
    """Table of 1-based diagram indices, entry [a][b] = rule_product(a, b)."""
    diagrams = enumerate_diagrams(k, max_k)
    index = {d: i + 1 for i, d in enumerate(diagrams)}
    return [[index[rule_product(a, b)] for b in diagrams] for a in diagrams]


def multiplication_table(k: int, system: MatrixUnitSystem | None = None, verify: bool = True, max_k: int = DEFAULT_MAX_K) -> list:
    """The rule table, each entry checked against the algebraic product."""
    table = rule_table(k, max_k)
    if verify:
        basis = monoid_basis(k, system, max_k)
        diagrams = enumerate_diagrams(k, max_k)
        for i, a in enumerate(diagrams):
            for j, b in enumerate(diagrams):
                got = basis[a] * basis[b]
                c = diagrams[table[i][j] - 1]
                if got != basis[c]:
                    raise RuleMismatch(f"m_{a} m_{b} differs from m_{c}")
    return table


def transition_matrix(k: int, system: MatrixUnitSystem | None = None, max_k: int = DEFAULT_MAX_K) -> list:
    """Rows: m_pi in diagram order; columns: coefficients on the diagram basis."""
    basis = monoid_basis(k, system, max_k)
    diagrams = enumerate_diagrams(k, max_k)
    return [[basis[a].coeff(d) for d in diagrams] for a in diagrams]


def determinant(matrix: list):
    """Determinant by Gaussian elimination over a field."""
    m = [list(r) for r in matrix]
    size = len(m)
    det = m[0][0] * 0 + 1 if size else 1
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c]), None)
        if pivot is None:
            return m[0][0] * 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        pv = m[c][c]
        det = det * pv
        inv = 1 / pv
        for r in range(c + 1, size):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def random_parameter(rng: random.Random, k: int) -> Fraction:
    """A random rational outside the non-semisimple set {0, ..., 2k-2}."""
    while True:
        n = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
        if n.denominator != 1 or not 0 <= n <= 2 * k - 2:
            return n


def closure_check_randomized(basis: MonoidBasis, rng: random.Random, trials: int = 1) -> list:
    """Check m_a m_b = m_{rule(a,b)} for every pair, one left factor at a time.

    For each a and each trial, random integer weights y_b are drawn and
    m_a (sum y_b m_b) is compared with sum y_b m_{rule(a,b)}, in exact
    arithmetic.  A wrong entry in row a leaves a nonzero linear form in the
    weights, which vanishes at the random point with probability at most
    1 / (2 * 10**9).  Returns the diagrams a whose row failed.
    """
    diagrams = list(basis.elements)
    alg = basis.system.algebra
    failures = []
    for a in diagrams:
        for _ in range(trials):
            y = [rng.randint(-10**9, 10**9) for _ in diagrams]
            right = alg.zero()
            expected: dict = {}
            for b, w in zip(diagrams, y):
                right = right + basis[b].scale(w)
                c = rule_product(a, b)
                expected[c] = expected.get(c, 0) + w
            rhs = alg.zero()
            for c, w in expected.items():
                if w:
                    rhs = rhs + basis[c].scale(w)
            if basis[a] * right != rhs:
                failures.append(a)
                break
    return failures
