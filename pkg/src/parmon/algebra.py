"""The partition algebra CA_k(n) on the diagram basis.

An algebra object fixes the order k and the value of the parameter n.  In
symbolic mode n is the indeterminate of Q(n) and coefficients are
``RationalFunction``; in specialised mode n is a rational number and
coefficients are ``Fraction``.  The specialised mode exists for randomised
verification at k >= 3, where symbolic products become slow.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from .arith import N, RationalFunction, rf_eval
from .diagram import (
    PartitionDiagram,
    compose,
    identity,
    permutation_diagram,
)
from .errors import OrderMismatch


class PartitionAlgebra:
    """CA_k(n) with n either symbolic (``param=None``) or a fixed rational."""

    def __init__(self, k: int, param=None):
        self.k = k
        self.symbolic = param is None
        self.param = N if param is None else Fraction(param)
        self._npow = [self._unit() if i == 0 else None for i in range(k + 1)]
        for i in range(1, k + 1):
            self._npow[i] = self._npow[i - 1] * self.param

    def _unit(self):
        return RationalFunction.const(1) if self.symbolic else Fraction(1)

    def scalar(self, c):
        """Coerce ``c`` into this algebra's coefficient type."""
        if self.symbolic:
            return RationalFunction.coerce(c)
        if isinstance(c, RationalFunction):
            return rf_eval(c, self.param)
        return Fraction(c)

    def n_power(self, e: int):
        return self._npow[e]

    def element(self, terms: Mapping[PartitionDiagram, object]) -> "AlgebraElement":
        out = {}
        for d, c in terms.items():
            if d.k != self.k:
                raise OrderMismatch(f"diagram of order {d.k} in algebra of order {self.k}")
            c = self.scalar(c)
            if c:
                out[d] = c
        return AlgebraElement(self, out)

    def basis(self, d: PartitionDiagram) -> "AlgebraElement":
        return self.element({d: 1})

    def one(self) -> "AlgebraElement":
        return self.basis(identity(self.k))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def permutation(self, images: Iterable[int]) -> "AlgebraElement":
        return self.basis(permutation_diagram(tuple(images)))

    def specialize(self, value) -> "PartitionAlgebra":
        return PartitionAlgebra(self.k, value)

    def __eq__(self, other):
        return (
            isinstance(other, PartitionAlgebra)
            and self.k == other.k
            and self.symbolic == other.symbolic
            and self.param == other.param
        )

    def __hash__(self):
        return hash((self.k, self.symbolic, self.param))

    def __repr__(self):
        return f"PartitionAlgebra(k={self.k}, n={'n' if self.symbolic else self.param})"


class AlgebraElement:
    """A finite linear combination of diagrams; treated as immutable."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PartitionAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    @property
    def k(self) -> int:
        return self.algebra.k

    def _check(self, other: "AlgebraElement"):
        if other.algebra.k != self.algebra.k:
            raise OrderMismatch(f"orders {self.algebra.k} and {other.algebra.k} differ")
        if other.algebra != self.algebra:
            raise ValueError("elements belong to different specialisations")

    def coeff(self, d: PartitionDiagram):
        return self.terms.get(d, self.algebra.scalar(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            v = out.get(d)
            v = c if v is None else v + c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return AlgebraElement(self.algebra, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.algebra.scalar(c)
        if not c:
            return self.algebra.zero()
        return AlgebraElement(self.algebra, {d: v * c for d, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(1 / self.algebra.scalar(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.k == other.algebra.k and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"AlgebraElement({self.algebra!r}, {len(self.terms)} terms)"

    def proportionality(self, other: "AlgebraElement"):
        """Return c with ``self == c * other`` or None when no such c exists."""
        if not other.terms:
            return self.algebra.scalar(0) if not self.terms else None
        if set(self.terms) != set(other.terms):
            return None
        it = iter(other.terms.items())
        d, c = next(it)
        ratio = self.terms[d] / c
        for d, c in it:
            if self.terms[d] != ratio * c:
                return None
        return ratio

    def evaluate(self, value) -> "AlgebraElement":
        """Specialise a symbolic element at n = value."""
        target = PartitionAlgebra(self.algebra.k, value)
        return target.element({d: rf_eval(c, target.param) for d, c in self.terms.items()})

    def to_json(self, order: Iterable[PartitionDiagram] | None = None) -> dict:
        keys = list(order) if order is not None else sorted(self.terms, key=lambda d: d.blocks)
        terms = []
        for d in keys:
            if d in self.terms:
                c = self.terms[d]
                coeff = c.to_json() if isinstance(c, RationalFunction) else f"{c.numerator}/{c.denominator}"
                terms.append({"diagram": [list(b) for b in d.blocks], "coeff": coeff})
        return {"k": self.algebra.k, "terms": terms}

    def dumps(self, order=None) -> str:
        return json.dumps(self.to_json(order))


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of d_x d_y = n^l d_{x o y}."""
    a._check(b)
    alg = a.algebra
    if not a.terms or not b.terms:
        return alg.zero()
    by_loops: list[dict] = [{} for _ in range(alg.k + 1)]
    bitems = list(b.terms.items())
    for d1, c1 in a.terms.items():
        for d2, c2 in bitems:
            d, loops = compose(d1, d2)
            acc = by_loops[loops]
            v = acc.get(d)
            acc[d] = c1 * c2 if v is None else v + c1 * c2
    out = by_loops[0]
    for loops in range(1, alg.k + 1):
        acc = by_loops[loops]
        if not acc:
            continue
        npow = alg.n_power(loops)
        for d, c in acc.items():
            c = c * npow
            v = out.get(d)
            out[d] = c if v is None else v + c
    return AlgebraElement(alg, {d: c for d, c in out.items() if c})


def permutation_to_element(images: Iterable[int], algebra: PartitionAlgebra | None = None) -> AlgebraElement:
    images = tuple(images)
    if algebra is None:
        algebra = PartitionAlgebra(len(images))
    if len(images) < algebra.k:
        images = images + tuple(range(len(images) + 1, algebra.k + 1))
    return algebra.permutation(images)


def one(k: int) -> AlgebraElement:
    return PartitionAlgebra(k).one()


def zero(k: int) -> AlgebraElement:
    return PartitionAlgebra(k).zero()


def embed(x: AlgebraElement, algebra: PartitionAlgebra) -> AlgebraElement:
    """Include an element of a smaller partition algebra by adding through-strands."""
    k0, k = x.algebra.k, algebra.k
    if k0 > k:
        raise OrderMismatch("cannot embed into a smaller order")
    extra = [(i, -i) for i in range(k0 + 1, k + 1)]
    terms = {}
    for d, c in x.terms.items():
        big = PartitionDiagram.from_blocks(k, list(d.blocks) + extra)
        terms[big] = c
    return algebra.element(terms)
