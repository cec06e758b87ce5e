"""Young's matrix units in the symmetric group algebra.

Permutations are tuples of images, ``p[i-1] = p(i)``, multiplied by ordinary
composition: ``perm_mul(p, q)`` applies q first.  Tableaux use the French
convention: ``rows[0]`` is the bottom row.

Stacking d1 on top of d2 sends the permutation diagram {i, p(i)'} to the
product "p first, then q", so the homomorphism into the partition algebra
for ordinary composition is p -> diagram {p(i), i'}, which is
``permutation_to_element`` of the inverse permutation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .algebra import AlgebraElement, PartitionAlgebra, permutation_to_element
from .diagram import permutation_diagram

Partition = tuple
Tableau = tuple  # tuple of row tuples, bottom row first
Permutation = tuple


# ---------------------------------------------------------------------------
# permutations


def perm_mul(p: Permutation, q: Permutation) -> Permutation:
    """Composition p o q (apply q, then p)."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_sign(p: Permutation) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def identity_perm(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def extend_perm(p: Permutation, k: int) -> Permutation:
    return tuple(p) + tuple(range(len(p) + 1, k + 1))


# ---------------------------------------------------------------------------
# group algebra over Q as {permutation: Fraction}


def gmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for p, c in a.items():
        for q, d in b.items():
            r = perm_mul(p, q)
            out[r] = out.get(r, 0) + c * d
    return {r: c for r, c in out.items() if c}


def gadd(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for p, c in b.items():
        out[p] = out.get(p, 0) + scale * c
    return {p: c for p, c in out.items() if c}


def gscale(a: dict, c) -> dict:
    return {p: v * c for p, v in a.items() if v * c}


def to_element(x: dict, algebra: PartitionAlgebra) -> AlgebraElement:
    """Image of a group-algebra element in the partition algebra (homomorphically)."""
    terms = {}
    for p, c in x.items():
        img = perm_inverse(extend_perm(p, algebra.k))
        terms[permutation_diagram(img)] = c
    return algebra.element(terms)


def from_element(x: AlgebraElement) -> dict:
    """Inverse of ``to_element`` on elements supported on permutation diagrams."""
    out = {}
    for d, c in x.terms.items():
        images = [0] * d.k
        for b in d.blocks:
            if len(b) != 2 or not (b[0] > 0 > b[1]):
                raise ValueError("element is not supported on permutation diagrams")
            images[b[0] - 1] = -b[1]
        out[perm_inverse(tuple(images))] = c
    return out


def group_element(p: Permutation, algebra: PartitionAlgebra | None = None) -> AlgebraElement:
    """The partition-algebra image of p under the homomorphic embedding."""
    if algebra is None:
        algebra = PartitionAlgebra(len(p))
    return permutation_to_element(perm_inverse(extend_perm(p, algebra.k)), algebra)


# ---------------------------------------------------------------------------
# tableaux


def partitions(m: int, max_part: int | None = None):
    """Partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def _label_rows(t: Tableau) -> list:
    rows = {}
    for r, row in enumerate(t):
        for x in row:
            rows[x] = r
    return [rows[x] for x in range(1, len(rows) + 1)]


def yflo_key(t: Tableau) -> tuple:
    # the first label placed in different rows decides, and the tableau
    # holding it in the later row comes first
    return tuple(-r for r in _label_rows(t))


@lru_cache(maxsize=None)
def enumerate_syt(shape: Partition) -> tuple:
    """Standard tableaux of the given shape, sorted by YFLO."""
    shape = tuple(shape)
    m = sum(shape)
    out = []

    def grow(rows, x):
        if x > m:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(x)
                grow(rows, x + 1)
                rows[r].pop()

    grow([[] for _ in shape], 1)
    out.sort(key=yflo_key)
    return tuple(out)


def num_syt(shape: Partition) -> int:
    return len(enumerate_syt(tuple(shape)))


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def _columns(t: Tableau) -> list:
    return [[row[c] for row in t if c < len(row)] for c in range(len(t[0]))] if t else []


def _stabilizer(sets: Sequence[Sequence[int]], m: int) -> list:
    """All permutations of {1..m} mapping each given set to itself."""
    perms = [identity_perm(m)]
    for s in sets:
        s = list(s)
        if len(s) < 2:
            continue
        new = []
        for base in perms:
            for image in permutations(s):
                p = list(base)
                for a, b in zip(s, image):
                    p[a - 1] = b
                new.append(tuple(p))
        perms = new
    return perms


def symmetrizers_group(t: Tableau) -> tuple[dict, dict]:
    m = sum(len(r) for r in t)
    row_sum = {p: Fraction(1) for p in _stabilizer(t, m)}
    col_sum = {p: Fraction(perm_sign(p)) for p in _stabilizer(_columns(t), m)}
    return row_sum, col_sum


def symmetrizers(t: Tableau, algebra: PartitionAlgebra | None = None):
    """Row symmetrizer P(T) and signed column symmetrizer N(T)."""
    if algebra is None:
        algebra = PartitionAlgebra(sum(len(r) for r in t))
    p, n = symmetrizers_group(t)
    return to_element(p, algebra), to_element(n, algebra)


def sigma(shape: Partition, i: int, j: int) -> Permutation:
    """The permutation taking S_j to S_i by relabelling."""
    tabs = enumerate_syt(tuple(shape))
    if not (1 <= i <= len(tabs) and 1 <= j <= len(tabs)):
        raise IndexError(f"tableau index out of range for shape {shape}")
    ti, tj = tabs[i - 1], tabs[j - 1]
    images = {}
    for ri, rj in zip(ti, tj):
        for a, b in zip(ri, rj):
            images[b] = a
    return tuple(images[x] for x in range(1, len(images) + 1))


@lru_cache(maxsize=None)
def gamma_group(shape: Partition, i: int) -> dict:
    shape = tuple(shape)
    tabs = enumerate_syt(shape)
    if not 1 <= i <= len(tabs):
        raise IndexError(f"gamma index {i} out of range for shape {shape}")
    p, n = symmetrizers_group(tabs[i - 1])
    return gscale(gmul(n, p), Fraction(len(tabs), factorial(sum(shape))))


def gamma(shape: Partition, i: int, algebra: PartitionAlgebra | None = None) -> AlgebraElement:
    if algebra is None:
        algebra = PartitionAlgebra(sum(shape))
    return to_element(gamma_group(tuple(shape), i), algebra)


@lru_cache(maxsize=None)
def _tail(shape: Partition, j: int) -> dict:
    """gamma_j (1 - gamma_{j+1}) ... (1 - gamma_f)."""
    f = num_syt(shape)
    acc = gamma_group(shape, j)
    one = {identity_perm(sum(shape)): Fraction(1)}
    for t in range(j + 1, f + 1):
        acc = gmul(acc, gadd(one, gamma_group(shape, t), -1))
    return acc


@lru_cache(maxsize=None)
def young_unit_group(shape: Partition, i: int, j: int) -> dict:
    shape = tuple(shape)
    s = sigma(shape, i, j)
    return gmul({s: Fraction(1)}, _tail(shape, j))


def young_unit(shape: Partition, i: int, j: int, algebra: PartitionAlgebra | None = None) -> AlgebraElement:
    """Young's matrix unit s^shape_{i,j}, as an element of the partition algebra."""
    if algebra is None:
        algebra = PartitionAlgebra(sum(shape))
    return to_element(young_unit_group(tuple(shape), i, j), algebra)
