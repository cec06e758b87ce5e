"""Partition diagrams, stacking composition, and enumeration.

Vertices are signed integers: ``+i`` is the top vertex i and ``-i`` the bottom
vertex i'.  Blocks are stored sorted under the vertex order
1 < 2 < ... < k < 1' < ... < k', and the block list is sorted by each block's
least vertex, which makes the representation canonical.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Iterable, NamedTuple

from .errors import OrderMismatch, ResourceLimit

DEFAULT_MAX_K = 4


def _vkey(v: int, k: int) -> int:
    return v if v > 0 else k - v


class PartitionDiagram:
    """An order-k set partition of the signed vertex set, in canonical form."""

    __slots__ = ("k", "blocks", "_hash")

    def __init__(self, k: int, blocks: tuple):
        # blocks must already be canonical; use from_blocks for raw input
        self.k = k
        self.blocks = blocks
        self._hash = hash((k, blocks))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PartitionDiagram):
            return NotImplemented
        return self._hash == other._hash and self.k == other.k and self.blocks == other.blocks

    def __repr__(self):
        return f"PartitionDiagram(k={self.k}, blocks={self.blocks})"

    @classmethod
    def from_blocks(cls, k: int, blocks: Iterable[Iterable[int]]) -> "PartitionDiagram":
        seen = set()
        canon = []
        for b in blocks:
            b = tuple(sorted(set(b), key=lambda v: _vkey(v, k)))
            if not b:
                raise ValueError("empty block")
            for v in b:
                if v == 0 or abs(v) > k or v in seen:
                    raise ValueError(f"bad or repeated vertex {v} for order {k}")
                seen.add(v)
            canon.append(b)
        if len(seen) != 2 * k:
            raise ValueError("blocks do not cover all 2k vertices")
        canon.sort(key=lambda b: _vkey(b[0], k))
        return cls(k, tuple(canon))

    def block_of(self, v: int) -> tuple:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj: dict) -> "PartitionDiagram":
        return cls.from_blocks(obj["k"], obj["blocks"])

    def __str__(self) -> str:
        def name(v):
            return str(v) if v > 0 else f"{-v}'"

        return "{" + ", ".join("{" + ",".join(name(v) for v in b) + "}" for b in self.blocks) + "}"


class ComposeResult(NamedTuple):
    diagram: PartitionDiagram
    middle_components: int


@lru_cache(maxsize=1 << 18)
def compose(d1: PartitionDiagram, d2: PartitionDiagram) -> ComposeResult:
    """Stack ``d1`` on top of ``d2``.

    Union-find runs over 3k nodes: top row 0..k-1, middle row k..2k-1 (the
    bottom of d1 glued to the top of d2) and bottom row 2k..3k-1.
    """
    if d1.k != d2.k:
        raise OrderMismatch(f"orders {d1.k} and {d2.k} differ")
    k = d1.k
    parent = list(range(3 * k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for b in d1.blocks:
        nodes = [v - 1 if v > 0 else k - v - 1 for v in b]
        for x in nodes[1:]:
            union(nodes[0], x)
    for b in d2.blocks:
        nodes = [k + v - 1 if v > 0 else 2 * k - v - 1 for v in b]
        for x in nodes[1:]:
            union(nodes[0], x)

    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i + 1)
    for i in range(k):
        groups.setdefault(find(2 * k + i), []).append(-(i + 1))
    outer = set(groups)
    middle = {find(k + i) for i in range(k)} - outer
    return ComposeResult(PartitionDiagram.from_blocks(k, groups.values()), len(middle))


def propagation_number(d: PartitionDiagram) -> int:
    return sum(1 for b in d.blocks if b[0] > 0 and b[-1] < 0)


def is_propagating(block: tuple) -> bool:
    return block[0] > 0 and block[-1] < 0


def in_half_monoid(d: PartitionDiagram) -> bool:
    """True when k and k' lie in the same block."""
    return -d.k in d.block_of(d.k)


# ---------------------------------------------------------------------------
# special diagrams


def identity(k: int) -> PartitionDiagram:
    return PartitionDiagram.from_blocks(k, [(i, -i) for i in range(1, k + 1)])


def reverse(k: int) -> PartitionDiagram:
    return PartitionDiagram.from_blocks(k, [(i, -(k + 1 - i)) for i in range(1, k + 1)])


def p_int(i: int, k: int) -> PartitionDiagram:
    if not 1 <= i <= k:
        raise IndexError(f"p_{i} needs 1 <= i <= {k}")
    blocks = [(j, -j) for j in range(1, k + 1) if j != i] + [(i,), (-i,)]
    return PartitionDiagram.from_blocks(k, blocks)


def p_half(i: int, k: int) -> PartitionDiagram:
    if not 1 <= i <= k - 1:
        raise IndexError(f"p_{i}+1/2 needs 1 <= i <= {k - 1}")
    blocks = [(j, -j) for j in range(1, k + 1) if j not in (i, i + 1)]
    blocks.append((i, i + 1, -i, -(i + 1)))
    return PartitionDiagram.from_blocks(k, blocks)


def special_diagram(kind: str, k: int, i: int | None = None) -> PartitionDiagram:
    if kind == "identity":
        return identity(k)
    if kind == "reverse":
        return reverse(k)
    if kind == "p_int":
        return p_int(i, k)
    if kind == "p_half":
        return p_half(i, k)
    raise ValueError(f"unknown special diagram {kind!r}")


def permutation_diagram(images: tuple) -> PartitionDiagram:
    """Diagram joining i to images[i-1]'."""
    k = len(images)
    return PartitionDiagram.from_blocks(k, [(i + 1, -p) for i, p in enumerate(images)])


# ---------------------------------------------------------------------------
# enumeration


def bell(m: int) -> int:
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _rgs(m: int):
    """Restricted growth strings of length m in lexicographic order."""
    s = [0] * m

    def rec(i, mx):
        if i == m:
            yield tuple(s)
            return
        for v in range(mx + 2):
            s[i] = v
            yield from rec(i + 1, max(mx, v))

    if m == 0:
        yield ()
        return
    yield from rec(1, 0)


@lru_cache(maxsize=None)
def _fixture_k2() -> tuple:
    data = json.loads(resources.files("parmon.fixtures").joinpath("k2_diagrams.json").read_text())
    return tuple(PartitionDiagram.from_blocks(2, d) for d in data["diagrams"])


@lru_cache(maxsize=None)
def _enumerate(k: int) -> tuple:
    if k == 2:
        return _fixture_k2()
    verts = list(range(1, k + 1)) + [-i for i in range(1, k + 1)]
    out = []
    for s in _rgs(2 * k):
        blocks: dict[int, list[int]] = {}
        for v, label in zip(verts, s):
            blocks.setdefault(label, []).append(v)
        out.append(PartitionDiagram.from_blocks(k, blocks.values()))
    return tuple(out)


def enumerate_diagrams(k: int, max_k: int = DEFAULT_MAX_K) -> tuple:
    """All Bell(2k) diagrams of order k, in the package's fixed order."""
    if k < 1:
        raise ValueError("order must be positive")
    if k > max_k:
        raise ResourceLimit(f"k = {k} exceeds the limit {max_k}")
    return _enumerate(k)


@lru_cache(maxsize=None)
def diagram_index(k: int) -> dict:
    """Map each diagram to its 0-based position in enumerate_diagrams(k)."""
    return {d: i for i, d in enumerate(_enumerate(k))}
