"""Set-partition tableaux and the bijections linking diagrams to path pairs.

Labels are frozensets of {1..k}; the empty label is ``frozenset()``.  Labels
compare by last letter (their maximum), with the empty label as 0.  Rows of
a tableau are stored bottom row first (French), so ``rows[0]`` carries the
run of empty cells.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .diagram import PartitionDiagram, is_propagating
from .errors import InvalidTableau

EMPTY = frozenset()


def label_key(s) -> int:
    return max(s) if s else 0


def lastletter_compare(a, b) -> int:
    """-1, 0 or 1 as a is below, level with or above b in last-letter order."""
    ka, kb = label_key(a), label_key(b)
    return (ka > kb) - (ka < kb)


def _label(x) -> frozenset:
    return frozenset(x)


@dataclass(frozen=True)
class SetPartitionTableau:
    rows: tuple  # tuple of rows, each a tuple of frozensets, bottom row first

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Iterable[int]]]) -> "SetPartitionTableau":
        return cls(tuple(tuple(_label(c) for c in r) for r in rows if len(r)))

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def labels(self) -> list:
        return [c for r in self.rows for c in r if c]

    def validate(self, k: int | None = None) -> "SetPartitionTableau":
        shape = self.shape
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise InvalidTableau("rows are not weakly decreasing in length")
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if not x and r > 0:
                    raise InvalidTableau("empty labels must sit in the bottom row")
                if not x and c and row[c - 1]:
                    raise InvalidTableau("empty labels must form a prefix of the bottom row")
                if c and x and label_key(row[c - 1]) >= label_key(x):
                    raise InvalidTableau("row is not strictly increasing")
                if r and label_key(self.rows[r - 1][c]) >= label_key(x):
                    raise InvalidTableau("column is not strictly increasing")
        labels = self.labels()
        seen: set = set()
        for x in labels:
            if seen & x:
                raise InvalidTableau("labels are not disjoint")
            seen |= x
        if k is not None:
            if seen != set(range(1, k + 1)):
                raise InvalidTableau(f"labels do not cover 1..{k}")
            if self.size != 2 * k:
                raise InvalidTableau(f"expected {2 * k} cells")
        return self

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [[sorted(c) for c in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "SetPartitionTableau":
        t = cls.from_rows(obj["rows"])
        if "shape" in obj and list(t.shape) != list(obj["shape"]):
            raise InvalidTableau("shape does not match rows")
        return t

    def __str__(self) -> str:
        def name(x):
            return "0" if not x else "".join(str(v) for v in sorted(x)) if max(x) < 10 else "{" + ",".join(map(str, sorted(x))) + "}"

        return " / ".join(" ".join(name(x) for x in r) for r in self.rows)


# ---------------------------------------------------------------------------
# row insertion on mutable lists of rows


def _insert(rows: list, x) -> tuple:
    """Schensted row insertion of x; returns the (row, column) of the new cell."""
    r = 0
    kx = label_key(x)
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        for c, y in enumerate(row):
            if label_key(y) > kx:
                row[c], x = x, y
                kx = label_key(x)
                break
        else:
            row.append(x)
            return r, len(row) - 1
        r += 1


def _uninsert(rows: list, r: int):
    """Remove the last cell of row r and reverse-bump it out of the bottom row."""
    x = rows[r].pop()
    if not rows[r]:
        rows.pop()
    kx = label_key(x)
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        c = max((i for i, y in enumerate(row) if label_key(y) < kx), default=None)
        if c is None:
            raise InvalidTableau("reverse bumping failed")
        row[c], x = x, row[c]
        kx = label_key(x)
    return x


def schensted_insert(t: SetPartitionTableau, b) -> SetPartitionTableau:
    rows = [list(r) for r in t.rows]
    _insert(rows, _label(b))
    return SetPartitionTableau(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# HR <-> BH vacillating tableaux


def hr_to_bh(p: Sequence[Sequence[int]], eta: int) -> tuple:
    out = []
    for i, mu in enumerate(p, start=1):
        mu = tuple(mu)
        first = eta - sum(mu) - (1 + (-1) ** i) // 2
        if mu and first < mu[0]:
            raise InvalidTableau(f"eta = {eta} too small for entry {mu}")
        out.append((first,) + mu)
    return tuple(out)


def bh_to_hr(b: Sequence[Sequence[int]]) -> tuple:
    out = []
    if not b or tuple(b[0])[1:] != ():
        raise InvalidTableau("a BH tableau must start with a one-row partition")
    eta = b[0][0]
    for i, lam in enumerate(b, start=1):
        lam = tuple(lam)
        if not lam:
            raise InvalidTableau("empty BH entry")
        mu = lam[1:]
        if lam[0] != eta - sum(mu) - (1 + (-1) ** i) // 2:
            raise InvalidTableau(f"entry {i} has the wrong first part")
        out.append(mu)
    return tuple(out)


# ---------------------------------------------------------------------------
# the Benkart-Halverson bijection


def _content(t: SetPartitionTableau) -> int:
    labels = t.labels()
    k = max((max(x) for x in labels), default=0)
    t.validate(k)
    return k


def bh_forward(t: SetPartitionTableau) -> tuple:
    """BH vacillating tableau (entries lambda^(0), lambda^(1/2), ..., lambda^(k))."""
    k = _content(t)
    rows = [list(r) for r in t.rows]
    seq = [t.shape]
    for j in range(k, 0, -1):
        r = next(i for i, row in enumerate(rows) if row and j in row[-1])
        b = rows[r].pop()
        if not rows[r]:
            rows.pop()
        seq.append(tuple(len(x) for x in rows))
        _insert(rows, b - {j})
        seq.append(tuple(len(x) for x in rows))
    return tuple(reversed(seq))


def _added_row(small: tuple, big: tuple) -> int:
    """Row index of the single box of big not in small."""
    padded = list(small) + [0] * (len(big) - len(small))
    diff = [r for r in range(len(big)) if big[r] != padded[r]]
    if len(small) > len(big) or len(diff) != 1 or big[diff[0]] != padded[diff[0]] + 1:
        raise InvalidTableau(f"{big} is not {small} plus one box")
    return diff[0]


def bh_inverse(b: Sequence[Sequence[int]]) -> SetPartitionTableau:
    b = [tuple(x) for x in b]
    if len(b) % 2 == 0 or len(b[0]) != 1:
        raise InvalidTableau("BH tableau must have odd length and start at (eta)")
    k = (len(b) - 1) // 2
    rows = [[EMPTY] * b[0][0]]
    for j in range(1, k + 1):
        prev, half, cur = b[2 * j - 2], b[2 * j - 1], b[2 * j]
        r = _added_row(half, prev)
        if len(rows[r]) != prev[r]:
            raise InvalidTableau("entry does not match the tableau")
        x = _uninsert(rows, r) | {j}
        r2 = _added_row(half, cur)
        while len(rows) <= r2:
            rows.append([])
        rows[r2].append(x)
        if tuple(len(row) for row in rows) != cur:
            raise InvalidTableau("entry does not match the tableau")
    t = SetPartitionTableau(tuple(tuple(r) for r in rows))
    return t.validate(k)


# ---------------------------------------------------------------------------
# RSK for partition diagrams


def _labels_of(block: tuple) -> tuple:
    top = frozenset(v for v in block if v > 0)
    bottom = frozenset(-v for v in block if v < 0)
    return top, bottom


def _assemble(k: int, s_rows: list, tail: list) -> SetPartitionTableau:
    size = sum(len(r) for r in s_rows)
    pad = 2 * k - size - len(tail)
    row1 = [EMPTY] * pad + sorted(tail, key=label_key)
    return SetPartitionTableau(tuple(tuple(r) for r in [row1] + s_rows))


@lru_cache(maxsize=None)
def diagram_rsk(d: PartitionDiagram) -> tuple:
    """The pair (RSK1(d), RSK2(d)) of set-partition tableaux with 2k cells."""
    k = d.k
    prop, r1, r2 = [], [], []
    for b in d.blocks:
        top, bottom = _labels_of(b)
        if is_propagating(b):
            prop.append((top, bottom))
        elif top:
            r1.append(top)
        else:
            r2.append(bottom)
    prop.sort(key=lambda tb: label_key(tb[0]))
    ins: list = []
    rec: list = []
    for top, bottom in prop:
        r, _ = _insert(ins, bottom)
        if r == len(rec):
            rec.append([])
        rec[r].append(top)
    return _assemble(k, rec, r1), _assemble(k, ins, r2)


def _split(t: SetPartitionTableau) -> tuple:
    row1 = t.rows[0] if t.rows else ()
    tail = [x for x in row1 if x]
    return [list(r) for r in t.rows[1:]], tail


@lru_cache(maxsize=None)
def diagram_rsk_inverse(t1: SetPartitionTableau, t2: SetPartitionTableau) -> PartitionDiagram:
    if t1.shape != t2.shape:
        raise InvalidTableau("tableaux have different shapes")
    k = t1.size // 2
    if t1.size != 2 * k:
        raise InvalidTableau("tableaux must have an even number of cells")
    rec, r1 = _split(t1)
    ins, r2 = _split(t2)
    for t in (t1, t2):
        t.validate()
    blocks = [tuple(sorted(x)) for x in r1] + [tuple(-v for v in sorted(x)) for x in r2]
    while rec:
        # the largest recording label sits at the end of some row
        r = max(range(len(rec)), key=lambda i: label_key(rec[i][-1]))
        top = rec[r].pop()
        if not rec[r]:
            rec.pop()
        bottom = _uninsert(ins, r)
        blocks.append(tuple(sorted(top)) + tuple(-v for v in sorted(bottom)))
    if ins:
        raise InvalidTableau("insertion tableau not exhausted")
    try:
        d = PartitionDiagram.from_blocks(k, blocks)
    except ValueError as e:
        raise InvalidTableau(str(e)) from None
    return d


# ---------------------------------------------------------------------------
# composites


def tableau_to_hr(t: SetPartitionTableau) -> tuple:
    return bh_to_hr(bh_forward(t))


def hr_to_tableau(p: Sequence[Sequence[int]], k: int) -> SetPartitionTableau:
    return bh_inverse(hr_to_bh(p, 2 * k))


@lru_cache(maxsize=None)
def diagram_to_pair(d: PartitionDiagram) -> tuple:
    """(BHtoHR(BH(RSK1(d))), BHtoHR(BH(RSK2(d))))."""
    t1, t2 = diagram_rsk(d)
    return tableau_to_hr(t1), tableau_to_hr(t2)


def pair_to_diagram(p, q, k: int) -> PartitionDiagram:
    return diagram_rsk_inverse(hr_to_tableau(p, k), hr_to_tableau(q, k))


# ---------------------------------------------------------------------------
# enumeration of set-partition tableaux, independent of the bijections


def _set_partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


@lru_cache(maxsize=None)
def enumerate_spt(k: int) -> tuple:
    """All set-partition tableaux with 2k cells and content 1..k.

    Labels are placed in increasing last-letter order, each on an addable
    cell of the shape built so far, starting from the row of empty cells.
    """
    out = []
    for part in _set_partitions(list(range(1, k + 1))):
        labels = sorted((frozenset(b) for b in part), key=label_key)
        rows0 = [[EMPTY] * (2 * k - len(labels))] if len(labels) < 2 * k else []

        def grow(rows, i):
            if i == len(labels):
                out.append(SetPartitionTableau(tuple(tuple(r) for r in rows)))
                return
            for r in range(len(rows) + 1):
                length = len(rows[r]) if r < len(rows) else 0
                if r == 0 or len(rows[r - 1]) > length:
                    new = [list(x) for x in rows]
                    if r == len(new):
                        new.append([])
                    new[r].append(labels[i])
                    grow(new, i + 1)

        grow(rows0, 0)
    out.sort(key=lambda t: (t.shape, [[sorted(c) for c in r] for r in t.rows]))
    return tuple(out)
