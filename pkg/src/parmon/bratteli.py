"""The Bratteli diagram of the partition algebra tower and its paths.

Levels are handled as ``twice`` the level so that half-integers stay
integral: a vacillating tableau of twice-level t has t + 1 entries, entry i
sitting at level i/2.  Partitions are tuples of parts, ``()`` is the empty
partition.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidVertex, NotApplicable
from .young import enumerate_syt, partitions

Partition = tuple
VacillatingTableau = tuple


def twice(level) -> int:
    """Convert a level (int, Fraction or float with .5) to twice its value."""
    t = Fraction(level) * 2
    if t.denominator != 1 or t < 0:
        raise ValueError(f"{level} is not a nonnegative half-integer")
    return int(t)


def level_str(t: int) -> str:
    return str(t // 2) if t % 2 == 0 else f"{t // 2}.5"


def partition_key(mu: Partition) -> tuple:
    return (sum(mu), tuple(mu))


def add_box_options(mu: Partition) -> list:
    out = []
    for r in range(len(mu) + 1):
        cur = mu[r] if r < len(mu) else 0
        if r == 0 or mu[r - 1] > cur:
            new = list(mu)
            if r < len(mu):
                new[r] += 1
            else:
                new.append(1)
            out.append(tuple(new))
    return out


def remove_box_options(mu: Partition) -> list:
    out = []
    for r in range(len(mu)):
        if r == len(mu) - 1 or mu[r] > mu[r + 1]:
            new = list(mu)
            new[r] -= 1
            out.append(tuple(x for x in new if x))
    return out


def remove_top_row_box(mu: Partition) -> Partition:
    """Remove a box from the northernmost (highest French) row."""
    if not mu:
        raise ValueError("no box to remove")
    new = list(mu)
    new[-1] -= 1
    return tuple(x for x in new if x)


def vertices(level, k_max: int | None = None) -> set:
    """All partitions labelling vertices at the given level."""
    t = twice(level)
    return {mu for m in range(t // 2 + 1) for mu in partitions(m)}


def successors(mu: Partition, t: int) -> list:
    """Vertices at twice-level t + 1 joined to mu at twice-level t."""
    if t % 2 == 0:
        return [mu] + remove_box_options(mu)
    return [mu] + add_box_options(mu)


def is_valid_vt(entries: Sequence[Partition]) -> bool:
    if not entries or tuple(entries[0]) != ():
        return False
    for i, mu in enumerate(entries):
        mu = tuple(mu)
        if any(mu[j] < mu[j + 1] for j in range(len(mu) - 1)) or any(x <= 0 for x in mu):
            return False
        if sum(mu) > i // 2:
            return False
        if i and mu not in successors(tuple(entries[i - 1]), i - 1):
            return False
    return True


@lru_cache(maxsize=None)
def _paths(t: int, mu: Partition) -> tuple:
    if t == 0:
        return (((),),) if mu == () else ()
    out = []
    for prev in vertices_at(t - 1):
        if mu in successors(prev, t - 1):
            for p in _paths(t - 1, prev):
                out.append(p + (mu,))
    out.sort(key=lambda p: tuple(partition_key(x) for x in p))
    return tuple(out)


@lru_cache(maxsize=None)
def vertices_at(t: int) -> tuple:
    """Vertices at twice-level t in (size, parts) order."""
    return tuple(sorted(vertices(Fraction(t, 2)), key=partition_key))


def enumerate_vt(level, mu: Partition) -> tuple:
    """All vacillating tableaux reaching mu at the given level."""
    t = twice(level)
    mu = tuple(mu)
    if mu not in vertices(Fraction(t, 2)):
        raise InvalidVertex(f"{mu} is not a vertex at level {level_str(t)}")
    return _paths(t, mu)


@lru_cache(maxsize=None)
def _counts(t: int) -> dict:
    if t == 0:
        return {(): 1}
    below = _counts(t - 1)
    out: dict = {}
    for prev, c in below.items():
        for mu in successors(prev, t - 1):
            out[mu] = out.get(mu, 0) + c
    return out


def dimension_decomposition(level) -> dict:
    """Map each vertex at the level to its number of vacillating tableaux."""
    t = twice(level)
    counts = _counts(t)
    return {mu: counts[mu] for mu in vertices_at(t)}


# ---------------------------------------------------------------------------
# the T map


def canonical_path(mu: Partition, m: int) -> VacillatingTableau:
    """Path to mu at integer level m that, read upwards, alternately removes a
    box from the northernmost row and ascends with the same partition."""
    if sum(mu) > m:
        raise NotApplicable(f"{mu} is not a vertex at level {m}")
    rev = [tuple(mu)]
    cur = tuple(mu)
    for _ in range(m):
        if cur:
            cur = remove_top_row_box(cur)
        rev.extend([cur, cur])
    return tuple(reversed(rev))


def _check_t_input(r: Sequence[Partition]) -> tuple:
    r = tuple(tuple(x) for x in r)
    if not is_valid_vt(r):
        raise NotApplicable("input is not a vacillating tableau")
    t = len(r) - 1
    if t % 2 or t == 0:
        raise NotApplicable("input must end at a positive integer level")
    if sum(r[-1]) > t // 2 - 1:
        raise NotApplicable("final partition must have at most level - 1 boxes")
    return r


def t_map(r: Sequence[Partition]) -> VacillatingTableau:
    """T(r) for r ending at integer level l with at most l - 1 boxes."""
    r = _check_t_input(r)
    m = (len(r) - 1) // 2
    return canonical_path(r[-1], m - 1) + (r[-2],)


def t_map_literal(r: Sequence[Partition]) -> VacillatingTableau:
    """T(r) with the removal loop halted by the explicit stopping rule.

    The loop stops on reaching the empty partition, on reaching two
    consecutive single-box entries, or on reaching the single box at level 1;
    everything above is then filled with the leftmost column (empty entries).
    """
    r = _check_t_input(r)
    m = (len(r) - 1) // 2
    rev = [r[-1]]
    t = 2 * (m - 1)
    remove_next = True

    def stop():
        if rev[-1] == ():
            return True
        if len(rev) >= 2 and rev[-1] == rev[-2] == (1,):
            return True
        return rev[-1] == (1,) and t == 2

    while t > 0 and not stop():
        cur = rev[-1]
        if remove_next and cur:
            cur = remove_top_row_box(cur)
        rev.append(cur)
        remove_next = not remove_next
        t -= 1
    rev.extend([()] * t)
    return tuple(reversed(rev)) + (r[-2],)


def t_map_diagnostic(r: Sequence[Partition]) -> dict:
    """Compare the two readings of the stopping rule on one input."""
    a = t_map(r)
    b = t_map_literal(r)
    return {
        "input": tuple(tuple(x) for x in r),
        "loop_reading": a,
        "stopping_rule_reading": b,
        "agree": a == b,
        "valid": is_valid_vt(a) and is_valid_vt(b),
    }


def t_map_half(r: Sequence[Partition]) -> VacillatingTableau:
    """Analogue of T for r ending at a half-integer level m + 1/2.

    Requires at most m - 1 boxes at the end.  The result ends at level m with
    r's entry there; before that it stays on r's final partition mu for one
    half step and otherwise follows ``canonical_path(mu, m - 1)``.
    """
    r = tuple(tuple(x) for x in r)
    if not is_valid_vt(r):
        raise NotApplicable("input is not a vacillating tableau")
    t = len(r) - 1
    if t % 2 == 0:
        raise NotApplicable("input must end at a half-integer level")
    m = t // 2
    mu = r[-1]
    if m < 1 or sum(mu) > m - 1:
        raise NotApplicable("final partition must have at most m - 1 boxes")
    return canonical_path(mu, m - 1) + (mu, r[-2])


def vt_to_syt(p: Sequence[Partition]) -> tuple:
    """Standard tableau recording the cell added at each integer step."""
    p = tuple(tuple(x) for x in p)
    t = len(p) - 1
    if t % 2 or not is_valid_vt(p):
        raise NotApplicable("expected a vacillating tableau ending at an integer level")
    rows: list = []
    for i in range(1, t + 1):
        prev, cur = p[i - 1], p[i]
        if i % 2 == 1:
            if cur != prev:
                raise NotApplicable("path is not strictly growing")
            continue
        if sum(cur) != sum(prev) + 1:
            raise NotApplicable("path is not strictly growing")
        r = next(j for j in range(len(cur)) if j >= len(prev) or cur[j] != prev[j])
        if r == len(rows):
            rows.append([])
        rows[r].append(i // 2)
    return tuple(tuple(r) for r in rows)


def syt_index(p: Sequence[Partition]) -> int:
    """1-based YFLO position of vt_to_syt(p) among tableaux of its shape."""
    t = vt_to_syt(p)
    shape = tuple(len(r) for r in t)
    return enumerate_syt(shape).index(t) + 1
