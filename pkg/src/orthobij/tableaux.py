"""Partitions, Young tableaux, reading words, and Robinson-Schensted insertion.

Conventions used throughout the package:

* A partition is a tuple of weakly decreasing positive integers; () is the
  empty partition.  Trailing zeros are accepted on input and trimmed.
* A standard Young tableau (SYT) is a tuple of rows, each row a tuple of
  ints.  Trailing empty rows are allowed (some algorithms want a fixed row
  count) and are ignored by comparisons done through ``syt_equal``.
* A skew semistandard tableau stores one row per outer row, with ``None``
  in the inner (cut out) cells.  ``reverse=True`` means rows weakly
  decrease and columns strictly decrease.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial


class InvalidConcatenation(ValueError):
    """Concatenating two SYT would break column strictness or row lengths."""


# ---------------------------------------------------------------------------
# partitions


def normalize_partition(parts) -> tuple[int, ...]:
    """Trim trailing zeros and validate weak decrease."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {p}")
    return p


def is_partition(parts) -> bool:
    try:
        normalize_partition(parts)
    except (ValueError, TypeError):
        return False
    return True


def conjugate(p) -> tuple[int, ...]:
    p = normalize_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def partitions(n: int, max_part: int | None = None):
    """Yield all partitions of n with parts bounded by max_part, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def contains(outer, inner) -> bool:
    """Is inner a subdiagram of outer?"""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def is_horizontal_strip(outer, inner) -> bool:
    """No two cells of outer minus inner in the same column."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if not contains(outer, inner):
        return False
    padded = inner + (0,) * (len(outer) - len(inner))
    # row i+1 must start at or right of the end of inner row i
    return all(
        outer[i + 1] <= padded[i] for i in range(len(outer) - 1)
    )


def is_vertical_strip(outer, inner) -> bool:
    """No two cells of outer minus inner in the same row."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if not contains(outer, inner):
        return False
    padded = inner + (0,) * (len(outer) - len(inner))
    return all(outer[i] - padded[i] <= 1 for i in range(len(outer)))


# ---------------------------------------------------------------------------
# standard Young tableaux


def trim_syt(rows) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(r) for r in rows)
    while rows and not rows[-1]:
        rows = rows[:-1]
    return rows


def syt_equal(a, b) -> bool:
    return trim_syt(a) == trim_syt(b)


def syt_shape(rows) -> tuple[int, ...]:
    return normalize_partition(tuple(len(r) for r in trim_syt(rows)))


def is_syt(rows) -> bool:
    rows = trim_syt(rows)
    lengths = [len(r) for r in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    entries = [x for r in rows for x in r]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for r in rows:
        if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
            return False
    for i in range(len(rows) - 1):
        for c in range(len(rows[i + 1])):
            if rows[i][c] >= rows[i + 1][c]:
                return False
    return True


def syt_row_of(rows, entry: int) -> int:
    """0-based row index of an entry."""
    for i, r in enumerate(rows):
        if entry in r:
            return i
    raise ValueError(f"entry {entry} not in tableau")


def syt_descent_set(rows) -> frozenset[int]:
    """Entries j whose successor j+1 sits in a strictly lower row."""
    rows = trim_syt(rows)
    n = sum(len(r) for r in rows)
    where = {}
    for i, r in enumerate(rows):
        for x in r:
            where[x] = i
    return frozenset(j for j in range(1, n) if where[j + 1] > where[j])


def concatenate_syt(q1, q2) -> tuple[tuple[int, ...], ...]:
    """Append the rows of q2, entries shifted past q1, to the rows of q1."""
    q1 = trim_syt(q1)
    q2 = trim_syt(q2)
    shift = sum(len(r) for r in q1)
    rows = []
    for i in range(max(len(q1), len(q2))):
        a = q1[i] if i < len(q1) else ()
        b = tuple(x + shift for x in q2[i]) if i < len(q2) else ()
        rows.append(a + b)
    result = trim_syt(rows)
    if not is_syt(result):
        raise InvalidConcatenation(f"concatenation of {q1} and {q2} is not standard")
    return result


def enumerate_syt(shape):
    """All SYT of the given shape, sorted by their top-to-bottom row reading."""
    shape = normalize_partition(shape)
    results = []
    n = sum(shape)
    rows = [[] for _ in shape]

    def place(entry):
        if entry > n:
            results.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(entry)
                place(entry + 1)
                rows[i].pop()

    place(1)
    results.sort(key=lambda t: tuple(x for r in t for x in r))
    return results


@cache
def syt_count(shape) -> int:
    """Number of SYT of the shape, by the hook length product."""
    shape = normalize_partition(shape)
    n = sum(shape)
    conj = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks


# ---------------------------------------------------------------------------
# skew semistandard tableaux


@dataclass(frozen=True)
class SkewTableau:
    """Skew tableau with explicit None padding for the inner shape.

    rows[i] has length outer[i] and starts with inner_i Nones.  With
    reverse=True the semistandard conditions flip to weakly decreasing
    rows and strictly decreasing columns.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int | None, ...], ...]
    reverse: bool = False

    def cells(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x is not None:
                    yield i, j, x

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def content(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _, _, x in self.cells():
            counts[x] = counts.get(x, 0) + 1
        return counts

    def size(self) -> int:
        return sum(1 for _ in self.cells())


def make_skew(outer, inner, entries, reverse=False) -> SkewTableau:
    """Build a SkewTableau from per-row entry lists covering outer minus inner."""
    outer = normalize_partition(outer)
    inner = normalize_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    padded = inner + (0,) * (len(outer) - len(inner))
    rows = []
    for i in range(len(outer)):
        row_entries = tuple(entries[i]) if i < len(entries) else ()
        if len(row_entries) != outer[i] - padded[i]:
            raise ValueError(
                f"row {i} needs {outer[i] - padded[i]} entries, got {len(row_entries)}"
            )
        rows.append((None,) * padded[i] + row_entries)
    return SkewTableau(outer, inner, tuple(rows), reverse)


def is_semistandard(t: SkewTableau) -> bool:
    for i, row in enumerate(t.rows):
        vals = [(j, x) for j, x in enumerate(row) if x is not None]
        for (j1, x1), (j2, x2) in zip(vals, vals[1:]):
            if j2 == j1 + 1:
                if t.reverse and x1 < x2:
                    return False
                if not t.reverse and x1 > x2:
                    return False
    for i in range(len(t.rows) - 1):
        upper, lower = t.rows[i], t.rows[i + 1]
        for j in range(min(len(upper), len(lower))):
            a, b = upper[j], lower[j]
            if a is None or b is None:
                continue
            if t.reverse and a <= b:
                return False
            if not t.reverse and a >= b:
                return False
    return True


def reading_word(t: SkewTableau) -> tuple[int, ...]:
    """Concatenate the rows from bottom to top, each left to right."""
    out = []
    for row in reversed(t.rows):
        out.extend(x for x in row if x is not None)
    return tuple(out)


# ---------------------------------------------------------------------------
# words


def weight(w) -> dict[int, int]:
    counts: dict[int, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
    return counts


def is_yamanouchi(w) -> bool:
    """Every prefix has at least as many i's as (i+1)'s, for every i."""
    counts: dict[int, int] = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def is_reverse_yamanouchi(w) -> bool:
    return is_yamanouchi(tuple(reversed(tuple(w))))


# ---------------------------------------------------------------------------
# Robinson-Schensted row insertion


def rsk_insert(w):
    """Row-insert the letters of w; return (P, Q) as row tuples.

    P is semistandard, Q standard; Q records the order in which cells
    were created.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        i = 0
        while True:
            if i == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[i]
            # find the leftmost entry strictly greater than x
            pos = None
            for j, y in enumerate(row):
                if y > x:
                    pos = j
                    break
            if pos is None:
                row.append(x)
                q_rows[i].append(step)
                break
            row[pos], x = x, row[pos]
            i += 1
    return tuple(tuple(r) for r in p_rows), tuple(tuple(r) for r in q_rows)


def bump_sets(w):
    """For each letter of w, the set of values touched by its insertion chain.

    The chain contains the inserted letter plus every entry it displaced
    down the rows.
    """
    p_rows: list[list[int]] = []
    chains = []
    for x in w:
        chain = {x}
        i = 0
        while True:
            if i == len(p_rows):
                p_rows.append([x])
                break
            row = p_rows[i]
            pos = None
            for j, y in enumerate(row):
                if y > x:
                    pos = j
                    break
            if pos is None:
                row.append(x)
                break
            row[pos], x = x, row[pos]
            chain.add(x)
            i += 1
        chains.append(frozenset(chain))
    return tuple(chains)


# ---------------------------------------------------------------------------
# JSON helpers


def partition_to_json(p):
    return list(normalize_partition(p))


def syt_to_json(rows):
    return [list(r) for r in trim_syt(rows)]


def syt_from_json(data):
    rows = trim_syt(tuple(tuple(int(x) for x in r) for r in data))
    if not is_syt(rows):
        raise ValueError(f"not a standard Young tableau: {data}")
    return rows


def skew_to_json(t: SkewTableau):
    return {
        "outer": list(t.outer),
        "inner": list(t.inner),
        "rows": [[x for x in row] for row in t.rows],
        "reversed": t.reverse,
    }


def skew_from_json(data) -> SkewTableau:
    outer = normalize_partition(data["outer"])
    inner = normalize_partition(data["inner"])
    rows = tuple(
        tuple(None if x is None else int(x) for x in row) for row in data["rows"]
    )
    return SkewTableau(outer, inner, rows, bool(data.get("reversed", False)))
