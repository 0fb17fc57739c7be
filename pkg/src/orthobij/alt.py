"""Alternative orthogonal Littlewood-Richardson tableaux.

These are reverse skew semistandard tableaux of inner shape lambda and
type mu, drawn in at most 2k+1 rows whose lengths all have the same
parity (absent rows count as even).  Membership requires the reading
word to be Yamanouchi and every reading-word position p to satisfy
r_p >= 2|v_p| - o_p, where v_p is the bump chain of p under
Robinson-Schensted insertion of the reversed reading word and o_p
counts chain entries that are rightmost of their letter and long
enough relative to the other chains rooted in p's row.

The same machinery detects mu-horizontal strips in standard Young
tableaux: extract the |mu| largest entries, relabel block j by the
letter j, and test the result.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .tableaux import (
    SkewTableau,
    contains,
    is_semistandard,
    is_yamanouchi,
    make_skew,
    normalize_partition,
    partitions,
    reading_word,
    trim_syt,
)


@dataclass(frozen=True)
class AltLRTableau:
    """Reverse skew tableau plus the ambient rank parameter k."""

    k: int
    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int | None, ...], ...]

    def skew(self) -> SkewTableau:
        return SkewTableau(self.outer, self.inner, self.rows, reverse=True)

    def mu(self) -> tuple[int, ...]:
        counts = self.skew().content()
        return tuple(counts.get(j, 0) for j in range(1, max(counts, default=0) + 1))


@dataclass(frozen=True)
class VSequenceReport:
    """Per reading-word position: letter, row, bump chain, o value."""

    letters: tuple[int, ...]
    rows: tuple[int, ...]
    v: tuple[tuple[int, ...], ...]
    o: tuple[int, ...]


def make_alt(k: int, outer, inner, entries) -> AltLRTableau:
    skew = make_skew(outer, inner, entries, reverse=True)
    return AltLRTableau(k, skew.outer, skew.inner, skew.rows)


def structure_valid(t: AltLRTableau) -> bool:
    try:
        outer = normalize_partition(t.outer)
        inner = normalize_partition(t.inner)
    except ValueError:
        return False
    if len(outer) > 2 * t.k + 1 or not contains(outer, inner):
        return False
    parities = {x % 2 for x in outer}
    if len(parities) > 1:
        return False
    if parities == {1} and len(outer) < 2 * t.k + 1:
        return False
    skew = t.skew()
    counts = skew.content()
    letters = sorted(counts)
    if letters and (letters[0] != 1 or letters != list(range(1, len(letters) + 1))):
        return False
    if len(letters) > t.k:
        return False
    return is_semistandard(skew)


def _positions(t: AltLRTableau):
    """Reading-word cells as (letter, row) with rows 1-based from the top."""
    out = []
    for i in range(len(t.rows) - 1, -1, -1):
        for x in t.rows[i]:
            if x is not None:
                out.append((x, i + 1))
    return out


def v_sequences(t: AltLRTableau) -> VSequenceReport:
    cells = _positions(t)
    letters = tuple(x for x, _ in cells)
    rows = tuple(r for _, r in cells)
    n = len(letters)
    insertion_rows: list[list[tuple[int, int]]] = []
    chains: dict[int, tuple[int, ...]] = {}
    for pos in range(n, 0, -1):
        letter, current = letters[pos - 1], pos
        chain = [pos]
        for row in insertion_rows:
            bump = next((j for j, (l, _) in enumerate(row) if l > letter), None)
            if bump is None:
                row.append((letter, current))
                break
            letter, current, row[bump] = row[bump][0], row[bump][1], (letter, current)
            chain.append(current)
        else:
            insertion_rows.append([(letter, current)])
        chains[pos] = tuple(chain)
    v = tuple(chains[p] for p in range(1, n + 1))

    rightmost = {}
    for p, letter in enumerate(letters, start=1):
        rightmost[letter] = p
    o = []
    for p in range(1, n + 1):
        siblings = [
            len(v[q - 1]) for q in range(1, n + 1) if q != p and rows[q - 1] == rows[p - 1]
        ]
        count = 0
        for m, q in enumerate(v[p - 1], start=1):
            if rightmost[letters[q - 1]] != q:
                continue
            if all(length <= m - 1 for length in siblings):
                count += 1
        o.append(count)
    return VSequenceReport(letters, rows, v, tuple(o))


def o_value(t: AltLRTableau, p: int) -> int:
    return v_sequences(t).o[p - 1]


def is_alt_lr(t: AltLRTableau) -> bool:
    if not structure_valid(t):
        return False
    report = v_sequences(t)
    if not is_yamanouchi(report.letters):
        return False
    return all(
        report.rows[p] >= 2 * len(report.v[p]) - report.o[p]
        for p in range(len(report.letters))
    )


def enumerate_alt_candidates(lam, mu, n: int):
    """All reverse skew SSYT of inner shape lam and type mu on n rows
    with the parity constraint, before the Yamanouchi and row-bound
    filters."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    k = (n - 1) // 2
    if n < 3 or n % 2 == 0 or len(mu) > k or len(lam) > n:
        return
    total = sum(lam) + sum(mu)
    for outer in partitions(total):
        if len(outer) > n or not contains(outer, lam):
            continue
        parities = {x % 2 for x in outer}
        if len(parities) > 1 or (parities == {1} and len(outer) < n):
            continue
        inner_padded = tuple(lam) + (0,) * (len(outer) - len(lam))
        cells = [
            (i, j)
            for i in range(len(outer))
            for j in range(inner_padded[i], outer[i])
        ]
        counts = dict(enumerate(mu, start=1))
        grid: dict[tuple[int, int], int] = {}

        def fill(idx):
            if idx == len(cells):
                entries = [
                    [grid[(i, j)] for j in range(inner_padded[i], outer[i])]
                    for i in range(len(outer))
                ]
                yield make_alt(k, outer, lam, entries)
                return
            i, j = cells[idx]
            for letter in range(1, len(mu) + 1):
                if counts[letter] == 0:
                    continue
                left = grid.get((i, j - 1))
                if left is not None and left < letter:
                    continue
                above = grid.get((i - 1, j))
                if above is not None and above <= letter:
                    continue
                counts[letter] -= 1
                grid[(i, j)] = letter
                yield from fill(idx + 1)
                del grid[(i, j)]
                counts[letter] += 1

        yield from fill(0)


def enumerate_alt_lr(lam, mu, n: int):
    """All members with inner shape lam and type mu on n = 2k+1 rows."""
    for candidate in enumerate_alt_candidates(lam, mu, n):
        if is_alt_lr(candidate):
            yield candidate


def strip_to_alt(q, mu, k: int) -> AltLRTableau | None:
    """Extract the |mu| largest entries of the SYT q, relabel block j by j.

    Returns None when the blocks are not column-distinct horizontal
    strips filled increasingly, or the leftover cells do not form a
    partition shape.
    """
    rows = trim_syt(q)
    outer = tuple(len(r) for r in rows)
    mu = normalize_partition(mu)
    r = sum(outer)
    if sum(mu) > r:
        return None
    position = {}
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            position[x] = (i, j)
    taken = 0
    letter_at: dict[tuple[int, int], int] = {}
    for j_letter, part in enumerate(mu, start=1):
        block = [position[r - taken - offset] for offset in range(part - 1, -1, -1)]
        taken += part
        columns = [c for _, c in block]
        if len(set(columns)) != len(columns) or columns != sorted(columns):
            return None
        for cell in block:
            letter_at[cell] = j_letter
    leftover = tuple(
        sum(1 for j in range(len(row)) if (i, j) not in letter_at)
        for i, row in enumerate(rows)
    )
    try:
        inner = normalize_partition(leftover)
    except ValueError:
        return None
    padded = inner + (0,) * (len(outer) - len(inner))
    entries = []
    for i in range(len(outer)):
        if any(
            (i, j) in letter_at for j in range(padded[i])
        ):
            return None
        entries.append([letter_at[(i, j)] for j in range(padded[i], outer[i])])
    return make_alt(k, outer, inner, entries)


def mu_horizontal_strip(q, mu, k: int) -> bool:
    """Whether the largest entries of q, grouped by the parts of mu,
    extract to a member tableau."""
    rows = trim_syt(q)
    outer = tuple(len(r) for r in rows)
    parities = {x % 2 for x in outer}
    if len(outer) > 2 * k + 1 or len(parities) > 1:
        return False
    if parities == {1} and len(outer) != 2 * k + 1:
        return False
    mu = normalize_partition(mu)
    if len(mu) > k:
        return False
    if not mu:
        return True
    alt = strip_to_alt(q, mu, k)
    return alt is not None and is_alt_lr(alt)


def alt_to_json(t: AltLRTableau):
    return {
        "k": t.k,
        "outer": list(t.outer),
        "inner": list(t.inner),
        "cells": [
            {"row": i + 1, "col": j + 1, "letter": x}
            for i, j, x in t.skew().cells()
        ],
    }


def alt_from_json(data) -> AltLRTableau:
    outer = normalize_partition(data["outer"])
    inner = normalize_partition(data["inner"])
    padded = inner + (0,) * (len(outer) - len(inner))
    lookup = {
        (cell["row"] - 1, cell["col"] - 1): int(cell["letter"])
        for cell in data["cells"]
    }
    entries = [
        [lookup[(i, j)] for j in range(padded[i], outer[i])]
        for i in range(len(outer))
    ]
    return make_alt(int(data["k"]), outer, inner, entries)
