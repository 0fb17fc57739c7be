"""Conversion between two-column and alternative tableaux.

kwon_to_alt folds the pieces T_ell, ..., T_1 of a two-column tableau
into a single reverse skew tableau: every entry of T_i contributes an
unfilled cell to the matching column, the letter i is written below the
tail columns (below the lower tail and fin columns when the piece has
residuum one), columns are re-sorted, each row is compacted by merge
and shift moves, and finally row lengths are corrected to the parity of
the columns of S.

alt_to_kwon peels the letters off again, smallest first.  For letter i
the parity moves are pushed back down, shifts and merges are undone
right-to-left, each cell holding i marks the lowest unfilled cell of
its column (the marks rebuild the tail), and the bottom two candidate
rows 2M and 2M+1, M = k - i + 1, rebuild the two columns.  When both
come out odd the marks contain the fin instead of the tail root: the
smallest mark joins the right column and the left column slides one row
down, which moves its largest shared entry into the tail.
"""

from __future__ import annotations

import os

from .alt import AltLRTableau, is_alt_lr, make_alt
from .kwon import (
    KwonTableau,
    Rectangular,
    TwoColumn,
    classify_type,
    fin,
    is_kwon_lr_explicit,
    lower_tail,
    tail,
)
from .tableaux import conjugate, is_partition

EMPTY = 0
MARK = -1


class InvalidInput(ValueError):
    """Argument outside the domain of the conversion."""


def _debug() -> bool:
    return bool(os.environ.get("ORTHOBIJ_DEBUG_ASSERT"))


class WorkTableau:
    """Mutable grid of top-aligned columns.

    Cell values: 0 for an unfilled cell, -1 for a marked unfilled cell,
    a positive letter otherwise.  Rows and columns are 1-based in the
    public methods, row 1 on top.
    """

    def __init__(self, columns=()):
        self.columns: list[list[int]] = [list(c) for c in columns]

    @classmethod
    def from_rectangular(cls, s: Rectangular) -> "WorkTableau":
        widths = [len(c) for c in reversed(s.columns)]
        grid = cls()
        for width in widths:
            for c in range(width):
                if c >= len(grid.columns):
                    grid.columns.append([])
                grid.columns[c].append(EMPTY)
        return grid

    @classmethod
    def from_alt(cls, t: AltLRTableau) -> "WorkTableau":
        grid = cls()
        for row in t.rows:
            for c, value in enumerate(row):
                if c >= len(grid.columns):
                    grid.columns.append([])
                grid.columns[c].append(EMPTY if value is None else value)
        return grid

    def nrows(self) -> int:
        return max((len(c) for c in self.columns), default=0)

    def height(self, c: int) -> int:
        return len(self.columns[c - 1]) if 1 <= c <= len(self.columns) else 0

    def cell(self, r: int, c: int) -> int | None:
        if 1 <= c <= len(self.columns) and 1 <= r <= len(self.columns[c - 1]):
            return self.columns[c - 1][r - 1]
        return None

    def row_columns(self, r: int) -> list[int]:
        return [c for c in range(1, len(self.columns) + 1) if self.height(c) >= r]

    def row_values(self, r: int) -> list[tuple[int, int]]:
        return [(c, self.columns[c - 1][r - 1]) for c in self.row_columns(r)]

    def add_empty(self, c: int) -> None:
        while len(self.columns) < c:
            self.columns.append([])
        self.columns[c - 1].append(EMPTY)

    def add_letter(self, c: int, letter: int) -> None:
        while len(self.columns) < c:
            self.columns.append([])
        self.columns[c - 1].append(letter)

    def sort_columns(self) -> None:
        for col in self.columns:
            letters = sorted((x for x in col if x > 0), reverse=True)
            col[:] = [x for x in col if x <= 0] + letters

    def _sort_column(self, c: int) -> None:
        col = self.columns[c - 1]
        letters = sorted((x for x in col if x > 0), reverse=True)
        col[:] = [x for x in col if x <= 0] + letters

    def _trim(self) -> None:
        while self.columns and not self.columns[-1]:
            self.columns.pop()

    def _remove_cell(self, r: int, c: int) -> int:
        value = self.columns[c - 1].pop(r - 1)
        self._trim()
        return value

    def rows_list(self) -> list[list[int]]:
        return [
            [self.columns[c - 1][r - 1] for c in self.row_columns(r)]
            for r in range(1, self.nrows() + 1)
        ]

    def is_young(self) -> bool:
        heights = [len(c) for c in self.columns]
        return all(a >= b for a, b in zip(heights, heights[1:]))

    def unfilled_is_young(self) -> bool:
        depths = [sum(1 for x in col if x <= 0) for col in self.columns]
        for col, d in zip(self.columns, depths):
            if any(x > 0 for x in col[:d]):
                return False
        return all(a >= b for a, b in zip(depths, depths[1:]))

    # ----- forward moves -------------------------------------------------

    def merge_row(self, r: int, letter: int) -> None:
        while True:
            cells = [(c, v) for c, v in self.row_values(r) if v > 0]
            target = None
            for idx, (c, v) in enumerate(cells):
                if any(w < v for _, w in cells[:idx]):
                    target = c
            if target is None:
                return
            col = self.columns[target - 1]
            if col[-1] != letter:
                raise InvalidInput("merge expects the current letter at the bottom")
            moved_i = col.pop()
            moved_l = col.pop(r - 1)
            self._trim()
            recv = self.columns[target - 2]
            recv.extend((moved_l, moved_i))
            self._sort_column(target - 1)

    def shift_row(self, r: int) -> None:
        moved = True
        while moved:
            moved = False
            for c in self.row_columns(r):
                if c == 1 or self.columns[c - 1][r - 1] <= 0:
                    continue
                if self.height(c - 1) >= r:
                    continue
                if self.height(c - 1) != r - 1:
                    raise InvalidInput("shift into a hole deeper than one row")
                col = self.columns[c - 1]
                self.columns[c - 2].extend(col[r - 1 :])
                del col[r - 1 :]
                self._trim()
                moved = True
                break

    def parity_sweep(self, letter: int, parity: int) -> None:
        for r in range(self.nrows(), 0, -1):
            width = len(self.row_columns(r))
            if width == 0 or width % 2 == parity:
                continue
            if r == 1:
                raise InvalidInput("top row parity cannot be corrected")
            spots = [c for c, v in self.row_values(r) if v == letter]
            if not spots:
                raise InvalidInput("no current letter in a wrong-parity row")
            c = spots[-1]
            if self.height(c) != r:
                raise InvalidInput("parity move from a non-bottom cell")
            value = self._remove_cell(r, c)
            above = self.row_columns(r - 1)
            dest = (above[-1] if above else 0) + 1
            if self.height(dest) != r - 2:
                raise InvalidInput("parity landing spot is not at the row end")
            self.add_letter(dest, value)

    # ----- inverse moves -------------------------------------------------

    def unparity(self, letter: int, excluded_row: int) -> None:
        rows = [
            r
            for r in range(1, self.nrows() + 1)
            if r != excluded_row
            and sum(1 for _, v in self.row_values(r) if v == letter) % 2 == 1
        ]
        for r in rows:
            spots = [c for c, v in self.row_values(r) if v == letter]
            c = spots[-1]
            if self.height(c) != r:
                raise InvalidInput("parity undo from a non-bottom cell")
            value = self._remove_cell(r, c)
            below = self.row_columns(r + 1)
            dest = (below[-1] if below else 0) + 1
            if self.height(dest) != r:
                raise InvalidInput("parity undo landing spot is not at the row end")
            self.add_letter(dest, value)

    def unshift_row(self, r: int, letter: int) -> None:
        moved = True
        while moved:
            moved = False
            for c in range(1, len(self.columns) + 1):
                h = self.height(c)
                if h == 0 or self.columns[c - 1][h - 1] != letter:
                    continue
                partner = self.columns[c - 1][h - 2] if h >= 2 else 0
                if (
                    r == h
                    and r >= 2
                    and self.height(c + 1) == r - 1
                    and letter not in self._column_letters(c + 1)
                ):
                    value = self.columns[c - 1].pop()
                    self._trim()
                    self.add_letter(c + 1, value)
                    moved = True
                    break
                if (
                    partner > 0
                    and h >= 3
                    and r in (h, h - 1)
                    and self.height(c + 1) == h - 2
                    and letter not in self._column_letters(c + 1)
                    and partner not in self._column_letters(c + 1)
                ):
                    value = self.columns[c - 1].pop()
                    above = self.columns[c - 1].pop()
                    self._trim()
                    self.add_letter(c + 1, above)
                    self.add_letter(c + 1, value)
                    moved = True
                    break

    def _column_letters(self, c: int) -> set[int]:
        if not 1 <= c <= len(self.columns):
            return set()
        return {x for x in self.columns[c - 1] if x > 0}

    def unmerge_row(self, r: int, letter: int) -> None:
        while True:
            fired = False
            for c in range(1, len(self.columns) + 1):
                h = self.height(c)
                if h < 3 or self.columns[c - 1][h - 1] != letter:
                    continue
                rows_j2 = self._unmerge_rows(c, letter)
                if not rows_j2 or rows_j2[0] != r:
                    continue
                col = self.columns[c - 1]
                moved_i = col.pop()
                moved_j2 = col.pop(r - 1)
                self._trim()
                recv_index = c  # 0-based index of column c+1
                while len(self.columns) <= recv_index:
                    self.columns.append([])
                self.columns[recv_index].extend((moved_j2, moved_i))
                self._sort_column(c + 1)
                fired = True
                break
            if not fired:
                return

    def _unmerge_rows(self, c: int, letter: int) -> list[int]:
        """Rows of qualifying j2 entries in column c, topmost first."""
        col = self.columns[c - 1]
        h = len(col)
        right = self.height(c + 1)
        if right > h - 2:
            return []
        out = []
        for p in range(h - 1):  # j2 index; needs an entry directly below
            j2 = col[p]
            j1 = col[p + 1]
            if j2 <= 0 or j1 <= 0:
                continue
            if not letter <= j1 < j2:
                continue
            if right < p:  # no cell in the row above j2
                continue
            letters_right = self._column_letters(c + 1)
            if letter in letters_right or j2 in letters_right:
                continue
            if right > p:
                j3 = self.columns[c][p]
                if j3 > 0 and j1 <= j3:
                    continue
            out.append(p + 1)
        return out


def _parity_of_s(s: Rectangular) -> int:
    return len(s.columns[0]) % 2 if s.columns else 0


def _insert_letters(grid: WorkTableau, t: TwoColumn, letter: int) -> None:
    for l in t.left:
        grid.add_empty(l)
    for l in t.right:
        grid.add_empty(l)
    ty = classify_type(t)
    if ty is None:
        raise InvalidInput("piece without a type")
    label_columns = tail(t) if ty == 1 else tuple(lower_tail(t)) + (fin(t),)
    for l in label_columns:
        grid.add_letter(l, letter)


def _iteration_invariant(grid: WorkTableau, k: int, letter: int) -> bool:
    """Relabeling letter..ell to 1..: the grid is a valid member."""
    shifted = WorkTableau(
        [
            [x - letter + 1 if x > 0 else x for x in col]
            for col in grid.columns
        ]
    )
    try:
        t = _to_alt(shifted, k - letter + 1)
    except ValueError:
        return False
    return is_alt_lr(t)


def _to_alt(grid: WorkTableau, k: int) -> AltLRTableau:
    if not grid.is_young():
        raise InvalidInput("final shape is not a Young diagram")
    if not grid.unfilled_is_young():
        raise InvalidInput("unfilled cells do not form a Young diagram")
    outer, inner, entries = [], [], []
    for row in grid.rows_list():
        letters = [x for x in row if x > 0]
        if row[len(row) - len(letters) :] != letters:
            raise InvalidInput("letters are not right-justified in a row")
        outer.append(len(row))
        inner.append(len(row) - len(letters))
        entries.append(letters)
    return make_alt(k, outer, inner, entries)


def kwon_to_alt(L: KwonTableau, *, validate: bool = True) -> AltLRTableau:
    """Fold a two-column tableau into its alternative form."""
    if validate and not is_kwon_lr_explicit(L):
        raise InvalidInput("not an orthogonal Littlewood-Richardson tableau")
    k = (L.n - 1) // 2
    parity = _parity_of_s(L.s)
    grid = WorkTableau.from_rectangular(L.s)
    for i in range(len(L.tableaux), 0, -1):
        _insert_letters(grid, L.tableaux[i - 1], i)
        grid.sort_columns()
        r = 1
        while r <= grid.nrows():
            grid.merge_row(r, i)
            grid.shift_row(r)
            r += 1
        grid.parity_sweep(i, parity)
        if _debug():
            assert grid.unfilled_is_young(), "unfilled region must stay straight"
            assert _iteration_invariant(grid, k, i), "iteration invariant broken"
    result = _to_alt(grid, k)
    if validate and not is_alt_lr(result):
        raise InvalidInput("image is not an alternative tableau")
    return result


def _extract_piece(grid: WorkTableau, letter: int, m: int) -> TwoColumn:
    positions = [
        (c, r)
        for c in range(1, len(grid.columns) + 1)
        for r in range(1, grid.height(c) + 1)
        if grid.columns[c - 1][r - 1] == letter
    ]
    for c, r in positions:
        col = grid.columns[c - 1]
        empties = [idx for idx, x in enumerate(col) if x == EMPTY]
        if not empties:
            raise InvalidInput("no unfilled cell left to mark")
        col[empties[-1]] = MARK
    tail_values = sorted(
        c
        for c in range(1, len(grid.columns) + 1)
        for x in grid.columns[c - 1]
        if x == MARK
    )
    for col in grid.columns:
        col[:] = [x for x in col if x != letter and x != MARK]
    grid._trim()
    bottom, upper = 2 * m, 2 * m + 1
    if grid.nrows() > upper:
        raise InvalidInput("grid too tall for the current letter")
    first = [c for c in range(1, len(grid.columns) + 1) if grid.height(c) >= upper]
    second = [c for c in range(1, len(grid.columns) + 1) if grid.height(c) >= bottom]
    for c in first + second:
        if grid.columns[c - 1][-1] != EMPTY:
            raise InvalidInput("candidate rows still carry letters")
        grid.columns[c - 1].pop()
    grid._trim()
    if len(first) % 2 and len(second) % 2:
        if not tail_values:
            raise InvalidInput("odd columns without a mark")
        right = sorted(second + [tail_values[0]])
        shared = first[:-1]
        tail_cells = [first[-1]] + tail_values[1:]
    else:
        right = second
        shared = first
        tail_cells = tail_values
    b = len(right)
    return TwoColumn(b - len(shared), b, tuple(shared + tail_cells), tuple(right))


def alt_to_kwon(t: AltLRTableau, *, validate: bool = True) -> KwonTableau:
    """Unfold an alternative tableau into its two-column form."""
    if validate and not is_alt_lr(t):
        raise InvalidInput("not an alternative tableau")
    k = t.k
    n = 2 * k + 1
    mu = t.mu()
    if not is_partition(mu) or len(mu) > k:
        raise InvalidInput("letter counts do not form a partition")
    grid = WorkTableau.from_alt(t)
    pieces = []
    for i in range(1, len(mu) + 1):
        m = k - i + 1
        grid.unparity(i, 2 * m + 1)
        for r in range(grid.nrows(), 0, -1):
            grid.unshift_row(r, i)
            grid.unmerge_row(r, i)
        piece = _extract_piece(grid, i, m)
        if _debug():
            assert piece.tail_length() == mu[i - 1], "tail length must match"
        pieces.append(piece)
    if any(x > 0 for col in grid.columns for x in col):
        raise InvalidInput("letters remain after extraction")
    widths = [len(grid.row_columns(r)) for r in range(1, grid.nrows() + 1)]
    if any(a < b for a, b in zip(widths, widths[1:])):
        raise InvalidInput("leftover rows do not form a Young diagram")
    pad = n - 2 * len(mu) - len(widths)
    if pad < 0:
        raise InvalidInput("too many leftover rows")
    s = Rectangular(((),) * pad + tuple(tuple(range(1, w + 1)) for w in reversed(widths)))
    counts: dict[int, int] = {}
    for piece in pieces:
        for x in piece.left + piece.right:
            counts[x] = counts.get(x, 0) + 1
    for col in s.columns:
        for x in col:
            counts[x] = counts.get(x, 0) + 1
    heights = tuple(counts.get(v, 0) for v in range(1, max(counts, default=0) + 1))
    if not is_partition(heights):
        raise InvalidInput("content is not a partition column profile")
    result = KwonTableau(n, mu, conjugate(heights), tuple(pieces), s)
    if validate and not is_kwon_lr_explicit(result):
        raise InvalidInput("image is not an orthogonal Littlewood-Richardson tableau")
    return result
