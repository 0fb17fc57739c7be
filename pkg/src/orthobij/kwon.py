"""Orthogonal Littlewood-Richardson tableaux in Kwon's form.

A tableau is a tuple (T_1, ..., T_l, S).  Each T_j is a two-column skew
semistandard tableau of shape (2^b, 1^m)/(1^a) with a, b even and
residuum at most one, whose single-column part (the tail) has length
mu_j.  S is a skew semistandard tableau of rectangular outer shape with
bottom-aligned columns whose lengths all have the same parity.

Membership in LR_lambda^mu can be decided two ways: through pairwise
admissibility plus vanishing epsilon_i in the column crystal, or through
the explicit conditions (H), (H'), (S), (T1), (T2), (G) on gaps, slots,
types and tails.  Both are implemented; they serve as mutual oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from . import crystal
from .tableaux import conjugate, normalize_partition


class NoFin(ValueError):
    """The second column is empty."""


class ResiduumNotOne(ValueError):
    """The starred slide requires residuum exactly one."""


class TailOrderViolation(ValueError):
    """Pair admissibility requires weakly decreasing tail lengths."""


@dataclass(frozen=True)
class TwoColumn:
    """Shape (2^b, 1^m)/(1^a); columns are stored top to bottom.

    The left column occupies rows a+1 .. b+m, the right column rows
    1 .. b, so m = len(left) - b + a.
    """

    a: int
    b: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def tail_length(self) -> int:
        return len(self.left) - (self.b - self.a)

    def rows(self) -> int:
        return self.b + self.tail_length()


@dataclass(frozen=True)
class Rectangular:
    """Bottom-aligned columns, left to right, each stored top to bottom."""

    columns: tuple[tuple[int, ...], ...]

    def is_odd(self) -> bool:
        return bool(self.columns) and len(self.columns[0]) % 2 == 1

    def first_column(self) -> tuple[int, ...]:
        return self.columns[0] if self.columns else ()


@dataclass(frozen=True)
class KwonTableau:
    n: int
    mu: tuple[int, ...]
    lam: tuple[int, ...]
    tableaux: tuple[TwoColumn, ...]
    s: Rectangular


def _strict(column) -> bool:
    return all(x >= 1 for x in column) and all(
        x < y for x, y in zip(column, column[1:])
    )


def validate_two_column(t: TwoColumn) -> bool:
    if t.a < 0 or t.b < t.a or t.a % 2 or t.b % 2:
        return False
    if len(t.right) != t.b or t.tail_length() < 1:
        return False
    if not _strict(t.left) or not _strict(t.right):
        return False
    for row in range(t.a + 1, t.b + 1):
        if t.left[row - t.a - 1] > t.right[row - 1]:
            return False
    return True


def validate_rectangular(s: Rectangular) -> bool:
    lengths = [len(c) for c in s.columns]
    if any(a > b for a, b in zip(lengths, lengths[1:])):
        return False
    if len({length % 2 for length in lengths}) > 1:
        return False
    for c in s.columns:
        if not _strict(c):
            return False
    for c, d in zip(s.columns, s.columns[1:]):
        if any(c[-i] > d[-i] for i in range(1, len(c) + 1)):
            return False
    return True


def tail(t: TwoColumn) -> tuple[int, ...]:
    return t.left[t.b - t.a:]


def tail_root(t: TwoColumn) -> int:
    return t.left[t.b - t.a]


def lower_tail(t: TwoColumn) -> tuple[int, ...]:
    return t.left[t.b - t.a + 1:]


def fin(t: TwoColumn) -> int:
    if not t.right:
        raise NoFin("second column is empty")
    return t.right[-1]


def residuum(t: TwoColumn) -> int:
    best = 0
    for shift in range(1, min(t.a, t.tail_length()) + 1):
        ok = True
        for row in range(t.a + 1, t.b + t.tail_length() + 1):
            i = row - shift - 1
            if 0 <= i < t.b and t.left[row - t.a - 1] > t.right[i]:
                ok = False
                break
        if ok:
            best = shift
    return best


def slide_down(t: TwoColumn) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pair (^LT, ^RT): right cells slide down, unmatched left cells
    join the right column."""
    bottom = t.b + t.tail_length()

    def left_at(row):
        i = row - t.a - 1
        return t.left[i] if 0 <= i < len(t.left) else None

    placed_rows = set()
    lowest = bottom
    for idx in range(t.b, 0, -1):
        value = t.right[idx - 1]
        row = idx
        while row + 1 <= lowest and (
            left_at(row + 1) is None or left_at(row + 1) <= value
        ):
            row += 1
        placed_rows.add(row)
        lowest = row - 1
    l_col = tuple(
        sorted(
            t.left[row - t.a - 1]
            for row in range(t.a + 1, bottom + 1)
            if row in placed_rows
        )
    )
    r_col = tuple(
        sorted(
            list(t.right)
            + [
                t.left[row - t.a - 1]
                for row in range(t.a + 1, bottom + 1)
                if row not in placed_rows
            ]
        )
    )
    return l_col, r_col


def slide_up_star(t: TwoColumn) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pair (T^L*, T^R*): left cells slide up, the largest unmatched
    right entry joins the left column.  Residuum must be one."""
    if residuum(t) != 1:
        raise ResiduumNotOne(f"residuum is {residuum(t)}")

    def right_at(row):
        return t.right[row - 1] if 1 <= row <= t.b else None

    placed_rows = set()
    highest = 1
    for i, value in enumerate(t.left):
        row = t.a + 1 + i
        while row - 1 >= highest and (
            right_at(row - 1) is None or right_at(row - 1) >= value
        ):
            row -= 1
        placed_rows.add(row)
        highest = row + 1
    unmatched = [t.right[row - 1] for row in range(1, t.b + 1) if row not in placed_rows]
    moved = max(unmatched)
    r_star = list(t.right)
    r_star.remove(moved)
    return tuple(sorted(list(t.left) + [moved])), tuple(r_star)


def _from_bottom(column, i: int):
    """C(i), the i-th entry from the bottom, or None."""
    return column[-i] if 1 <= i <= len(column) else None


def is_admissible_pair(t: TwoColumn, u: TwoColumn) -> bool:
    mu_t, mu_u = t.tail_length(), u.tail_length()
    if mu_t < mu_u:
        raise TailOrderViolation(f"tail lengths {mu_t} < {mu_u}")
    r_t, r_u = residuum(t), residuum(u)
    starred = r_t * r_u == 1
    if t.b > len(u.left) - mu_u + 2 * r_t * r_u:
        return False
    t_r = slide_up_star(t)[1] if starred else t.right
    l_u = slide_down(u)[0]
    for i in range(1, min(len(t_r), len(l_u)) + 1):
        if t_r[-i] > l_u[-i]:
            return False
    r_t_col = slide_down(t)[1]
    u_l = slide_up_star(u)[0] if starred else u.left
    for i in range(1, len(u_l) + 1):
        v = _from_bottom(r_t_col, i + mu_t - mu_u)
        if v is not None and v > u_l[-i]:
            return False
    return True


def is_admissible_with_s(t: TwoColumn, s: Rectangular) -> bool:
    mu_t = t.tail_length()
    r_t = residuum(t)
    s_l = s.first_column()
    odd = s.is_odd()
    if odd:
        if t.b > len(s_l) - 1 + 2 * r_t:
            return False
    else:
        if t.b > len(s_l):
            return False
    t_r = slide_up_star(t)[1] if odd and r_t == 1 else t.right
    for i in range(1, min(len(t_r), len(s_l)) + 1):
        if t_r[-i] > s_l[-i]:
            return False
    r_t_col = slide_down(t)[1]
    offset = mu_t - 1 if odd and r_t == 0 else mu_t
    for i in range(1, len(s_l) + 1):
        v = _from_bottom(r_t_col, i + offset)
        if v is not None and v > s_l[-i]:
            return False
    return True


def gaps(column) -> frozenset[int]:
    present = set(column)
    return frozenset(x for x in column if x > 1 and x - 1 not in present)


def slots(column) -> frozenset[int]:
    present = set(column)
    return frozenset(x for x in column if x + 1 not in present)


def columns_in_order(L: KwonTableau) -> list[tuple[int, ...]]:
    out = []
    for t in L.tableaux:
        out.append(t.left)
        out.append(t.right)
    out.extend(L.s.columns)
    return out


def gaps_and_slots(L: KwonTableau):
    return [(gaps(c), slots(c)) for c in columns_in_order(L)]


def _gap_slot_matching(columns) -> bool:
    """Each gap j claims the nearest unclaimed slot j-1 strictly to the
    right, scanning columns right to left."""
    available: dict[int, list[int]] = {}
    for idx in range(len(columns) - 1, -1, -1):
        column = columns[idx]
        for g in sorted(gaps(column)):
            stack = available.get(g - 1)
            if not stack:
                return False
            stack.pop()
        for s in slots(column):
            available.setdefault(s, []).append(idx)
    return True


def classify_type(t: TwoColumn) -> int | None:
    """Type 1, 2 or 3 per the gap placement rules, or None."""
    r = residuum(t)
    left_gaps = gaps(t.left)
    right_gaps = gaps(t.right)
    if r == 0:
        if not right_gaps and left_gaps <= set(tail(t)):
            return 1
        return None
    if r != 1:
        return None
    if left_gaps <= set(lower_tail(t)):
        if not right_gaps:
            return 2
        if right_gaps == {fin(t)}:
            return 3
    return None


def content(L: KwonTableau) -> dict[int, int]:
    counts: dict[int, int] = {}
    for column in columns_in_order(L):
        for x in column:
            counts[x] = counts.get(x, 0) + 1
    return counts


def validate_kwon(L: KwonTableau) -> bool:
    if L.n < 3 or L.n % 2 == 0:
        return False
    mu = L.mu
    k = (L.n - 1) // 2
    if len(mu) > k or len(L.lam) > L.n:
        return False
    if len(L.tableaux) != len(mu):
        return False
    for t, part in zip(L.tableaux, mu):
        if not validate_two_column(t) or t.tail_length() != part:
            return False
        if residuum(t) > 1:
            return False
    if len(L.s.columns) != L.n - 2 * len(mu):
        return False
    if not validate_rectangular(L.s):
        return False
    expected = conjugate(L.lam)
    return content(L) == {i + 1: c for i, c in enumerate(expected)}


def is_kwon_lr_explicit(L: KwonTableau) -> bool:
    if not validate_kwon(L):
        return False
    ts = L.tableaux
    res = [residuum(t) for t in ts]
    for i in range(len(ts) - 1):
        if ts[i].b > ts[i + 1].b - ts[i + 1].a + 2 * res[i] * res[i + 1]:
            return False
    if ts:
        s_l = L.s.first_column()
        if L.s.is_odd():
            if ts[-1].b > len(s_l) - 1 + 2 * res[-1]:
                return False
        elif ts[-1].b > len(s_l):
            return False
    if any(gaps(c) for c in L.s.columns):
        return False
    types = [classify_type(t) for t in ts]
    if any(ty is None for ty in types):
        return False
    for i, ty in enumerate(types):
        if ty != 3:
            continue
        if i + 1 < len(ts):
            if res[i + 1] != 1 or fin(ts[i]) > fin(ts[i + 1]):
                return False
        elif not L.s.is_odd():
            return False
    if ts and types[-1] == 1 and L.s.is_odd():
        if tail_root(ts[-1]) > L.s.first_column()[-1]:
            return False
    tails = [tail(t) for t in ts]
    for c1, c2 in zip(tails, tails[1:]):
        if any(c1[j] > c2[j] for j in range(len(c2))):
            return False
    return _gap_slot_matching(columns_in_order(L))


def is_kwon_lr_crystal(L: KwonTableau) -> bool:
    if not validate_kwon(L):
        return False
    ts = L.tableaux
    for t, u in zip(ts, ts[1:]):
        if not is_admissible_pair(t, u):
            return False
    if ts and not is_admissible_with_s(ts[-1], L.s):
        return False
    element = tuple(columns_in_order(L))
    bound = max((x for c in element for x in c), default=0)
    return all(
        crystal.tensor_epsilon(i, element) == 0 for i in range(1, bound + 1)
    )


def _column_options(counts, length):
    letters = sorted(x for x, c in counts.items() if c > 0)
    yield from itertools.combinations(letters, length)


def _take(counts, column):
    for x in column:
        counts[x] -= 1


def _put(counts, column):
    for x in column:
        counts[x] += 1


def enumerate_kwon_candidates(lam, mu, n: int):
    """All structurally valid tuples with content lam', tail lengths mu."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    k = (n - 1) // 2
    if n < 3 or n % 2 == 0 or len(lam) > n or len(mu) > k:
        return
    total = sum(lam)
    counts = {i + 1: c for i, c in enumerate(conjugate(lam))}
    q = n - 2 * len(mu)

    def shapes(j, budget):
        if j == len(mu):
            yield []
            return
        part = mu[j]
        b = 0
        while b + part <= budget:
            for a in range(0, b + 1, 2):
                size = 2 * b - a + part
                if size <= budget:
                    for rest in shapes(j + 1, budget - size):
                        yield [(a, b), *rest]
            b += 2

    def s_lengths(cells):
        for parity in (0, 1):
            if parity == 1 and (cells < q or (cells - q) % 2):
                continue
            if parity == 0 and cells % 2:
                continue

            def rec(remaining, slots_left, minimum):
                if slots_left == 0:
                    if remaining == 0:
                        yield []
                    return
                length = minimum
                while length * slots_left <= remaining:
                    if length % 2 == parity:
                        for rest in rec(remaining - length, slots_left - 1, length):
                            yield [length, *rest]
                    length += 1

            yield from rec(cells, q, parity)

    def fill_tableaux(idx, shape_list):
        if idx == len(mu):
            yield []
            return
        a, b = shape_list[idx]
        for left in _column_options(counts, b - a + mu[idx]):
            _take(counts, left)
            for right in _column_options(counts, b):
                t = TwoColumn(a, b, left, right)
                if validate_two_column(t) and residuum(t) <= 1:
                    _take(counts, right)
                    for rest in fill_tableaux(idx + 1, shape_list):
                        yield [t, *rest]
                    _put(counts, right)
            _put(counts, left)

    def fill_s(lengths, previous):
        if not lengths:
            yield []
            return
        for column in _column_options(counts, lengths[0]):
            if previous is not None:
                if any(
                    previous[-i] > column[-i]
                    for i in range(1, len(previous) + 1)
                ):
                    continue
            _take(counts, column)
            for rest in fill_s(lengths[1:], column):
                yield [column, *rest]
            _put(counts, column)

    for shape_list in shapes(0, total):
        used = sum(2 * b - a + part for (a, b), part in zip(shape_list, mu))
        for ts in fill_tableaux(0, shape_list):
            for lengths in s_lengths(total - used):
                for s_cols in fill_s(lengths, None):
                    yield KwonTableau(
                        n=n,
                        mu=mu,
                        lam=lam,
                        tableaux=tuple(ts),
                        s=Rectangular(tuple(s_cols)),
                    )


def enumerate_kwon_lr(lam, mu, n: int):
    for candidate in enumerate_kwon_candidates(lam, mu, n):
        if is_kwon_lr_explicit(candidate):
            yield candidate


@cache
def c_coefficient(lam, mu, n: int) -> int:
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    return sum(1 for _ in enumerate_kwon_lr(lam, mu, n))


def kwon_to_json(L: KwonTableau):
    return {
        "n": L.n,
        "mu": list(L.mu),
        "lambda": list(L.lam),
        "T": [
            {"a": t.a, "b": t.b, "left": list(t.left), "right": list(t.right)}
            for t in L.tableaux
        ],
        "S": [list(c) for c in L.s.columns],
    }


def kwon_from_json(data) -> KwonTableau:
    return KwonTableau(
        n=int(data["n"]),
        mu=normalize_partition(data["mu"]),
        lam=normalize_partition(data["lambda"]),
        tableaux=tuple(
            TwoColumn(
                int(t["a"]),
                int(t["b"]),
                tuple(int(x) for x in t["left"]),
                tuple(int(x) for x in t["right"]),
            )
            for t in data["T"]
        ),
        s=Rectangular(tuple(tuple(int(x) for x in c) for c in data["S"])),
    )
