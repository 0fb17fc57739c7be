"""One-column crystal operators and their tensor products.

A vertex is a single column, stored as a strictly increasing tuple of
positive integers; the empty column is a vertex too.  For i > 0 the
operator f_i replaces an entry i by i + 1 provided i + 1 is absent, and
f_0 puts the domino (1, 2) on top provided neither 1 nor 2 is present.
e_i follows the corresponding edge backwards.  Undefined results are
None; phi_i and epsilon_i are 0 or 1 on columns.

Tensor elements are tuples of columns, left factor first, combined by

    f_i(b (x) b') = b (x) f_i(b')   if eps_i(b) < phi_i(b'), else f_i(b) (x) b'
    e_i(b (x) b') = e_i(b) (x) b'   if eps_i(b) > phi_i(b'), else b (x) e_i(b')

with phi_i(b (x) b') = phi_i(b) + max(0, phi_i(b') - eps_i(b)) and
eps_i(b (x) b') = eps_i(b') + max(0, eps_i(b) - phi_i(b')), applied left
associated.  Under this rule an unmatched e_i-possibility in a left
factor cancels against an f_i-possibility in a factor to its right.
"""

from __future__ import annotations

from collections import deque


class BoundTooSmall(ValueError):
    """The letter bound does not cover the target element."""


def is_column(c) -> bool:
    return all(x >= 1 for x in c) and all(a < b for a, b in zip(c, c[1:]))


def column_f(i: int, c) -> tuple[int, ...] | None:
    if i == 0:
        if 1 in c or 2 in c:
            return None
        return (1, 2) + tuple(c)
    if i in c and i + 1 not in c:
        return tuple(sorted(x if x != i else i + 1 for x in c))
    return None


def column_e(i: int, c) -> tuple[int, ...] | None:
    if i == 0:
        if 1 in c and 2 in c:
            return tuple(x for x in c if x > 2)
        return None
    if i + 1 in c and i not in c:
        return tuple(sorted(x if x != i + 1 else i for x in c))
    return None


def column_phi(i: int, c) -> int:
    return 1 if column_f(i, c) is not None else 0


def column_epsilon(i: int, c) -> int:
    return 1 if column_e(i, c) is not None else 0


def tensor_phi(i: int, t) -> int:
    phi = eps = 0
    first = True
    for c in t:
        if first:
            phi, eps = column_phi(i, c), column_epsilon(i, c)
            first = False
            continue
        cp, ce = column_phi(i, c), column_epsilon(i, c)
        phi, eps = phi + max(0, cp - eps), ce + max(0, eps - cp)
    return phi


def tensor_epsilon(i: int, t) -> int:
    phi = eps = 0
    first = True
    for c in t:
        if first:
            phi, eps = column_phi(i, c), column_epsilon(i, c)
            first = False
            continue
        cp, ce = column_phi(i, c), column_epsilon(i, c)
        phi, eps = phi + max(0, cp - eps), ce + max(0, eps - cp)
    return eps


def tensor_f(i: int, t) -> tuple[tuple[int, ...], ...] | None:
    t = tuple(tuple(c) for c in t)
    if len(t) == 1:
        c = column_f(i, t[0])
        return None if c is None else (c,)
    body, last = t[:-1], t[-1]
    if tensor_epsilon(i, body) < column_phi(i, last):
        c = column_f(i, last)
        return None if c is None else body + (c,)
    f_body = tensor_f(i, body)
    return None if f_body is None else f_body + (last,)


def tensor_e(i: int, t) -> tuple[tuple[int, ...], ...] | None:
    t = tuple(tuple(c) for c in t)
    if len(t) == 1:
        c = column_e(i, t[0])
        return None if c is None else (c,)
    body, last = t[:-1], t[-1]
    if tensor_epsilon(i, body) > column_phi(i, last):
        e_body = tensor_e(i, body)
        return None if e_body is None else e_body + (last,)
    c = column_e(i, last)
    return None if c is None else body + (c,)


def component_contains(start, target, letter_bound: int) -> bool:
    """Breadth-first search along f_i/e_i edges with labels below the bound.

    Elements with entries above the bound are not explored; labels run
    over 0 <= i < letter_bound.
    """
    start = tuple(tuple(c) for c in start)
    target = tuple(tuple(c) for c in target)
    if any(x > letter_bound for c in target for x in c):
        raise BoundTooSmall(f"target entries exceed bound {letter_bound}")
    if start == target:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for i in range(letter_bound):
            for op in (tensor_f, tensor_e):
                u = op(i, t)
                if u is None or u in seen:
                    continue
                if any(x > letter_bound for c in u for x in c):
                    continue
                if u == target:
                    return True
                seen.add(u)
                queue.append(u)
    return False


def column_to_json(c):
    return list(c)


def tensor_to_json(t):
    return [list(c) for c in t]
