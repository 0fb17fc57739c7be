"""Conversion between even-row standard Young tableaux and vacillating words.

A standard Young tableau with at most n = 2k + 1 rows, all of even length,
folds row by row into a weight-zero vacillating word of dimension k over the
alphabet {0, +-1, ..., +-k}.  Rows enter from the top; each pair of row
entries threads into the word right to left, bumping letters into deeper
paths.  The inverse unfolds the word back into rows, bottom row first.

Both directions work on a labeled word: every position carries a label (its
eventual tableau entry) and an entry (the path letter).  The forward walk
measures path heights from the right end of the word, the inverse from the
left; the remaining rules mirror.
"""

import os
from bisect import insort

from .tableaux import is_syt


class InvalidInput(ValueError):
    pass


def _debug():
    return bool(os.environ.get("ORTHOBIJ_DEBUG_ASSERT"))


UNSET = None

# Residual rule variants left switchable; defaults arbitrated against the
# worked figures.  See the decisions ledger.
DEFAULT_STRATEGY = {
    # Measure a +-(l+1) entry at its literal level instead of its lower end
    # when testing it for a height violation in path l.
    "hv_plus_one": True,
}


def _lt(x, y):
    """x < y where an UNSET side makes the comparison false."""
    return x is not UNSET and y is not UNSET and x < y


def _ge(x, y):
    return x is not UNSET and y is not UNSET and x >= y


class Word:
    """Labeled word with integer entries, ordered by label."""

    def __init__(self, labels=(), entries=()):
        self.labels = list(labels)
        self.w = dict(zip(self.labels, entries))

    def snapshot(self):
        return tuple(self.labels), tuple(self.w[x] for x in self.labels)

    def insert(self, label, entry):
        insort(self.labels, label)
        self.w[label] = entry

    def delete(self, label):
        self.labels.remove(label)
        del self.w[label]

    def left_of(self, label):
        i = self.labels.index(label)
        return self.labels[i - 1] if i else None

    def right_of(self, label):
        i = self.labels.index(label)
        return self.labels[i + 1] if i + 1 < len(self.labels) else None

    def prev_in(self, label, values):
        """Nearest position left of label whose entry lies in values."""
        i = self.labels.index(label) - 1
        while i >= 0:
            q = self.labels[i]
            if self.w[q] in values:
                return q
            i -= 1
        return None

    def next_in(self, label, values):
        i = self.labels.index(label) + 1
        while i < len(self.labels):
            q = self.labels[i]
            if self.w[q] in values:
                return q
            i += 1
        return None

    def subseq(self, values):
        return [q for q in self.labels if self.w[q] in values]

    def level(self, q, l, *, frm, kind, ignore=()):
        """Path-l height at position q.

        kind "lower": steps of path l count at their lower end, everything
        else at the path height there; "face": the one-sided sum alone;
        "literal": the raw extreme of the two sums.
        """
        s = 0
        for lab in self.labels:
            if lab in ignore or lab == q or abs(self.w[lab]) != l:
                continue
            if (lab > q) if frm == "right" else (lab < q):
                s += self.w[lab]
        own = self.w[q] if abs(self.w[q]) == l and q not in ignore else 0
        if frm == "right":
            face = -s // l
            literal = max(-s, -(s + own)) // l
            step_low = literal - 1
        else:
            face = s // l
            literal = min(s, s + own) // l
            step_low = literal
        if kind == "face":
            return face
        if kind == "literal":
            return literal
        return step_low if own else face


class _Regs:
    """Chain registers a_1..a_{j+1} and b_1..b_{j+1}."""

    def __init__(self, j):
        self.a = [UNSET] * (j + 2)
        self.b = [UNSET] * (j + 2)


def _pending(regs, j):
    """Chain head positions whose continuation register is still unset."""
    out = set()
    for l in range(1, j + 1):
        if regs.a[l] is not UNSET and regs.a[l + 1] is UNSET:
            out.add(regs.a[l])
        if regs.b[l] is not UNSET and regs.b[l + 1] is UNSET:
            out.add(regs.b[l])
    return out


def _pairs_rightmost_first(row):
    pairs = [(row[i], row[i + 1]) for i in range(0, len(row), 2)]
    pairs.reverse()
    return pairs


# ---------------------------------------------------------------------------
# folding: tableau -> word


def _initialize_level(word, j):
    """At the start of an even row 2j, flats become alternating path-j steps."""
    sign = 1
    for lab in word.labels:
        if word.w[lab] == 0:
            word.w[lab] = sign * j
            sign = -sign


def _promote_interior(word, lo, hi, j, regs, marks):
    """Raise ground-level letters of the shallow paths between lo and hi."""
    ignore = _pending(regs, j)
    hits = []
    for q in word.labels:
        if not lo < q < hi or q in ignore:
            continue
        e = word.w[q]
        if e != 0 and abs(e) < j:
            if word.level(q, abs(e), frm="right", kind="lower", ignore=ignore) == 0:
                hits.append(q)
    for q in hits:
        word.w[q] += 1 if word.w[q] > 0 else -1
        marks.add(q)


def _mark_interior(word, lo, hi, j, regs, marks):
    """Mark at-or-below-ground letters of the shallow paths in place."""
    ignore = _pending(regs, j)
    for r in (regs.a[1], regs.b[1]):
        if r is not UNSET and r in word.w:
            ignore.add(r)
    for q in word.labels:
        if not lo < q < hi or q in ignore:
            continue
        e = word.w[q]
        if e != 0 and abs(e) < j:
            if word.level(q, abs(e), frm="right", kind="lower", ignore=ignore) <= 0:
                marks.add(q)


def _adjust_even(word, p, ptilde, j, regs, marks):
    """Re-seat a separation hill of path j lying at (ptilde, p)."""
    _promote_interior(word, ptilde, p, j, regs, marks)
    sub = [q for q in word.subseq((0, j, -j)) if ptilde < q < p]
    i = 0
    while i + 1 < len(sub):
        q1, q2 = sub[i], sub[i + 1]
        if word.w[q1] == -j and word.w[q2] == j:
            word.w[q1] = word.w[q2] = 0
            marks.update((q1, q2))
            i += 2
        else:
            i += 1


def _j_even_position(word, p, j):
    count = 0
    for lab in word.labels:
        if lab >= p:
            break
        if word.w[lab] in (0, j, -j):
            count += 1
    return count % 2 == 0


def _even_block(word, p, j, regs, marks, dummy):
    ptilde = word.prev_in(p, (0, j, -j))
    hill = ptilde is not None and word.w[ptilde] == j and word.w[p] == -j
    aj, bj = regs.a[j], regs.b[j]
    if hill and (bj is UNSET or bj < p):
        _adjust_even(word, p, ptilde, j, regs, marks)
    elif dummy:
        return
    elif hill and (aj is UNSET or aj < p) and _lt(p, bj):
        word.w[ptilde] = word.w[p] = 0
        _mark_interior(word, ptilde, p, j, regs, marks)
    elif p == aj:
        if ptilde is not None and word.w[ptilde] in (0, j):
            if word.level(ptilde, j, frm="right", kind="face", ignore={p}) == 1:
                word.w[ptilde] = j
                word.w[p] = 0
                regs.a[j + 1] = ptilde
    elif _lt(p, aj) and word.w[p] == -j and regs.a[j + 1] is UNSET:
        word.w[p] = j
        regs.a[j + 1] = p
    if _lt(p, bj) and regs.b[j + 1] is UNSET:
        regs.b[j + 1] = p


def _odd_block(word, p, j, regs, marks, strategy, dummy):
    ptilde = word.prev_in(p, (0, j, -j))
    aj, bj = regs.a[j], regs.b[j]
    aj1, bj1 = regs.a[j + 1], regs.b[j + 1]
    zero_pair = ptilde is not None and word.w[p] == 0 and word.w[ptilde] == 0
    valley = ptilde is not None and word.w[ptilde] == -j and word.w[p] == j
    if (bj1 is UNSET or bj1 < p) and zero_pair:
        want = 1 if (bj is UNSET or bj < p) else 2
        if (
            _j_even_position(word, p, j)
            and word.level(p, j, frm="right", kind="face") == want
        ):
            _promote_interior(word, ptilde, p, j, regs, marks)
            return
    if dummy:
        return
    if (aj1 is UNSET or aj1 < p) and _lt(p, bj1) and valley:
        want = 1 if _lt(p, aj) else 0
        if word.level(p, j, frm="right", kind="lower") == want:
            word.w[ptilde] = word.w[p] = 0
            return
    if (aj1 is UNSET or aj1 < p) and _lt(p, bj1) and zero_pair:
        want = 2 if _lt(p, aj) else 1
        if (
            _j_even_position(word, p, j)
            and word.level(p, j, frm="right", kind="face") == want
        ):
            word.w[ptilde] = -j
            word.w[p] = j
            _mark_interior(word, ptilde, p, j, regs, marks)
            return
    if _lt(p, bj) and p != aj and word.w[p] == -j and regs.a[j + 1] is UNSET:
        if p not in marks and regs.b[j + 1] is UNSET:
            word.w[p] = 0
            regs.b[j + 1] = p
        elif _lt(p, aj) and _lt(p, regs.b[j + 1]):
            word.w[p] = 0
            regs.a[j + 1] = p


def _height_violation(word, p, i, j, regs, marks, strategy):
    if word.w[p] == 0 or p in _pending(regs, j):
        return
    for l in range(1, j):
        if not (_lt(p, regs.a[l]) or p not in marks):
            continue
        ignore = set()
        if _lt(p, regs.a[l]) and regs.a[l + 1] is UNSET:
            ignore.add(regs.a[l])
        low = word.level(p, l, frm="right", kind="lower", ignore=ignore)
        kind = (
            "literal"
            if strategy["hv_plus_one"] and abs(word.w[p]) == l + 1
            else "lower"
        )
        high = word.level(p, l + 1, frm="right", kind=kind, ignore=ignore)
        if low < high:
            word.w[p] = l + 1
            if regs.a[l + 1] is UNSET:
                regs.b[l + 1] = UNSET
            else:
                regs.a[l + 1] = UNSET
            if i % 2 == 0 and regs.a[j + 1] is not UNSET:
                word.w[regs.a[j + 1]] = 0
                word.w[p] = 0
                regs.a[j + 1] = UNSET
            if i % 2 == 1:
                ptilde = word.prev_in(p, (0, j, -j))
                if (
                    ptilde is not None
                    and word.w[ptilde] == 0
                    and word.level(ptilde, j, frm="right", kind="face") == 0
                ):
                    word.w[ptilde] = -j
                    regs.b[j + 1] = UNSET
            return


def _insert_pair(word, a, b, i, j, marks, strategy):
    """Thread the pair (a, b) of row i into the word, walking right to left."""
    regs = _Regs(j)
    if a:
        regs.a[1] = a
    if b:
        regs.b[1] = b
    a_in = a == 0
    b_in = b == 0
    dummy = a == 0 and b == 0
    if b and (not word.labels or b > word.labels[-1]):
        word.insert(b, -1)
        b_in = True
    if not word.labels:
        return
    p = word.labels[-1]
    while p is not None:
        if _ge(regs.a[j + 1], p) and word.w[p] in (0, j, -j):
            break
        e = word.w[p]
        if not dummy and e < 0 and -e < j:
            l = -e
            if _lt(p, regs.b[l]) and p != regs.a[l] and regs.a[l + 1] is UNSET:
                if p not in marks and regs.b[l + 1] is UNSET:
                    word.w[p] = -(l + 1)
                    regs.b[l + 1] = p
                elif _lt(p, regs.a[l]) and _lt(p, regs.b[l + 1]):
                    word.w[p] = -(l + 1)
                    regs.a[l + 1] = p
        if word.w[p] in (0, j, -j):
            if i % 2 == 0:
                _even_block(word, p, j, regs, marks, dummy)
            else:
                _odd_block(word, p, j, regs, marks, strategy, dummy)
        if not dummy:
            _height_violation(word, p, i, j, regs, marks, strategy)
        nxt = word.left_of(p)
        if not b_in and b < p and (nxt is None or nxt < b):
            word.insert(b, -1)
            b_in = True
            p = b
            continue
        if not a_in and a < p and (nxt is None or nxt < a):
            word.insert(a, -1)
            a_in = True
            p = a
            continue
        p = nxt
    if p is not None:
        for l in range(1, j):
            if p != regs.a[l]:
                continue
            if word.level(p, l, frm="right", kind="lower") == 0:
                q = word.next_in(p, (l,))
                if q is not None and q in marks:
                    marks.add(p)


def syt_to_vac(rows, n, *, states=None, strategy=None):
    """Fold an even-row standard Young tableau into a vacillating word.

    rows may carry trailing empty rows; n is the ambient (odd) row count
    2k + 1.  Returns the entry tuple of the word, whose positions are the
    tableau entries 1..r in increasing order.
    """
    strategy = {**DEFAULT_STRATEGY, **(strategy or {})}
    rows = [tuple(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    if n % 2 == 0 or n < 1:
        raise InvalidInput("ambient row count must be odd")
    if len(rows) > n:
        raise InvalidInput("too many rows")
    if any(len(r) % 2 for r in rows):
        raise InvalidInput("all row lengths must be even")
    if rows and not is_syt(rows):
        raise InvalidInput("not a standard Young tableau")
    word = Word()
    for idx, lab in enumerate(rows[0] if rows else ()):
        word.insert(lab, 1 if idx % 2 == 0 else -1)
    if states is not None:
        states.append(("row", 1, word.snapshot()))
    k = (n - 1) // 2
    for i in range(2, n + 1):
        j = i // 2
        marks = set()
        if i % 2 == 0:
            _initialize_level(word, j)
        row = rows[i - 1] if i <= len(rows) else ()
        for a, b in _pairs_rightmost_first(row):
            _insert_pair(word, a, b, i, j, marks, strategy)
            if states is not None:
                states.append(("pair", i, (a, b), word.snapshot()))
        _insert_pair(word, 0, 0, i, j, marks, strategy)
        if states is not None:
            states.append(("row", i, word.snapshot()))
        if _debug():
            for l in range(1, k + 1):
                total = sum(e for e in word.w.values() if abs(e) == l)
                assert total == 0, (i, l, word.snapshot())
    return tuple(word.w[lab] for lab in word.labels)


# ---------------------------------------------------------------------------
# unfolding: word -> tableau


def _zero_runs(word, j):
    """Maximal runs of flats within the {0, +-j} subsequence."""
    runs = []
    cur = []
    for q in word.subseq((0, j, -j)):
        if word.w[q] == 0:
            cur.append(q)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def _three_row_positions(word, j):
    out = set()
    for run in _zero_runs(word, j):
        if len(run) % 2 == 1:
            q = run[-1]
            if word.level(q, j, frm="left", kind="face") == 1:
                out.add(q)
    for q in word.labels:
        if word.w[q] == 0 and word.level(q, j, frm="left", kind="face") >= 2:
            out.add(q)
    return out


def _two_row_positions(word, j):
    out = set()
    for q in word.labels:
        if word.w[q] == j and word.level(q, j, frm="left", kind="lower") >= 1:
            out.add(q)
    for run in _zero_runs(word, j):
        out.add(run[0])
    return out


def _u_mark_interior(word, lo, hi, j, regs, marks):
    ignore = _pending(regs, j)
    for q in word.labels:
        if not lo < q < hi or q in ignore:
            continue
        e = word.w[q]
        if e != 0 and abs(e) < j:
            if word.level(q, abs(e), frm="left", kind="lower", ignore=ignore) == 0:
                marks.add(q)


def _u_demote_marked(word, j, marks):
    """Step marked separation letters one path out; paired flats refill j."""
    for q in sorted(marks):
        e = word.w[q]
        if e != 0:
            word.w[q] = e - 1 if e > 0 else e + 1
    zeros = sorted(q for q in marks if word.w[q] == 0)
    i = 0
    while i + 1 < len(zeros):
        word.w[zeros[i]] = j
        word.w[zeros[i + 1]] = -j
        i += 2
    marks.clear()


def _u_height_violation(word, p, i, j, regs, marks, strategy):
    if p in _pending(regs, j):
        return
    for l in range(1, j):
        if not (_lt(p, regs.a[l]) or regs.a[l] is UNSET or p not in marks):
            continue
        ignore = set()
        if _lt(regs.b[l + 1], p) and regs.b[l] is UNSET:
            q = word.prev_in(p, (l, -l))
            if q is not None:
                ignore.add(q)
        low = word.level(p, l, frm="left", kind="lower", ignore=ignore)
        kind = (
            "literal"
            if strategy["hv_plus_one"] and abs(word.w[p]) == l + 1
            else "lower"
        )
        high = word.level(p, l + 1, frm="left", kind=kind, ignore=ignore)
        if low < high:
            word.w[p] = l
            if regs.b[l + 1] is UNSET:
                regs.a[l + 1] = UNSET
            else:
                regs.b[l + 1] = UNSET
            return


def _u_odd_block(word, p, i, j, regs, marks, touched, strategy):
    ptilde = word.prev_in(p, (0, j, -j))
    aj, bj = regs.a[j], regs.b[j]
    aj1, bj1 = regs.a[j + 1], regs.b[j + 1]
    if word.w[p] == 0 and word.level(p, j, frm="left", kind="face") == 0:
        word.w[p] = j
        regs.b[j + 1] = UNSET
        return
    if p in _three_row_positions(word, j) and (bj1 is UNSET or p < bj1):
        if aj1 is UNSET:
            word.w[p] = -j
            regs.a[j + 1] = p
            return
        if p not in marks and bj1 is UNSET:
            word.w[p] = -j
            regs.b[j + 1] = p
            return
    zero_pair = ptilde is not None and word.w[p] == 0 and word.w[ptilde] == 0
    valley = ptilde is not None and word.w[ptilde] == -j and word.w[p] == j
    if _lt(aj1, p) and (bj1 is UNSET or p < bj1) and zero_pair:
        want = 1 if (aj is UNSET or aj < p) else 2
        if (
            _j_even_position(word, p, j)
            and word.level(p, j, frm="left", kind="face") == want
        ):
            word.w[ptilde] = j
            word.w[p] = -j
            touched.update((ptilde, p))
            return
    if _lt(aj1, p) and (bj1 is UNSET or p < bj1) and valley:
        if word.level(p, j, frm="left", kind="lower") == 0:
            word.w[ptilde] = word.w[p] = 0
            touched.update((ptilde, p))


def _u_even_block(word, p, i, j, regs, marks, touched, strategy):
    ptilde = word.prev_in(p, (0, j, -j))
    aj, aj1 = regs.a[j], regs.a[j + 1]
    if (
        j > 1
        and word.w[p] == 0
        and word.level(p, j - 1, frm="left", kind="face") == 0
    ):
        word.w[p] = j - 1
        if aj1 is not UNSET:
            word.w[aj1] = j
        regs.a[j + 1] = UNSET
        regs.a[j] = UNSET
        return
    if _ge(p, aj) and regs.b[j + 1] is UNSET:
        regs.b[j + 1] = p
    if p in _two_row_positions(word, j) and (aj1 is UNSET or p < aj1):
        if aj1 is UNSET:
            if word.w[p] == 0 and ptilde is not None:
                regs.a[j + 1] = ptilde
                word.w[ptilde] = 0
                word.w[p] = -j
            else:
                regs.a[j + 1] = p
                word.w[p] = -j
            return
    zero_pair = ptilde is not None and word.w[p] == 0 and word.w[ptilde] == 0
    if zero_pair and word.level(p, j, frm="left", kind="face") == 0:
        word.w[ptilde] = j
        word.w[p] = -j
        touched.update((ptilde, p))


def _extract_pair(word, i, j, marks, strategy):
    """Pull one pair of row i back out of the word, walking left to right."""
    regs = _Regs(j)
    touched = set()
    a = b = UNSET
    sub = word.subseq((0, j, -j))
    if len(sub) < 2:
        return UNSET, UNSET
    p = sub[1]
    while p is not None and (b is UNSET or p < b):
        _u_height_violation(word, p, i, j, regs, marks, strategy)
        if word.w[p] in (0, j, -j):
            if i % 2 == 1:
                _u_odd_block(word, p, i, j, regs, marks, touched, strategy)
            else:
                _u_even_block(word, p, i, j, regs, marks, touched, strategy)
        e = word.w[p]
        if e < 0 and 1 < -e <= j:
            l = -e
            if regs.a[l + 1] is UNSET or regs.a[l + 1] < p:
                if regs.b[l] is UNSET:
                    if regs.a[l] is UNSET:
                        word.w[p] = -(l - 1)
                        regs.a[l] = p
                    elif (
                        (regs.b[l + 1] is UNSET or regs.b[l + 1] < p)
                        and regs.a[l] < p
                        and p not in marks
                    ):
                        word.w[p] = -(l - 1)
                        regs.b[l] = p
        if word.w[p] == -1 and a is UNSET:
            if regs.a[2] is UNSET or regs.a[2] < p:
                nxt = word.right_of(p)
                word.delete(p)
                regs.a[1] = a = p
                p = nxt
                continue
        elif word.w[p] == -1 and b is UNSET and a is not UNSET and a < p:
            if regs.b[2] is UNSET or regs.b[2] < p:
                nxt = word.right_of(p)
                word.delete(p)
                regs.b[1] = b = p
                p = nxt
                continue
        p = word.right_of(p)
    return a, b


def vac_to_syt(entries, n, *, states=None, strategy=None):
    """Unfold a weight-zero vacillating word into an even-row tableau."""
    strategy = {**DEFAULT_STRATEGY, **(strategy or {})}
    entries = tuple(entries)
    if n % 2 == 0 or n < 1:
        raise InvalidInput("ambient row count must be odd")
    k = (n - 1) // 2
    if any(not isinstance(e, int) or abs(e) > k for e in entries):
        raise InvalidInput("entry outside the alphabet")
    word = Word(range(1, len(entries) + 1), entries)
    rows = [[] for _ in range(n)]
    for i in range(n, 1, -1):
        j = i // 2
        marks = set()
        finder = _three_row_positions if i % 2 == 1 else _two_row_positions
        guard = 0
        while finder(word, j):
            a, b = _extract_pair(word, i, j, marks, strategy)
            if a is UNSET or b is UNSET:
                raise InvalidInput("extraction failed")
            rows[i - 1].extend((a, b))
            guard += 1
            if guard > len(entries):
                raise InvalidInput("extraction does not terminate")
        if i % 2 == 0:
            for lab in word.labels:
                if abs(word.w[lab]) == j:
                    word.w[lab] = 0
        if states is not None:
            states.append(("row", i, word.snapshot()))
    if any(word.w[lab] != 0 for lab in word.labels):
        raise InvalidInput("leftover letters after unfolding")
    rows[0] = list(word.labels)
    while rows and not rows[-1]:
        rows.pop()
    return tuple(tuple(r) for r in rows)
