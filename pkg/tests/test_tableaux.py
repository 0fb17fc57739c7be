import pytest
from hypothesis import given, strategies as st

from orthobij.tableaux import (
    InvalidConcatenation,
    bump_sets,
    concatenate_syt,
    conjugate,
    contains,
    enumerate_syt,
    is_horizontal_strip,
    is_partition,
    is_reverse_yamanouchi,
    is_semistandard,
    is_syt,
    is_yamanouchi,
    make_skew,
    normalize_partition,
    partitions,
    reading_word,
    rsk_insert,
    skew_from_json,
    skew_to_json,
    syt_count,
    syt_descent_set,
    syt_equal,
    syt_shape,
    trim_syt,
)

# worked 14-cell tableau with descent set {2,3,5,7,12}
DESCENT_EXAMPLE = (
    (1, 2, 10, 11, 12, 14),
    (3, 5),
    (4, 7),
    (6, 9),
    (8, 13),
)

# 6-cell reverse skew tableau whose reading word is (1,1,2,3,2,1)
ALT_EXAMPLE_ROWS = ((None, None, 1, 1), (None, 3, 2), (2, 1))


def partitions_strategy(max_size=10):
    return st.integers(0, max_size).flatmap(
        lambda n: st.sampled_from(sorted(partitions(n)) or [()])
    )


class TestPartitions:
    def test_normalize_trims_zeros(self):
        assert normalize_partition((3, 2, 0, 0)) == (3, 2)
        assert normalize_partition(()) == ()

    def test_invalid(self):
        assert not is_partition((1, 2))
        assert not is_partition((2, -1))
        assert is_partition((2, 2, 1))

    @pytest.mark.parametrize(
        "p,expected",
        [((), ()), ((3, 1), (2, 1, 1)), ((4, 4, 1, 1), (4, 2, 2, 2))],
    )
    def test_conjugate(self, p, expected):
        assert conjugate(p) == expected

    @given(partitions_strategy(12))
    def test_conjugate_involution(self, p):
        assert conjugate(conjugate(p)) == p

    def test_partitions_of_5(self):
        assert len(list(partitions(5))) == 7

    def test_contains(self):
        assert contains((3, 2), (2,))
        assert not contains((3, 2), (2, 2, 1))


class TestHorizontalStrip:
    def test_examples(self):
        assert is_horizontal_strip((2, 1), (1,))
        assert not is_horizontal_strip((1, 1), ())
        assert is_horizontal_strip((4, 2), (2,))
        assert is_horizontal_strip((), ())

    def test_brute_force_agreement(self):
        # independent cell-level oracle on all shape pairs of size <= 6
        shapes = [p for n in range(7) for p in partitions(n)]
        for outer in shapes:
            for inner in shapes:
                if not contains(outer, inner):
                    continue
                cols = []
                padded = inner + (0,) * (len(outer) - len(inner))
                for i, row in enumerate(outer):
                    cols.extend(range(padded[i], row))
                expected = len(cols) == len(set(cols))
                assert is_horizontal_strip(outer, inner) == expected


class TestSyt:
    def test_trailing_empty_rows_equal(self):
        assert syt_equal(((1, 2), ()), ((1, 2),))
        assert trim_syt(((1,), (), ())) == ((1,),)

    def test_is_syt(self):
        assert is_syt(DESCENT_EXAMPLE)
        assert not is_syt(((2, 1),))
        assert not is_syt(((1, 3), (2, 4), (5, 6, 7)))

    def test_shape(self):
        assert syt_shape(DESCENT_EXAMPLE) == (6, 2, 2, 2, 2)

    @pytest.mark.parametrize(
        "rows,expected",
        [
            (((1, 2, 3),), frozenset()),
            (DESCENT_EXAMPLE, frozenset({2, 3, 5, 7, 12})),
            (((1,), (2,), (3,)), frozenset({1, 2})),
        ],
    )
    def test_descents(self, rows, expected):
        assert syt_descent_set(rows) == expected

    def test_enumerate_counts(self):
        assert len(enumerate_syt((1, 1, 1))) == 1
        assert len(enumerate_syt((2, 1))) == 2
        assert len(enumerate_syt((3, 2))) == 5

    def test_enumerate_matches_hook_count(self):
        for n in range(1, 8):
            for shape in partitions(n):
                tableaux = enumerate_syt(shape)
                assert len(tableaux) == syt_count(shape)
                assert len(set(tableaux)) == len(tableaux)
                for t in tableaux:
                    assert is_syt(t)
                    assert syt_shape(t) == shape

    def test_enumerate_deterministic_order(self):
        readings = [tuple(x for r in t for x in r) for t in enumerate_syt((3, 2))]
        assert readings == sorted(readings)


class TestConcatenate:
    def test_paper_example(self):
        q1 = ((1, 2, 5, 6, 9, 10), (3, 4), (7, 8))
        q2 = ((1,), (2,), (3,), (4,), (5,))
        expected = ((1, 2, 5, 6, 9, 10, 11), (3, 4, 12), (7, 8, 13), (14,), (15,))
        assert concatenate_syt(q1, q2) == expected

    def test_identity_and_rows(self):
        q = ((1, 3), (2,))
        assert concatenate_syt((), q) == q
        assert concatenate_syt(((1, 2),), ((1, 2),)) == ((1, 2, 3, 4),)

    def test_invalid(self):
        # malformed first argument surfaces as InvalidConcatenation
        with pytest.raises(InvalidConcatenation):
            concatenate_syt(((2, 3), (1,)), ((1,),))

    def test_associative(self):
        smalls = [(), ((1,),), ((1, 2),), ((1,), (2,)), ((1, 2), (3, 4))]
        for a in smalls:
            for b in smalls:
                for c in smalls:
                    try:
                        left = concatenate_syt(concatenate_syt(a, b), c)
                    except InvalidConcatenation:
                        left = None
                    try:
                        right = concatenate_syt(a, concatenate_syt(b, c))
                    except InvalidConcatenation:
                        right = None
                    if left is not None and right is not None:
                        assert left == right


class TestWords:
    def test_yamanouchi(self):
        assert is_yamanouchi((1, 1, 2, 3, 2, 1))
        assert not is_yamanouchi((2, 1))
        assert not is_reverse_yamanouchi((1, 2, 2))
        assert is_reverse_yamanouchi((2, 1, 1))

    @given(st.lists(st.integers(1, 4), max_size=8))
    def test_reverse_is_reversed(self, w):
        assert is_reverse_yamanouchi(w) == is_yamanouchi(tuple(reversed(w)))


class TestRsk:
    def test_increasing_word(self):
        p, q = rsk_insert((1, 2, 3))
        assert p == ((1, 2, 3),)
        assert q == ((1, 2, 3),)

    def test_single_bump(self):
        p, q = rsk_insert((2, 1))
        assert p == ((1,), (2,))
        assert q == ((1,), (2,))

    @given(st.lists(st.integers(1, 4), max_size=8))
    def test_shapes_match_and_q_standard(self, w):
        p, q = rsk_insert(w)
        assert tuple(len(r) for r in p) == tuple(len(r) for r in q)
        if w:
            assert is_syt(q)

    @given(st.lists(st.integers(1, 4), max_size=8))
    def test_reverse_yamanouchi_iff_rows_sorted(self, w):
        p, _ = rsk_insert(w)
        rows_confined = all(
            all(x == i + 1 for x in row) for i, row in enumerate(p)
        )
        assert rows_confined == is_reverse_yamanouchi(w)

    def test_bump_sets_examples(self):
        assert bump_sets((1, 2, 3)) == (
            frozenset({1}),
            frozenset({2}),
            frozenset({3}),
        )
        assert bump_sets((2, 1)) == (frozenset({2}), frozenset({1, 2}))

    @given(st.lists(st.integers(1, 4), max_size=8))
    def test_bump_sets_against_logging_oracle(self, w):
        # re-implementation that logs displaced entries per insertion
        import bisect

        rows = []
        expected = []
        for x in w:
            touched = [x]
            i = 0
            while True:
                if i == len(rows):
                    rows.append([x])
                    break
                pos = bisect.bisect_right(rows[i], x)
                if pos == len(rows[i]):
                    rows[i].append(x)
                    break
                x, rows[i][pos] = rows[i][pos], x
                touched.append(x)
                i += 1
            expected.append(frozenset(touched))
        assert list(bump_sets(w)) == expected


class TestSkew:
    def test_reading_word(self):
        t = make_skew((3,), (), [(1, 1, 2)])
        assert reading_word(t) == (1, 1, 2)
        alt = make_skew((4, 3, 2), (2, 1), [(1, 1), (3, 2), (2, 1)], reverse=True)
        assert alt.rows == ALT_EXAMPLE_ROWS
        assert reading_word(alt) == (2, 1, 3, 2, 1, 1)

    def test_semistandard_checks(self):
        normal = make_skew((2, 2), (), [(1, 1), (2, 2)])
        assert is_semistandard(normal)
        bad = make_skew((2, 2), (), [(1, 1), (1, 2)])
        assert not is_semistandard(bad)
        rev = make_skew((2, 2), (), [(2, 2), (1, 1)], reverse=True)
        assert is_semistandard(rev)
        assert not is_semistandard(
            make_skew((2, 2), (), [(1, 1), (2, 2)], reverse=True)
        )

    def test_json_round_trip(self):
        t = make_skew((4, 3, 2), (2, 1), [(1, 1), (3, 2), (2, 1)], reverse=True)
        assert skew_from_json(skew_to_json(t)) == t
