"""One-column crystal operators, tensor rule, component search."""

import itertools

from orthobij import crystal as cr


def all_columns(max_entry):
    values = range(1, max_entry + 1)
    for r in range(max_entry + 1):
        yield from itertools.combinations(values, r)


class TestColumnOps:
    def test_f_replaces(self):
        assert cr.column_f(2, (1, 2)) == (1, 3)

    def test_f0_domino(self):
        assert cr.column_f(0, (3, 4)) == (1, 2, 3, 4)
        assert cr.column_f(0, (1, 3)) is None
        assert cr.column_f(0, ()) == (1, 2)

    def test_f_blocked(self):
        assert cr.column_f(1, (1, 2)) is None

    def test_e_inverts(self):
        assert cr.column_e(2, (1, 3)) == (1, 2)
        assert cr.column_e(0, (1, 2, 3, 4)) == (3, 4)

    def test_phi_epsilon(self):
        assert cr.column_epsilon(0, (1, 2, 3, 4)) == 1
        assert cr.column_phi(1, (2, 5)) == 0
        assert cr.column_epsilon(1, (2, 5)) == 1

    def test_mutually_inverse(self):
        for c in all_columns(6):
            for i in range(7):
                fc = cr.column_f(i, c)
                if fc is not None:
                    assert cr.column_e(i, fc) == c
                ec = cr.column_e(i, c)
                if ec is not None:
                    assert cr.column_f(i, ec) == c

    def test_parity_preserved(self):
        for c in all_columns(6):
            for i in range(7):
                for image in (cr.column_f(i, c), cr.column_e(i, c)):
                    if image is not None:
                        assert len(image) % 2 == len(c) % 2


class TestTensor:
    def test_single_factor(self):
        for c in all_columns(4):
            for i in range(5):
                fc = cr.column_f(i, c)
                expect = None if fc is None else (fc,)
                assert cr.tensor_f(i, (c,)) == expect
                assert cr.tensor_phi(i, (c,)) == cr.column_phi(i, c)
                assert cr.tensor_epsilon(i, (c,)) == cr.column_epsilon(i, c)

    def test_two_factor_value(self):
        # the unmatched e-possibility of the left factor cancels against
        # the f-possibility of the right factor
        assert cr.tensor_epsilon(1, ((2,), (1,))) == 0
        assert cr.tensor_phi(1, ((2,), (1,))) == 0
        assert cr.tensor_epsilon(1, ((1,), (2,))) == 1
        assert cr.tensor_phi(1, ((1,), (2,))) == 1

    def test_highest_weight(self):
        # left columns packed 1..mu_j, right columns empty, S a row of 1s
        element = ((1, 2, 3), (), (1,), (), (1,), (1,), (1,))
        for i in range(1, 9):
            assert cr.tensor_epsilon(i, element) == 0

    def test_f_e_inverse(self):
        columns = list(all_columns(3))
        for t in itertools.product(columns, repeat=2):
            for i in range(4):
                ft = cr.tensor_f(i, t)
                if ft is not None:
                    assert cr.tensor_e(i, ft) == t
                et = cr.tensor_e(i, t)
                if et is not None:
                    assert cr.tensor_f(i, et) == t

    def test_associativity(self):
        # folding (a(x)b)(x)c and a(x)(b(x)c) agree on phi and epsilon
        def pair(stats1, stats2):
            (p1, e1), (p2, e2) = stats1, stats2
            return p1 + max(0, p2 - e1), e2 + max(0, e1 - p2)

        columns = [c for c in all_columns(4) if len(c) <= 2]
        for a, b, c in itertools.product(columns, repeat=3):
            for i in range(5):
                stats = [
                    (cr.column_phi(i, x), cr.column_epsilon(i, x))
                    for x in (a, b, c)
                ]
                left = pair(pair(stats[0], stats[1]), stats[2])
                right = pair(stats[0], pair(stats[1], stats[2]))
                assert left == right
                assert left == (
                    cr.tensor_phi(i, (a, b, c)),
                    cr.tensor_epsilon(i, (a, b, c)),
                )


class TestComponent:
    def test_reflexive(self):
        assert cr.component_contains(((1, 2),), ((1, 2),), 3)

    def test_reachable(self):
        assert cr.component_contains(((1, 2),), ((4, 6),), 8)

    def test_parity_separates(self):
        assert not cr.component_contains(((1, 2),), ((3,),), 6)

    def test_bound_too_small(self):
        import pytest

        with pytest.raises(cr.BoundTooSmall):
            cr.component_contains(((1,),), ((9,),), 5)


class TestJson:
    def test_forms(self):
        assert cr.column_to_json((1, 3)) == [1, 3]
        assert cr.tensor_to_json(((1,), ())) == [[1], []]
