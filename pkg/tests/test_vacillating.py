"""Vacillating word validation, descents, cut-away shapes, enumeration."""

import itertools

import pytest

from orthobij import vacillating as vac
from orthobij.tableaux import partitions

VACTAB = (1, 2, 1, 0, 0, -2, -1, 2, -2, -1)
DESCENT_WORD = (1, 1, 2, 0, 2, -2, 0, -1, -2, 2, -2, 1, -1, -1)
CONCAT_BLOCKS = ((1, 1, 2, -2, 2, -2, -1, -1), (1, -1), (1, 2, 0, -2, -1))
CONCAT_WORD = (1, 1, 2, -2, 2, -2, -1, -1, 1, -1, 1, 2, 0, -2, -1)
CUT_AWAY_WORD = (1, 1, 1, 1, 2, -2, 2, 2, 3, -1, -3, -2, -2, -1, -1, -1)


def all_words(r, k):
    alphabet = list(range(-k, k + 1))
    return itertools.product(alphabet, repeat=r)


class TestValidate:
    def test_known_valid(self):
        assert vac.validate(VACTAB, 2)
        assert vac.shape(VACTAB, 2) == ()

    def test_zero_start(self):
        for k in (1, 2, 3):
            assert not vac.validate((0,), k)

    def test_second_condition(self):
        assert not vac.validate((1, 2, 2), 2)

    def test_out_of_range(self):
        assert not vac.validate((1, 3), 2)

    def test_shape_is_weight(self):
        assert vac.shape((1, 1, 2), 2) == (2, 1)
        assert vac.shape((1, 2, 0), 2) == (1, 1)

    def test_shape_rejects_invalid(self):
        with pytest.raises(vac.InvalidWord):
            vac.shape((0,), 2)

    def test_diagram_sequence_equivalence(self):
        # valid words are exactly those whose prefix weights are
        # partitions, moving by at most one cell, staying put only with
        # row k nonempty
        for k in (1, 2, 3):
            for r in range(7 - k):
                for w in all_words(r, k):
                    seq = [(0,) * k, *vac.prefix_weights(w, k)]
                    ok = all(
                        all(x >= 0 for x in v)
                        and all(v[i] >= v[i + 1] for i in range(k - 1))
                        for v in seq
                    )
                    ok = ok and all(
                        sum(abs(a - b) for a, b in zip(u, v)) <= 1
                        and (u != v or v[k - 1] > 0)
                        for u, v in zip(seq, seq[1:])
                    )
                    assert vac.validate(w, k) == ok, (w, k)


class TestDescents:
    def test_paper_word(self):
        assert vac.descent_set(DESCENT_WORD, 2) == frozenset({2, 3, 5, 7, 12})

    def test_no_advance(self):
        assert vac.descent_set((1, 1, 1), 2) == frozenset()

    def test_level_exception(self):
        assert vac.descent_set((1, 1, 1, -1, -1, -1), 1) == frozenset({3})
        # immediate return to level 0 does not count
        assert vac.descent_set((1, -1), 1) == frozenset()

    def test_concatenation_blocks(self):
        words = [
            w
            for r in range(2, 5)
            for w in vac.enumerate_vacillating(r, 2, ())
        ]
        for w1, w2 in itertools.product(words, repeat=2):
            joined = vac.concatenate([w1, w2], 2)
            des = vac.descent_set(joined, 2)
            d1 = vac.descent_set(w1, 2)
            d2 = vac.descent_set(w2, 2)
            shifted = {i + len(w1) for i in d2}
            assert {i for i in des if i < len(w1)} == d1
            assert {i for i in des if i > len(w1)} == shifted
            assert len(w1) not in des

    def test_paper_concatenation_blocks(self):
        des = vac.descent_set(CONCAT_WORD, 2)
        offset = 0
        for block in CONCAT_BLOCKS:
            inner = vac.descent_set(block, 2)
            assert {i - offset for i in des if offset < i < offset + len(block)} == inner
            offset += len(block)


class TestCutAway:
    def test_paper_example(self):
        assert vac.shape(CUT_AWAY_WORD, 3) == ()
        assert vac.has_cut_away_shape(CUT_AWAY_WORD, (3, 2, 1))
        assert vac.max_cut_away(CUT_AWAY_WORD) == (3, 2, 1)

    def test_empty_mu(self):
        assert vac.has_cut_away_shape(CUT_AWAY_WORD, ())
        assert vac.has_cut_away_shape((), ())

    def test_simple(self):
        assert vac.max_cut_away((1, 1, 1, -1, -1, -1)) == (3,)
        assert vac.max_cut_away((1, -1, 1)) == ()

    def test_truncated_subpartitions(self):
        # the shapes that can be cut away from the example word are the
        # leading portions (mu_1, ..., mu_m, mu_{m+1} - u) of (3,2,1)
        expected = {(), (1,), (2,), (3,), (3, 1), (3, 2), (3, 2, 1)}
        found = {
            mu
            for n in range(10)
            for mu in partitions(n)
            if len(mu) <= 3 and vac.has_cut_away_shape(CUT_AWAY_WORD, mu)
        }
        assert found == expected

    def test_max_is_maximal(self):
        for w in vac.enumerate_vacillating(6, 2, ()):
            best = vac.max_cut_away(w)
            for n in range(len(w) + 1):
                for mu in partitions(n):
                    if vac.has_cut_away_shape(w, mu):
                        assert all(
                            a <= b for a, b in zip(mu, best + (0,) * len(mu))
                        ), (w, mu, best)


class TestConcatenate:
    def test_identity(self):
        assert vac.concatenate([(), VACTAB], 2) == VACTAB

    def test_paper_example(self):
        assert vac.concatenate(CONCAT_BLOCKS, 2) == CONCAT_WORD
        assert vac.validate(CONCAT_WORD, 2)

    def test_repeat(self):
        w = (1, 2, 0, -2, -1)
        assert vac.concatenate([w, w], 2) == w + w

    def test_shape_not_empty(self):
        with pytest.raises(vac.ShapeNotEmpty):
            vac.concatenate([(1,), (1, -1)], 2)


class TestRiordan:
    def test_vactab_path2(self):
        paths = vac.to_riordan(VACTAB, 2)
        assert [label for label, _ in paths[1]] == [2, 4, 5, 6, 8, 9]
        assert [step for _, step in paths[1]] == ["u", "h", "h", "d", "u", "d"]
        assert len(paths[0]) == len(VACTAB)

    def test_trivial(self):
        paths = vac.to_riordan((1, -1), 3)
        assert paths[0] == ((1, "u"), (2, "d"))
        assert paths[1] == ()
        assert paths[2] == ()

    def test_round_trip(self):
        for k in (1, 2, 3):
            for r in range(7 - k):
                for w in vac.enumerate_vacillating(r, k):
                    paths = vac.to_riordan(w, k)
                    assert vac.from_riordan(paths, r, k) == w

    def test_invalid(self):
        with pytest.raises(vac.InvalidWord):
            vac.to_riordan((0,), 2)


class TestEnumerate:
    def test_r3_k2(self):
        words = set(vac.enumerate_vacillating(3, 2))
        assert words == {
            (1, -1, 1),
            (1, 1, -1),
            (1, 2, -2),
            (1, 1, 1),
            (1, 1, 2),
            (1, 2, 1),
            (1, 2, 0),
        }

    def test_shape_filter(self):
        assert list(vac.enumerate_vacillating(3, 2, (1, 1))) == [(1, 2, 0)]

    def test_r0(self):
        assert list(vac.enumerate_vacillating(0, 2)) == [()]

    def test_matches_brute_force(self):
        for k in (1, 2, 3):
            for r in range(6 - k):
                brute = {w for w in all_words(r, k) if vac.validate(w, k)}
                assert set(vac.enumerate_vacillating(r, k)) == brute
                for mu in {vac.shape(w, k) for w in brute}:
                    filtered = set(vac.enumerate_vacillating(r, k, mu))
                    assert filtered == {
                        w for w in brute if vac.shape(w, k) == mu
                    }


class TestJson:
    def test_round_trip(self):
        data = vac.word_to_json(VACTAB, 2)
        assert data == {"k": 2, "letters": list(VACTAB)}
        assert vac.word_from_json(data) == (2, VACTAB)
