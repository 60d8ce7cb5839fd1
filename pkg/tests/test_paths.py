import pytest

from sweeplab import (
    BadCounts,
    BadLetter,
    LimitExceeded,
    NonCoprime,
    NonPositive,
    NotDyck,
    base_path,
    corner_path,
    count_dyck,
    enumerate_dyck,
    is_dyck,
    make_params,
    parse_word,
    south_end_ranks,
    start_ranks,
    vertex_ranks,
)
from conftest import PARAM_SETS, all_dyck


class TestParams:
    def test_valid(self):
        p = make_params(3, 2, 1)
        assert (p.m, p.n, p.d) == (3, 2, 1)
        assert make_params(7, 5, 1).step_count == 12

    def test_non_coprime(self):
        with pytest.raises(NonCoprime):
            make_params(4, 2, 1)

    @pytest.mark.parametrize("m,n,d", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-3, 2, 1)])
    def test_non_positive(self, m, n, d):
        with pytest.raises(NonPositive):
            make_params(m, n, d)

    def test_derived_sizes(self):
        p = make_params(3, 2, 2)
        assert (p.east_count, p.north_count, p.rect_height) == (6, 4, 12)


class TestParseWord:
    def test_plain(self, p321):
        word = parse_word("NENEE", p321)
        assert word.text == "NENEE"
        assert word.letter(1) == "N" and word.letter(2) == "E"

    def test_synonyms(self, p321):
        assert parse_word("SWSWW", p321) == parse_word("NENEE", p321)

    def test_bad_counts(self, p321):
        with pytest.raises(BadCounts):
            parse_word("NNEE", p321)

    def test_bad_letter(self, p321):
        with pytest.raises(BadLetter):
            parse_word("NXNEE", p321)


class TestRanks:
    @pytest.mark.parametrize(
        "text,m,n,d,expected",
        [
            ("NENEE", 3, 2, 1, (0, 3, 1, 4, 2)),
            ("NNEEE", 3, 2, 1, (0, 3, 6, 4, 2)),
            ("NNEE", 1, 1, 2, (0, 1, 2, 1)),
        ],
    )
    def test_start_ranks(self, text, m, n, d, expected):
        word = parse_word(text, make_params(m, n, d))
        assert start_ranks(word) == expected

    def test_final_vertex_rank_is_zero(self):
        for (m, n, d) in PARAM_SETS:
            for word in all_dyck(m, n, d):
                assert vertex_ranks(word)[-1] == 0

    def test_rank_recurrence(self):
        word = parse_word("NEENEEE", make_params(5, 2, 1))
        ranks = vertex_ranks(word)
        for i, ch in enumerate(word.steps):
            assert ranks[i + 1] - ranks[i] == (5 if ch == "N" else -2)


class TestIsDyck:
    def test_examples(self, p321):
        assert is_dyck(parse_word("NENEE", p321))
        assert not is_dyck(parse_word("NEENE", p321))
        assert not is_dyck(parse_word("ENNEE", p321))

    def test_matches_vertex_ranks(self):
        for (m, n, d) in PARAM_SETS[:4]:
            for word in all_dyck(m, n, d):
                assert min(vertex_ranks(word)) >= 0


class TestEnumerate:
    def test_321(self):
        assert [w.text for w in all_dyck(3, 2, 1)] == ["NNEEE", "NENEE"]

    def test_112(self):
        assert [w.text for w in all_dyck(1, 1, 2)] == ["NNEE", "NENE"]

    def test_521(self):
        assert [w.text for w in all_dyck(5, 2, 1)] == [
            "NNEEEEE",
            "NENEEEE",
            "NEENEEE",
        ]

    def test_lexicographic_order(self):
        # N sorts before E
        key = {"N": 0, "E": 1}
        for (m, n, d) in PARAM_SETS:
            texts = [[key[c] for c in w.text] for w in all_dyck(m, n, d)]
            assert texts == sorted(texts)

    def test_all_results_are_dyck_and_distinct(self):
        for (m, n, d) in PARAM_SETS:
            words = all_dyck(m, n, d)
            assert len(set(words)) == len(words)
            assert all(is_dyck(w) for w in words)

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            list(enumerate_dyck(make_params(23, 21, 1)))
        # an explicit limit overrides the default
        assert len(list(enumerate_dyck(make_params(3, 2, 1), limit=5))) == 2
        with pytest.raises(LimitExceeded):
            enumerate_dyck(make_params(3, 2, 1), limit=4)

    def test_env_var_limit(self, monkeypatch):
        monkeypatch.setenv("SWEEPLAB_LIMIT", "4")
        with pytest.raises(LimitExceeded):
            enumerate_dyck(make_params(3, 2, 1))


class TestCount:
    @pytest.mark.parametrize(
        "m,n,d,expected", [(3, 2, 1, 2), (5, 2, 1, 3), (7, 5, 1, 66), (1, 1, 2, 2)]
    )
    def test_frozen_counts(self, m, n, d, expected):
        assert count_dyck(make_params(m, n, d)) == expected

    def test_matches_enumeration(self):
        for (m, n, d) in PARAM_SETS:
            assert count_dyck(make_params(m, n, d)) == len(all_dyck(m, n, d))

    def test_no_limit_on_counting(self):
        assert count_dyck(make_params(23, 21, 1)) > 0


class TestBasePath:
    @pytest.mark.parametrize(
        "m,n,d,expected",
        [(3, 2, 1, "NENEE"), (1, 1, 2, "NENE"), (5, 2, 1, "NEENEEE")],
    )
    def test_greedy_construction(self, m, n, d, expected):
        assert base_path(make_params(m, n, d)).text == expected

    def test_is_dyck(self):
        for (m, n, d) in PARAM_SETS:
            assert is_dyck(base_path(make_params(m, n, d)))

    def test_corner_path(self):
        assert corner_path(make_params(3, 2, 1)).text == "NNEEE"
        assert corner_path(make_params(2, 1, 3)).text == "NNNEEEEEE"


class TestSouthEndRanks:
    def test_examples(self, p321):
        assert south_end_ranks(parse_word("NNEEE", p321)) == (0, 3)
        assert south_end_ranks(parse_word("NENEE", p321)) == (0, 1)

    def test_not_dyck(self, p321):
        with pytest.raises(NotDyck):
            south_end_ranks(parse_word("NEENE", p321))

    def test_base_path_ranks_rearrange_residues(self):
        # the area-0 path's South ranks are 0..n-1, each d times
        for (m, n, d) in PARAM_SETS:
            params = make_params(m, n, d)
            ranks = south_end_ranks(base_path(params))
            assert sorted(ranks) == sorted(list(range(n)) * d)

    def test_distinct_ranks_when_coprime(self):
        for (m, n, d) in PARAM_SETS:
            if d != 1:
                continue
            for word in all_dyck(m, n, d):
                ranks = start_ranks(word)
                assert len(set(ranks)) == len(ranks)
