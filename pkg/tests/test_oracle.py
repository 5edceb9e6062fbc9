import pytest

from lbs_parens.core import Bin, DomainError, Forest, Nul, is_balanced, parse, parse_forest, pr, size
from lbs_parens.oracle import (Candidate, OracleLimitError, all_strings, check_ceiling, fig1_trace, filt_just,
                               foldr, forest_trace, inits, lbp_spec, lbs_spec, lbsl_counter, lbsl_spec, max_by,
                               parse_forest_fold, scanr, segments, tails)

T1 = Bin(Nul, Nul)


@pytest.mark.parametrize("xs, expected", [
    ("", [""]),
    ("ab", ["", "a", "ab"]),
    ("()", ["", "(", "()"]),
])
def test_inits(xs, expected):
    assert inits(xs) == expected


@pytest.mark.parametrize("xs, expected", [
    ("", [""]),
    ("ab", ["ab", "b", ""]),
    (")(", [")(", "(", ""]),
])
def test_tails(xs, expected):
    assert tails(xs) == expected


@pytest.mark.parametrize("xs, expected", [
    ("", [""]),
    ("ab", ["", "a", "ab", "", "b", ""]),
    ("()", ["", "(", "()", "", ")", ""]),
])
def test_segments(xs, expected):
    assert segments(xs) == expected


def test_list_helpers():
    assert filt_just([1, None, 0, None, 2]) == [1, 0, 2]
    assert max_by(len, ["a", "bb", "cc", "d"]) == "bb"
    assert foldr(lambda x, acc: x + acc, "", "abc") == "abc"
    assert scanr(lambda x, acc: x + acc, "", "abc") == ["abc", "bc", "c", ""]
    with pytest.raises(ValueError):
        max_by(len, [])


@pytest.mark.parametrize("s, start, length", [
    ("))(()())())()(", 2, 8),
    ("", 0, 0),
    ("()(())", 0, 6),
    ("((((", 0, 0),
    (")()(", 1, 2),
    ("()(", 0, 2),
    ("(()", 1, 2),
])
def test_lbs_spec(s, start, length):
    found = lbs_spec(s)
    assert (found.start, found.length) == (start, length)
    assert pr(found.tree) == found.segment(s)


def test_lbs_spec_worked_example():
    s = "))(()())())()("
    found = lbs_spec(s)
    assert found.segment(s) == "(()())()"
    assert found.tree == Bin(Bin(Nul, T1), T1)


@pytest.mark.parametrize("s, printed", [
    ("())()(", "()"),
    (")()", ""),
    ("()()", "()()"),
    ("(()", ""),
])
def test_lbp_spec(s, printed):
    assert pr(lbp_spec(s)) == printed


@pytest.mark.parametrize("s, expected", [
    ("))(()())())()(", 8),
    ("((((", 0),
    (")()(", 2),
    ("", 0),
])
def test_lbsl_spec(s, expected):
    assert lbsl_spec(s) == expected
    assert lbsl_counter(s) == expected


def test_fig1_trace():
    rows = fig1_trace("())()(")
    assert rows == [
        Forest.of(Nul),
        None,
        Forest.of(T1),
        Forest.of(T1, Nul),
        None,
        Forest.of(T1, T1),
        None,
    ]
    assert fig1_trace("") == [Forest.of(Nul)]
    assert fig1_trace("(") == [Forest.of(Nul), None]


def test_forest_trace_rows():
    rows = forest_trace("())")
    assert [r.prefix for r in rows] == ["", "(", "()", "())"]
    assert [r.forest for r in rows] == fig1_trace("())")


def test_parse_forest_fold_matches_loop():
    for s in all_strings(10):
        assert parse_forest_fold(s) == parse_forest(s), s


def test_oracle_properties_exhaustive():
    for s in all_strings(12):
        found = lbs_spec(s)
        segment = found.segment(s)
        assert is_balanced(segment)
        assert pr(found.tree) == segment
        assert lbsl_spec(s) == size(found.tree) == lbsl_counter(s)

        prefix = pr(lbp_spec(s))
        assert s.startswith(prefix)
        assert max(len(p) for p in inits(s) if is_balanced(p)) == len(prefix)


def test_leftmost_tie():
    # "()" at 0 and at 3 have the same size
    assert lbs_spec("())()") == Candidate(0, 2, T1)


def test_ceiling():
    with pytest.raises(OracleLimitError):
        lbs_spec("()" * 11, limit=20)
    with pytest.raises(OracleLimitError):
        fig1_trace("(" * 30, limit=10)
    assert check_ceiling("()", limit=2) == "()"
    assert lbsl_counter("()" * 10, limit=20) == 20


def test_domain_error():
    with pytest.raises(DomainError):
        lbs_spec("(]")
    with pytest.raises(DomainError):
        parse_forest_fold("a")
