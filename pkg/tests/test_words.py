import pytest
from hypothesis import given, strategies as st

from seqrecon.words import (
    Ordering,
    Word,
    WordError,
    a_word,
    all_words,
    identity_ordering,
    is_periodic,
    parse_word,
    periodic_word,
    relabel,
    reverse,
    runs,
)


def words(q_max=4, n_max=8):
    return st.integers(2, q_max).flatmap(
        lambda q: st.lists(st.integers(0, q - 1), max_size=n_max).map(lambda s: Word(q, tuple(s))))


def test_parse():
    assert parse_word("012012", 3) == Word(3, (0, 1, 2, 0, 1, 2))
    assert parse_word("", 3) == Word(3, ())
    assert len(parse_word("", 3)) == 0


def test_parse_errors():
    with pytest.raises(WordError) as e:
        parse_word("031", 3)
    assert (e.value.reason, e.value.index) == ("invalid-symbol", 1)
    with pytest.raises(WordError) as e:
        parse_word("01a", 3)
    assert (e.value.reason, e.value.index) == ("parse", 2)


def test_alphabet_bounds():
    with pytest.raises(WordError):
        Word(1, ())
    with pytest.raises(WordError):
        Word(7, (0,))


@given(words())
def test_string_round_trip(w):
    assert parse_word(str(w), w.q) == w


@given(words())
def test_index_round_trip(w):
    assert Word.from_index(w.q, w.n, w.index) == w


def test_all_words_in_index_order():
    ws = list(all_words(3, 3))
    assert len(ws) == 27
    assert [w.index for w in ws] == list(range(27))


def test_periodic():
    assert periodic_word(6, identity_ordering(3)) == a_word(6) == parse_word("012012", 3)
    assert periodic_word(5, Ordering(3, (1, 0, 2))) == parse_word("10210", 3)
    assert periodic_word(0, identity_ordering(3)).n == 0
    assert is_periodic(parse_word("120120", 3))
    assert not is_periodic(parse_word("0120", 3)[:3] + parse_word("1", 3) + parse_word("1", 3))


def test_runs():
    r = runs(parse_word("001222", 3))
    assert [(x.symbol, x.start, x.length) for x in r] == [(0, 0, 2), (1, 2, 1), (2, 3, 3)]
    assert len(runs(parse_word("012", 3))) == 3
    assert len(runs(parse_word("", 3))) == 0


@given(words())
def test_runs_expand(w):
    r = runs(w)
    assert r.expand() == w
    assert all(a.symbol != b.symbol for a, b in zip(r.runs, r.runs[1:]))


def test_relabel_and_reverse():
    assert relabel(parse_word("0120", 3), Ordering.shift(3, 1)) == parse_word("1201", 3)
    w = parse_word("001", 3)
    assert relabel(w, identity_ordering(3)) == w
    assert relabel(w, Ordering(3, (1, 0, 2))) == parse_word("110", 3)
    assert reverse(parse_word("012", 3)) == parse_word("210", 3)
    assert reverse(parse_word("010", 3)) == parse_word("010", 3)
    assert reverse(parse_word("", 3)).n == 0
    with pytest.raises(WordError):
        relabel(w, identity_ordering(2))


def test_ordering_validation():
    with pytest.raises(WordError):
        Ordering(3, (0, 0, 1))
    o = Ordering(3, (2, 0, 1))
    assert all(o.inverse()(o(s)) == s for s in range(3))
