import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from seqrecon.balls import WordSet, enumerate_ball, is_subsequence
from seqrecon.reconstruct import (
    Code,
    ReconstructionError,
    Verdict,
    ambiguity_witness,
    build_code,
    channel_outputs,
    decode,
    exhaustive_sharpness,
    required_channels,
    simulate,
)
from seqrecon.words import Word, a_word, all_words, parse_word


def w(s, q=3):
    return parse_word(s, q)


def test_build_code_examples():
    assert build_code(2, 3, 2).codewords.strings() == ["000", "011"]
    assert len(build_code(3, 3, 1)) == 27


@pytest.mark.parametrize("q,n,d", [(2, 3, 2), (3, 4, 2), (2, 6, 2), (2, 7, 3), (3, 5, 3)])
def test_build_code_matches_oracle(q, n, d):
    code = build_code(q, n, d)
    assert [c.symbols for c in code] == oracles.greedy_code(q, n, d)
    for i, a in enumerate(code.codewords.members):
        for b in code.codewords.members[i + 1:]:
            assert oracles.dist(a.symbols, b.symbols) >= d


def test_required_channels():
    assert required_channels(3, 6, 2, 2) == (7, "N3_double")
    assert required_channels(3, 5, 3, 2)[0] == 9
    assert required_channels(2, 8, 2, 2)[0] == 7
    assert required_channels(3, 5, 2, 1)[0] == 1 + oracles.max_intersection(3, 5, 2, d=1)
    assert required_channels(3, 6, 2, 3) == (1 + oracles.max_intersection(3, 6, 2, d=3), "search")


def test_required_channels_search_overrides_closed_form():
    assert required_channels(3, 7, 4, 2)[0] == 21
    assert required_channels(3, 7, 4, 2, prefer="search") == (22, "search")


def test_channel_outputs_examples():
    b = channel_outputs(a_word(6), 2, "adversarial", target_distinct=15)
    assert b.outputs == enumerate_ball(a_word(6), 2)
    c = w("0120")
    assert channel_outputs(c, 0, "random", seed=1).outputs.strings() == ["0120"]
    assert channel_outputs(w("000"), 1, "random", seed=0).outputs.strings() == ["00"]
    with pytest.raises(ReconstructionError) as e:
        channel_outputs(w("000"), 1, target_distinct=2)
    assert e.value.reason == "target-exceeds-ball"


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=9), st.data())
def test_outputs_are_subsequences(symbols, data):
    c = Word(3, tuple(symbols))
    t = data.draw(st.integers(0, c.n))
    size = len(oracles.ball(symbols, t))
    target = data.draw(st.integers(1, size))
    batch = channel_outputs(c, t, "random", seed=data.draw(st.integers(0, 2**32)), target_distinct=target)
    assert len(batch.outputs) == target
    assert all(is_subsequence(o, c) and o.n == c.n - t for o in batch.outputs)


def test_seed_reproducible():
    a = channel_outputs(a_word(8), 3, seed=42, target_distinct=10)
    b = channel_outputs(a_word(8), 3, seed=42, target_distinct=10)
    assert a.outputs == b.outputs and a.draws == b.draws


def test_decode_examples():
    code = build_code(2, 3, 2)
    out = decode(code, WordSet.from_strings(2, ["01", "11"]), 1)
    assert out.verdict is Verdict.UNIQUE and str(out.decoded) == "011"
    assert str(decode(code, WordSet.from_strings(2, ["00"]), 1).decoded) == "000"
    assert decode(code, WordSet.from_strings(2, ["00", "01"]), 1).verdict is Verdict.INCONSISTENT
    with pytest.raises(Exception):
        decode(code, [w("0", 2), w("01", 2)], 1)


def test_decode_ambiguous():
    code = Code(3, 6, 2, WordSet.of(3, 6, [w("012012"), w("102102")]))
    shared = enumerate_ball(w("012012"), 2)
    shared = [s for s in shared if is_subsequence(s, w("102102"))]
    assert decode(code, shared, 2).verdict is Verdict.AMBIGUOUS


def test_simulate_threshold():
    rep = simulate(3, 6, 2, 2, trials=100, seed=0)
    assert rep.threshold == 7 and rep.unique == 100
    assert rep.as_dict()["unique"] == 100


def test_simulate_zero_deletions():
    rep = simulate(3, 4, 0, 1, trials=50)
    assert rep.threshold == 1 and rep.unique == 50


def test_simulate_reproducible():
    a = simulate(3, 6, 2, 2, trials=30, seed=7, channels=3)
    b = simulate(3, 6, 2, 2, trials=30, seed=7, channels=3)
    assert a.as_dict() == b.as_dict()


def test_simulate_below_threshold_can_be_ambiguous():
    rep = simulate(3, 6, 2, 2, trials=100, seed=0, channels=2)
    assert rep.unique + rep.ambiguous == 100 and rep.inconsistent == 0


def test_ambiguity_witness_with_extremal_pair():
    code = build_code(3, 6, 2)
    # the extremal pair does not survive greedy selection, and no codeword pair shares 6 outputs
    assert w("012012") not in code.codewords or w("102102") not in code.codewords
    assert ambiguity_witness(code, 2, 6) is None
    pair_code = Code(3, 6, 2, WordSet.of(3, 6, [w("012012"), w("102102")]))
    x, y, outs = ambiguity_witness(pair_code, 2, 6)
    assert decode(pair_code, outs, 2).verdict is Verdict.AMBIGUOUS


def test_exhaustive_sharpness_small():
    code = build_code(2, 6, 2)
    n = required_channels(2, 6, 2, 2)[0]
    rep = exhaustive_sharpness(code, 2, n)
    assert rep.ok and rep.max_pair_intersection < n
