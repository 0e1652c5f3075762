import pytest

from seqrecon import claims as C


def test_theorem4_example():
    r = C.verify_claim("theorem4", n=7, t=3)
    assert (r.expected, r.observed, r.passed) == (20, 20, True)


def test_lemma11_example():
    r = C.verify_claim("lemma11", n=6, t=2)
    assert r.expected == "<=14" and r.observed <= 14 and r.passed


def test_lemma6_example():
    r = C.verify_claim("lemma6", n=5)
    assert r.observed == 3 and r.passed


def test_cheap_claims_pass():
    for name in ("f_positive", "lemma16", "lemma17", "lemma18", "identities"):
        assert C.verify_claim(name).passed, name
    assert all(C.verify_claim("lemma15", k=k).passed for k in range(3, 13))


def test_m_recurrence_reports_edge_cells():
    r = C.verify_claim("m_recurrence")
    assert not r.passed
    cells = C.identity_failures(60, 20)["m_recurrence"]
    assert {n - t for _, n, t in cells} == {2, 3, 4, 5}


def test_theorem4_mismatch_carries_witness():
    r = C.verify_claim("theorem4", n=7, t=4)
    assert (r.expected, r.observed) == (20, 21)
    assert "witness" in r.note


def test_errors():
    with pytest.raises(C.ClaimError) as e:
        C.verify_claim("theorem9")
    assert e.value.reason == "unknown-claim"
    with pytest.raises(C.ClaimError) as e:
        C.verify_claim("theorem4", n=3, t=6)
    assert e.value.reason == "out-of-range"
    with pytest.raises(C.ClaimError):
        C.verify_claim("theorem5", n=5, t=2)


def test_desk_cells_cover_registry():
    used = {claim for cells in C.desk_cells().values() for claim, _ in cells}
    assert used == set(C.CLAIMS)
