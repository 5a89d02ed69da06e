import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from incentives import (
    InvalidModel,
    InvalidSequence,
    SequenceModel,
    closure_msg,
    invoice,
    is_ab_sequence,
    m_ab_membership,
    m_ab_set,
    verify_theorem5,
)
from oracles import oracle_ab_totals

MODEL = SequenceModel.of({5, 7, 9, 11}, {-3, 0, 2})


def test_model_validation():
    with pytest.raises(InvalidModel):
        SequenceModel.of(set(), {0})
    with pytest.raises(InvalidModel):
        SequenceModel.of({0, 5}, {0})
    with pytest.raises(InvalidModel):
        SequenceModel.of({5}, {-3, 2})
    with pytest.raises(InvalidModel):
        SequenceModel.of({2}, {-3, 0})
    m = SequenceModel.of([7, 5, 5], [0, -3, 2])
    assert m.a_set == (5, 7)
    assert m.b_set == (-3, 0, 2)


def test_is_ab_sequence():
    assert is_ab_sequence(MODEL, [5])
    assert is_ab_sequence(MODEL, [5, -3, 7])
    assert is_ab_sequence(MODEL, [11, 0, 11, 2, 5])
    assert not is_ab_sequence(MODEL, [])
    assert not is_ab_sequence(MODEL, [5, -3])
    assert not is_ab_sequence(MODEL, [-3])
    assert not is_ab_sequence(MODEL, [5, 1, 7])
    assert not is_ab_sequence(MODEL, [5, -3, 4])


def test_invoice():
    assert invoice(MODEL, [5]) == 5
    assert invoice(MODEL, [5, -3, 7]) == 9
    assert invoice(MODEL, [11, 0, 11, 2, 5]) == 29
    with pytest.raises(InvalidSequence, match="length"):
        invoice(MODEL, [5, -3])
    with pytest.raises(InvalidSequence, match="position 1"):
        invoice(MODEL, [4])
    with pytest.raises(InvalidSequence, match="position 2"):
        invoice(MODEL, [5, 4, 7])


def test_membership_known_values():
    want_members = {0, 5, 7, 9, 10, 11, 12}
    for n in range(13):
        assert m_ab_membership(MODEL, n) == (n in want_members), n
    assert m_ab_membership(MODEL, 13)
    assert not m_ab_membership(MODEL, 8)
    assert not m_ab_membership(MODEL, -4)


def test_m_ab_set_golden():
    assert m_ab_set(MODEL, 14) == [0, 5, 7, 9, 10, 11, 12, 13, 14]
    assert m_ab_set(MODEL, 0) == [0]
    assert m_ab_set(MODEL, -1) == []


def test_totals_match_sequence_enumeration():
    # windows chosen so the stated max_len provably reaches every total
    cases = [
        (SequenceModel.of({3, 5}, {-1, 0}), 9, 9),
        (SequenceModel.of({2}, {0, 3}), 12, 13),
        (SequenceModel.of({5, 9}, {-4, 0}), 10, 13),
        (MODEL, 16, 11),
    ]
    for model, bound, max_len in cases:
        totals = oracle_ab_totals(model.a_set, model.b_set, max_len)
        want = sorted({0} | {t for t in totals if 0 <= t <= bound})
        assert m_ab_set(model, bound) == want, (model.a_set, model.b_set)


def test_invoice_totals_are_members():
    m = SequenceModel.of({4, 7}, {-2, 0, 1})
    for seq in ([4], [7, -2, 4], [4, 1, 4, -2, 7], [7, 1, 7]):
        assert is_ab_sequence(m, seq)
        assert m_ab_membership(m, invoice(m, seq))


@given(st.integers(min_value=1, max_value=6), st.data())
@settings(max_examples=60)
def test_random_sequences_land_in_the_set(pairs, data):
    m = SequenceModel.of({3, 4, 9}, {-2, 0, 5})
    seq = []
    for i in range(pairs):
        seq.append(data.draw(st.sampled_from(m.a_set)))
        if i < pairs - 1:
            seq.append(data.draw(st.sampled_from(m.b_set)))
    total = invoice(m, seq)
    assert total > 0
    assert m_ab_membership(m, total)


def test_verify_theorem5_models():
    assert verify_theorem5(MODEL, 150)
    assert verify_theorem5(SequenceModel.of({3, 5}, {-1, 0}), 80)
    assert verify_theorem5(SequenceModel.of({2}, {0, 3}), 60)
    assert verify_theorem5(SequenceModel.of({5, 9}, {-4, 0}), 100)
    assert verify_theorem5(SequenceModel.of({4, 6}, {-2, 0, 2}), 60)


def test_totals_equal_closure_members_directly():
    m = SequenceModel.of({4, 6}, {-2, 0, 2})
    r = closure_msg(m.a_set, (-2, 2))
    assert m_ab_set(m, 40) == [n for n in range(41) if r.member(n)]
