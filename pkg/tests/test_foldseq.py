import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from terdragon.foldseq import (AmbiguousWindow, BadResidue, Case, FoldSeq, Lambda, NotFolding,
                               PStep, bar, classify_window, delta_seq, extract_lambda, gen_T,
                               gen_T_array, parse_pseq, parse_signs, residue_check)

lambdas = st.lists(st.sampled_from((1, -1)), min_size=1, max_size=7).map(lambda v: Lambda(tuple(v)))


def closed_form(lam, p):
    """Sign at 1-based position p: 3-adic digit rule, written independently of gen_T."""
    k = 0
    while p % 3 == 0:
        p //= 3
        k += 1
    return lam[k] if p % 3 == 1 else -lam[k]


def test_small_values():
    assert str(gen_T("+")) == "+-"
    assert str(gen_T("+-")) == "+--++--+"[:0] + "+-" + "-" + "+-" + "+" + "+-"
    assert str(gen_T("")) == ""


@given(lambdas)
def test_gen_matches_digit_rule(lam):
    s = gen_T(lam).signs
    assert list(s) == [closed_form(lam, p) for p in range(1, len(s) + 1)]
    assert gen_T_array(lam).tolist() == list(s)


@given(lambdas)
def test_bar_invariance_and_balance(lam):
    s = gen_T(lam)
    assert bar(s).signs == s.signs
    assert sum(s.signs) == 0


def test_parse_and_format():
    assert parse_signs("+-−") == (1, -1, -1)
    with pytest.raises(ValueError):
        parse_signs("+x")
    assert str(Lambda.parse("+-+")) == "+-+"
    assert parse_pseq("ims") == (PStep.I, PStep.M, PStep.S)
    with pytest.raises(ValueError):
        Lambda((2,))


def test_json_round_trip():
    s = gen_T("-+")
    back = FoldSeq.from_json(s.to_json())
    assert back == s and back.lam == Lambda.parse("-+")
    assert json.loads(s.to_json())["origin_index"] == 1


def test_extract_all_complete_sequences():
    for n in range(1, 7):
        for t in itertools.product((1, -1), repeat=n):
            lam = Lambda(t)
            assert extract_lambda(gen_T(lam)).lam == lam


@settings(max_examples=60, deadline=None)
@given(lambdas.filter(lambda l: len(l) >= 5), st.data())
def test_windows_extract_a_consistent_prefix(lam, data):
    s = gen_T(lam).signs
    length = data.draw(st.integers(30, len(s)))
    start = data.draw(st.integers(1, len(s) - length + 1))
    w = FoldSeq(s[start - 1: start - 1 + length], start)
    ext = extract_lambda(w)
    assert ext.lam.entries == lam.entries[: len(ext.lam)]
    assert len(ext.lam) >= 1


def test_extract_strict_levels():
    with pytest.raises(AmbiguousWindow):
        extract_lambda(FoldSeq((1, -1)), k_max=3)
    with pytest.raises(NotFolding):
        extract_lambda(FoldSeq((1, 1, 1, 1, 1, 1)))


def test_residue_check_reports_admissible_classes():
    lv = residue_check(gen_T("+-"), 1)
    assert lv[0] == {(0, 1)}
    assert (0, -1) in lv[1]
    assert residue_check(FoldSeq((1,)), 0) == [None]


def test_delta():
    d = delta_seq(gen_T("+-"))
    assert str(d) == "-+" and d.lam == Lambda.parse("-")
    with pytest.raises(BadResidue):
        delta_seq(gen_T("+-"), 1)


def test_classify_window_cases():
    t3 = gen_T("+-+").signs
    center_a = FoldSeq(bar(t3).signs + (1,) + t3)
    wc = classify_window(center_a, 2)
    assert wc.case == Case.A and wc.center == 27 and wc.center_sign == 1
    assert classify_window(gen_T("+-+-"), 3).case == Case.B
    assert classify_window(FoldSeq((1, -1)), 3).case == Case.UNDETERMINED


def test_interior_window_does_not_overcommit():
    # one sign per side at level 3 cannot fix the level-3 residue
    s = gen_T("++++++").signs
    ext = extract_lambda(FoldSeq(s[213:243], 214))
    assert ext.lam == Lambda.parse("+++")
    assert ext.stopped == "ambiguous"


def test_embedded_window_keeps_genuine_ambiguity():
    t3 = gen_T("+-+").signs
    w = bar(t3).signs + (1,) + t3
    text = "".join("+" if x > 0 else "-" for x in w)
    # the window occurs inside complete sequences with different third fold signs
    third = set()
    for lam in itertools.product((1, -1), repeat=6):
        if text in str(gen_T(lam)):
            third.add(lam[2])
    assert third == {1, -1}
    assert len(extract_lambda(FoldSeq(w)).lam) == 2


def test_complete_length_windows_are_anchored():
    ext = extract_lambda(gen_T("-"))
    assert ext.lam == Lambda.parse("-") and ext.residues == [0]
    # same signs away from index 1: the last fold sign is no longer forced
    assert len(extract_lambda(FoldSeq((-1, 1), 5)).lam) == 0
