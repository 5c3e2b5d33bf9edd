import itertools

import pytest
from hypothesis import given, strategies as st

from mzvshuffle.words import (
    EMPTY_WORD,
    ExponentOverflowError,
    Letter,
    NotAdmissibleError,
    NotInH1Error,
    Word,
    WordSyntaxError,
    from_exponent_form,
    mzv_to_word,
    parse_mzv_index,
    parse_word,
    print_word,
    to_exponent_form,
    word_to_mzv,
)


def all_words(max_len):
    for length in range(max_len + 1):
        for bits in itertools.product("xy", repeat=length):
            yield Word("".join(bits))


def test_parse_plain_letters():
    assert parse_word("xxyy") == Word("xxyy")
    assert parse_word("xxyy").letters == (Letter.X, Letter.X, Letter.Y, Letter.Y)


def test_parse_exponents_and_whitespace():
    assert parse_word("x^2 y x y") == Word("xxyxy")
    assert parse_word("x^0y") == Word("y")


def test_parse_empty_and_unit():
    assert parse_word("") == EMPTY_WORD
    assert parse_word("1") == EMPTY_WORD
    assert str(EMPTY_WORD) == "1"


def test_parse_syntax_error_offset():
    with pytest.raises(WordSyntaxError) as err:
        parse_word("xy z")
    assert err.value.offset == 3
    with pytest.raises(WordSyntaxError) as err:
        parse_word("x^")
    assert err.value.offset == 2


def test_parse_exponent_cap():
    with pytest.raises(ExponentOverflowError):
        parse_word("x^1000001")
    assert len(parse_word("x^999", exponent_cap=1000)) == 999
    with pytest.raises(ExponentOverflowError):
        parse_word("x^999", exponent_cap=100)


def test_admissibility():
    assert Word("xy").is_admissible
    assert not Word("yx").is_admissible
    assert EMPTY_WORD.is_admissible
    assert not Word("xyx").is_admissible


def test_exponent_form_examples():
    assert to_exponent_form(Word("xxyy")) == (2, 0)
    assert to_exponent_form(Word("xyxy")) == (1, 1)
    assert to_exponent_form(Word("xxy")) == (2,)
    with pytest.raises(NotInH1Error):
        to_exponent_form(Word("yx"))
    with pytest.raises(NotInH1Error):
        to_exponent_form(EMPTY_WORD)


def test_word_to_mzv_examples():
    assert word_to_mzv(Word("xxyy")) == (3, 1)
    assert word_to_mzv(Word("xyxy")) == (2, 2)
    assert word_to_mzv(Word("xyy")) == (2, 1)
    with pytest.raises(NotAdmissibleError):
        word_to_mzv(Word("yx"))
    with pytest.raises(NotAdmissibleError):
        word_to_mzv(EMPTY_WORD)


def test_mzv_to_word_roundtrip():
    assert mzv_to_word((3, 1)) == Word("xxyy")
    with pytest.raises(NotAdmissibleError):
        mzv_to_word((1, 2))


def test_parse_mzv_index():
    assert parse_mzv_index("3,1") == (3, 1)
    assert parse_mzv_index(" 2 , 2 ") == (2, 2)
    for bad in ("", "3,", "a", "0,2", "-1"):
        with pytest.raises(ValueError):
            parse_mzv_index(bad)


def test_exponent_form_roundtrip_exhaustive():
    # both directions, exhaustively up to length 12
    for w in all_words(12):
        if w.ends_with_y:
            exps = to_exponent_form(w)
            assert from_exponent_form(exps) == w
    from mzvshuffle.verify import h1_exponent_forms

    for exps in h1_exponent_forms(12):
        assert to_exponent_form(from_exponent_form(exps)) == exps


def test_print_parse_roundtrip_exhaustive():
    for w in all_words(12):
        assert parse_word(print_word(w)) == w


def test_mzv_weight_and_depth():
    for w in all_words(12):
        if not w.is_empty and w.is_admissible:
            ks = word_to_mzv(w)
            assert sum(ks) == len(w)
            assert len(ks) == w.y_count


def test_canonical_order():
    # y sorts before x; shorter words first
    assert Word("xyxy") < Word("xxyy")
    assert Word("y") < Word("x")
    assert Word("xy") < Word("xyy")
    assert sorted([Word("xxyy"), Word("xyxy")]) == [Word("xyxy"), Word("xxyy")]


def test_str_collapses_runs():
    assert str(Word("xxyy")) == "x^2y^2"
    assert str(Word("xyxy")) == "xyxy"
    assert str(Word("xxxyx")) == "x^3yx"


@given(st.text(alphabet="xy", max_size=30))
def test_parse_print_roundtrip_random(text):
    w = Word(text)
    assert parse_word(str(w)) == w


def test_word_validation():
    with pytest.raises(ValueError):
        Word("xz")
