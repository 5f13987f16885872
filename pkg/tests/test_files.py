import pytest

from qpaste.catalog import builtin
from qpaste.files import StabilizerFileError, dumps, loads
from qpaste.pasting import augment


def test_round_trip():
    text = dumps(builtin("code13"))
    again = loads(text)
    assert again.pad_count == 0
    assert again.as_code() == builtin("code13")
    assert dumps(again) == text


def test_comments_and_blank_lines():
    text = "# the five-qubit code\n\nXXZIZ\nZXXZI\n# middle note\nIZXXZ\nZIZXX\n\n"
    assert loads(text).as_code() == builtin("code5")


def test_placeholder_rows_detected():
    text = "XXZIZ\nZXXZI\nIZXXZ\nZIZXX\nIIIII\n"
    padded = loads(text)
    assert padded.pad_count == 1 and padded.row_count == 5
    assert padded.base == builtin("code5")
    with pytest.raises(ValueError, match="pasting input"):
        padded.as_code()


def test_padded_round_trip():
    padded = augment(builtin("code8"), 1, "append")
    assert dumps(loads(dumps(padded))) == dumps(padded)


def test_ragged_lines_rejected():
    with pytest.raises(StabilizerFileError, match="line 2"):
        loads("XXZIZ\nZXX\n")


def test_bad_character_rejected():
    with pytest.raises(StabilizerFileError, match="line 1"):
        loads("XXAIZ\n")


def test_signed_row_rejected():
    with pytest.raises(StabilizerFileError, match="minus"):
        loads("XXZIZ\n-ZXXZI\n")


def test_empty_file_rejected():
    with pytest.raises(StabilizerFileError, match="no generator"):
        loads("# only a comment\n\n")
