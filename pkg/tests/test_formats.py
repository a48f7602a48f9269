import pytest
from hypothesis import given

from conftest import sign_matrices
from sequency import SgnFormatError, SignMatrix, dumps_sgn, loads_sgn
from sequency.formats import dumps_csv, dumps_pbm, iter_sgn


def test_parse_plain_and_spaced():
    a = loads_sgn("++\n+-\n")
    b = loads_sgn("+ +\n+ -\n\n")
    assert a == b == SignMatrix.from_rows([[1, 1], [1, -1]])


def test_blank_line_separates_matrices():
    mats = list(iter_sgn("+\n\n++\n+-\n"))
    assert [m.n for m in mats] == [1, 2]
    with pytest.raises(SgnFormatError, match="expected one matrix"):
        loads_sgn("+\n\n++\n+-\n")


def test_ragged_row_reports_line():
    with pytest.raises(SgnFormatError) as exc:
        loads_sgn("+++\n++\n+++\n")
    assert exc.value.line == 2
    assert "ragged" in str(exc.value)


def test_bad_character_reports_line_and_column():
    with pytest.raises(SgnFormatError) as exc:
        loads_sgn("++\n+x\n")
    assert (exc.value.line, exc.value.column) == (2, 2)


def test_non_square_block_rejected():
    with pytest.raises(SgnFormatError, match="square"):
        loads_sgn("++\n++\n++\n")


def test_empty_input_rejected():
    with pytest.raises(SgnFormatError):
        loads_sgn("\n\n")


@given(sign_matrices())
def test_roundtrip(a):
    assert loads_sgn(dumps_sgn(a)) == a
    assert loads_sgn(dumps_sgn(a, spaced=True)) == a


def test_pbm_maps_minus_to_black():
    a = SignMatrix.from_rows([[1, 1], [1, -1]])
    assert dumps_pbm(a) == "P1\n2 2\n0 0\n0 1\n"


def test_csv():
    a = SignMatrix.from_rows([[1, -1], [-1, -1]])
    assert dumps_csv(a) == "1,-1\n-1,-1\n"
