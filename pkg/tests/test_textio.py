"""Text format round-trips and parse errors.

Grammar per entry: ``-inf`` for zero, a decimal integer or ``p/q``
rational for a tangible value, with a trailing ``v`` marking the ghost
layer.  Matrix files are one row per line, ``#`` comments and blank
lines skipped.
"""

from fractions import Fraction

import pytest

from supertropical import (
    Mat,
    ParseError,
    ZERO,
    parse_matrix,
    parse_scalar,
    parse_vector,
    print_matrix,
    print_scalar,
    print_vector,
)
from helpers import G, T, rand_mat, rand_scalar, seeded


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3", T(3)),
        ("-4", T(-4)),
        ("+2", T(2)),
        ("3v", G(3)),
        ("-inf", ZERO),
        ("1/2", T(Fraction(1, 2))),
        ("-3/2v", G(Fraction(-3, 2))),
        ("0", T(0)),
        ("0v", G(0)),
    ],
)
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


def test_parse_scalar_strips_whitespace():
    assert parse_scalar("  3v ") == G(3)


def test_ghost_marked_zero_canonicalizes():
    # A ghost suffix on -inf is accepted and collapses to the one zero.
    assert parse_scalar("-infv") == ZERO
    assert print_scalar(parse_scalar("-infv")) == "-inf"


@pytest.mark.parametrize(
    "bad",
    ["", "x", "3w", "v", "1/0", "1//2", "3.5", "--4", "inf"],
)
def test_parse_scalar_rejects(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad)


def test_print_scalar_canonical():
    assert print_scalar(T(3)) == "3"
    assert print_scalar(G(3)) == "3v"
    assert print_scalar(ZERO) == "-inf"
    assert print_scalar(T(Fraction(1, 2))) == "1/2"
    assert print_scalar(G(Fraction(-7, 3))) == "-7/3v"


# -- matrices and vectors ----------------------------------------------

def test_parse_matrix_example():
    A = parse_matrix("5 5 4\n0 1 4\n0 2 4")
    assert A.shape == (3, 3)
    assert A.entry(0, 0) == T(5)
    assert A.entry(2, 1) == T(2)


def test_parse_matrix_with_ghosts():
    A = parse_matrix("0 0v\n-inf 0")
    assert A.entry(0, 1) == G(0)
    assert A.entry(1, 0) == ZERO


def test_parse_vector_fraction():
    v = parse_vector("1/2 -inf")
    assert v[0] == T(Fraction(1, 2))
    assert v[1] == ZERO


def test_comments_and_blank_lines_ignored():
    A = parse_matrix("# header\n\n1 2\n# middle\n3 4\n\n")
    assert A == parse_matrix("1 2\n3 4")


def test_ragged_rows_rejected():
    with pytest.raises(ParseError):
        parse_matrix("1 2\n3")


def test_empty_input_rejected():
    with pytest.raises(ParseError):
        parse_matrix("# nothing here\n")


def test_vector_needs_single_row():
    with pytest.raises(ParseError):
        parse_vector("1 2\n3 4")


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_matrix("1 2\n3 oops")
    err = exc.value
    assert err.line == 2
    assert err.column == 3
    assert "2" in str(err) and "3" in str(err)


# -- round-trips -------------------------------------------------------

def test_round_trip_random(rng):
    for _ in range(50):
        A = rand_mat(rng, rng.randint(1, 4), rng.randint(1, 4), denom=3)
        assert parse_matrix(print_matrix(A)) == A


def test_round_trip_scalars(rng):
    for _ in range(200):
        s = rand_scalar(rng, denom=5)
        assert parse_scalar(print_scalar(s)) == s


def test_print_is_canonical():
    # Reprinting a parsed file gives the same bytes back.
    text = print_matrix(parse_matrix("  1   2v \n -inf 1/2\n"))
    assert parse_matrix(text) == parse_matrix("1 2v\n-inf 1/2")
    assert print_matrix(parse_matrix(text)) == text


def test_print_vector_round_trip():
    v = parse_vector("1 2v -inf")
    assert parse_vector(print_vector(v)) == v
