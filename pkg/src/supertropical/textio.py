"""Text formats for scalars, vectors and matrices.

Scalar grammar: ``-inf`` for zero, a rational for a tangible, a rational
with a ``v`` suffix for a ghost.  Rationals are decimal integers or ``p/q``
with an optional leading sign.  Examples: ``-inf``, ``11``, ``0v``,
``-3/4v``.

Matrix files are plain UTF-8: one row per line, entries separated by
whitespace, lines whose first non-blank character is ``#`` are comments,
blank lines are skipped.  A vector is a one-line matrix file.

Parsing is forgiving about stray spaces inside a single scalar token when
parsing one scalar in isolation (``- inf`` and ``-inf v`` are accepted and
canonicalize), but matrix files are tokenized by whitespace first, so
entries there must be written without internal spaces.  Printing always
produces the canonical space-free form, and parse(print(x)) == x exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exceptions import ParseError
from .matrices import Mat, Vec
from .scalars import Scalar, ZERO

__all__ = [
    "parse_scalar",
    "print_scalar",
    "parse_matrix",
    "print_matrix",
    "parse_vector",
    "print_vector",
]

_RAT = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _scalar_from_token(token, line=None, column=None):
    ghost = False
    body = token
    if body.endswith("v"):
        ghost = True
        body = body[:-1]
    if body in ("-inf", "-Inf", "-INF"):
        # the ghost marker on zero is accepted and dropped: there is only
        # one zero
        return ZERO
    if not _RAT.match(body):
        raise ParseError(f"bad scalar token {token!r}", line, column)
    try:
        q = Fraction(body)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line, column)
    return Scalar(q, ghost)


def parse_scalar(text):
    """Parse one scalar, tolerating internal whitespace."""
    token = "".join(text.split())
    if not token:
        raise ParseError("empty scalar text")
    return _scalar_from_token(token)


def print_scalar(s):
    return str(s)


def parse_matrix(text):
    """Parse a matrix file; raises ParseError with line and column info."""
    grid = []
    first_width = None
    for ln, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for m in re.finditer(r"\S+", line):
            row.append(_scalar_from_token(m.group(), ln, m.start() + 1))
        if first_width is None:
            first_width = len(row)
        elif len(row) != first_width:
            raise ParseError(
                f"row has {len(row)} entries, expected {first_width}", ln, 1
            )
        grid.append(row)
    if not grid:
        raise ParseError("no rows found")
    return Mat(grid)


def print_matrix(A):
    return "\n".join(" ".join(str(x) for x in row) for row in A.row_tuples)


def parse_vector(text):
    """Parse a one-line matrix file as a vector."""
    A = parse_matrix(text)
    if A.rows != 1:
        raise ParseError(f"expected a single row, got {A.rows}")
    return A.row(0)


def print_vector(v):
    return " ".join(str(x) for x in v)
