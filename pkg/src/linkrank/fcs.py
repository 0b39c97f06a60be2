"""Membership tests for the four parity-indexed families of lattice points
(x, y) at which the two-generator multidegree component carries positive
multiplicity.  Only the parities of the two arguments i and j matter.

The families are given by explicit congruence bullets; the equivalence
"member <=> multiplicity > 0" is exercised wholesale by the test suite.
"""

from .errors import InvalidInputError


def _parity(value):
    if isinstance(value, str):
        word = value.strip().lower()
        if word == "even":
            return 0
        if word == "odd":
            return 1
        raise InvalidInputError(f"parity must be an integer or 'even'/'odd', got {value!r}")
    if not isinstance(value, int):
        raise InvalidInputError(f"parity must be an integer or 'even'/'odd', got {value!r}")
    return value % 2


def _split_parity_args(args, caller):
    # accept both ((i, j), x, y) and (i, j, x, y)
    if len(args) == 3:
        pair, x, y = args
        try:
            i, j = pair
        except (TypeError, ValueError):
            raise InvalidInputError(
                f"{caller} needs a parity pair (i, j) as first argument, got {pair!r}")
        return i, j, x, y
    if len(args) == 4:
        return args
    raise InvalidInputError(
        f"{caller} takes ((i, j), x, y) or (i, j, x, y), got {len(args)} arguments")


def fcs_contains(*args):
    """Whether the lattice point (x, y), x, y >= 1, belongs to the family
    indexed by the parities of (i, j).

    Callable as fcs_contains((i, j), x, y) or fcs_contains(i, j, x, y);
    i and j may be integers or the strings 'even'/'odd'.
    """
    i, j, x, y = _split_parity_args(args, "fcs_contains")
    if x < 1 or y < 1:
        raise InvalidInputError(f"membership is defined for x, y >= 1, got ({x}, {y})")
    pi = _parity(i)
    pj = _parity(j)
    if pi == 0 and pj == 0:
        return (
            (x == 1 and y == 1)
            or (x == 2 and y % 2 == 0)
            or (x == 3 and y == 3)
            or (x == 3 and y >= 5)
            or (x >= 4 and y >= 4)
            or (x % 2 == 0 and y == 2)
            or (x >= 5 and y == 3)
        )
    if pi == 1 and pj == 0:
        return (
            (x == 1 and y == 1)
            or (x == 2 and (y + 1) % 2 == 0)
            or (x == 3 and y >= 2)
            or (x >= 4 and y >= 4)
            or (x % 4 == 0 and y == 2)
            or ((x + 1) % 4 == 0 and y == 2)
            or (x >= 5 and y == 3)
        )
    if pi == 1 and pj == 1:
        return (
            (x == 1 and y == 1)
            or (x == 2 and (y + 2) % 4 == 0)
            or (x == 2 and (y + 3) % 4 == 0)
            or (x >= 3 and y >= 3)
            or ((x + 2) % 4 == 0 and y == 2)
            or ((x + 3) % 4 == 0 and y == 2)
        )
    # (even, odd) is the (odd, even) family reflected across the diagonal
    return fcs_contains(j, i, y, x)


def fcs_enumerate(*args):
    """All member points in the box 1 <= x <= x_max, 1 <= y <= y_max,
    in lexicographic order.

    Callable as fcs_enumerate((i, j), x_max, y_max) or with i, j unpacked.
    """
    i, j, x_max, y_max = _split_parity_args(args, "fcs_enumerate")
    if x_max < 1 or y_max < 1:
        raise InvalidInputError(f"box bounds must be >= 1, got ({x_max}, {y_max})")
    return [
        (x, y)
        for x in range(1, x_max + 1)
        for y in range(1, y_max + 1)
        if fcs_contains(i, j, x, y)
    ]
