"""Rational homotopy ranks of special orthogonal groups and of Stiefel
manifolds of orthonormal l-frames in q-space.

Both functions return the rank (0, 1 or 2) of the relevant homotopy group
tensored with the rationals.  Degenerate arguments where the group vanishes
(p < 1, or a target space that is a point) give 0 rather than an error.
"""

from .errors import InvalidInputError


def so_rank(p, q):
    """Rank of the p-th homotopy group of SO(q), rationally."""
    if p < 1 or q < 2:
        # SO(0) and SO(1) are points, and there is no homotopy below p = 1
        return 0
    if p % 4 == 3:
        if p == q - 1:
            return 2
        if 2 * (q - 1) > p:
            return 1
        return 0
    if p % 4 == 1 and p == q - 1:
        return 1
    return 0


def stiefel_rank(p, q=None, l=None):
    """Rank of the p-th homotopy group of the Stiefel manifold of
    orthonormal l-frames in q-space, rationally.

    Callable as stiefel_rank(p, q, l) or stiefel_rank((p, q, l)).
    Needs p >= 1, q >= 1 and 0 <= l <= q.  l = 0 gives the one-point
    manifold, hence 0.
    """
    if q is None and l is None:
        try:
            p, q, l = p
        except (TypeError, ValueError):
            raise InvalidInputError(
                f"stiefel_rank needs (p, q, l), got {p!r}")
    if p < 1 or q < 1 or l < 0 or l > q:
        raise InvalidInputError(
            f"need p >= 1, q >= 1 and 0 <= l <= q, got p={p}, q={q}, l={l}")
    if l == 0:
        return 0
    if p % 4 == 3:
        if p + 1 == q:
            # the frame count decides whether both generators survive
            return 2 if q <= 2 * l else 1
        # p/2 + 1 < q < l + p/2 + 1, cleared of halves
        return 1 if p + 2 < 2 * q < 2 * l + p + 2 else 0
    if p % 4 == 1:
        return 1 if p + 1 == q else 0
    # p even
    return 1 if p == q - l else 0
