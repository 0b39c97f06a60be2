"""Ranks of the groups of smooth isotopy classes of links of spheres in
codimension greater than two: single knots, Brunnian links (every proper
sublink trivial) and general links, together with the matching finiteness
criteria.

A problem is an ambient dimension m plus component sphere dimensions
p = (p_1, ..., p_r) with every p_k < m - 2.  The attached generator system
has weights a_k = m - p_k - 2, and every rank is a finite sum of component
multiplicities over solutions of sum(a_k x_k) = m - 3.

The general-link rank is computed twice on purpose: once by the closed
formula and once through the splitting into Brunnian ranks of subsets of
components; a mismatch raises InternalConsistencyError.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Optional

from .errors import InternalConsistencyError, InvalidInputError
from .fcs import fcs_contains
from .liedim import GeneratorSystem, enumerate_diophantine, multiplicity, witt_super


@dataclass(frozen=True)
class LinkProblem:
    """Ambient dimension m and component dimensions p, all with p_k < m - 2."""

    m: int
    p: tuple

    def __post_init__(self):
        m = int(self.m)
        p = tuple(int(v) for v in self.p)
        if not p:
            raise InvalidInputError("a link needs at least one component")
        for v in p:
            if v < 1:
                raise InvalidInputError(f"component dimensions must be >= 1, got {v}")
            if v >= m - 2:
                raise InvalidInputError(
                    f"codimension must exceed 2: component dimension {v} "
                    f"inside ambient dimension {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "p", p)

    @property
    def r(self):
        return len(self.p)

    def weights(self):
        return tuple(self.m - v - 2 for v in self.p)

    def system(self):
        return GeneratorSystem(self.weights())


def _as_problem(problem, p=None):
    if isinstance(problem, LinkProblem):
        return problem
    if p is not None:
        return LinkProblem(problem, tuple(p))
    m, dims = problem
    return LinkProblem(m, tuple(dims))


class BrunnianRank(NamedTuple):
    rank: int
    contributions: tuple  # ((multidegree, multiplicity), ...) over positive solutions


@dataclass(frozen=True)
class RankReport:
    m: int
    p: tuple
    total_rank: int
    brunnian_rank: Optional[int]  # None when r = 1
    knot_ranks: tuple
    infinite: bool
    contributions: tuple  # ((multidegree, multiplicity), ...) over x >= 0
    subset_decomposition: dict  # 1-based component subset -> its Brunnian/knot rank


def knot_rank(m, p):
    """Rank of the group of knots S^p in R^m (0 or 1)."""
    _as_problem(m, (p,))
    return 1 if (p + 1) % 4 == 0 and 2 * m < 3 * p + 4 else 0


def _delta(m, p):
    # 1 exactly when 2(m-3)/(m-p-2) equals 4 (m-p even) or 6 (m-p odd),
    # as rational numbers
    target = 4 if (m - p) % 2 == 0 else 6
    return 1 if Fraction(2 * (m - 3), m - p - 2) == target else 0


@lru_cache(maxsize=1 << 14)
def _brunnian(problem):
    gs = problem.system()
    contributions = []
    total = 0
    for x in enumerate_diophantine(gs.weights, problem.m - 3, (1,) * problem.r):
        value = multiplicity(gs, x)
        contributions.append((x, value))
        total += value
    return BrunnianRank(total, tuple(contributions))


def brunnian_rank(problem, p=None):
    """Rank of the group of Brunnian links; needs at least two components.

    Accepts a LinkProblem or (m, dims).  Example: (5, (2, 2)) -> rank 1.
    """
    problem = _as_problem(problem, p)
    if problem.r < 2:
        raise InvalidInputError(
            "Brunnian rank needs at least two components; use knot_rank for one")
    return _brunnian(problem)


def _subsequence_infinite(m, dims):
    # two components: a positive solution lying in the membership family;
    # three or more: any positive solution at all
    weights = tuple(m - v - 2 for v in dims)
    solutions = enumerate_diophantine(weights, m - 3, (1,) * len(dims))
    if len(dims) == 2:
        return any(fcs_contains(m - dims[0], m - dims[1], x, y) for x, y in solutions)
    return bool(solutions)


def brunnian_is_infinite(problem, p=None):
    """Finiteness verdict for the Brunnian group, decided by the solvability
    criterion and asserted against the computed rank."""
    problem = _as_problem(problem, p)
    if problem.r < 2:
        raise InvalidInputError("the Brunnian criterion needs at least two components")
    verdict = _subsequence_infinite(problem.m, problem.p)
    rank = _brunnian(problem).rank
    if verdict != (rank > 0):
        raise InternalConsistencyError(
            f"Brunnian criterion says {verdict} but the rank is {rank} "
            f"for m={problem.m}, p={problem.p}")
    return verdict


def _link_infinite_criterion(m, dims):
    for v in dims:
        if (v + 1) % 4 == 0 and 2 * m < 3 * v + 4:
            return True
    r = len(dims)
    for size in range(2, r + 1):
        for subset in combinations(range(r), size):
            if _subsequence_infinite(m, tuple(dims[k] for k in subset)):
                return True
    return False


@lru_cache(maxsize=1 << 14)
def _link_report(problem):
    m, dims, r = problem.m, problem.p, problem.r
    gs = problem.system()
    if m - 3 < 1:
        raise InternalConsistencyError(f"degree target m - 3 = {m - 3} is not positive")
    knot_ranks = tuple(knot_rank(m, v) for v in dims)

    contributions = []
    total = 0
    for x in enumerate_diophantine(gs.weights, m - 3, (0,) * r):
        value = multiplicity(gs, x)
        contributions.append((x, value))
        total += value
    total += sum(knot_ranks) - sum(_delta(m, v) for v in dims)

    # independent recomputation: one Brunnian summand per component subset
    decomposition = {}
    for size in range(1, r + 1):
        for subset in combinations(range(r), size):
            if size == 1:
                value = knot_ranks[subset[0]]
            else:
                value = _brunnian(LinkProblem(m, tuple(dims[k] for k in subset))).rank
            decomposition[tuple(k + 1 for k in subset)] = value
    split_total = sum(decomposition.values())
    if split_total != total:
        raise InternalConsistencyError(
            f"closed formula gives rank {total} but the subset splitting gives "
            f"{split_total} for m={m}, p={dims}")

    infinite = _link_infinite_criterion(m, dims)
    if infinite != (total > 0):
        raise InternalConsistencyError(
            f"finiteness criterion says {infinite} but the rank is {total} "
            f"for m={m}, p={dims}")

    brunnian = _brunnian(problem).rank if r >= 2 else None
    return RankReport(
        m=m,
        p=dims,
        total_rank=total,
        brunnian_rank=brunnian,
        knot_ranks=knot_ranks,
        infinite=infinite,
        contributions=tuple(contributions),
        subset_decomposition=decomposition,
    )


def link_rank(problem, p=None):
    """Full rank report for the group of links with the given component
    dimensions.  Accepts a LinkProblem or (m, dims)."""
    return _link_report(_as_problem(problem, p))


def link_is_infinite(problem, p=None):
    """Finiteness verdict for the whole link group (some subsequence of
    components already carries rank)."""
    return _link_report(_as_problem(problem, p)).infinite


def equal_dim_rank(m, p, r):
    """Closed form for the rank when all r components have equal dimension
    p > 1, cross-checked against the general formula."""
    r = int(r)
    if r < 1:
        raise InvalidInputError(f"need at least one component, got r={r}")
    if p <= 1:
        raise InvalidInputError(f"the equal-dimension form needs p > 1, got p={p}")
    problem = LinkProblem(m, (p,) * r)
    s = m - p
    t = Fraction(m - 3, m - p - 2)
    delta = 1 if 2 * t == (4 if s % 2 == 0 else 6) else 0
    c = knot_rank(m, p)
    value = r * (witt_super(t - 1, s, r) + c - delta) - witt_super(t, s, r)
    check = _link_report(problem).total_rank
    if value != check:
        raise InternalConsistencyError(
            f"equal-dimension form gives {value} but the general formula gives "
            f"{check} for m={m}, p={p}, r={r}")
    return value
