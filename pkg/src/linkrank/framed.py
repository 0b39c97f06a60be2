"""Framed links (each component a sphere with a trivialized normal
l-plane bundle), their ranks and finiteness criteria, and the two
applications: thickenings/handlebody embedding sets and the mapping class
question for fully framed links.

The framed rank is the plain link rank plus one Stiefel-manifold summand
per component.  A "full framing" means l_k = m - p_k for every k.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import InternalConsistencyError, InvalidInputError
from .ranks import (LinkProblem, RankReport, _as_problem, _link_report,
                    _subsequence_infinite)
from .stiefel import stiefel_rank


@dataclass(frozen=True)
class FramedLinkProblem:
    """Ambient dimension m and per-component (p_k, l_k) pairs with
    p_k < m - 2 and 0 <= l_k <= m - p_k."""

    m: int
    components: tuple

    def __post_init__(self):
        m = int(self.m)
        components = tuple((int(p), int(l)) for p, l in self.components)
        if not components:
            raise InvalidInputError("a framed link needs at least one component")
        for p, l in components:
            if p < 1 or p >= m - 2:
                raise InvalidInputError(
                    f"codimension must exceed 2: component dimension {p} "
                    f"inside ambient dimension {m}")
            if l < 0 or l > m - p:
                raise InvalidInputError(
                    f"frame count must satisfy 0 <= l <= m - p, got l={l} "
                    f"for p={p}, m={m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "components", components)

    @property
    def p(self):
        return tuple(p for p, _ in self.components)

    @property
    def l(self):
        return tuple(l for _, l in self.components)

    def link_problem(self):
        return LinkProblem(self.m, self.p)


@dataclass(frozen=True)
class FramedRankReport:
    m: int
    p: tuple
    l: tuple
    total_rank: int
    link_report: RankReport
    stiefel_ranks: tuple
    infinite: bool


def _as_framed(problem, components=None):
    if isinstance(problem, FramedLinkProblem):
        return problem
    if components is not None:
        return FramedLinkProblem(problem, tuple(components))
    m, comps = problem
    return FramedLinkProblem(m, tuple(comps))


def framed_rank(problem, components=None):
    """Rank report for a framed link: the underlying link rank plus one
    Stiefel summand stiefel_rank(p_k, m - p_k, l_k) per component."""
    problem = _as_framed(problem, components)
    m = problem.m
    link_report = _link_report(problem.link_problem())
    stiefel_ranks = tuple(
        stiefel_rank(p, m - p, l) for p, l in problem.components)
    total = link_report.total_rank + sum(stiefel_ranks)
    return FramedRankReport(
        m=m,
        p=problem.p,
        l=problem.l,
        total_rank=total,
        link_report=link_report,
        stiefel_ranks=stiefel_ranks,
        infinite=total > 0,
    )


def framed_knot_is_infinite(m, p, l):
    """Finiteness criterion for a single framed sphere, 1 <= l <= m - p."""
    if l < 1:
        raise InvalidInputError(f"the criterion needs l >= 1, got l={l}")
    FramedLinkProblem(m, ((p, l),))
    if (p + 1) % 4 == 0 and 2 * m < 3 * p + 2 * l + 2:
        return True
    if (p + 1) % 2 == 0 and m == 2 * p + 1:
        return True
    if p % 2 == 0 and m == 2 * p + l:
        return True
    return False


def _fully_framed_criterion(m, dims):
    for p in dims:
        if (p + 1) % 4 == 0:
            return True
        if (m + 1) % 4 == 0 and m + 1 == 2 * p + 2:
            return True
    r = len(dims)
    for size in range(2, r + 1):
        for subset in combinations(range(r), size):
            if _subsequence_infinite(m, tuple(dims[k] for k in subset)):
                return True
    return False


def fully_framed_is_infinite(problem, p=None):
    """Finiteness verdict for the link with every component fully framed
    (l_k = m - p_k), asserted against the computed framed rank."""
    problem = _as_problem(problem, p)
    m, dims = problem.m, problem.p
    verdict = _fully_framed_criterion(m, dims)
    report = framed_rank(FramedLinkProblem(m, tuple((v, m - v) for v in dims)))
    if verdict != (report.total_rank > 0):
        raise InternalConsistencyError(
            f"full-framing criterion says {verdict} but the framed rank is "
            f"{report.total_rank} for m={m}, p={dims}")
    return verdict


@dataclass(frozen=True)
class HandlebodyReport:
    """Findings for thickenings of a wedge of spheres and for embeddings of
    the corresponding handlebody, both in dimension m_plus_1.

    sets_finite is True when the finiteness conditions are established and
    None when the criteria do not apply (inconclusive).  group_rank is the
    rank of the thickening group when it is known to be finitely generated
    abelian, else None.
    """

    m_plus_1: int
    handle_dims: tuple
    weak_conditions_hold: bool
    strict_conditions_hold: bool
    sets_finite: Optional[bool]
    group_rank: Optional[int]


def handlebody_report(m_plus_1, handle_dims):
    """Analyze thickenings/handlebody embeddings with handles of dimensions
    handle_dims inside dimension m_plus_1.

    The induced framed-link data lives one dimension down: m = m_plus_1 - 1,
    sphere dimensions p_k = handle_dim_k - 1, full framings l_k = m - p_k.
    """
    m_plus_1 = int(m_plus_1)
    handle_dims = tuple(int(v) for v in handle_dims)
    if not handle_dims:
        raise InvalidInputError("need at least one handle")
    if any(v < 1 for v in handle_dims):
        raise InvalidInputError(f"handle dimensions must be >= 1, got {handle_dims}")
    m = m_plus_1 - 1
    dims = tuple(v - 1 for v in handle_dims)

    weak = all(
        2 * a - b + 2 <= m and 2 * a - b >= 1 for a in dims for b in dims)
    strict = all(
        2 * a - b + 2 < m and 2 * a - b > 1 for a in dims for b in dims)
    codim_ok = all(1 <= v < m - 2 for v in dims)

    sets_finite = None
    group_rank = None
    if codim_ok:
        if weak and not fully_framed_is_infinite(LinkProblem(m, dims)):
            sets_finite = True
        if strict:
            full = FramedLinkProblem(m, tuple((v, m - v) for v in dims))
            group_rank = framed_rank(full).total_rank
    return HandlebodyReport(
        m_plus_1=m_plus_1,
        handle_dims=handle_dims,
        weak_conditions_hold=weak,
        strict_conditions_hold=strict,
        sets_finite=sets_finite,
        group_rank=group_rank,
    )


def mcg_finite_index(m, p):
    """Whether the image of the relevant mapping class group action has
    finite index: True/False inside the applicable regime (m >= 5 and every
    component dimension at least floor(m/2)), None when inconclusive."""
    m = int(m)
    dims = tuple(int(v) for v in p)
    if not dims:
        raise InvalidInputError("need at least one component")
    if m < 5 or any(v < m // 2 for v in dims):
        return None
    if any(not (1 <= v < m - 2) for v in dims):
        return None
    return not fully_framed_is_infinite(LinkProblem(m, dims))
