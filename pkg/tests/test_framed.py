import pytest

from linkrank.errors import InvalidInputError
from linkrank.framed import (
    FramedLinkProblem,
    framed_knot_is_infinite,
    framed_rank,
    fully_framed_is_infinite,
    handlebody_report,
    mcg_finite_index,
)
from linkrank.ranks import link_rank


def test_framed_problem_validation():
    fp = FramedLinkProblem(8, ((5, 3), (5, 3)))
    assert fp.p == (5, 5)
    assert fp.l == (3, 3)
    with pytest.raises(InvalidInputError):
        FramedLinkProblem(8, ((6, 1),))
    with pytest.raises(InvalidInputError):
        FramedLinkProblem(8, ((5, 4),))
    with pytest.raises(InvalidInputError):
        FramedLinkProblem(8, ((5, -1),))


def test_framed_rank_examples():
    assert framed_rank(6, ((3, 0), (3, 0))).total_rank == 4
    assert framed_rank(6, ((3, 3),)).total_rank == 2
    assert framed_rank(8, ((5, 3), (5, 3))).total_rank == 0


def test_framed_rank_report_fields():
    report = framed_rank(6, ((3, 3),))
    assert report.stiefel_ranks == (1,)
    assert report.link_report.total_rank == 1
    assert report.total_rank == report.link_report.total_rank + sum(report.stiefel_ranks)
    assert report.infinite is True


def test_unframed_components_reduce_to_link_rank():
    for m in range(5, 13):
        for p1 in range(1, m - 2):
            for p2 in range(p1, m - 2):
                framed = framed_rank(m, ((p1, 0), (p2, 0)))
                assert framed.total_rank == link_rank(m, (p1, p2)).total_rank
                assert framed.stiefel_ranks == (0, 0)


def test_framed_knot_verdicts():
    assert framed_knot_is_infinite(7, 3, 1) is True
    assert framed_knot_is_infinite(8, 5, 3) is False
    with pytest.raises(InvalidInputError):
        framed_knot_is_infinite(8, 4, 0)
    with pytest.raises(InvalidInputError):
        framed_knot_is_infinite(7, 5, 1)


def test_framed_knot_matches_framed_rank_positivity():
    for m in range(5, 15):
        for p in range(1, m - 2):
            for l in range(1, m - p + 1):
                verdict = framed_knot_is_infinite(m, p, l)
                assert verdict == (framed_rank(m, ((p, l),)).total_rank > 0)


def test_fully_framed_verdicts():
    assert fully_framed_is_infinite(8, (5, 5)) is False
    assert fully_framed_is_infinite(8, (5, 5, 5)) is True
    assert fully_framed_is_infinite(7, (3,)) is True


def test_fully_framed_matches_maximal_framing_rank():
    for m in range(5, 13):
        for p1 in range(1, m - 2):
            for p2 in range(p1, m - 2):
                full = framed_rank(m, ((p1, m - p1), (p2, m - p2)))
                assert fully_framed_is_infinite(m, (p1, p2)) == (full.total_rank > 0)


def test_handlebody_reports():
    finite = handlebody_report(9, (6, 6))
    assert finite.weak_conditions_hold is True
    assert finite.strict_conditions_hold is True
    assert finite.sets_finite is True
    assert finite.group_rank == 0

    ranked = handlebody_report(7, (4, 4))
    assert ranked.strict_conditions_hold is True
    assert ranked.sets_finite is None
    assert ranked.group_rank == framed_rank(6, ((3, 3), (3, 3))).total_rank

    single = handlebody_report(14, (8,))
    assert single.group_rank == framed_rank(13, ((7, 6),)).total_rank
    assert single.group_rank == 1


def test_handlebody_out_of_regime_is_inconclusive():
    report = handlebody_report(12, (3, 9))
    assert report.weak_conditions_hold is False
    assert report.sets_finite is None
    assert report.group_rank is None


def test_mcg_verdicts():
    assert mcg_finite_index(8, (5, 5)) is True
    assert mcg_finite_index(8, (5, 5, 5)) is False
    assert mcg_finite_index(4, (2, 2)) is None
    assert mcg_finite_index(9, (3, 5)) is None
