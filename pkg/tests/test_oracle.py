import itertools
import random

import pytest

from linkrank.errors import InvalidInputError, ResourceLimitError
from linkrank.liedim import lie_component_dim, multiplicity
from linkrank.oracle import (
    component_dim_bruteforce,
    left_normed_bracket,
    super_bracket,
    verify_range,
    whitehead_map_analysis,
)


def poly_sum(a, b, sign=1):
    out = dict(a)
    for word, coeff in b.items():
        out[word] = out.get(word, 0) + sign * coeff
        if out[word] == 0:
            del out[word]
    return out


def word_parity(word, parities):
    return sum(parities[k] for k in word) % 2


def test_bracket_of_two_odd_generators():
    parities = (1, 1)
    result = super_bracket({(0,): 1}, {(1,): 1}, parities)
    assert result == {(0, 1): 1, (1, 0): 1}


def test_square_of_generator():
    assert left_normed_bracket((0, 0), (1,)) == {(0, 0): 2}
    assert left_normed_bracket((0, 0), (0,)) == {}


def test_bracket_antisymmetry_and_jacobi():
    parities = (1, 0, 1)
    rng = random.Random(91)
    words = [tuple(rng.randrange(3) for _ in range(rng.randint(1, 3)))
             for _ in range(12)]
    for u, v, w in itertools.islice(itertools.product(words, repeat=3), 80):
        pu = {u: 1}
        pv = {v: 1}
        pw = {w: 1}
        su = word_parity(u, parities)
        sv = word_parity(v, parities)
        sign = -1 if su and sv else 1
        uv = super_bracket(pu, pv, parities)
        vu = super_bracket(pv, pu, parities)
        assert poly_sum(uv, vu, sign=sign) == {}
        left = super_bracket(pu, super_bracket(pv, pw, parities), parities)
        right = poly_sum(
            super_bracket(uv, pw, parities),
            super_bracket(pv, super_bracket(pu, pw, parities), parities),
            sign=sign,
        )
        assert left == right


def test_bruteforce_dimension_matches_closed_form():
    cases = [(1,), (2,), (1, 1), (1, 2), (2, 2)]
    for weights in cases:
        r = len(weights)
        for x in itertools.product(range(5), repeat=r):
            if not 1 <= sum(x) <= 4:
                continue
            assert component_dim_bruteforce(weights, x) == lie_component_dim(weights, x)


def test_whitehead_analysis_examples():
    analysis = whitehead_map_analysis((1, 1), (1, 1))
    assert analysis.rank == 1
    assert analysis.kernel_dim == 1
    analysis = whitehead_map_analysis((1, 1), (2, 1))
    assert analysis.kernel_dim == multiplicity((1, 1), (2, 1))


def test_whitehead_rank_hits_target_dimension():
    for weights in [(1, 1), (1, 2), (2, 2)]:
        for x in itertools.product(range(1, 4), repeat=2):
            if sum(x) > 5:
                continue
            analysis = whitehead_map_analysis(weights, x)
            assert analysis.rank == lie_component_dim(weights, x)
            assert analysis.kernel_dim == multiplicity(weights, x)


def test_budget_enforcement():
    with pytest.raises(ResourceLimitError):
        component_dim_bruteforce((1, 1), (5, 5))
    with pytest.raises(ResourceLimitError):
        component_dim_bruteforce((1, 1), (3, 3), budget=4)
    with pytest.raises(ResourceLimitError):
        # letter budget fine, word count past the cap
        component_dim_bruteforce((1, 1, 1), (4, 4, 4), budget=12)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("LINKRANK_ORACLE_BUDGET", "3")
    with pytest.raises(ResourceLimitError):
        component_dim_bruteforce((1,), (4,))
    monkeypatch.setenv("LINKRANK_ORACLE_BUDGET", "4")
    assert component_dim_bruteforce((1,), (4,)) == 0


def test_empty_multidegree_rejected():
    with pytest.raises(InvalidInputError):
        component_dim_bruteforce((1, 1), (0, 0))
    with pytest.raises(InvalidInputError):
        whitehead_map_analysis((1, 1), (0, 2))


def test_verify_range_smoke():
    report = verify_range(2, 2, 4)
    assert report.ok
    assert report.instances > 0
    assert report.failures == ()
    kinds = {record.check for record in report.records}
    assert kinds == {"dimension", "map rank", "map kernel"}
