from random import Random

import pytest

from steinberg import (
    AlgebraElement,
    DYADIC_RATIONALS,
    FiniteCyclicGroup,
    Graph,
    INTEGERS,
    bowen_franks,
    check_diagonal_preservation,
    cuntz_graph,
    decide_tensor_tuples,
    is_effective,
    is_projection,
    random_projection_search,
    search_projections,
)
from steinberg.checks import suite_projections, two_vertex_graph
from steinberg.invariants import TupleReason

from util import ind

R = INTEGERS


def test_is_projection_examples(o2):
    assert is_projection(ind(o2, R, "1", "1"))
    assert not is_projection(ind(o2, R, "1", "2"))  # squares to zero
    assert is_projection(AlgebraElement.zero(o2, R))
    assert is_projection(AlgebraElement.one(o2, R))
    assert not is_projection(2 * ind(o2, R, "1", "1"))


def test_exhaustive_search_depth1(o2):
    report = search_projections(o2, R, depth=1, coeff_bound=1)
    assert report.candidates == 3**9
    assert all(report.diagonal_flags)
    found = {str(p) for p in report.projections}
    assert found == {"0", "1*Z(@,@)", "1*Z(1,1)", "1*Z(2,2)"}


def test_search_bound_zero(o2):
    report = search_projections(o2, R, depth=1, coeff_bound=0)
    assert [str(p) for p in report.projections] == ["0"]


def test_random_search_over_dyadics_reports_only(o2):
    # not kind: the search runs without asserting diagonality
    report = random_projection_search(
        o2, DYADIC_RATIONALS, depth=1, coeff_bound=1, samples=300, rng=Random(1)
    )
    assert report.ring_is_kind is False
    assert report.candidates == 300


def test_projection_suite():
    assert suite_projections(Random(2), 30).failures == []


@pytest.mark.parametrize("hom", ["identity", "sigma", "pi", "map_scalars", "to_steinberg"])
def test_diagonal_preservation(hom):
    report = check_diagonal_preservation(hom, samples=25, rng=Random(3))
    assert report.ok, report.failures


def test_diagonal_preservation_unknown_hom():
    with pytest.raises(ValueError):
        check_diagonal_preservation("nope", samples=1, rng=Random(0))


def test_is_effective_examples():
    assert is_effective(cuntz_graph(2))
    assert is_effective(cuntz_graph(5))
    single_loop = Graph(["v"], [("e", "v", "v")])
    assert not is_effective(single_loop)
    assert is_effective(two_vertex_graph())
    # 2-cycle with no exits anywhere is ineffective
    pure_cycle = Graph(["u", "w"], [("a", "u", "w"), ("b", "w", "u")])
    assert not is_effective(pure_cycle)


def test_bowen_franks_examples():
    assert bowen_franks(2) == FiniteCyclicGroup(1)
    assert bowen_franks(2).is_trivial
    assert bowen_franks(3) == FiniteCyclicGroup(2)
    assert str(bowen_franks(3)) == "Z/2"
    with pytest.raises(ValueError):
        bowen_franks(1)
    for n in range(2, 65):
        assert bowen_franks(n).order == n - 1
    for n in range(2, 20):
        for m in range(2, 20):
            assert (bowen_franks(n) == bowen_franks(m)) == (n == m)


def test_decide_examples():
    v = decide_tensor_tuples((2, 3), (2, 2))
    assert not v.same and v.reason == TupleReason.SORTED_TUPLES_DIFFER
    assert [str(b) for b in v.bf_ns] == ["Z/1", "Z/2"]
    assert [str(b) for b in v.bf_ms] == ["Z/1", "Z/1"]

    v = decide_tensor_tuples((2, 2, 3), (3, 2, 2))
    assert v.same and v.reason == TupleReason.EQUAL

    v = decide_tensor_tuples((2,), (2, 3))
    assert not v.same and v.reason == TupleReason.LENGTH_MISMATCH
    assert v.isotropy_ranks == (1, 2)

    with pytest.raises(ValueError):
        decide_tensor_tuples((1, 2), (2,))
    with pytest.raises(ValueError):
        decide_tensor_tuples((), (2,))


def test_decide_symmetry():
    rng = Random(4)
    for _ in range(100):
        ns = tuple(rng.randint(2, 5) for _ in range(rng.randint(1, 3)))
        ms = tuple(rng.randint(2, 5) for _ in range(rng.randint(1, 3)))
        assert decide_tensor_tuples(ns, ms).same == decide_tensor_tuples(ms, ns).same
