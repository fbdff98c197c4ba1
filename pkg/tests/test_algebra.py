from random import Random

import pytest

from steinberg import (
    AlgebraElement,
    GAUSSIAN_INTEGERS,
    GroupoidPoint,
    INTEGERS,
    RATIONALS,
    check_representation,
    disjointify,
    expand,
    from_terms,
    identity_representation,
    induced_hom,
    induced_hom_on_expression,
    map_scalars,
)
from steinberg.checks import (
    convolve_value_at,
    suite_algebra_laws,
    suite_convolution_pointwise,
    suite_diagonal_subalgebra,
    suite_disjointify,
    suite_grading,
    suite_induced_hom,
    suite_map_scalars,
)
from steinberg.errors import (
    GraphMismatchError,
    MissingAssignmentError,
    RingMismatchError,
    UnsupportedRingError,
)
from steinberg.sampling import random_element, random_expression_of

from util import Z, bp, elem, ind


def test_from_terms_examples(o2):
    f = from_terms(o2, INTEGERS, [(INTEGERS.one, Z(o2, "1", "1")), (INTEGERS.one, Z(o2, "", ""))])
    assert str(f) == "2*Z(1,1) + 1*Z(2,2)"
    g = from_terms(o2, INTEGERS, [(INTEGERS.one, Z(o2, "1", "1")), (INTEGERS.one, Z(o2, "2", "2"))])
    assert str(g) == "1*Z(@,@)"
    assert from_terms(o2, INTEGERS, []).is_zero()


def test_from_terms_validation(o2, o3):
    with pytest.raises(GraphMismatchError):
        from_terms(o2, INTEGERS, [(INTEGERS.one, Z(o3, "1", "1"))])
    with pytest.raises(RingMismatchError):
        from_terms(o2, INTEGERS, [(RATIONALS.one, Z(o2, "1", "1"))])


def test_disjointify_examples(o2):
    out = disjointify(
        o2, INTEGERS, [(INTEGERS.one, Z(o2, "1", "1")), (INTEGERS.one, Z(o2, "", ""))]
    )
    assert [(str(r), str(b)) for r, b in out] == [("2", "Z(1,1)"), ("1", "Z(2,2)")]
    already = disjointify(o2, INTEGERS, [(INTEGERS.one, Z(o2, "1", "2"))])
    assert [(str(r), str(b)) for r, b in already] == [("1", "Z(1,2)")]
    cancel = disjointify(
        o2,
        INTEGERS,
        [(INTEGERS.one, Z(o2, "1", "")), (INTEGERS.scalar(-1), Z(o2, "1", ""))],
    )
    assert cancel == []
    assert suite_disjointify(Random(0), 25).failures == []


def test_cuntz_relations(o2):
    one = AlgebraElement.one(o2, INTEGERS)
    s = AlgebraElement.zero(o2, INTEGERS)
    for i in "12":
        s = s + ind(o2, INTEGERS, i, "") * ind(o2, INTEGERS, "", i)
    assert s == one
    assert (ind(o2, INTEGERS, "", "1") * ind(o2, INTEGERS, "2", "")).is_zero()
    assert ind(o2, INTEGERS, "", "1") * ind(o2, INTEGERS, "1", "") == one
    f = random_element(o2, INTEGERS, Random(8), depth=2)
    assert f * one == f and one * f == f


def test_star_examples(o2):
    f = elem(o2, INTEGERS, (2, "1", "2"))
    assert str(f.star()) == "2*Z(2,1)"
    zi = GAUSSIAN_INTEGERS
    g = from_terms(o2, zi, [(zi.scalar(1, 1), Z(o2, "1", ""))])
    assert g.star() == from_terms(o2, zi, [(zi.scalar(1, -1), Z(o2, "", "1"))])
    assert g.star().star() == g


def test_star_pointwise_oracle(o2):
    # f*(x) = conj(f(x^{-1})) checked by evaluation
    rng = Random(13)
    for _ in range(40):
        f = random_element(o2, GAUSSIAN_INTEGERS, rng, depth=2)
        from steinberg.sampling import random_groupoid_point

        pt = random_groupoid_point(o2, rng)
        assert f.star().evaluate(pt) == f.evaluate(pt.inverse()).conjugate()


def test_evaluate_examples(o2):
    pt = GroupoidPoint(bp(o2, "1", "2"), 0, bp(o2, "2", "2"))
    assert ind(o2, INTEGERS, "1", "2").evaluate(pt) == INTEGERS.one
    assert AlgebraElement.zero(o2, INTEGERS).evaluate(pt) == INTEGERS.zero
    f = elem(o2, INTEGERS, (2, "1", "1"), (1, "2", "2"))
    twos = bp(o2, "", "2")
    assert f.evaluate(GroupoidPoint(twos, 0, twos)) == INTEGERS.one


def test_is_diagonal(o2):
    assert ind(o2, INTEGERS, "1", "1").is_diagonal()
    assert not ind(o2, INTEGERS, "1", "2").is_diagonal()
    assert elem(o2, INTEGERS, (1, "11", "11"), (3, "2", "2")).is_diagonal()
    assert suite_diagonal_subalgebra(Random(1), 25).failures == []


def test_degree_component(o2):
    f = elem(o2, INTEGERS, (1, "1", ""), (1, "1", "2"))
    assert f.degree_component(1) == ind(o2, INTEGERS, "1", "")
    assert f.degree_component(-1).is_zero()
    d = elem(o2, INTEGERS, (5, "1", "1"))
    assert d.degree_component(0) == d
    assert suite_grading(Random(2), 25).failures == []


def test_map_scalars(o2):
    f = elem(o2, INTEGERS, (2, "1", "1"))
    g = map_scalars(f, RATIONALS)
    assert g.ring == RATIONALS and str(g) == "2*Z(1,1)"
    assert map_scalars(AlgebraElement.zero(o2, INTEGERS), RATIONALS).is_zero()
    with pytest.raises(UnsupportedRingError):
        map_scalars(g, INTEGERS)
    assert suite_map_scalars(Random(3), 10).failures == []


def test_convolution_pointwise_suite():
    assert suite_convolution_pointwise(Random(5), 40).failures == []


def test_algebra_law_suite():
    assert suite_algebra_laws(Random(6), 20).failures == []


def test_equality_reexpands(o2):
    f = ind(o2, INTEGERS, "", "")
    g = elem(o2, INTEGERS, (1, "1", "1"), (1, "2", "2"))
    assert f == g
    deep = from_terms(o2, INTEGERS, [(INTEGERS.one, c) for c in expand(Z(o2, "", ""), 3)])
    assert deep == f


def test_induced_hom_identity_and_welldefined(o2):
    rep = identity_representation(o2, INTEGERS)
    rng = Random(7)
    for _ in range(20):
        f = random_element(o2, INTEGERS, rng, depth=2)
        assert induced_hom(rep, f) == f
        e1 = random_expression_of(f, rng)
        e2 = random_expression_of(f, rng)
        assert induced_hom_on_expression(rep, e1) == induced_hom_on_expression(rep, e2)
    assert suite_induced_hom(Random(8), 15).failures == []


def test_induced_hom_missing_entry(o2):
    rep = identity_representation(o2, INTEGERS)
    rep.assign = {}  # mapping with no entries
    f = ind(o2, INTEGERS, "1", "1")
    with pytest.raises(MissingAssignmentError):
        induced_hom(rep, f)


def test_induced_hom_rejects_overlap(o2):
    rep = identity_representation(o2, INTEGERS)
    with pytest.raises(ValueError):
        induced_hom_on_expression(
            rep, [(INTEGERS.one, Z(o2, "", "")), (INTEGERS.one, Z(o2, "1", "1"))]
        )


def test_check_representation_examples(o2):
    rep = identity_representation(o2, INTEGERS)
    family = ([Z(o2, "1", "1"), Z(o2, "2", "2")], Z(o2, "", ""))
    report = check_representation(rep, [family])
    assert report.ok and report.r3_checked == 1 and report.r2_checked == 4

    # an assignment that kills everything except 1_{Z(@,@)} fails (R3)
    broken = identity_representation(o2, INTEGERS)
    unit = Z(o2, "", "")

    def bad_assign(b):
        return rep.apply(b) if b == unit else AlgebraElement.zero(o2, INTEGERS)

    broken.assign = bad_assign
    report = check_representation(broken, [family])
    assert not report.ok
    assert any("(R3)" in msg for msg in report.failures)

    assert check_representation(rep, []).ok  # empty witness list passes trivially
