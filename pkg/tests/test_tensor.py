from random import Random

import pytest

from steinberg import (
    AlgebraElement,
    INTEGERS,
    ProductAlgebraElement,
    ProductBisection,
    TensorElement,
    check_representation,
    pi,
    product_degree,
    product_from_pairs,
    quotient_degree,
    refine_families,
    sigma,
    simple_tensor,
    tensor_from_pairs,
    tensor_representation,
)
from steinberg.checks import (
    suite_pi_well_defined,
    suite_pointwise_product_convolution,
    suite_product_grading,
    suite_sigma_pi,
    suite_tensor_representation,
)
from steinberg.sampling import random_product_element, random_tensor_element
from steinberg.tensor import (
    disjoint_pb,
    intersect_pb,
    inverse_pb,
    product_single_pb,
    relative_complement_pb,
)

from util import Z, ind

R = INTEGERS


def tensor_ind(gl, gr, a, b, c, d):
    return tensor_from_pairs(gl, gr, R, [(R.one, Z(gl, a, b), Z(gr, c, d))])


def product_ind(gl, gr, a, b, c, d):
    return product_from_pairs(gl, gr, R, [(R.one, Z(gl, a, b), Z(gr, c, d))])


def test_tensor_mul_example(o2):
    t1 = tensor_ind(o2, o2, "1", "", "2", "")
    t2 = tensor_ind(o2, o2, "", "1", "", "2")
    assert t1 * t2 == tensor_ind(o2, o2, "1", "1", "2", "2")
    # e_i^* e_j = 0 in the left factor kills the product
    s1 = tensor_ind(o2, o2, "", "1", "1", "1")
    s2 = tensor_ind(o2, o2, "2", "", "2", "2")
    assert (s1 * s2).is_zero()


def test_tensor_one_is_identity(o2, o3):
    one = TensorElement.one(o2, o3, R)
    rng = Random(1)
    for _ in range(20):
        t = random_tensor_element(o2, o3, R, rng, depth=2)
        assert one * t == t and t * one == t


def test_sigma_examples(o2):
    t = tensor_ind(o2, o2, "1", "", "2", "")
    assert str(sigma(t)) == "1*Z(1,@)xZ(2,@)"
    assert sigma(TensorElement.zero(o2, o2, R)).is_zero()


def test_pi_examples(o2):
    p = product_ind(o2, o2, "1", "", "2", "")
    assert pi(p) == tensor_ind(o2, o2, "1", "", "2", "")
    assert pi(ProductAlgebraElement.zero(o2, o2, R)).is_zero()


def test_sigma_pi_suite():
    assert suite_sigma_pi(Random(2), 25).failures == []


def test_product_bisection_ops(o2, o3):
    a = ProductBisection(Z(o2, "1", "2"), Z(o3, "1", "1"))
    b = ProductBisection(Z(o2, "21", ""), Z(o3, "1", ""))
    ab = product_single_pb(a, b)
    assert str(ab) == "Z(1.1,@)xZ(1,@)"
    assert inverse_pb(a) == ProductBisection(Z(o2, "2", "1"), Z(o3, "1", "1"))
    assert intersect_pb(a, a) == [a]
    assert disjoint_pb(a, b)
    # complement splits into at most three blocks, componentwise
    big = ProductBisection(Z(o2, "", ""), Z(o3, "", ""))
    small = ProductBisection(Z(o2, "1", "1"), Z(o3, "1", "1"))
    pieces = relative_complement_pb(big, small)
    assert all(not p.is_empty for p in pieces)
    got = product_from_pairs(o2, o3, R, [(R.one, p.left, p.right) for p in pieces])
    want = product_from_pairs(
        o2, o3, R, [(R.one, big.left, big.right), (R.scalar(-1), small.left, small.right)]
    )
    assert got == want


def test_refine_families_examples(o2):
    X, Y = refine_families([Z(o2, "", ""), Z(o2, "1", "1")], [])
    assert [str(x) for x in X] == ["Z(1,1)", "Z(2,2)"] and Y == []
    P = [Z(o2, "1", "2"), Z(o2, "22", "11")]  # already pairwise disjoint
    X, _ = refine_families(P, [])
    assert X == sorted(P)
    assert refine_families([], []) == ([], [])
    # nested three deep: atoms written minimally
    X, _ = refine_families([Z(o2, "", ""), Z(o2, "11", "11")], [])
    assert [str(x) for x in X] == ["Z(1.1,1.1)", "Z(1.2,1.2)", "Z(2,2)"]


def test_refine_covers_and_respects_members(o2, gv2):
    from steinberg import intersect
    from steinberg.checks import cylinder_set_key
    from steinberg.sampling import random_bisection

    rng = Random(3)
    for g in (o2, gv2):
        for _ in range(40):
            fam = [random_bisection(g, rng, 2) for _ in range(rng.randint(1, 4))]
            X, _ = refine_families(fam, [])
            for i, x in enumerate(X):
                for y in X[i + 1 :]:
                    assert not intersect(x, y)
            for x in X:
                # each atom is contained in, or disjoint from, every member
                for b in fam:
                    meet = intersect(x, b)
                    assert not meet or cylinder_set_key(meet) == cylinder_set_key([x])
                assert any(
                    cylinder_set_key(intersect(x, b)) == cylinder_set_key([x]) for b in fam
                )
            # every member is the disjoint union of the atoms inside it
            for b in fam:
                inside = [
                    x for x in X if cylinder_set_key(intersect(x, b)) == cylinder_set_key([x])
                ]
                assert cylinder_set_key(inside) == cylinder_set_key([b] if not b.is_empty else [])


def test_representation_axioms(o2, o3):
    rep = tensor_representation(o2, o3, R)
    assert rep.apply(rep.empty).is_zero()  # (R1)
    res = suite_tensor_representation(Random(4), 25)
    assert res.failures == []


def test_pi_well_defined_suite():
    assert suite_pi_well_defined(Random(5), 25).failures == []


def test_gradings(o2):
    p = product_ind(o2, o2, "1", "", "2", "")
    assert list(product_degree(p)) == [(1, 1)]
    assert list(quotient_degree(p)) == [2]
    d = product_ind(o2, o2, "1", "1", "2", "2")
    assert list(product_degree(d)) == [(0, 0)]
    assert suite_product_grading(Random(6), 20).failures == []


def test_product_pointwise_suite():
    assert suite_pointwise_product_convolution(Random(7), 20).failures == []


def test_tensor_star_diagonal(o2, o3):
    rng = Random(8)
    for _ in range(20):
        t = random_tensor_element(o2, o3, R, rng, depth=2)
        assert t.star().star() == t
        p = random_product_element(o2, o3, R, rng, depth=2)
        assert (p.star() * p).star() == p.star() * p  # p*p is self-adjoint
    dl = ind(o2, R, "1", "1") + ind(o2, R, "", "")
    dr = ind(o3, R, "2", "2")
    assert sigma(simple_tensor(dl, dr)).is_diagonal()


def test_simple_tensor_bilinear(o2, o3):
    f1 = ind(o2, R, "1", "")
    f2 = ind(o2, R, "2", "")
    g = ind(o3, R, "1", "2")
    assert simple_tensor(f1 + f2, g) == simple_tensor(f1, g) + simple_tensor(f2, g)
    assert simple_tensor(AlgebraElement.zero(o2, R), g).is_zero()
