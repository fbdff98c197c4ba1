from random import Random

import pytest

from steinberg import (
    BasicBisection,
    GroupoidPoint,
    expand,
    intersect,
    inverse,
    member,
    product,
    product_single,
    relative_complement,
)
from steinberg.checks import (
    cylinder_set_key,
    suite_bisection_injectivity,
    suite_bisection_semigroup,
    suite_complement,
)
from steinberg.errors import PathError, SemanticError

from util import Z, bp


def names(bs):
    return [str(b) for b in bs]


def test_bisection_invariants(o2, gv2):
    with pytest.raises(PathError):
        Z(gv2, "a", "")  # ranges differ (w vs u)
    with pytest.raises(SemanticError):
        b = Z(o2, "1", "1")
        BasicBisection(b.alpha, b.beta, frozenset({99}))
    assert Z(o2, "1", "2").degree == 0
    assert Z(o2, "12", "").degree == 2
    assert Z(o2, "", "", "12").is_empty
    assert not Z(o2, "", "", "1").is_empty


def test_expand_examples(o2):
    assert names(expand(Z(o2, "", ""), 1)) == ["Z(1,1)", "Z(2,2)"]
    assert names(expand(Z(o2, "", "", "1"), 1)) == ["Z(2,2)"]
    assert names(expand(Z(o2, "1", "2"), 1)) == ["Z(1,2)"]
    assert expand(Z(o2, "", "", "12"), 3) == []
    with pytest.raises(ValueError):
        expand(Z(o2, "12", "1"), 1)


def test_expand_partitions(o2, gv2):
    rng = Random(1)
    from steinberg.sampling import random_bisection, random_point_in

    for g in (o2, gv2):
        for _ in range(40):
            b = random_bisection(g, rng, 2, allow_empty=True)
            pieces = expand(b, rng.randint(len(b.alpha), len(b.alpha) + 2))
            assert cylinder_set_key(pieces) == cylinder_set_key([b] if not b.is_empty else [])
            for c in pieces:
                assert not c.excluded and c.degree == b.degree
            if not b.is_empty:
                pt = random_point_in(b, rng)
                assert sum(member(pt, c) for c in pieces) == 1


def test_product_examples(o2):
    assert names(product(Z(o2, "1", "2"), Z(o2, "21", ""))) == ["Z(1.1,@)"]
    assert product(Z(o2, "1", "2"), Z(o2, "1", "")) == []
    assert names(product(Z(o2, "", ""), Z(o2, "12", "2"))) == ["Z(1.2,2)"]
    assert names(product(Z(o2, "1", "2"), inverse(Z(o2, "1", "2")))) == ["Z(1,1)"]


def test_product_single_matches_expansion(o2, gv2):
    rng = Random(2)
    from steinberg.sampling import random_bisection

    for g in (o2, gv2):
        for _ in range(150):
            a = random_bisection(g, rng, 2, allow_empty=True)
            b = random_bisection(g, rng, 2, allow_empty=True)
            single = product_single(a, b)
            assert cylinder_set_key([] if single is None else [single]) == cylinder_set_key(
                product(a, b)
            )


def test_inverse_examples(o2):
    assert str(inverse(Z(o2, "12", ""))) == "Z(@,1.2)"
    b = Z(o2, "1", "2", "1")
    assert inverse(inverse(b)) == b
    assert inverse(b).excluded == b.excluded


def test_intersect_examples(o2):
    assert names(intersect(Z(o2, "1", "2"), Z(o2, "11", "21"))) == ["Z(1.1,2.1)"]
    assert intersect(Z(o2, "1", "2"), Z(o2, "1", "1")) == []
    b = Z(o2, "1", "1", "2")
    assert cylinder_set_key(intersect(b, b)) == cylinder_set_key([b])


def test_relative_complement_examples(o2):
    # branch formula: removing one child branch leaves the excluded form
    assert names(relative_complement(Z(o2, "", ""), Z(o2, "1", "1"))) == ["Z(@,@|1)"]
    assert names(expand(Z(o2, "", "", "1"), 1)) == ["Z(2,2)"]
    # chain formula two levels deep
    got = relative_complement(Z(o2, "", ""), Z(o2, "11", "11"))
    assert names(got) == ["Z(@,@|1)", "Z(1,1|1)"]
    assert cylinder_set_key(got) == cylinder_set_key([Z(o2, "2", "2"), Z(o2, "12", "12")])
    # a \ a is empty
    assert relative_complement(Z(o2, "1", "2"), Z(o2, "1", "2")) == []
    # disjoint subtrahend changes nothing
    assert relative_complement(Z(o2, "1", "2"), Z(o2, "2", "1")) == [Z(o2, "1", "2")]


def test_complement_suite():
    res = suite_complement(Random(11), 60)
    assert res.failures == []


def test_member_examples(o2):
    x = bp(o2, "1", "2")
    y = bp(o2, "2", "2")
    assert member(GroupoidPoint(x, 0, y), Z(o2, "1", "2"))
    assert not member(GroupoidPoint(x, 0, y), Z(o2, "2", "1"))
    ones = bp(o2, "", "1")
    assert not member(GroupoidPoint(ones, 0, ones), Z(o2, "", "", "1"))
    assert member(GroupoidPoint(ones, 0, ones), Z(o2, "", "", "2"))
    # degree must match: a k=0 point is never in a degree-1 bisection
    assert not member(GroupoidPoint(x, 0, y), Z(o2, "1", ""))


def test_semigroup_suites():
    assert suite_bisection_semigroup(Random(3), 40).failures == []
    assert suite_bisection_injectivity(Random(4), 30).failures == []


def test_ordering_is_deterministic(o2):
    bs = [Z(o2, "2", "2"), Z(o2, "1", "1"), Z(o2, "", "")]
    assert names(sorted(bs)) == ["Z(@,@)", "Z(1,1)", "Z(2,2)"]
