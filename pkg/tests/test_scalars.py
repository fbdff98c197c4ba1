from fractions import Fraction
from random import Random

import pytest

from steinberg import (
    DYADIC_RATIONALS,
    GAUSSIAN_INTEGERS,
    INTEGERS,
    RATIONALS,
    KindWitnessVerdict,
    ScalarRing,
    format_scalar,
    parse_scalar,
    scalar_arith,
    verify_kind_witness,
)
from steinberg.errors import RingMismatchError, SemanticError, UnsupportedRingError
from steinberg.scalars import RingTag


def test_gaussian_norm_identity():
    a = GAUSSIAN_INTEGERS.scalar(1, 1)
    b = GAUSSIAN_INTEGERS.scalar(1, -1)
    assert scalar_arith(a, b, "mul") == GAUSSIAN_INTEGERS.scalar(2)


def test_real_conjugation_fixed_point():
    assert scalar_arith(INTEGERS.scalar(3), None, "conj") == INTEGERS.scalar(3)


def test_dyadic_halves_sum_to_one():
    h = DYADIC_RATIONALS.scalar(Fraction(1, 2))
    assert scalar_arith(h, h, "add") == DYADIC_RATIONALS.one


def test_ring_membership_enforced():
    with pytest.raises(SemanticError):
        INTEGERS.scalar(Fraction(1, 2))
    with pytest.raises(SemanticError):
        DYADIC_RATIONALS.scalar(Fraction(1, 3))
    with pytest.raises(SemanticError):
        RATIONALS.scalar(0, 1)  # no imaginary part in Q
    DYADIC_RATIONALS.scalar(Fraction(7, 8))
    GAUSSIAN_INTEGERS.scalar(-2, 5)


def test_mixed_ring_operands_rejected():
    with pytest.raises(RingMismatchError):
        INTEGERS.one + RATIONALS.one
    with pytest.raises(RingMismatchError):
        INTEGERS.one * GAUSSIAN_INTEGERS.one


def test_kind_flags():
    assert INTEGERS.is_kind and GAUSSIAN_INTEGERS.is_kind
    assert RATIONALS.is_kind is False and DYADIC_RATIONALS.is_kind is False


def test_kind_witness_identity_case():
    assert (
        verify_kind_witness(INTEGERS, [INTEGERS.one])
        == KindWitnessVerdict.CONSISTENT_WITH_KIND
    )


def test_kind_witness_equation_fails():
    # 2 != 4 + 1
    lams = [INTEGERS.scalar(2), INTEGERS.scalar(1)]
    assert verify_kind_witness(INTEGERS, lams) == KindWitnessVerdict.EQUATION_FAILS


def test_kind_witness_dyadic_violation():
    h = DYADIC_RATIONALS.scalar(Fraction(1, 2))
    assert verify_kind_witness(DYADIC_RATIONALS, [h, h]) == KindWitnessVerdict.KINDNESS_VIOLATED


def test_kind_witness_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_kind_witness(INTEGERS, [])
    plain = ScalarRing(RingTag.RATIONALS, is_star_subring_of_C=False)
    with pytest.raises(UnsupportedRingError):
        verify_kind_witness(plain, [plain.scalar(1)])


def test_integer_scan_never_violates():
    values = [INTEGERS.scalar(v) for v in range(-3, 4)]
    stack = [[v] for v in values]
    while stack:
        tup = stack.pop()
        assert verify_kind_witness(INTEGERS, tup) != KindWitnessVerdict.KINDNESS_VIOLATED
        if len(tup) < 4:
            stack.extend(tup + [v] for v in values)


def test_conj_is_ring_automorphism():
    rng = Random(5)
    for ring in (INTEGERS, GAUSSIAN_INTEGERS, RATIONALS, DYADIC_RATIONALS):
        for _ in range(50):
            from steinberg.sampling import random_scalar

            a, b = random_scalar(ring, rng), random_scalar(ring, rng)
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
            assert a.conjugate().conjugate() == a


@pytest.mark.parametrize(
    "text,ring,re_,im_",
    [
        ("-3", INTEGERS, -3, 0),
        ("5/4", RATIONALS, Fraction(5, 4), 0),
        ("7/8", DYADIC_RATIONALS, Fraction(7, 8), 0),
        ("2+3i", GAUSSIAN_INTEGERS, 2, 3),
        ("2-3i", GAUSSIAN_INTEGERS, 2, -3),
        ("-i", GAUSSIAN_INTEGERS, 0, -1),
        ("i", GAUSSIAN_INTEGERS, 0, 1),
        ("4i", GAUSSIAN_INTEGERS, 0, 4),
        ("0", GAUSSIAN_INTEGERS, 0, 0),
    ],
)
def test_parse_scalar(text, ring, re_, im_):
    assert parse_scalar(text, ring) == ring.scalar(re_, im_)


def test_parse_scalar_rejections():
    with pytest.raises(SemanticError):
        parse_scalar("5/3", DYADIC_RATIONALS)
    with pytest.raises(SemanticError):
        parse_scalar("1/2", INTEGERS)
    with pytest.raises(SemanticError):
        parse_scalar("2+3i", INTEGERS)
    with pytest.raises(SemanticError):
        parse_scalar("x", RATIONALS)
    with pytest.raises(SemanticError):
        parse_scalar("1/0", RATIONALS)


def test_format_round_trip():
    rng = Random(9)
    from steinberg.sampling import random_scalar

    for ring in (INTEGERS, GAUSSIAN_INTEGERS, RATIONALS, DYADIC_RATIONALS):
        for _ in range(80):
            s = random_scalar(ring, rng, bound=7)
            assert parse_scalar(format_scalar(s), ring) == s
