"""Exact coefficient arithmetic.

Four built-in coefficient rings are supported, each a unital *-subring of the
complex numbers with complex conjugation as the involution: the integers, the
Gaussian integers, the rationals, and the dyadic rationals Z[1/2].  Values are
stored as exact pairs of `fractions.Fraction` (real and imaginary part); no
floating point is used anywhere.

A ring is *kind* when, for ring elements l0, ..., ln,

    l0 = |l0|^2 + sum_{i>=1} |li|^2   implies   l1 = ... = ln = 0.

The integers and Gaussian integers are kind; the rationals and dyadics are
not (witness: 1/2 = 1/4 + 1/4).  Kindness is stored as a per-ring attribute
and probed through `verify_kind_witness`, since the defining property is
universally quantified and not decidable by enumeration.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import RingMismatchError, SemanticError, UnsupportedRingError


class RingTag(Enum):
    INTEGERS = "Z"
    GAUSSIAN_INTEGERS = "Zi"
    RATIONALS = "Q"
    DYADIC_RATIONALS = "Z-half"


@dataclass(frozen=True)
class ScalarRing:
    """One of the supported coefficient rings.

    `is_kind` is defined only for *-subrings of C; constructing a ring with a
    kindness claim but without the star flag is rejected.
    """

    tag: RingTag
    is_star_subring_of_C: bool = True
    is_kind: bool | None = None

    def __post_init__(self):
        if self.is_kind is not None and not self.is_star_subring_of_C:
            raise UnsupportedRingError("kindness is defined only for *-subrings of C")

    # -- membership -------------------------------------------------------

    def contains(self, re: Fraction, im: Fraction) -> bool:
        if self.tag is RingTag.INTEGERS:
            return im == 0 and re.denominator == 1
        if self.tag is RingTag.GAUSSIAN_INTEGERS:
            return re.denominator == 1 and im.denominator == 1
        if self.tag is RingTag.RATIONALS:
            return im == 0
        if self.tag is RingTag.DYADIC_RATIONALS:
            d = re.denominator
            return im == 0 and (d & (d - 1)) == 0
        raise UnsupportedRingError(f"unknown ring tag {self.tag!r}")

    # -- constructors ------------------------------------------------------

    def scalar(self, re, im=0) -> "Scalar":
        return Scalar(self, Fraction(re), Fraction(im))

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)

    @property
    def name(self) -> str:
        return self.tag.value

    def __repr__(self):
        return f"ScalarRing({self.tag.value})"


INTEGERS = ScalarRing(RingTag.INTEGERS, True, True)
GAUSSIAN_INTEGERS = ScalarRing(RingTag.GAUSSIAN_INTEGERS, True, True)
RATIONALS = ScalarRing(RingTag.RATIONALS, True, False)
DYADIC_RATIONALS = ScalarRing(RingTag.DYADIC_RATIONALS, True, False)

#: CLI ring selectors.
RINGS_BY_NAME = {
    "Z": INTEGERS,
    "Zi": GAUSSIAN_INTEGERS,
    "Q": RATIONALS,
    "Z-half": DYADIC_RATIONALS,
}


@dataclass(frozen=True)
class Scalar:
    """An exact element of one of the coefficient rings."""

    ring: ScalarRing
    re: Fraction
    im: Fraction

    def __post_init__(self):
        if not self.ring.contains(self.re, self.im):
            raise SemanticError(f"{self.re}+{self.im}i is not an element of {self.ring.name}")

    def _check(self, other: "Scalar"):
        if other.ring != self.ring:
            raise RingMismatchError(f"mixed rings {self.ring.name} and {other.ring.name}")

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return Scalar(self.ring, self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return Scalar(self.ring, self.re - other.re, self.im - other.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return Scalar(
            self.ring,
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "Scalar":
        return Scalar(self.ring, -self.re, -self.im)

    def conjugate(self) -> "Scalar":
        return Scalar(self.ring, self.re, -self.im)

    def abs_squared(self) -> "Scalar":
        """|x|^2 = x * conj(x); always a nonnegative real element of the ring."""
        return Scalar(self.ring, self.re * self.re + self.im * self.im, Fraction(0))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def is_zero(self) -> bool:
        return not self

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({self.ring.name}, {format_scalar(self)})"


def scalar_arith(a: Scalar, b: Scalar | None, op: str) -> Scalar:
    """Uniform entry point for {add, mul, neg, conj}; binary ops reject mixed rings."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "conj":
        return a.conjugate()
    raise ValueError(f"unknown scalar operation {op!r}")


def cast_scalar(s: Scalar, target: ScalarRing) -> Scalar:
    """Image of `s` under the inclusion of the integers into `target`.

    Only inclusions out of the integers are supported (including the identity
    on the integers); anything else is rejected.
    """
    if s.ring != INTEGERS:
        raise UnsupportedRingError(f"no supported ring map {s.ring.name} -> {target.name}")
    return Scalar(target, s.re, s.im)


class KindWitnessVerdict(Enum):
    CONSISTENT_WITH_KIND = "ConsistentWithKind"
    KINDNESS_VIOLATED = "KindnessViolated"
    EQUATION_FAILS = "EquationFails"


def verify_kind_witness(ring: ScalarRing, lambdas: list[Scalar]) -> KindWitnessVerdict:
    """Test one tuple (l0, ..., ln) against the kindness implication.

    Returns EQUATION_FAILS when l0 != |l0|^2 + sum_{i>=1} |li|^2, else
    KINDNESS_VIOLATED when some li (i >= 1) is nonzero, else
    CONSISTENT_WITH_KIND.  A KINDNESS_VIOLATED result is a concrete witness
    that the ring is not kind.
    """
    if not lambdas:
        raise ValueError("witness tuple must be nonempty")
    if not ring.is_star_subring_of_C:
        raise UnsupportedRingError("kindness is defined only for *-subrings of C")
    for lam in lambdas:
        if lam.ring != ring:
            raise RingMismatchError("witness entries must belong to the given ring")
    total = lambdas[0].abs_squared()
    for lam in lambdas[1:]:
        total = total + lam.abs_squared()
    if lambdas[0] != total:
        return KindWitnessVerdict.EQUATION_FAILS
    if any(lam for lam in lambdas[1:]):
        return KindWitnessVerdict.KINDNESS_VIOLATED
    return KindWitnessVerdict.CONSISTENT_WITH_KIND


# -- literal grammar -------------------------------------------------------
#
# Shared with the CLI: integers `-3`, rationals `5/4`, Gaussian `2+3i`,
# dyadics `7/8`.  Literals contain no whitespace.

_RATIONAL_RE = _re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_GAUSS_FULL_RE = _re.compile(r"^([+-]?\d+)([+-]\d*)i$")
_GAUSS_IMAG_RE = _re.compile(r"^([+-]?\d*)i$")
_GAUSS_REAL_RE = _re.compile(r"^[+-]?\d+$")


def _im_digits(text: str) -> int:
    if text in ("", "+"):
        return 1
    if text == "-":
        return -1
    return int(text)


def parse_scalar(text: str, ring: ScalarRing) -> Scalar:
    """Parse a scalar literal in the grammar of `ring`."""
    text = text.strip()
    if not text:
        raise SemanticError("empty scalar literal")
    if ring == GAUSSIAN_INTEGERS:
        if m := _GAUSS_FULL_RE.match(text):
            return ring.scalar(int(m.group(1)), _im_digits(m.group(2)))
        if m := _GAUSS_IMAG_RE.match(text):
            return ring.scalar(0, _im_digits(m.group(1)))
        if _GAUSS_REAL_RE.match(text):
            return ring.scalar(int(text))
        raise SemanticError(f"{text!r} is not a Gaussian integer literal")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise SemanticError(f"{text!r} is not a scalar literal for ring {ring.name}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise SemanticError("zero denominator")
    return ring.scalar(Fraction(num, den))


def format_scalar(s: Scalar) -> str:
    """Canonical literal; `parse_scalar(format_scalar(s), s.ring) == s`."""
    if s.ring == GAUSSIAN_INTEGERS:
        a, b = s.re.numerator, s.im.numerator
        if b == 0:
            return str(a)
        if a == 0:
            return f"{b}i"
        return f"{a}+{b}i" if b > 0 else f"{a}{b}i"
    return str(s.re)
