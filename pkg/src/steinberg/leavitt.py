"""Leavitt algebras L_{n,R} as a rewriting system on generator words.

Generators e_1..e_n and adjoints e_1^*..e_n^* satisfy

    e_i^* e_j = delta_ij        and        sum_i e_i e_i^* = 1.

Every word rewrites to a single monomial e_mu e_nu^* or to 0 (each rewrite of
an adjacent e_i^* e_j either deletes the pair or kills the word, so the system
is confluent without critical-pair analysis).  Elements are linear
combinations of monomials kept in the same normal form as the groupoid-side
algebra: per degree, uniform extension of (mu, nu) by common suffixes, then
greedy merging of full sibling families {(mu i, nu i) : i = 1..n}, which is
the second relation read backwards.

The machinery here is deliberately self-contained (words are plain int
tuples; no graph kernel involved), so `to_steinberg` is a genuine bridge and
round-trip tests cross-check the two normal-form implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraElement, from_terms
from .bisections import BasicBisection
from .errors import RingMismatchError, SemanticError
from .graph import Graph, cuntz_graph
from .scalars import Scalar, ScalarRing

Word = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    """A letter e_i (star=False) or its adjoint e_i^* (star=True)."""

    index: int
    star: bool = False

    def __str__(self):
        return f"e{self.index}*" if self.star else f"e{self.index}"


def _check_letters(n: int, word: Word):
    for i in word:
        if not 1 <= i <= n:
            raise SemanticError(f"letter {i} outside 1..{n}")


class LeavittElement:
    """A normal-form element sum r . e_mu e_nu^* of L_{n,R}."""

    __slots__ = ("n", "ring", "_terms")

    def __init__(self, n: int, ring: ScalarRing, terms: dict):
        # private: terms must be normalized (see from_monomials)
        self.n = n
        self.ring = ring
        self._terms = terms

    @staticmethod
    def zero(n: int, ring: ScalarRing) -> "LeavittElement":
        return LeavittElement(n, ring, {})

    @staticmethod
    def one(n: int, ring: ScalarRing) -> "LeavittElement":
        return LeavittElement(n, ring, {((), ()): ring.one})

    @staticmethod
    def generator(n: int, ring: ScalarRing, i: int, star: bool = False) -> "LeavittElement":
        if not 1 <= i <= n:
            raise SemanticError(f"generator index {i} outside 1..{n}")
        key = ((), (i,)) if star else ((i,), ())
        return LeavittElement(n, ring, {key: ring.one})

    def term_items(self) -> list[tuple[Scalar, Word, Word]]:
        return [(self._terms[k], k[0], k[1]) for k in sorted(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "LeavittElement"):
        if not isinstance(other, LeavittElement):
            raise TypeError(f"expected LeavittElement, got {type(other).__name__}")
        if other.n != self.n:
            raise SemanticError("elements of different Leavitt algebras")
        if other.ring != self.ring:
            raise RingMismatchError("elements over different rings")

    def __add__(self, other: "LeavittElement") -> "LeavittElement":
        self._check(other)
        items = list(self._terms.items()) + list(other._terms.items())
        return LeavittElement(self.n, self.ring, _normalize(self.n, items))

    def __sub__(self, other):
        return self + other.scale(-self.ring.one)

    def __mul__(self, other: "LeavittElement") -> "LeavittElement":
        """Bilinear extension of the monomial product.

        (e_mu e_nu^*)(e_ga e_de^*) is e_{mu t} e_de^* when ga = nu t,
        e_mu e_{de t}^* when nu = ga t, and 0 otherwise.
        """
        self._check(other)
        items = []
        for (mu, nu), r in self._terms.items():
            for (ga, de), s in other._terms.items():
                if ga[: len(nu)] == nu[: len(ga)]:
                    if len(nu) <= len(ga):
                        key = (mu + ga[len(nu):], de)
                    else:
                        key = (mu, de + nu[len(ga):])
                    rs = r * s
                    if rs:
                        items.append((key, rs))
        return LeavittElement(self.n, self.ring, _normalize(self.n, items))

    def __rmul__(self, r):
        if isinstance(r, int):
            r = self.ring.scalar(r)
        if isinstance(r, Scalar):
            return self.scale(r)
        return NotImplemented

    def __neg__(self):
        return self.scale(-self.ring.one)

    def scale(self, r: Scalar) -> "LeavittElement":
        if r.ring != self.ring:
            raise RingMismatchError("scalar from a different ring")
        if not r:
            return LeavittElement.zero(self.n, self.ring)
        return LeavittElement(self.n, self.ring, {k: v * r for k, v in self._terms.items()})

    def star(self) -> "LeavittElement":
        """Canonical involution: r e_mu e_nu^* -> conj(r) e_nu e_mu^*."""
        return LeavittElement(
            self.n, self.ring, {(nu, mu): r.conjugate() for (mu, nu), r in self._terms.items()}
        )

    def is_diagonal(self) -> bool:
        return all(mu == nu for mu, nu in self._terms)

    def __eq__(self, other):
        if not isinstance(other, LeavittElement):
            return NotImplemented
        if other.n != self.n or other.ring != self.ring:
            return False
        if self._terms == other._terms:
            return True
        levels: dict[int, int] = {}
        for mu, nu in list(self._terms) + list(other._terms):
            d = len(mu) - len(nu)
            levels[d] = max(levels.get(d, 0), len(mu))
        return _expand_to(self.n, self._terms, levels) == _expand_to(self.n, other._terms, levels)

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"

        def mono(mu, nu):
            parts = [f"e{i}" for i in mu] + [f"e{i}*" for i in reversed(nu)]
            return " ".join(parts) if parts else "1"

        return " + ".join(f"{r}*{mono(mu, nu)}" for r, mu, nu in self.term_items())

    def __repr__(self):
        return f"<L_{{{self.n},{self.ring.name}}}: {self}>"


# -- normal form --------------------------------------------------------------


def _expand_pair(n: int, key, extra: int):
    cur = [key]
    for _ in range(extra):
        cur = [(mu + (i,), nu + (i,)) for mu, nu in cur for i in range(1, n + 1)]
    return cur


def _expand_to(n: int, terms: dict, levels: dict) -> dict:
    acc = {}
    for (mu, nu), r in terms.items():
        for key in _expand_pair(n, (mu, nu), levels[len(mu) - len(nu)] - len(mu)):
            acc[key] = r
    return acc


def _normalize(n: int, items) -> dict:
    by_degree: dict[int, list] = {}
    for key, r in items:
        if not r:
            continue
        by_degree.setdefault(len(key[0]) - len(key[1]), []).append((key, r))
    acc: dict = {}
    for lst in by_degree.values():
        target = max(len(key[0]) for key, _ in lst)
        for key, r in lst:
            for kk in _expand_pair(n, key, target - len(key[0])):
                if kk in acc:
                    s = acc[kk] + r
                    if s:
                        acc[kk] = s
                    else:
                        del acc[kk]
                else:
                    acc[kk] = r
    # merge full sibling families: sum_i e_{mu i} e_{nu i}^* = e_mu e_nu^*
    while True:
        parents: dict = {}
        for mu, nu in acc:
            if mu and nu and mu[-1] == nu[-1]:
                parents.setdefault((mu[:-1], nu[:-1]), []).append((mu, nu))
        changed = False
        for parent, children in parents.items():
            if len(children) != n:
                continue
            r0 = acc[children[0]]
            if all(acc[c] == r0 for c in children[1:]):
                for c in children:
                    del acc[c]
                acc[parent] = r0
                changed = True
        if not changed:
            break
    return acc


def from_monomials(
    n: int, ring: ScalarRing, triples: Iterable[tuple[Scalar, Sequence[int], Sequence[int]]]
) -> LeavittElement:
    """Element sum r . e_mu e_nu^* in normal form."""
    items = []
    for r, mu, nu in triples:
        mu, nu = tuple(mu), tuple(nu)
        _check_letters(n, mu)
        _check_letters(n, nu)
        if r.ring != ring:
            raise RingMismatchError("coefficient from a different ring")
        items.append(((mu, nu), r))
    return LeavittElement(n, ring, _normalize(n, items))


def reduce_word(n: int, ring: ScalarRing, word: Sequence[Generator]) -> LeavittElement:
    """Rewrite a generator word to e_mu e_nu^* or 0.

    Scans for adjacent pairs e_i^* e_j; equal indices cancel, distinct
    indices annihilate the word.  The empty word is the identity.
    """
    letters = list(word)
    for gen in letters:
        if not 1 <= gen.index <= n:
            raise SemanticError(f"generator index {gen.index} outside 1..{n}")
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            a, b = letters[i], letters[i + 1]
            if a.star and not b.star:
                if a.index != b.index:
                    return LeavittElement.zero(n, ring)
                del letters[i : i + 2]
                changed = True
                break
    mu = tuple(g.index for g in letters if not g.star)
    nu = tuple(g.index for g in reversed(letters) if g.star)
    # a reduced word has all plain letters before all adjoints
    assert all(g.star for g in letters[len(mu):])
    return LeavittElement(n, ring, {(mu, nu): ring.one})


def leavitt_mul(a: LeavittElement, b: LeavittElement) -> LeavittElement:
    return a * b


def leavitt_star(a: LeavittElement) -> LeavittElement:
    return a.star()


# -- the classical bridge ------------------------------------------------------


def to_steinberg(a: LeavittElement, graph: Graph | None = None) -> AlgebraElement:
    """The classical isomorphism on terms: e_mu e_nu^* -> 1_Z(mu, nu).

    `graph` may supply a shared cuntz_graph(n) instance; letters i map to the
    loop edges labelled str(i).
    """
    g = graph if graph is not None else cuntz_graph(a.n)
    if g.n_vertices != 1 or g.n_edges != a.n:
        raise SemanticError(f"graph is not the one-vertex {a.n}-loop graph")
    pairs = []
    for (mu, nu), r in a._terms.items():
        alpha = g.path_from_key((0,) + tuple(i - 1 for i in mu))
        beta = g.path_from_key((0,) + tuple(i - 1 for i in nu))
        pairs.append((r, BasicBisection(alpha, beta)))
    return from_terms(g, a.ring, pairs)


def from_steinberg(f: AlgebraElement) -> LeavittElement:
    """Term-by-term pullback of `to_steinberg`; requires a one-vertex graph."""
    g = f.graph
    if g.n_vertices != 1:
        raise SemanticError("only one-vertex graphs have a Leavitt presentation")
    n = g.n_edges
    triples = []
    for r, b in f.term_items():
        mu = tuple(e + 1 for e in b.alpha.edges)
        nu = tuple(e + 1 for e in b.beta.edges)
        triples.append((r, mu, nu))
    return from_monomials(n, f.ring, triples)
