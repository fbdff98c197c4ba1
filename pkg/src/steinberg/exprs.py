"""Textual grammars shared by the CLI and the tests.

Element expressions are sums of coefficient-tagged terms joined by a `+`
that stands alone between whitespace (scalar literals such as `2+3i` contain
no spaces, which keeps the split unambiguous):

* algebra elements:   `2*Z(1.2,1) + -1*Z(@,2)`, bisections `Z(a,b|e,f)`;
* tensor elements:    `(2*Z(1,@)) (x) (1*Z(2,@)) + ...`;
* product elements:   `3*Z(1,2)xZ(2,1) + ...`;
* Leavitt elements:   `2*e1 e2* + 1` (juxtaposition is multiplication);
* paths:              dot-joined edge ids, `@` / `@v` for empty paths;
* boundary points:    `1.2(2.1)` meaning prefix 1.2 then cycle 2.1 forever.

Every parser raises ExpressionSyntaxError (grammar shape, with a position)
or SemanticError (unknown ids, scalars outside the ring).  Printing uses the
canonical term order, and `parse(str(x))` returns an element equal to `x`.
"""

from __future__ import annotations

import re as _re

from .algebra import AlgebraElement, from_terms
from .bisections import BasicBisection
from .errors import ExpressionSyntaxError, SemanticError
from .graph import BoundaryPoint, Graph, Path
from .leavitt import Generator, LeavittElement, from_monomials, reduce_word
from .scalars import Scalar, ScalarRing, parse_scalar
from .tensor import ProductAlgebraElement, TensorElement, product_from_pairs, simple_tensor


def _split_terms(text: str) -> list[tuple[str, int]]:
    """Split on top-level, whitespace-flanked `+`; returns (term, offset)."""
    terms = []
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ExpressionSyntaxError("unbalanced ')'", i)
        elif (
            ch == "+"
            and depth == 0
            and i > 0
            and text[i - 1].isspace()
            and i + 1 < len(text)
            and text[i + 1].isspace()
        ):
            terms.append((text[start:i], start))
            start = i + 1
        i += 1
    if depth != 0:
        raise ExpressionSyntaxError("unbalanced '('", len(text))
    terms.append((text[start:], start))
    return terms


def parse_path(text: str, graph: Graph) -> Path:
    text = text.strip()
    if not text:
        raise ExpressionSyntaxError("empty path", 0, "path")
    if text.startswith("@"):
        name = text[1:]
        if not name:
            if graph.n_vertices != 1:
                raise SemanticError("'@' needs a vertex name on a multi-vertex graph")
            name = graph.vertex_ids[0]
        return graph.empty_path(name)
    return graph.path(text.split("."))


def parse_bisection(text: str, graph: Graph) -> BasicBisection:
    text = text.strip()
    if not (text.startswith("Z(") and text.endswith(")")):
        raise ExpressionSyntaxError(f"{text!r} is not a bisection", 0, "Z(alpha,beta)")
    inner = text[2:-1]
    if "|" in inner:
        paths_part, excl_part = inner.split("|", 1)
        excl_ids = [e.strip() for e in excl_part.split(",") if e.strip()]
    else:
        paths_part, excl_ids = inner, []
    pieces = paths_part.split(",")
    if len(pieces) != 2:
        raise ExpressionSyntaxError(
            f"expected two comma-separated paths in {text!r}", 0, "Z(alpha,beta)"
        )
    alpha = parse_path(pieces[0], graph)
    beta = parse_path(pieces[1], graph)
    excluded = set()
    for e in excl_ids:
        if e not in graph._eidx:
            raise SemanticError(f"unknown edge {e!r} in excluded set")
        excluded.add(graph._eidx[e])
    return BasicBisection(alpha, beta, frozenset(excluded))


def _split_coefficient(term: str, offset: int) -> tuple[str | None, str]:
    """Split `scalar*rest`; returns (scalar_text or None, rest)."""
    term = term.strip()
    if term.startswith("Z(") or term.startswith("("):
        return None, term
    star = term.find("*")
    if star < 0:
        raise ExpressionSyntaxError(f"cannot read term {term!r}", offset, "scalar*Z(...)")
    return term[:star], term[star + 1 :]


def parse_term_pairs(
    text: str, graph: Graph, ring: ScalarRing
) -> list[tuple[Scalar, BasicBisection]]:
    """The raw (coefficient, bisection) list of an expression, un-normalized."""
    pairs: list[tuple[Scalar, BasicBisection]] = []
    if text.strip() == "0":
        return pairs
    for term, offset in _split_terms(text):
        if not term.strip():
            raise ExpressionSyntaxError("empty term", offset, "a term")
        coeff_text, rest = _split_coefficient(term, offset)
        coeff = ring.one if coeff_text is None else parse_scalar(coeff_text, ring)
        pairs.append((coeff, parse_bisection(rest, graph)))
    return pairs


def parse_element(text: str, graph: Graph, ring: ScalarRing) -> AlgebraElement:
    """Sum of `<scalar>*Z(...)` and bare `Z(...)` terms."""
    return from_terms(graph, ring, parse_term_pairs(text, graph, ring))


_PRODUCT_SPLIT = _re.compile(r"\)\s*x\s*Z\(")


def parse_product_element(
    text: str, gl: Graph, gr: Graph, ring: ScalarRing
) -> ProductAlgebraElement:
    """Sum of `<scalar>*Z(a,b)xZ(c,d)` terms over the product groupoid."""
    stripped = text.strip()
    if stripped == "0":
        return ProductAlgebraElement.zero(gl, gr, ring)
    triples = []
    for term, offset in _split_terms(text):
        coeff_text, rest = _split_coefficient(term.strip(), offset)
        coeff = ring.one if coeff_text is None else parse_scalar(coeff_text, ring)
        m = _PRODUCT_SPLIT.search(rest)
        if not m:
            raise ExpressionSyntaxError(
                f"cannot read product term {term.strip()!r}", offset, "Z(a,b)xZ(c,d)"
            )
        left_text = rest[: m.start() + 1]
        right_text = "Z(" + rest[m.end() :]
        triples.append(
            (coeff, parse_bisection(left_text, gl), parse_bisection(right_text, gr))
        )
    return product_from_pairs(gl, gr, ring, triples)


def parse_tensor_element(text: str, gl: Graph, gr: Graph, ring: ScalarRing) -> TensorElement:
    """Sum of `(expr) (x) (expr)` simple tensors."""
    stripped = text.strip()
    if stripped == "0":
        return TensorElement.zero(gl, gr, ring)
    total = TensorElement.zero(gl, gr, ring)
    for term, offset in _split_terms(text):
        term = term.strip()
        split = _find_tensor_split(term, offset)
        left_text, right_text = term[: split[0]], term[split[1] :]
        left = _strip_parens(left_text, offset)
        right = _strip_parens(right_text, offset + split[1])
        total = total + simple_tensor(
            parse_element(left, gl, ring), parse_element(right, gr, ring)
        )
    return total


def _find_tensor_split(term: str, offset: int) -> tuple[int, int]:
    depth = 0
    i = 0
    while i < len(term):
        ch = term[i]
        if ch == "(":
            if depth == 0 and term[i : i + 3] == "(x)":
                return i, i + 3
            depth += 1
        elif ch == ")":
            depth -= 1
        i += 1
    raise ExpressionSyntaxError("missing '(x)' between tensor factors", offset, "(x)")


def _strip_parens(text: str, offset: int) -> str:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ExpressionSyntaxError(
            f"tensor factor must be parenthesized: {text!r}", offset, "(expression)"
        )
    return text[1:-1]


_LEAVITT_FACTOR = _re.compile(r"^(?:1|e(\d+)(\*)?)$")


def _parse_leavitt_factors(tokens: list[str], offset: int) -> list[Generator]:
    gens: list[Generator] = []
    for tok in tokens:
        m = _LEAVITT_FACTOR.match(tok)
        if not m:
            raise ExpressionSyntaxError(f"bad generator {tok!r}", offset, "e<i> or e<i>* or 1")
        if m.group(1) is not None:
            gens.append(Generator(int(m.group(1)), star=bool(m.group(2))))
    return gens


def parse_leavitt_word(text: str) -> list[Generator]:
    tokens = text.split()
    if not tokens:
        raise ExpressionSyntaxError("empty word", 0, "generators")
    return _parse_leavitt_factors(tokens, 0)


def parse_leavitt_element(text: str, n: int, ring: ScalarRing) -> LeavittElement:
    """Sum of `<scalar>*<word>`, `<word>`, or bare `<scalar>` terms."""
    stripped = text.strip()
    if stripped == "0":
        return LeavittElement.zero(n, ring)
    total = LeavittElement.zero(n, ring)
    for term, offset in _split_terms(text):
        tokens = term.split()
        if not tokens:
            raise ExpressionSyntaxError("empty term", offset, "a term")
        first = tokens[0]
        if _LEAVITT_FACTOR.match(first):
            coeff = ring.one
        else:
            star = first.find("*")
            if star < 0:
                # a bare scalar term: coefficient times the identity
                coeff = parse_scalar(first, ring)
                if len(tokens) > 1:
                    raise ExpressionSyntaxError(
                        f"unexpected tokens after scalar {first!r}", offset
                    )
                total = total + coeff * LeavittElement.one(n, ring)
                continue
            coeff = parse_scalar(first[:star], ring)
            remnant = first[star + 1 :]
            tokens = ([remnant] if remnant else []) + tokens[1:]
        word = _parse_leavitt_factors(tokens, offset)
        total = total + coeff * reduce_word(n, ring, word)
    return total


def parse_boundary_point(text: str, graph: Graph) -> BoundaryPoint:
    """`prefix(cycle)` with dot-joined ids; prefix may be empty or `@v`."""
    text = text.strip()
    m = _re.match(r"^(.*)\(([^()]+)\)$", text)
    if not m:
        raise ExpressionSyntaxError(f"{text!r} is not a boundary point", 0, "prefix(cycle)")
    cycle = graph.path(m.group(2).strip().split("."))
    pre_text = m.group(1).strip()
    if not pre_text:
        prefix = graph.empty_path(graph.vertex_ids[cycle.src])
    else:
        prefix = parse_path(pre_text, graph)
    return BoundaryPoint(prefix, cycle)
