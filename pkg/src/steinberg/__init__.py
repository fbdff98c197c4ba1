"""Exact symbolic computation in Steinberg algebras of boundary-path groupoids.

The package models, over a finite directed graph without sinks:

* the inverse semigroup of basic compact open bisections Z(alpha, beta, F),
* the convolution *-algebra of the boundary-path groupoid, with canonical
  normal forms, an integer grading, and evaluation at eventually periodic
  points,
* Leavitt algebras L_{n,R} with the classical isomorphism onto the
  one-vertex-graph case,
* tensor products of two such algebras and the mutually inverse isomorphisms
  with the product-groupoid algebra,
* projection/diagonal structure over kind coefficient rings, and the
  Bowen-Franks arithmetic separating tensor products of Leavitt algebras.

Coefficients are exact (integers, Gaussian integers, rationals, dyadic
rationals); no floating point is used anywhere.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .algebra import (
    AlgebraElement,
    RepresentationAssignment,
    check_representation,
    convolve,
    degree_component,
    disjointify,
    evaluate,
    from_terms,
    identity_representation,
    induced_hom,
    induced_hom_on_expression,
    is_diagonal,
    map_scalars,
    star,
)
from .bisections import (
    BasicBisection,
    cylinder,
    expand,
    intersect,
    inverse,
    member,
    product,
    product_single,
    relative_complement,
    relative_complement_by_expansion,
)
from .graph import (
    BoundaryPoint,
    Graph,
    GroupoidPoint,
    Path,
    cuntz_graph,
    load_graph,
    parse_graph,
    shift_point,
)
from .invariants import (
    FiniteCyclicGroup,
    TupleVerdict,
    bowen_franks,
    check_diagonal_preservation,
    decide_tensor_tuples,
    is_effective,
    is_projection,
    random_projection_search,
    search_projections,
)
from .leavitt import (
    Generator,
    LeavittElement,
    from_monomials,
    from_steinberg,
    leavitt_mul,
    leavitt_star,
    reduce_word,
    to_steinberg,
)
from .scalars import (
    DYADIC_RATIONALS,
    GAUSSIAN_INTEGERS,
    INTEGERS,
    RATIONALS,
    RINGS_BY_NAME,
    KindWitnessVerdict,
    Scalar,
    ScalarRing,
    format_scalar,
    parse_scalar,
    scalar_arith,
    verify_kind_witness,
)
from .tensor import (
    ProductAlgebraElement,
    ProductBisection,
    TensorElement,
    pi,
    product_degree,
    product_from_pairs,
    quotient_degree,
    refine_families,
    sigma,
    simple_tensor,
    tensor_from_pairs,
    tensor_mul,
    tensor_representation,
    tensor_star,
)

__version__ = "0.1.0"
