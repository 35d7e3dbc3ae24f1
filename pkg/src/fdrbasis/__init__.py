"""Exact calculator for the noncrossing-partition basis of the fermionic
diagonal coinvariant ring, with the straightening action, module-structure
identities, and cyclic sieving checks."""

from .exterior import (
    AmbientMismatchError,
    Monomial,
    Multivector,
    Permutation,
    THETA,
    XI,
    apply_perm,
    contract,
    format_multivector,
    inner_product,
    parse_multivector,
    substitute_from_2n,
    symmetrize,
    wedge,
)
from .partitions import (
    LabeledPartition,
    MotzkinPath,
    TwoRowTableau,
    enumerate_partitions,
    from_motzkin,
    pairs_to_tableau,
    phi,
    psi,
    tableau_to_pairs,
    to_motzkin,
)
from .basisops import (
    RewriteLimitError,
    partition_vector,
    partition_vector_product,
    serialize_combination,
    straighten,
)
from .quotient import (
    diagonal_element,
    dimension,
    injectivity_check,
    narayana,
    reduce_to_basis,
    verify_basis,
)
from .symfunc import (
    SchurExpansion,
    frobenius_bigraded,
    frobenius_class,
    frobenius_product_form,
    hook_dim,
    pieri_e,
    pieri_h,
    two_row_schur,
)
from .sieving import (
    QPolynomial,
    congruence_check,
    csp_check,
    fake_degree,
    q_binomial,
    q_catalan,
    q_factorial,
    q_int,
    q_multinomial,
    rotate,
    top_fake_degree,
)

__version__ = "0.1.0"
