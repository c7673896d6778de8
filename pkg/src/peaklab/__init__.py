"""Exact descent and peak combinatorics on S_n and B_n.

Statistics and group plumbing live in perms; order polynomials and their
generating functions in orderpolys; chain/poset enumeration oracles in
posets; the group-algebra layer (class sums, structure polynomials,
idempotents, closures, the theorem registry) in groupalgebra; basis
expansions and coalgebra constants in qsym.  Everything is computed over
the rationals, never floats.
"""

from .exact import MultiPoly, RationalGF, UniPoly, binom_poly, format_rational, gf_coeffs
from .groupalgebra import (
    CLASS_FAMILIES,
    GAElem,
    GAPoly,
    STRUCTURE_FAMILIES,
    all_theorem_ids,
    class_sum,
    cyclic_isomorphism_check,
    eulerian_number,
    family_labels,
    idempotent_powers,
    idempotents,
    in_span,
    minimal_non_algebra_n,
    multiplicative_closure,
    refined_decomposition,
    span_rank,
    structure_constants,
    structure_polynomial,
    verify_identity,
)
from .limits import ResourceLimitError
from .orderpolys import (
    ORDER_POLY_KINDS,
    class_gf,
    enriched_gf,
    identity_check_43,
    order_polynomial,
    peak_polynomial,
    reciprocity_check,
)
from .perms import (
    StatResult,
    compose,
    descent_stat,
    eta,
    hat,
    hyperoctahedral_group,
    identity_perm,
    inverse,
    omega,
    peak_stat,
    signed_stat,
    symmetric_group,
    validate_perm,
)
from .posets import (
    Alphabet,
    BPoset,
    ImageSetSpec,
    Poset,
    chain_poset,
    chain_weight_sum,
    count_partitions,
    zigzag_poset,
)
from .qsym import (
    QsymExpansion,
    SignPeakSet,
    bipartite_check,
    coalgebra_constants,
    delta_expansion,
    fibonacci,
    peak_basis_rank,
    peak_function,
    realize_basis,
    truncate_realize,
    truncated_enumerator,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BPoset",
    "CLASS_FAMILIES",
    "ImageSetSpec",
    "GAElem",
    "GAPoly",
    "MultiPoly",
    "ORDER_POLY_KINDS",
    "Poset",
    "QsymExpansion",
    "RationalGF",
    "ResourceLimitError",
    "STRUCTURE_FAMILIES",
    "SignPeakSet",
    "StatResult",
    "UniPoly",
    "all_theorem_ids",
    "binom_poly",
    "bipartite_check",
    "chain_poset",
    "chain_weight_sum",
    "class_gf",
    "class_sum",
    "coalgebra_constants",
    "compose",
    "count_partitions",
    "cyclic_isomorphism_check",
    "delta_expansion",
    "descent_stat",
    "enriched_gf",
    "eta",
    "eulerian_number",
    "family_labels",
    "fibonacci",
    "format_rational",
    "gf_coeffs",
    "hat",
    "hyperoctahedral_group",
    "idempotent_powers",
    "idempotents",
    "identity_check_43",
    "identity_perm",
    "in_span",
    "inverse",
    "minimal_non_algebra_n",
    "multiplicative_closure",
    "omega",
    "order_polynomial",
    "peak_basis_rank",
    "peak_function",
    "peak_polynomial",
    "peak_stat",
    "realize_basis",
    "reciprocity_check",
    "refined_decomposition",
    "signed_stat",
    "span_rank",
    "structure_constants",
    "structure_polynomial",
    "symmetric_group",
    "truncate_realize",
    "truncated_enumerator",
    "validate_perm",
    "verify_identity",
    "zigzag_poset",
]
