"""Finite groupoid workbench.

Exact computational algebra for finite groupoids: axiom validation, quotients
by normal subgroupoids, fixed-point abelianization, character duals of abelian
group bundles, and convolution *-algebras over Gaussian rationals, together
with a machine-verification suite for the structural identities relating them.
"""

from .abelian import (
    Character,
    CyclicDecomposition,
    DualBundle,
    FiniteAbelianGroup,
    abelian_fiber,
    abelianized,
    char_group_structure,
    characters,
    dual_bundle,
    finite_abelian_group,
    invariant_factors,
)
from .algebra import (
    AlgebraElement,
    AlgebraHom,
    CharacterFunctional,
    GelfandMatrix,
    abelianization_dim,
    abelianized_fiber,
    commutator_ideal,
    convolve,
    delta,
    enumerate_characters,
    from_coeffs,
    gelfand_transform,
    involute,
    pi_hom,
    quotient_hom,
    restriction_hom,
    unit_element,
)
from .checks import (
    CheckReport,
    CheckResult,
    corpus_report,
    duality_family_check,
    file_report,
    instance_checks,
    regression_checks,
)
from .core import (
    AxiomViolation,
    FiniteGroupoid,
    NotInvariantError,
    disjoint_union,
    fixed_points,
    is_bisection,
    is_effective,
    is_group_bundle,
    isotropy,
    make_groupoid,
    restrict,
    unit_components,
    validate,
)
from .document import (
    DocumentError,
    decode_element,
    decode_groupoid,
    encode_element,
    encode_groupoid,
)
from .generators import (
    group_action,
    group_bundle,
    klein_cross,
    pair_groupoid,
    random_groupoid,
    s3_a3_bundle,
    s3_point,
    transformation_groupoid,
    trivial_groupoid,
)
from .groups import FiniteGroup, cyclic, dihedral4, finite_group, klein, quaternion8, sym3
from .linalg import Echelon, Qi, kernel_basis, same_span
from .quotients import (
    Abelianization,
    NormalSubgroupoid,
    QuotientResult,
    abelianize_groupoid,
    commutator_subgroupoid,
    enumerate_normal_subgroupoids,
    interior_isotropy,
    is_normal,
    normal_subgroupoid,
    quotient,
    quotient_preimage_of_units,
)
from .snf import SmithNormalForm, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "AlgebraHom", "AxiomViolation", "Abelianization",
    "Character", "CharacterFunctional", "CheckReport", "CheckResult",
    "CyclicDecomposition", "DocumentError", "DualBundle", "Echelon",
    "FiniteAbelianGroup", "FiniteGroup", "FiniteGroupoid", "GelfandMatrix",
    "NormalSubgroupoid", "NotInvariantError", "Qi", "QuotientResult",
    "SmithNormalForm",
    "abelian_fiber", "abelianization_dim", "abelianize_groupoid",
    "abelianized", "abelianized_fiber", "char_group_structure", "characters",
    "commutator_ideal", "commutator_subgroupoid", "convolve", "corpus_report",
    "cyclic", "decode_element", "decode_groupoid", "delta", "dihedral4",
    "disjoint_union", "dual_bundle", "duality_family_check",
    "encode_element", "encode_groupoid", "enumerate_characters",
    "enumerate_normal_subgroupoids", "file_report", "finite_abelian_group",
    "finite_group", "fixed_points", "from_coeffs", "gelfand_transform",
    "group_action", "group_bundle", "instance_checks", "interior_isotropy",
    "invariant_factors", "involute", "is_bisection", "is_effective",
    "is_group_bundle", "is_normal", "isotropy", "kernel_basis", "klein",
    "klein_cross", "make_groupoid", "normal_subgroupoid", "pair_groupoid",
    "pi_hom", "quaternion8", "quotient", "quotient_hom",
    "quotient_preimage_of_units", "random_groupoid", "regression_checks",
    "restrict", "restriction_hom", "s3_a3_bundle", "s3_point", "same_span",
    "smith_normal_form", "sym3", "transformation_groupoid",
    "trivial_groupoid", "unit_components", "unit_element", "validate",
]
