"""Jordan-type calculus for order-p unipotent elements of SL2-modules and
unicity tests for A1-overgroups in simple algebraic groups."""

from .atlas import (
    AtlasVerdict,
    AtlasVerdictKind,
    ExceptionalGroup,
    ExceptionalType,
    group,
    known_labels,
    list_unique,
    verdict,
)
from .classical import (
    Family,
    GroupFamily,
    Partition,
    SL,
    SO,
    Sp,
    Verdict,
    VerdictKind,
    is_order_p,
    reduction_shape,
    unicity_verdict,
    validate,
    witnesses,
)
from .enumerator import (
    EmbeddingClass,
    EnumerationResult,
    canonicalize,
    dn_partition_list,
    enumerate_embeddings,
    jordan_menu,
)
from .ffmatrix import PrimeField
from .jordan import (
    JordanType,
    jordan_type_of_unipotent,
    summand_profile,
    tensor,
    tensor_multi,
    tensor_pair,
    tensor_pair_oracle,
)
from .sl2modules import (
    Doubled,
    FormType,
    Irr,
    IrreducibleDescriptor,
    IrreducibleFactor,
    ModuleDescriptor,
    Tilting,
    Trivial,
    Weyl,
    admits_form,
    dimension,
    form_type,
    format_descriptor,
    jordan_type,
    parse_descriptor,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "AtlasVerdict",
    "AtlasVerdictKind",
    "Doubled",
    "EmbeddingClass",
    "EnumerationResult",
    "ExceptionalGroup",
    "ExceptionalType",
    "Family",
    "FormType",
    "GroupFamily",
    "Irr",
    "IrreducibleDescriptor",
    "IrreducibleFactor",
    "JordanType",
    "ModuleDescriptor",
    "Partition",
    "PrimeField",
    "SL",
    "SO",
    "Sp",
    "Tilting",
    "Trivial",
    "Verdict",
    "VerdictKind",
    "Weyl",
    "admits_form",
    "canonicalize",
    "dimension",
    "dn_partition_list",
    "enumerate_embeddings",
    "form_type",
    "format_descriptor",
    "group",
    "is_order_p",
    "jordan_menu",
    "jordan_type",
    "jordan_type_of_unipotent",
    "known_labels",
    "list_unique",
    "parse_descriptor",
    "realize",
    "reduction_shape",
    "summand_profile",
    "tensor",
    "tensor_multi",
    "tensor_pair",
    "tensor_pair_oracle",
    "unicity_verdict",
    "validate",
    "verdict",
    "witnesses",
]
