"""Exact coherent information of Pauli channels with stabilizer-code inputs."""

from .enumerator import (
    EnumeratorTable,
    TypeCountEnumerator,
    build_table,
    cached_table,
    enumerate_by_cosets,
    enumerate_full_scan,
    weight_marginal,
)
from .pauli import (
    PauliOperator,
    format_pauli,
    multiply,
    parse_pauli,
    symplectic_product,
    type_counts,
)
from .spectra import (
    ChannelParams,
    Spectrum,
    ci_curve,
    coherent_info_per_use,
    entropy,
    eta,
    group_spectrum,
    hashing_bound,
    joint_spectrum,
    output_spectrum,
    table1_reference,
)
from .stabilizer import (
    BUILTIN_CODES,
    CosetLabel,
    StabilizerCode,
    coset_label,
    load_code,
    parse_code,
    validate_code,
)

__version__ = "0.1.0"

__all__ = [
    "build_table",
    "BUILTIN_CODES",
    "cached_table",
    "ChannelParams",
    "ci_curve",
    "coherent_info_per_use",
    "coset_label",
    "CosetLabel",
    "entropy",
    "enumerate_by_cosets",
    "enumerate_full_scan",
    "EnumeratorTable",
    "eta",
    "format_pauli",
    "group_spectrum",
    "hashing_bound",
    "joint_spectrum",
    "load_code",
    "multiply",
    "output_spectrum",
    "parse_code",
    "parse_pauli",
    "PauliOperator",
    "Spectrum",
    "StabilizerCode",
    "symplectic_product",
    "table1_reference",
    "type_counts",
    "TypeCountEnumerator",
    "validate_code",
    "weight_marginal",
]
