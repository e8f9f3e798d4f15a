"""
Partições de ℕ em blocos ℕ_i.
"""

from src.partition.schemes import (
    CantorPartition,
    DyadicPartition,
    PartitionScheme,
    available_schemes,
    bijection_sweep,
    block_prefix,
    cantor_partition,
    dyadic_partition,
    get_scheme,
)

__all__ = [
    "CantorPartition",
    "DyadicPartition",
    "PartitionScheme",
    "available_schemes",
    "bijection_sweep",
    "block_prefix",
    "cantor_partition",
    "dyadic_partition",
    "get_scheme",
]
