"""Exact covering computations for finite groups.

Groups are named as on the command line: ``sym:N`` and ``alt:N`` use exact
character tables, ``oracle:sym:N``, ``oracle:alt:N``, ``psl:2:Q`` and
``file:PATH`` enumerate a permutation group.
"""

from ._covering import (
    ArgumentError,
    CapabilityError,
    DomainError,
    Group,
    InternalError,
    ResourceError,
    __version__,
    budget_threshold,
    delta,
    greedy_blocks,
    partition_count,
    partitions,
    zeta,
)

__all__ = [
    "ArgumentError",
    "CapabilityError",
    "DomainError",
    "Group",
    "InternalError",
    "ResourceError",
    "__version__",
    "budget_threshold",
    "delta",
    "greedy_blocks",
    "partition_count",
    "partitions",
    "zeta",
]
