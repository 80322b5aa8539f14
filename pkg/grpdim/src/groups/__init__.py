from .model import FiniteGroup, ElementOrderProfile, GroupFlags, CyclicLattice
from .builders import build_group, load_cayley_table, validate_table
from .profile import (
    big_omega,
    order_profile,
    order_counts,
    cyclic_lattice,
    signature_class,
    generated_subgroup,
)
from .catalog import builtin_catalog

__all__ = [
    "FiniteGroup",
    "ElementOrderProfile",
    "GroupFlags",
    "CyclicLattice",
    "build_group",
    "load_cayley_table",
    "validate_table",
    "big_omega",
    "order_profile",
    "order_counts",
    "cyclic_lattice",
    "signature_class",
    "generated_subgroup",
    "builtin_catalog",
]
