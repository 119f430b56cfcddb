"""Subgroup lattices and non-cyclic subgroup counts of finite p-groups."""

from __future__ import annotations

__version__ = "0.1.0"

from .group_core import GroupError, GroupTable, OrderCapError, SubgroupMask  # noqa: E402
from .lattice import SubgroupLattice, enumerate_subgroups  # noqa: E402
from .spec_language import SpecParseError, build_group, canonical  # noqa: E402

__all__ = [
    "GroupError",
    "GroupTable",
    "OrderCapError",
    "SpecParseError",
    "SubgroupLattice",
    "SubgroupMask",
    "__version__",
    "build_group",
    "canonical",
    "enumerate_subgroups",
]
