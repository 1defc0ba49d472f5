"""Exact verification of multiplier bimonoid and multiplier Hopf monoid laws."""

from .bimonoids import (
    MultiplierBimonoid, RegularStructure, check_bimonoid, check_regular, infer_regular,
)
from .exactlin import GF, QQ, LinMap, space
from .hopf import antipode_suite, check_hopf
from .instances import cyclic_table, function_algebra, group_algebra, symmetric_table

__version__ = "0.1.0"
