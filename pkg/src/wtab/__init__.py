"""Tables, row swaps and Robinson-Schensted for W-algebra highest weights."""

from .entry import Cmp, Entry, cmp_partial, entries, entry
from .frames import Frame, Partition, SFrame, coordinate_table, permute_rows, pyramid, symmetric_pyramid, validate_frame
from .rs import Tableau, greene_shape, rs_class, rs_tableau, same_annihilator
from .sgnperm import SignedPerm
from .stables import (
    STable,
    c_central,
    c_j,
    component_orbit,
    is_fd_evenmult,
    iso_evenmult,
    make_stable,
    restricted_weyl_data,
    sbar_star,
    sharp_element,
    wstar_act,
)
from .swaps import is_fd_typeA, iso_typeA, star_act, swap_adjacent, verify_star_well_defined
from .tables import RowClass, Table, canonical_rows, column_strict_witness, is_column_strict, left_justify, make_table, word

__version__ = "0.1.0"

__all__ = [
    "Cmp",
    "Entry",
    "Frame",
    "Partition",
    "RowClass",
    "SFrame",
    "STable",
    "SignedPerm",
    "Table",
    "Tableau",
    "c_central",
    "c_j",
    "canonical_rows",
    "cmp_partial",
    "column_strict_witness",
    "component_orbit",
    "coordinate_table",
    "entries",
    "entry",
    "greene_shape",
    "is_column_strict",
    "is_fd_evenmult",
    "is_fd_typeA",
    "iso_evenmult",
    "iso_typeA",
    "left_justify",
    "make_stable",
    "make_table",
    "permute_rows",
    "pyramid",
    "restricted_weyl_data",
    "rs_class",
    "rs_tableau",
    "same_annihilator",
    "sbar_star",
    "sharp_element",
    "star_act",
    "swap_adjacent",
    "symmetric_pyramid",
    "validate_frame",
    "verify_star_well_defined",
    "word",
    "wstar_act",
]
