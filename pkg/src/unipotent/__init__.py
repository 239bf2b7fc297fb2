"""Exact combinatorics of unipotent classes in finite classical groups.

Cuspidal class classification and minimal a-values, duality (conjugation
and the type-D symbol route), Lusztig-Spaltenstein induction of class
labels, Harish-Chandra series bounding, and parameterised approximate
decomposition matrices, all in exact integer arithmetic.
"""

from .cuspidal import (
    ClassLabel,
    a_min_closed_form,
    a_min_exceptional,
    a_value,
    centralizer_dim,
    dual_class,
    enumerate_cuspidal,
    is_cuspidal,
    minimal_cuspidal,
)
from .cyclotomic import EllClass, ell_class_from
from .dectables import dec_small, dec_table, degree_gap_bound
from .groups import GroupSpec, RankDecomposition, parse_group, rank_decompose
from .hc_bound import LeviType, cuspidal_brauer_data, enumerate_levi_types, hc_series_bound
from .induction import exceptional_induction, induce_same_family
from .partitions import Partition, all_partitions
from .symbols_d import DSymbol, a_dual_via_symbol, s_min_symbol, springer_symbol

__all__ = [
    "ClassLabel",
    "DSymbol",
    "EllClass",
    "GroupSpec",
    "LeviType",
    "Partition",
    "RankDecomposition",
    "a_dual_via_symbol",
    "a_min_closed_form",
    "a_min_exceptional",
    "a_value",
    "all_partitions",
    "centralizer_dim",
    "cuspidal_brauer_data",
    "dec_small",
    "dec_table",
    "degree_gap_bound",
    "dual_class",
    "ell_class_from",
    "enumerate_cuspidal",
    "enumerate_levi_types",
    "exceptional_induction",
    "hc_series_bound",
    "induce_same_family",
    "is_cuspidal",
    "minimal_cuspidal",
    "parse_group",
    "rank_decompose",
    "s_min_symbol",
    "springer_symbol",
]

__version__ = "0.1.0"
