"""Exact lattice algorithms: classes, Cremona action, reduction, base locus."""

from .lattice import (
    anticanonical_degree,
    decompose_standard,
    intersect,
    is_standard_form,
    make_curve,
    make_divisor,
    minus_one_curve,
    pair_excess,
)
from .cremona import cremona_curve, cremona_divisor, cremona_minus_one, sort_descending
from .reduction import (
    dimension,
    fixed_components,
    h1_standard,
    reduce_to_standard,
    transport_divisor_back,
)
from .baselocus import (
    base_locus,
    base_locus_standard,
    enumerate_base_curves,
    transport_cross_check,
)

__all__ = [
    "anticanonical_degree",
    "decompose_standard",
    "intersect",
    "is_standard_form",
    "make_curve",
    "make_divisor",
    "minus_one_curve",
    "pair_excess",
    "cremona_curve",
    "cremona_divisor",
    "cremona_minus_one",
    "sort_descending",
    "dimension",
    "fixed_components",
    "h1_standard",
    "reduce_to_standard",
    "transport_divisor_back",
    "base_locus",
    "base_locus_standard",
    "enumerate_base_curves",
    "transport_cross_check",
]
