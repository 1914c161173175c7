"""Exact counts of reducible, powerful, and relatively irreducible monic
multivariate polynomials over finite fields."""

from ._polycount import (
    QPoly,
    binom_b,
    check_bounds_json,
    count_abs_irreducible,
    count_all,
    count_irreducible,
    count_powerful,
    count_reducible,
    count_reducible_by_patterns,
    count_rel_irreducible,
    galois_image,
    mobius,
    oracle_monic,
    oracle_powerful,
    oracle_reducible,
    oracle_rel_irreducible,
    partitions,
    patterns,
    report_json,
)

__all__ = [
    "QPoly",
    "binom_b",
    "check_bounds_json",
    "count_abs_irreducible",
    "count_all",
    "count_irreducible",
    "count_powerful",
    "count_reducible",
    "count_reducible_by_patterns",
    "count_rel_irreducible",
    "galois_image",
    "mobius",
    "oracle_monic",
    "oracle_powerful",
    "oracle_reducible",
    "oracle_rel_irreducible",
    "partitions",
    "patterns",
    "report_json",
]
