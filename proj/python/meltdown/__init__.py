"""Logarithms rebuilt from +, -, *, / and Heron square roots."""

from ._core import (
    BoundedValue,
    DyadicExponent,
    LogTable,
    LogValue,
    MeltdownError,
    RadixNumeral,
    RootLadder,
    SqrtTrace,
    antilog_dyadic,
    build_ladder,
    build_table,
    convert_base,
    discover_e,
    format_sig,
    fractional_digits,
    from_radix,
    heron_sqrt,
    int_pow,
    limit_sequence,
    log_dyadic,
    log_product_check,
    lookup_antilog,
    multiply_via_logs,
    riemann_ln,
    rung_epsilon,
    slope_log10,
    slope_log_p,
    to_radix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
