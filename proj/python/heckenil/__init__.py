"""Exact arithmetic for nilpotency indices of Hecke operators on modular forms mod p."""

from heckenil._core import (
    QSeries,
    PolyRep,
    SIndex,
    add,
    brute_force_tcore,
    degree_lower,
    euler_product,
    expand,
    f_basis_element,
    hecke_on_poly,
    hecke_t,
    inverse,
    kronecker,
    mul,
    named_form,
    nilpotency_index,
    ns_formula,
    power,
    power_partition_series,
    rho_projection,
    run_suite,
    sub,
    substitute,
    suite_names,
    tcore_series,
    theta_expansion,
    theta_op,
    thm13_bound,
    to_poly,
    truncate,
    u_op,
)

__all__ = [
    "QSeries", "PolyRep", "SIndex", "add", "brute_force_tcore", "degree_lower",
    "euler_product", "expand", "f_basis_element", "hecke_on_poly", "hecke_t",
    "inverse", "kronecker", "mul", "named_form", "nilpotency_index", "ns_formula",
    "power", "power_partition_series", "rho_projection", "run_suite", "sub",
    "substitute", "suite_names", "tcore_series", "theta_expansion", "theta_op",
    "thm13_bound", "to_poly", "truncate", "u_op",
]

__version__ = "0.1.0"
