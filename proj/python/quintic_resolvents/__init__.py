"""Numerical checks of twelve-valued root functions and resolvents of quintic equations."""

from ._core import (  # noqa: F401
    Degenerate,
    Error,
    InvalidInput,
    NumericFailure,
    VerificationFailure,
    a5_orbit,
    all_a5,
    all_s5,
    Perm5,
    apply,
    compose,
    degree12_poly,
    eval_f,
    eval_resolvent_form,
    f_family,
    find_roots,
    fit_abc,
    invariance_check,
    is_degenerate,
    phi,
    phi_quintic,
    phi_values,
    poly_from_roots,
    power_sum_check,
    random_instance,
    relation_rank,
    sextic_from_family,
    sqrt_discriminant,
    three_cycles,
    two_valuedness_check,
)

__version__ = "1.0.0"
