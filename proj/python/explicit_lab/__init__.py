"""Explicit formula laboratory: sieve, zeta, zeros and pairing checks."""

from ._core import (
    AccuracyError,
    AdmissibilityError,
    CapacityError,
    CoverageError,
    DomainError,
    Error,
    IllConditionedError,
    MangoldtTable,
    Measure,
    OrderError,
    ParseError,
    RangeError,
    ResourceError,
    TestFunction,
    ZeroTable,
    __version__,
    alpha,
    counting_check,
    digamma,
    dilated_gaussian,
    dirac_comb,
    find_zeros,
    fourier_quadrature,
    gaussian_pair,
    growth_profile,
    hermite_combo,
    hermite_fn,
    ingest_zeros_text,
    lemma_error_profile,
    load_zeros,
    log_gamma,
    mu_prime_side,
    nu_zero_side,
    pair,
    parse_test_function,
    pole_cancellation,
    probe,
    probe_closed_form,
    probe_series,
    rs_z,
    run_cli,
    serialize_zeros,
    sieve,
    theta,
    theta_prime,
    verify_pair,
    zeta,
    zeta_logderiv,
    zeta_prime,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
