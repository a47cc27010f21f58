"""Coined quantum walks on the half line and the line."""

from ._qwalk import (
    Coin,
    FormulaDomainError,
    InvalidArgument,
    IoError,
    PrecisionError,
    ResourceError,
    approx_prob,
    cdf,
    density,
    exact,
    figure,
    figure_ids,
    ks_distance,
    make_coin,
    oracle,
    simulate,
    verify,
)

__all__ = [
    "Coin",
    "FormulaDomainError",
    "InvalidArgument",
    "IoError",
    "PrecisionError",
    "ResourceError",
    "approx_prob",
    "cdf",
    "density",
    "exact",
    "figure",
    "figure_ids",
    "ks_distance",
    "make_coin",
    "oracle",
    "simulate",
    "verify",
]
