"""Generators, relations and Groebner leading terms of canonical rings of
Q-divisors on the projective line.

Fractions and points are passed as strings ("13/5", "inf"); fields are given
by their characteristic (0 for Q).
"""

from ._canring import (
    InputError,
    PointCollision,
    Unsupported,
    brute_force_oracle,
    degree_bounds,
    graded_dim,
    minimal_generators,
    minus_continued_fraction,
    presentation,
    stability_scan,
    two_point_presentation,
)

__all__ = [
    "InputError",
    "PointCollision",
    "Unsupported",
    "brute_force_oracle",
    "degree_bounds",
    "graded_dim",
    "minimal_generators",
    "minus_continued_fraction",
    "presentation",
    "stability_scan",
    "two_point_presentation",
]
