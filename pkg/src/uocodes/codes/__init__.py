from .canonical import are_isometric, canonical_form
from .construct import UnsupportedParameters, construct
from .core import (
    Code,
    complement,
    distance_distribution,
    distance_profiles,
    energy,
    extend,
    is_distance_regular,
    puncture,
    shorten,
    whole_space_code,
)

__all__ = [
    "Code",
    "UnsupportedParameters",
    "are_isometric",
    "canonical_form",
    "complement",
    "construct",
    "distance_distribution",
    "distance_profiles",
    "energy",
    "extend",
    "is_distance_regular",
    "puncture",
    "shorten",
    "whole_space_code",
]
