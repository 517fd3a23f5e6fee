"""Set families for column hashing in grid compression."""

from cardcnf.families.cover_free import (
    DEFAULT_FIELD_CONSTANT,
    build_cover_free_family,
    check_cover_free,
    cover_free_field_size,
    family_capacity,
    polynomial_degree_bound,
    reed_solomon_family,
    reed_solomon_points,
)
from cardcnf.families.hall import check_bounded_transversal, hall_failure_bound, sample_hall_family
from cardcnf.families.model import FamilyCheck, PrimeField, SetFamily
from cardcnf.families.sperner import build_sperner_pairs, sperner_degrees

__all__ = [
    "SetFamily",
    "PrimeField",
    "FamilyCheck",
    "sample_hall_family",
    "check_bounded_transversal",
    "hall_failure_bound",
    "build_cover_free_family",
    "cover_free_field_size",
    "DEFAULT_FIELD_CONSTANT",
    "reed_solomon_family",
    "reed_solomon_points",
    "check_cover_free",
    "family_capacity",
    "polynomial_degree_bound",
    "build_sperner_pairs",
    "sperner_degrees",
]
