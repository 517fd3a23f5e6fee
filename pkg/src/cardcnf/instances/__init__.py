"""Benchmark instance families."""

from cardcnf.instances.families import (
    SUBSET_SIZE,
    VARIANTS,
    FamilyName,
    Instance,
    InstanceSpec,
    Status,
    gen_family_d,
    gen_family_l,
    gen_family_m,
    generate_instance,
)

__all__ = [
    "SUBSET_SIZE",
    "VARIANTS",
    "FamilyName",
    "Status",
    "InstanceSpec",
    "Instance",
    "gen_family_l",
    "gen_family_m",
    "gen_family_d",
    "generate_instance",
]
