"""Cohomology rings of finite precubical sets."""

from ._cubcoh import (
    Error,
    PrecubicalSet,
    builtin,
    builtin_names,
    check,
    coboundary,
    cohomology,
    cup,
    parse,
    property_names,
    read,
    ring_table,
    serialize,
    smith_normal_form,
    standard_cube,
    tensor_product,
    torus,
    validate,
)

__all__ = [
    "Error",
    "PrecubicalSet",
    "builtin",
    "builtin_names",
    "check",
    "coboundary",
    "cohomology",
    "cup",
    "parse",
    "property_names",
    "read",
    "ring_table",
    "serialize",
    "smith_normal_form",
    "standard_cube",
    "tensor_product",
    "torus",
    "validate",
]
