"""Face calculus of highest weight modules over semisimple Lie algebras.

The closed-form routines live in :mod:`hwface.facecalc`; :mod:`hwface.oracle`
re-derives the same answers by enumerating weights.
"""
__version__ = "0.1.0"

from .errors import (
    HwfaceError,
    InputError,
    InvariantViolation,
    ResourceError,
    UnsupportedAssumptionError,
    ValidationError,
)
from .rootsystem import DynkinType, RootSystem, RootVector, Weight, build, from_cartan, parse_type, system
from .modulespec import CoordClass, ModuleSpec, make_spec, preset

__all__ = [
    "__version__",
    "HwfaceError",
    "InputError",
    "InvariantViolation",
    "ResourceError",
    "UnsupportedAssumptionError",
    "ValidationError",
    "DynkinType",
    "RootSystem",
    "RootVector",
    "Weight",
    "build",
    "from_cartan",
    "parse_type",
    "system",
    "CoordClass",
    "ModuleSpec",
    "make_spec",
    "preset",
]
