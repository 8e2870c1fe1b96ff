"""Exact homological computations for bound quiver algebras over F_p."""
from .algebra import Arrow, PathAlgebra, Quiver, build_algebra
from .fixtures import FIXTURE_NAMES, fixture
from .modules import Module, ModuleMap, ShortExactSequence, settings
from .verdict import Verdict, at_least, finite, infinite

__version__ = "0.1.0"

__all__ = ["Arrow", "Quiver", "PathAlgebra", "build_algebra", "fixture", "FIXTURE_NAMES",
           "Module", "ModuleMap", "ShortExactSequence", "settings", "Verdict", "finite",
           "at_least", "infinite"]
