"""Exact construction and rank analysis of equivariant spaces of matrices."""

from .cartan import RootSystem, RootSystemSpec, build_root_system
from .irrep import WeightModule, build_irrep, build_sl2, weyl_dim
from .tensor import HomModule, LinearMatrixSpace, decompose, primitive_space

__version__ = "0.1.0"
