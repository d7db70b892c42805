"""Exact computation of equivariant sl(n) link homology over Q[a_0, ..., a_{n-2}]."""

from .ring import Poly, VarId
from .mf import MatrixFactorization, MFMorphism
from .graphs import MOYGraph, LoopAlgebra, chi_maps
from .link import LinkDiagram, assemble, build_cube, parse_braid, parse_pd
from .homology import HomologyReport, compute, euler_characteristic, invariance_check

__all__ = [
    "Poly", "VarId", "MatrixFactorization", "MFMorphism", "MOYGraph", "LoopAlgebra", "chi_maps",
    "LinkDiagram", "assemble", "build_cube", "parse_braid", "parse_pd",
    "HomologyReport", "compute", "euler_characteristic", "invariance_check",
]
