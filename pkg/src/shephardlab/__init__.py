"""Exact verification toolkit for Shephard and Coxeter reflection groups.

Provides cyclotomic arithmetic, enumerated reflection groups from a shipped
catalog, invariant theory (basic and relative invariants, coinvariant
algebras), coset-complex topology, and a CLI that runs the whole battery of
identity checks per group.
"""

from .field import Cyclotomic, Rational, cyclo_reduce, cyclo_conj, euler_phi
from .linalg import MatrixExact, mat_rank, mat_solve, invariant_subspace_trace, NoSolution
from .symbols import ShephardSymbol, parse_symbol, SymbolError
from .groups import GroupSpec, ReflectionGroup, generate_group, verify_presentation
from .catalog import catalog_lookup, available, UnknownGroup
from .multipoly import Poly, act, reynolds, partial, jacobian, hessian, molien_series

__version__ = "0.1.0"
