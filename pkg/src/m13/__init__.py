"""The M13 sliding-counter game on the projective plane of order 3.

Submodules: ``plane`` (incidence structure), ``perms`` (permutations and
signed permutations), ``game`` (moves, positions, paths), ``codes`` (ternary
codes), ``hadamard`` (12x12 Hadamard matrices), ``search`` (breadth-first
depth databases), ``solver`` (short move sequences) and ``transitivity``
(sextuple checks).
"""
from m13.game import (BasicPosition, SignedPosition, path_to_perm, path_to_signed_perm,
                      play, reduce_path)
from m13.perms import Perm13, PermError, SignedPerm13
from m13.plane import build_canonical_plane
from m13.search import DepthDatabase, bfs
from m13.solver import NotInPseudogroupError, SolveResult, solve_basic, solve_signed

__version__ = "0.1.0"

__all__ = [
    "BasicPosition", "DepthDatabase", "NotInPseudogroupError", "Perm13", "PermError",
    "SignedPerm13", "SignedPosition", "SolveResult", "bfs", "build_canonical_plane",
    "path_to_perm", "path_to_signed_perm", "play", "reduce_path", "solve_basic", "solve_signed",
]
