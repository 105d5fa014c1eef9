"""Hadamard matrices from the incidence matrix, and the outer automorphism.

Run: python demos/04_hadamard.py
"""
from m13 import tables
from m13.game import dual_moves
from m13.hadamard import build_E, build_H, play_on_matrix, theta_report

E = build_E()
print("E E^T diagonal:", E.gram().diagonal()[:3], "... off-diagonal:", E.gram()[0, 1])

H = build_H(0, 0)
print(H.dump(), end="")
print("Hadamard:", H.is_hadamard())

# Moves of the dualized game carry H(p, l) to H at the new hole pair.
moved = play_on_matrix(H, dual_moves((0, 6, 12), 0))
print("after [0,6,12]: hole pair", (moved.missing_row, moved.missing_col),
      "equals H there:", moved == build_H(moved.missing_row, moved.missing_col))

r = theta_report()
print("centralizer of alpha1:", r.centralizer_size, "elements")
print("common centralizer:", [str(c) for c in r.common_centralizer])
print("swap pair", [str(s) for s in r.swap_pair], "conjugate under witness:", r.swap_conjugate)
