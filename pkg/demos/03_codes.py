"""Ternary codes from the lines of the plane.

Run: python demos/03_codes.py
"""
from m13 import tables
from m13.codes import (build_C, build_Cprime, format_word, move_linear_action, restrict_Gp,
                       signed_perm_preserves_G0, verify_code_transport, build_Cp)
from m13.game import path_to_signed_perm

C, Cp = build_C(), build_Cprime()
print("dim C =", C.dimension, " dim C' =", Cp.dimension, " C' = dual(C):", Cp == C.dual())
print("weight distribution of C:", C.weight_distribution())

for p in (0, 7):
    g = restrict_Gp(p)
    print(f"G_{p}: length {g.length}, dim {g.dimension}, self-dual {g.is_self_dual()},",
          "weights", g.weight_distribution())

# A move [p,q] carries C_p onto C_q.
print("all 156 transports hold:",
      all(verify_code_transport(p, q) for p in range(13) for q in range(13) if p != q))
w = build_Cp(0).basis[0]
print(format_word(w), "--[0,6]-->", format_word(move_linear_action(0, 6, w)))

# Closed signed paths act on G_0 as signed coordinate permutations.
print("minus identity preserves G_0:", signed_perm_preserves_G0(path_to_signed_perm(tables.MINUS_ID_PATH)))
