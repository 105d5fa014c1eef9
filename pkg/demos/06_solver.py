"""Solving positions without and with a depth database.

Run: python demos/06_solver.py
"""
import random

from m13.game import path_to_perm, random_nondegenerate_path
from m13.perms import Perm13
from m13.search import BASIC, bfs
from m13.solver import DATABASE, NotInPseudogroupError, build_meet_lists, solve_basic

lists = build_meet_lists()
print(f"meet lists: {len(lists)} elements from {lists.raw_path_count} paths of length 4")

print(solve_basic(Perm13.parse("(1 7 12 6 8)(3 4 10 5 9)")))
print(solve_basic(Perm13.parse("(1 3 2)(4 6 5)(7 8 12)")), "(a depth-9 element)")
try:
    solve_basic(Perm13.parse("(1 2)"))
except NotInPseudogroupError as exc:
    print("(1 2):", exc)

db = bfs(BASIC)
rng = random.Random(1)
for _ in range(5):
    target = path_to_perm(random_nondegenerate_path(rng, 12))
    quick, best = solve_basic(target), solve_basic(target, DATABASE, db)
    print(f"{str(target):<45} meet-in-middle {quick.length}, optimal {best.length}")
