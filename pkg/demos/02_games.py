"""Playing the basic, signed and dualized games.

Run: python demos/02_games.py
"""
from m13 import tables
from m13.game import (BasicPosition, DualPosition, apply_basic_move, dual_moves,
                      dual_path_to_perm_pair, path_to_perm, path_to_signed_perm, reduce_path)

# One move: the hole at 0 jumps to 6, and 4 and 5 swap places.
pos = apply_basic_move(BasicPosition.start(), 6)
print("after [0,6]: counter on each point =", pos.counter_at)

path = tables.EXAMPLE_PATH
print("path", list(path), "induces", path_to_perm(path))
print("signed version:", path_to_signed_perm(path))

# Collinear triples can be short-cut.
print("reduce [0,1,2,5,0] ->", list(reduce_path((0, 1, 2, 5, 0))))

# This closed path turns every counter over without moving it.
print("minus identity:", path_to_signed_perm(tables.MINUS_ID_PATH))

# Dualized game: line counters move too, and the point hole stays on the line hole.
moves = dual_moves(path, 0)
print("interleaved moves:", moves)
final = DualPosition().play(moves)
print("points:", final.points.to_perm(), " lines:", final.lines.to_perm())
print("pair from [0,1,5,0]:", *dual_path_to_perm_pair((0, 1, 5, 0)))
