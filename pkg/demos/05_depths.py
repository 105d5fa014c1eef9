"""Breadth-first search over every position of both games.

Takes about 30 s and 1 GB.  Run: python demos/05_depths.py
"""
import time

from m13.perms import Perm13
from m13.search import BASIC, SIGNED, bfs, max_depth_group, verify_antipodes

for kind in (BASIC, SIGNED):
    t = time.perf_counter()
    db = bfs(kind)
    print(f"{kind}: {len(db)} positions in {time.perf_counter() - t:.1f}s")
    print(db.histogram_csv())
    if kind == BASIC:
        print("deepest closed elements:", sorted(map(str, max_depth_group(db))))
        sigma = Perm13.parse("(1 7 12 6 8)(3 4 10 5 9)")
        print("depth of", sigma, "=", db.depth_query(sigma), "via", db.path_from_db(sigma))
    else:
        rep = verify_antipodes(db)
        print("depth(s) + depth(-s) >= ", rep.min_sum)
