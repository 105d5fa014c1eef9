"""The projective plane of order 3 and its ovals.

Run: python demos/01_plane.py
"""
from m13.plane import (automorphism_from_ovals, build_canonical_plane, canonical_oval,
                       enumerate_ordered_ovals, oval_frame, verify_no_hyperovals)

plane = build_canonical_plane()
print("lines of the self-dual labelling:")
for ell, pts in enumerate(plane.line_points):
    print(f"  l{ell:<2} = {set(pts)}")

# Incidence is symmetric: point x is on line y iff point y is on line x.
print("symmetric incidence:", (plane.incidence == plane.incidence.T).all())

# Moves need the two points completing a line.
print("complement of (0, 6):", set(plane.complement_pair(0, 6)))

ovals = enumerate_ordered_ovals()
print("ordered ovals:", len(ovals), " unordered:", len({frozenset(o) for o in ovals}))
print("no five points in general position:", verify_no_hyperovals())

# Every ordered oval determines a labelling of all 13 points ...
o = canonical_oval()
print("frame of", o, "->", oval_frame(o))

# ... and collineations act sharply transitively on ordered ovals.
g = automorphism_from_ovals(o, ovals[1000])
print("collineation sending", o, "to", ovals[1000], ":", g.point_map)
