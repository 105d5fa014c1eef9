"""The projective plane of order 3 under a fixed self-dual labelling.

Points and lines are both labelled ``0..12``.  The labelling is self-dual:
point ``x`` lies on line ``y`` exactly when point ``y`` lies on line ``x``,
so the same tables serve the point game and the line game.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from m13.tables import CANONICAL_LINES

N = 13
POINTS = tuple(range(N))
LINES = tuple(range(N))

# Names used by the labelling built from an ordered oval.
FRAME_NAMES = ("q1", "q2", "q3", "q4", "r1", "r2", "r3",
               "s12", "s13", "s14", "s23", "s24", "s34")

# Lines of the oval frame, as name triples/quadruples.
FRAME_LINES = (
    ("q1", "q2", "r1", "s12"), ("q1", "q3", "r2", "s13"),
    ("q1", "q4", "r3", "s14"), ("q2", "q3", "r3", "s23"),
    ("q2", "q4", "r2", "s24"), ("q3", "q4", "r1", "s34"),
    ("q1", "s23", "s24", "s34"), ("q2", "s13", "s14", "s34"),
    ("q3", "s12", "s14", "s24"), ("q4", "s12", "s13", "s23"),
    ("r1", "r2", "s14", "s23"), ("r1", "r3", "s13", "s24"),
    ("r2", "r3", "s12", "s34"),
)


class PlaneError(ValueError):
    """Raised on degenerate or ill-formed incidence queries."""


def point(label: int) -> int:
    """Validate a point (or line) label and return it as an ``int``."""
    label = int(label)
    if not 0 <= label < N:
        raise PlaneError(f"label {label} outside 0..12")
    return label


line = point


@dataclass(frozen=True, eq=False)
class PlaneModel:
    """Incidence tables of the plane.

    ``pair_to_line[p, q]`` is the line through ``p`` and ``q`` and
    ``pair_to_complement[p, q]`` the two remaining points of that line
    (both ``-1`` on the diagonal).
    """

    line_points: tuple[tuple[int, ...], ...]
    point_lines: tuple[tuple[int, ...], ...]
    incidence: np.ndarray
    pair_to_line: np.ndarray
    pair_to_complement: np.ndarray

    def line_through(self, p: int, q: int) -> int:
        p, q = point(p), point(q)
        if p == q:
            raise PlaneError(f"degenerate pair ({p}, {p})")
        return int(self.pair_to_line[p, q])

    def complement_pair(self, p: int, q: int) -> frozenset[int]:
        p, q = point(p), point(q)
        if p == q:
            raise PlaneError(f"degenerate pair ({p}, {p})")
        r, s = self.pair_to_complement[p, q]
        return frozenset((int(r), int(s)))

    def lines_through(self, p: int) -> frozenset[int]:
        return frozenset(self.point_lines[point(p)])

    def points_on(self, ell: int) -> frozenset[int]:
        return frozenset(self.line_points[line(ell)])

    def collinear(self, *pts: int) -> bool:
        """True if all given points lie on one line (repeats allowed)."""
        distinct = set(pts)
        if len(distinct) <= 2:
            return True
        a, b = sorted(distinct)[:2]
        return distinct <= set(self.line_points[self.pair_to_line[a, b]])

    def meet(self, ell: int, m: int) -> int:
        """The intersection point of two distinct lines."""
        ell, m = line(ell), line(m)
        if ell == m:
            raise PlaneError(f"degenerate pair of lines ({ell}, {ell})")
        # self-duality: the meet of lines ell, m is the join of points ell, m
        return int(self.pair_to_line[ell, m])

    def to_json(self) -> str:
        return json.dumps({"lines": [list(pts) for pts in self.line_points]})


def _check_axioms(line_points, incidence) -> None:
    if len(line_points) != N or incidence.shape != (N, N):
        raise AssertionError("plane must have 13 points and 13 lines")
    if not (incidence.sum(axis=0) == 4).all() or not (incidence.sum(axis=1) == 4).all():
        raise AssertionError("every line needs 4 points and every point 4 lines")
    # two points share exactly one line; two lines share exactly one point
    pp = incidence @ incidence.T
    ll = incidence.T @ incidence
    off = ~np.eye(N, dtype=bool)
    if not (pp[off] == 1).all() or not (ll[off] == 1).all():
        raise AssertionError("join/meet axioms fail")
    if not (incidence == incidence.T).all():
        raise AssertionError("labelling is not self-dual")


@lru_cache(maxsize=None)
def build_canonical_plane() -> PlaneModel:
    line_points = tuple(tuple(sorted(pts)) for pts in CANONICAL_LINES)
    incidence = np.zeros((N, N), dtype=np.int64)   # [point, line]
    for ell, pts in enumerate(line_points):
        incidence[list(pts), ell] = 1
    _check_axioms(line_points, incidence)

    point_lines = tuple(tuple(int(j) for j in np.flatnonzero(incidence[p])) for p in POINTS)
    pair_to_line = np.full((N, N), -1, dtype=np.int8)
    pair_to_complement = np.full((N, N, 2), -1, dtype=np.int8)
    for ell, pts in enumerate(line_points):
        for p, q in permutations(pts, 2):
            pair_to_line[p, q] = ell
            pair_to_complement[p, q] = [x for x in pts if x not in (p, q)]
    for arr in (incidence, pair_to_line, pair_to_complement):
        arr.setflags(write=False)
    return PlaneModel(line_points, point_lines, incidence.astype(np.int8),
                      pair_to_line, pair_to_complement)


def is_oval(pts, plane: PlaneModel | None = None) -> bool:
    """Distinct points, no three collinear."""
    plane = plane or build_canonical_plane()
    if len(set(pts)) != len(pts):
        return False
    return not any(plane.collinear(*t) for t in combinations(pts, 3))


def enumerate_ordered_ovals(plane: PlaneModel | None = None) -> list[tuple[int, int, int, int]]:
    plane = plane or build_canonical_plane()
    out = []
    for a in POINTS:
        for b in POINTS:
            if b == a:
                continue
            ab = plane.line_points[plane.pair_to_line[a, b]]
            for c in POINTS:
                if c in ab:
                    continue
                ac = plane.line_points[plane.pair_to_line[a, c]]
                bc = plane.line_points[plane.pair_to_line[b, c]]
                for d in POINTS:
                    if d not in ab and d not in ac and d not in bc:
                        out.append((a, b, c, d))
    return out


def verify_no_hyperovals(plane: PlaneModel | None = None) -> bool:
    plane = plane or build_canonical_plane()
    return not any(is_oval(s, plane) for s in combinations(POINTS, 5))


def oval_frame(oval, plane: PlaneModel | None = None) -> dict[str, int]:
    """Label all 13 points relative to an ordered oval ``(q1, q2, q3, q4)``.

    ``r1, r2, r3`` are the diagonal points where opposite secants meet and
    ``s_ij`` is the fourth point of the secant through ``q_i`` and ``q_j``.
    """
    plane = plane or build_canonical_plane()
    oval = tuple(point(x) for x in oval)
    if len(oval) != 4 or not is_oval(oval, plane):
        raise PlaneError(f"{oval} is not an ordered oval")
    q = dict(zip((1, 2, 3, 4), oval))
    sec = {(i, j): plane.line_through(q[i], q[j]) for i, j in combinations((1, 2, 3, 4), 2)}
    frame = {f"q{i}": q[i] for i in q}
    frame["r1"] = plane.meet(sec[1, 2], sec[3, 4])
    frame["r2"] = plane.meet(sec[1, 3], sec[2, 4])
    frame["r3"] = plane.meet(sec[1, 4], sec[2, 3])
    r = {frame["r1"], frame["r2"], frame["r3"]}
    for (i, j), ell in sec.items():
        (s,) = set(plane.line_points[ell]) - {q[i], q[j]} - r
        frame[f"s{i}{j}"] = s
    if sorted(frame.values()) != list(POINTS):
        raise AssertionError("oval frame does not cover the plane")
    return frame


@dataclass(frozen=True)
class PlaneAutomorphism:
    """A collineation, stored by its action on points."""

    point_map: tuple[int, ...]

    def __post_init__(self):
        plane = build_canonical_plane()
        if sorted(self.point_map) != list(POINTS):
            raise PlaneError("point map is not a bijection")
        images = {frozenset(self.point_map[x] for x in pts) for pts in plane.line_points}
        if images != {frozenset(pts) for pts in plane.line_points}:
            raise PlaneError("point map does not preserve incidence")

    def __call__(self, p: int) -> int:
        return self.point_map[p]

    def line_map(self) -> tuple[int, ...]:
        plane = build_canonical_plane()
        index = {frozenset(pts): ell for ell, pts in enumerate(plane.line_points)}
        return tuple(index[frozenset(self.point_map[x] for x in pts)]
                     for pts in plane.line_points)

    def __matmul__(self, other: PlaneAutomorphism) -> PlaneAutomorphism:
        """``(self @ other)(p) == self(other(p))``."""
        return PlaneAutomorphism(tuple(self.point_map[other.point_map[p]] for p in POINTS))


def automorphism_from_ovals(src, dst, plane: PlaneModel | None = None) -> PlaneAutomorphism:
    """The unique collineation carrying ordered oval ``src`` to ``dst``."""
    plane = plane or build_canonical_plane()
    a, b = oval_frame(src, plane), oval_frame(dst, plane)
    mapping = [0] * N
    for name in FRAME_NAMES:
        mapping[a[name]] = b[name]
    return PlaneAutomorphism(tuple(mapping))


def canonical_oval(plane: PlaneModel | None = None) -> tuple[int, int, int, int]:
    """The lexicographically least ordered oval."""
    return min(enumerate_ordered_ovals(plane))
