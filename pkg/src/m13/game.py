"""Positions, moves and paths of the basic, signed and dualized games.

The hole starts at point 0 and counters ``1..12`` on the like-numbered
points.  With the hole at ``p``, the move to ``q`` slides the counter on
``q`` into ``p`` and swaps the counters on the other two points ``r, s`` of
the line through ``p`` and ``q``; in the signed game those two counters are
also turned over.  A path ``[p0, ..., pn]`` lists the successive hole
locations.  Throughout, the hole itself is treated as "counter 0".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from m13.perms import N, Perm13, SignedPerm13
from m13.plane import PlaneError, build_canonical_plane, point

Path = tuple[int, ...]


class GameError(ValueError):
    pass


def _plane():
    return build_canonical_plane()


def as_path(points: Sequence[int]) -> Path:
    return tuple(point(p) for p in points)


# -- single moves --------------------------------------------------------------

def move_perm(p: int, q: int) -> Perm13:
    """The double transposition ``(p q)(r s)`` induced by one move."""
    if p == q:
        return Perm13.identity()
    r, s = _plane().pair_to_complement[p, q]
    return Perm13.transposition_pair(p, q, int(r), int(s))


def signed_move_perm(p: int, q: int) -> SignedPerm13:
    if p == q:
        return SignedPerm13.identity()
    r, s = _plane().pair_to_complement[p, q]
    flip = [False] * N
    flip[r] = flip[s] = True
    return SignedPerm13(Perm13.transposition_pair(p, q, int(r), int(s)), tuple(flip))


# -- positions -----------------------------------------------------------------

@dataclass(frozen=True)
class BasicPosition:
    """``counter_at[x]`` is the counter on point ``x``; 0 marks the hole."""

    counter_at: tuple[int, ...] = tuple(range(N))

    def __post_init__(self):
        if sorted(self.counter_at) != list(range(N)):
            raise GameError(f"{self.counter_at} is not a placement of 13 counters")

    @property
    def hole(self) -> int:
        return self.counter_at.index(0)

    @classmethod
    def start(cls) -> BasicPosition:
        return cls()

    @classmethod
    def from_perm(cls, sigma: Perm13) -> BasicPosition:
        """Placement reached by a path inducing ``sigma``."""
        return cls(sigma.inverse().image)

    def to_perm(self) -> Perm13:
        return Perm13(self.counter_at).inverse()


@dataclass(frozen=True)
class SignedPosition:
    """Basic placement plus ``flipped[c]`` for each counter id ``c``."""

    counter_at: tuple[int, ...] = tuple(range(N))
    flipped: tuple[bool, ...] = (False,) * N

    def __post_init__(self):
        if sorted(self.counter_at) != list(range(N)):
            raise GameError(f"{self.counter_at} is not a placement of 13 counters")
        if len(self.flipped) != N or self.flipped[0]:
            raise GameError("flip bits are per counter 0..12 and the hole cannot flip")

    @property
    def hole(self) -> int:
        return self.counter_at.index(0)

    @classmethod
    def start(cls) -> SignedPosition:
        return cls()

    @classmethod
    def from_signed_perm(cls, sigma: SignedPerm13) -> SignedPosition:
        return cls(sigma.perm.inverse().image, sigma.flip)

    def to_signed_perm(self) -> SignedPerm13:
        return SignedPerm13(Perm13(self.counter_at).inverse(), self.flipped)

    def unsigned(self) -> BasicPosition:
        return BasicPosition(self.counter_at)


def apply_basic_move(pos: BasicPosition, q: int) -> BasicPosition:
    p = pos.hole
    q = point(q)
    if q == p:
        return pos
    r, s = _plane().pair_to_complement[p, q]
    c = list(pos.counter_at)
    c[p], c[q], c[r], c[s] = c[q], 0, c[s], c[r]
    return BasicPosition(tuple(c))


def apply_signed_move(pos: SignedPosition, q: int) -> SignedPosition:
    p = pos.hole
    q = point(q)
    if q == p:
        return pos
    r, s = _plane().pair_to_complement[p, q]
    c = list(pos.counter_at)
    f = list(pos.flipped)
    f[c[r]] = not f[c[r]]
    f[c[s]] = not f[c[s]]
    c[p], c[q], c[r], c[s] = c[q], 0, c[s], c[r]
    return SignedPosition(tuple(c), tuple(f))


# -- paths ---------------------------------------------------------------------

def path_to_perm(path: Sequence[int]) -> Perm13:
    sigma = Perm13.identity()
    for a, b in zip(path, path[1:]):
        sigma = move_perm(a, b) * sigma
    return sigma


def path_to_signed_perm(path: Sequence[int]) -> SignedPerm13:
    sigma = SignedPerm13.identity()
    for a, b in zip(path, path[1:]):
        sigma = signed_move_perm(a, b) * sigma
    return sigma


def play(path: Sequence[int], signed: bool = False):
    """Play ``path[1:]`` from the start position (the path must begin at 0)."""
    if path and path[0] != 0:
        raise GameError("paths played from the start position begin at 0")
    pos = SignedPosition.start() if signed else BasicPosition.start()
    step = apply_signed_move if signed else apply_basic_move
    for q in path[1:]:
        pos = step(pos, q)
    return pos


def is_closed(path: Sequence[int]) -> bool:
    return len(path) > 0 and path[0] == path[-1]


def is_nondegenerate(path: Sequence[int]) -> bool:
    plane = _plane()
    if any(a == b for a, b in zip(path, path[1:])):
        return False
    return not any(plane.collinear(a, b, c) for a, b, c in zip(path, path[1:], path[2:]))


def random_nondegenerate_path(rng, length: int, start: int = 0) -> Path:
    """A uniformly chosen nondegenerate path; ``rng`` is a ``random.Random``."""
    plane = _plane()
    path = [point(start)]
    for _ in range(length):
        banned = {path[-1]}
        if len(path) >= 2:
            banned |= set(plane.line_points[plane.line_through(path[-2], path[-1])])
        path.append(rng.choice([q for q in range(N) if q not in banned]))
    return tuple(path)


def reduce_path(path: Sequence[int]) -> Path:
    """Drop trivial steps and collapse collinear triples ``[p, q, r] -> [p, r]``
    scanning left to right until nothing changes."""
    plane = _plane()
    out: list[int] = []
    for x in as_path(path):
        while True:
            if out and out[-1] == x:
                break
            if len(out) >= 2 and plane.collinear(out[-2], out[-1], x):
                out.pop()
                continue
            out.append(x)
            break
    return tuple(out)


def reverse_path(path: Sequence[int]) -> Path:
    return tuple(reversed(path))


# -- dualized game -------------------------------------------------------------

def derive_line_path(point_path: Sequence[int]) -> tuple[int, ...]:
    """Lines ``line_through(p_i, p_{i+1})`` along which the point hole travels."""
    plane = _plane()
    try:
        return tuple(plane.line_through(a, b) for a, b in zip(point_path, point_path[1:]))
    except PlaneError:
        raise GameError(f"trivial step in {tuple(point_path)}: line not determined") from None


def default_start_line(p: int) -> int:
    return min(_plane().point_lines[p])


def line_hole_path(point_path: Sequence[int], start_line: int | None = None) -> tuple[int, ...]:
    """Successive line-hole locations: start, the lines walked, and the
    start line again if the point path is closed."""
    if not point_path:
        return ()
    start = default_start_line(point_path[0]) if start_line is None else start_line
    if point_path[0] not in _plane().line_points[start]:
        raise GameError(f"point {point_path[0]} is not on line {start}")
    lines = (start,) + derive_line_path(point_path)
    if is_closed(point_path) and len(point_path) > 1:
        lines += (start,)
    return reduce_consecutive(lines)


def reduce_consecutive(seq: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in seq:
        if not out or out[-1] != x:
            out.append(x)
    return tuple(out)


def dual_moves(point_path: Sequence[int], start_line: int | None = None) -> list[tuple[str, int]]:
    """The interleaved ``("line", m)`` / ``("point", q)`` moves realising
    ``point_path``: before each point move the line hole turns onto the line
    being walked, and a closed path finally returns the line hole home."""
    if not point_path:
        return []
    if not is_nondegenerate(point_path):
        raise GameError(f"dualized paths must be nondegenerate: {tuple(point_path)}")
    start = default_start_line(point_path[0]) if start_line is None else start_line
    if point_path[0] not in _plane().line_points[start]:
        raise GameError(f"point {point_path[0]} is not on line {start}")
    moves = []
    line_hole = start
    for a, b, ell in zip(point_path, point_path[1:], derive_line_path(point_path)):
        if ell != line_hole:
            moves.append(("line", ell))
            line_hole = ell
        moves.append(("point", b))
    if is_closed(point_path) and line_hole != start and len(point_path) > 1:
        moves.append(("line", start))
    return moves


def dual_path_to_perm_pair(point_path: Sequence[int],
                           start_line: int | None = None) -> tuple[Perm13, Perm13]:
    """``(sigma_P, sigma_L)``: point-counter and line-counter permutations.

    By self-duality the line-hole path is played with the point tables.
    """
    if not point_path:
        return Perm13.identity(), Perm13.identity()
    if not is_nondegenerate(point_path):
        raise GameError(f"dualized paths must be nondegenerate: {tuple(point_path)}")
    return path_to_perm(point_path), path_to_perm(line_hole_path(point_path, start_line))


@dataclass(frozen=True)
class DualPosition:
    """Point counters and line counters, with the point hole on the line hole."""

    points: BasicPosition = BasicPosition()
    lines: BasicPosition = BasicPosition()

    def __post_init__(self):
        if self.points.hole not in _plane().line_points[self.lines.hole]:
            raise GameError("the point hole must lie on the line hole")

    @property
    def point_hole(self) -> int:
        return self.points.hole

    @property
    def line_hole(self) -> int:
        return self.lines.hole

    def point_move(self, q: int) -> DualPosition:
        if q not in _plane().line_points[self.line_hole]:
            raise GameError(f"point {q} is not on the line hole {self.line_hole}")
        return DualPosition(apply_basic_move(self.points, q), self.lines)

    def line_move(self, m: int) -> DualPosition:
        if self.point_hole not in _plane().line_points[m]:
            raise GameError(f"line {m} does not pass through the point hole {self.point_hole}")
        return DualPosition(self.points, apply_basic_move(self.lines, m))

    def play(self, moves) -> DualPosition:
        pos = self
        for kind, target in moves:
            pos = pos.point_move(target) if kind == "point" else pos.line_move(target)
        return pos
