"""Short move sequences realising a target permutation.

``meet_in_middle`` needs no database.  Every element fixing the hole is at
depth at most 9 and only the eight tetracode elements reach 9, so after a
table lookup for those, a target ``sigma`` is split as ``rho^-1 * tau``
with both ``tau`` and ``rho`` at depth at most 4: the path walks ``tau``
out and ``rho`` back.  ``database`` reads an exact shortest path off a BFS
database.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from m13 import tables
from m13.game import move_perm, path_to_perm, path_to_signed_perm, reduce_path, reverse_path
from m13.perms import Perm13, SignedPerm13
from m13.search import BASIC, SIGNED, DepthDatabase, encode, nondegenerate_paths, paths_to_perm_images

MEET_IN_MIDDLE, DATABASE = "meet_in_middle", "database"


class NotInPseudogroupError(ValueError):
    """The target cannot be produced by any move sequence."""


@dataclass(frozen=True)
class SolveResult:
    path: tuple[int, ...]
    certified_optimal: bool

    def __post_init__(self):
        # a lone starting point is the empty move sequence
        if len(self.path) == 1:
            object.__setattr__(self, "path", ())

    def __len__(self) -> int:
        return max(len(self.path) - 1, 0)

    @property
    def length(self) -> int:
        return len(self)

    def as_json(self) -> list[int]:
        return list(self.path)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.path)) + "]"


@dataclass(frozen=True, eq=False)
class MeetLists:
    """Elements of depth <= 4 keyed by packed image, each with a shortest path."""

    keys: np.ndarray          # sorted
    images: np.ndarray        # (n, 13), aligned with keys
    paths: tuple[tuple[int, ...], ...]
    raw_path_count: int

    def __len__(self) -> int:
        return int(self.keys.size)

    def find(self, keys: np.ndarray) -> np.ndarray:
        """Index of each key, or -1."""
        idx = np.searchsorted(self.keys, keys)
        idx[idx == self.keys.size] = 0
        return np.where(self.keys[idx] == keys, idx, -1)


@lru_cache(maxsize=None)
def build_meet_lists(radius: int = 4) -> MeetLists:
    keys, images, paths = [], [], []
    raw = 0
    for length in range(radius + 1):
        rows = nondegenerate_paths(length)
        raw += len(rows) if length == radius else 0
        imgs = paths_to_perm_images(rows)
        keys.append(encode(imgs))
        images.append(imgs)
        paths.extend(tuple(int(x) for x in r) for r in rows)
    keys, images = np.concatenate(keys), np.concatenate(images)
    # stable sort keeps the shortest path first among equal keys
    order = np.argsort(keys, kind="stable")
    keys, images = keys[order], images[order]
    first = np.ones(keys.size, dtype=bool)
    first[1:] = keys[1:] != keys[:-1]
    kept = order[first]
    return MeetLists(keys[first], images[first], tuple(paths[i] for i in kept), raw)


@lru_cache(maxsize=None)
def tetracode_table() -> dict[Perm13, tuple[int, ...]]:
    table = {}
    for text, path in tables.TETRACODE:
        sigma = Perm13.parse(text)
        table[sigma] = path
        table[sigma.inverse()] = reverse_path(path)
    return table


def _solve_closed(sigma: Perm13) -> tuple[int, ...]:
    if sigma.is_identity():
        return ()
    known = tetracode_table().get(sigma)
    if known is not None:
        return known
    lists = build_meet_lists()
    # rho * sigma for every rho in the list
    probe = encode(lists.images[:, list(sigma.image)])
    hit = lists.find(probe)
    rho_idx = np.flatnonzero(hit >= 0)
    if rho_idx.size == 0:
        raise NotInPseudogroupError(f"{sigma} is not produced by any closed move sequence")
    lengths = np.array([len(lists.paths[i]) + len(lists.paths[hit[i]]) for i in rho_idx])
    best = rho_idx[np.argmin(lengths)]
    tau_path, rho_path = lists.paths[hit[best]], lists.paths[best]
    return reduce_path(tau_path + reverse_path(rho_path)[1:])


def solve_basic(target: Perm13, strategy: str = MEET_IN_MIDDLE,
                db: DepthDatabase | None = None) -> SolveResult:
    if strategy == DATABASE:
        if db is None or db.kind != BASIC:
            raise ValueError("database strategy needs the basic depth database")
        try:
            return SolveResult(db.path_from_db(target), True)
        except KeyError:
            raise NotInPseudogroupError(f"{target} is not in M13") from None
    if strategy != MEET_IN_MIDDLE:
        raise ValueError(f"unknown strategy {strategy!r}")
    h = target(0)
    if target.is_identity():
        return SolveResult((), True)
    if h == 0:
        path = _solve_closed(target)
    else:
        # walk a closed path for the residue, then slide the hole to h
        path = reduce_path((_solve_closed(move_perm(h, 0) * target) or (0,)) + (h,))
    if path_to_perm(path) != target:
        raise AssertionError("solver produced a path for the wrong permutation")
    return SolveResult(path, target.is_identity())


def solve_signed(target: SignedPerm13, strategy: str = DATABASE,
                 db: DepthDatabase | None = None) -> SolveResult:
    if strategy != DATABASE:
        raise ValueError("signed targets are solved from the signed database only")
    if db is None or db.kind != SIGNED:
        raise ValueError("database strategy needs the signed depth database")
    try:
        path = db.path_from_db(target)
    except (KeyError, ValueError):
        raise NotInPseudogroupError(f"{target} is not in 2M13") from None
    if path_to_signed_perm(path) != target:
        raise AssertionError("database path induces the wrong signed permutation")
    return SolveResult(path, True)
