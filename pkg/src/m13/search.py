"""Exhaustive breadth-first search over the basic and signed game graphs.

A position is packed into a 64-bit key: bits ``4i..4i+3`` hold the counter
on point ``i`` (0 for the hole) and, in the signed game, bit ``51 + c``
records whether counter ``c`` is turned over.  The search is frontier
synchronous and fully vectorised; each state stores its depth and the
point the hole came from, ties going to the smallest such point.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import struct
from dataclasses import dataclass, field
from pathlib import Path as FsPath
from typing import Sequence

import numpy as np

from m13 import tables
from m13.game import BasicPosition, SignedPosition, is_nondegenerate, path_to_perm
from m13.perms import Perm13, SignedPerm13
from m13.plane import build_canonical_plane

log = logging.getLogger(__name__)

BASIC, SIGNED = "basic", "signed"
KINDS = (BASIC, SIGNED)
MAGIC = b"M13DB"
VERSION = 1
NO_PARENT = 255
RECORD = np.dtype([("key", "<u8"), ("depth", "u1"), ("parent", "u1")])

_SHIFTS = (4 * np.arange(13)).astype(np.uint64)
_LABEL_MASK = np.uint64((1 << 52) - 1)
_FLIP_MASK = np.uint64(0xFFF << 52)


class SearchError(RuntimeError):
    pass


# -- move tables ---------------------------------------------------------------

def _move_tables():
    plane = build_canonical_plane()
    src = np.tile(np.arange(13, dtype=np.intp), (13, 13, 1))
    flips = np.zeros((13, 13, 13), dtype=np.uint8)
    for h in range(13):
        for q in range(13):
            if h == q:
                continue
            r, s = (int(x) for x in plane.pair_to_complement[h, q])
            src[h, q, h], src[h, q, q] = q, h
            src[h, q, r], src[h, q, s] = s, r
            flips[h, q, r] = flips[h, q, s] = 16
    return src, flips


# new_cells[:, i] = cells[:, MOVE_SRC[h, q, i]]; the swap is an involution
# so the same table is also the image map of the move permutation.
MOVE_SRC, MOVE_FLIP = _move_tables()


# -- packing -------------------------------------------------------------------

def encode(cells: np.ndarray) -> np.ndarray:
    """Pack ``(n, 13)`` cells (counter | flip << 4) into uint64 keys."""
    cells = np.asarray(cells, dtype=np.uint8)
    labels = (cells & 15).astype(np.uint64)
    keys = (labels << _SHIFTS).sum(axis=1, dtype=np.uint64)
    flips = (cells >> 4).astype(np.uint64)
    if flips.any():
        keys |= (flips << (labels + np.uint64(51))).sum(axis=1, dtype=np.uint64)
    return keys


def decode(keys: np.ndarray) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.uint64)
    labels = ((keys[:, None] >> _SHIFTS) & np.uint64(15)).astype(np.uint8)
    bits = ((keys[:, None] >> (np.arange(13, dtype=np.uint64) + np.uint64(51))) & np.uint64(1)).astype(np.uint8)
    bits[:, 0] = 0
    return labels | (np.take_along_axis(bits, labels.astype(np.intp), axis=1) << 4)


def position_cells(pos) -> np.ndarray:
    cells = np.array(pos.counter_at, dtype=np.uint8)
    if isinstance(pos, SignedPosition):
        cells |= np.array([pos.flipped[c] for c in pos.counter_at], dtype=np.uint8) << 4
    return cells


def position_key(pos) -> int:
    return int(encode(position_cells(pos)[None])[0])


def key_to_position(key: int, kind: str):
    cells = decode(np.array([key], dtype=np.uint64))[0]
    counter_at = tuple(int(c) & 15 for c in cells)
    if kind == BASIC:
        return BasicPosition(counter_at)
    flipped = [False] * 13
    for c in cells:
        flipped[c & 15] = bool(c >> 4)
    return SignedPosition(counter_at, tuple(flipped))


def target_position(target, kind: str):
    if isinstance(target, (BasicPosition, SignedPosition)):
        return target
    if kind == BASIC:
        return BasicPosition.from_perm(target if isinstance(target, Perm13) else target.perm)
    if not isinstance(target, SignedPerm13):
        raise SearchError("signed database needs a signed target")
    return SignedPosition.from_signed_perm(target)


def start_key() -> int:
    return position_key(BasicPosition.start())


def holes_of(cells: np.ndarray) -> np.ndarray:
    return np.argmin(cells & 15, axis=1)


# -- BFS -----------------------------------------------------------------------

def _expand(cells: np.ndarray, signed: bool):
    """Yield ``(child_keys, came_from)`` for each hole destination."""
    holes = holes_of(cells)
    for q in range(13):
        mask = holes != q
        if not mask.any():
            continue
        sub, h = cells[mask], holes[mask]
        child = np.take_along_axis(sub, MOVE_SRC[h, q], axis=1)
        if signed:
            child ^= MOVE_FLIP[h, q]
        yield encode(child), h.astype(np.uint8)


def _in_sorted(sorted_keys: np.ndarray, keys: np.ndarray) -> np.ndarray:
    if sorted_keys.size == 0:
        return np.zeros(keys.shape, dtype=bool)
    idx = np.searchsorted(sorted_keys, keys)
    idx[idx == sorted_keys.size] = 0
    return sorted_keys[idx] == keys


def bfs(kind: str = BASIC, max_states: int = 5_000_000, workers: int = 1) -> DepthDatabase:
    """Single-source BFS from the start position over all 12 moves per state.

    ``workers`` is accepted for interface compatibility; expansion is
    vectorised, and the result does not depend on it.
    """
    if kind not in KINDS:
        raise SearchError(f"unknown game kind {kind!r}")
    if workers < 1:
        raise SearchError("worker count must be positive")
    signed = kind == SIGNED
    frontier = np.array([start_key()], dtype=np.uint64)
    visited = frontier.copy()
    levels_keys = [frontier]
    levels_parent = [np.array([NO_PARENT], dtype=np.uint8)]
    depth = 0
    while frontier.size:
        depth += 1
        cells = decode(frontier)
        ks, ps = [], []
        for keys, came in _expand(cells, signed):
            fresh = ~_in_sorted(visited, keys)
            ks.append(keys[fresh])
            ps.append(came[fresh])
        keys, came = np.concatenate(ks), np.concatenate(ps)
        order = np.lexsort((came, keys))
        keys, came = keys[order], came[order]
        first = np.ones(keys.size, dtype=bool)
        first[1:] = keys[1:] != keys[:-1]
        frontier, came = keys[first], came[first]
        if not frontier.size:
            break
        visited = np.union1d(visited, frontier)
        if visited.size > max_states:
            raise SearchError(f"state budget of {max_states} exceeded")
        levels_keys.append(frontier)
        levels_parent.append(came)
        log.info("%s depth %d: %d new states", kind, depth, frontier.size)
    keys = np.concatenate(levels_keys)
    depths = np.concatenate([np.full(k.size, d, dtype=np.uint8) for d, k in enumerate(levels_keys)])
    parents = np.concatenate(levels_parent)
    order = np.argsort(keys)
    return DepthDatabase(kind, keys[order], depths[order], parents[order])


# -- the database --------------------------------------------------------------

@dataclass(eq=False)
class DepthDatabase:
    kind: str
    keys: np.ndarray          # sorted uint64
    depths: np.ndarray        # uint8
    parents: np.ndarray       # uint8, point the hole came from; 255 at the start
    _cells: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return int(self.keys.size)

    @property
    def signed(self) -> bool:
        return self.kind == SIGNED

    @property
    def max_depth(self) -> int:
        return int(self.depths.max())

    def cells(self) -> np.ndarray:
        """Decoded ``(n, 13)`` cells in key order (cached)."""
        if self._cells is None:
            self._cells = decode(self.keys)
        return self._cells

    def group_mask(self) -> np.ndarray:
        """States with the hole back on point 0."""
        return (self.keys & np.uint64(15)) == 0

    def histogram(self) -> dict[str, list[int]]:
        n = self.max_depth + 1
        return {"group": np.bincount(self.depths[self.group_mask()], minlength=n).tolist(),
                "all": np.bincount(self.depths, minlength=n).tolist()}

    def index_of(self, key: int) -> int:
        k = np.uint64(key)
        i = int(np.searchsorted(self.keys, k))
        if i == self.keys.size or self.keys[i] != k:
            raise KeyError(key)
        return i

    def lookup_keys(self, keys: np.ndarray) -> np.ndarray:
        """Depths of many keys at once; -1 where absent."""
        keys = np.asarray(keys, dtype=np.uint64)
        idx = np.searchsorted(self.keys, keys)
        idx[idx == self.keys.size] = 0
        hit = self.keys[idx] == keys
        return np.where(hit, self.depths[idx].astype(np.int64), -1)

    def depth_query(self, target) -> int:
        return int(self.depths[self.index_of(position_key(target_position(target, self.kind)))])

    def path_from_db(self, target) -> tuple[int, ...]:
        """A shortest path from the start position to ``target``."""
        pos = target_position(target, self.kind)
        cells = position_cells(pos)[None]
        i = self.index_of(position_key(pos))
        rev = [int(holes_of(cells)[0])]
        while self.depths[i] > 0:
            back = int(self.parents[i])
            h = rev[-1]
            cells = np.take_along_axis(cells, MOVE_SRC[h, back][None], axis=1)
            if self.signed:
                cells = cells ^ MOVE_FLIP[h, back][None]
            j = self.index_of(int(encode(cells)[0]))
            if self.depths[j] != self.depths[i] - 1:
                raise SearchError("corrupt parent pointer")
            rev.append(back)
            i = j
        return tuple(reversed(rev))

    def positions_at(self, depth: int, group_only: bool = False) -> list:
        mask = self.depths == depth
        if group_only:
            mask &= self.group_mask()
        return [key_to_position(int(k), self.kind) for k in self.keys[mask]]

    # -- serialisation -------------------------------------------------------

    def to_bytes(self) -> bytes:
        rec = np.empty(self.keys.size, dtype=RECORD)
        rec["key"], rec["depth"], rec["parent"] = self.keys, self.depths, self.parents
        header = MAGIC + struct.pack("<BBQ", VERSION, KINDS.index(self.kind), self.keys.size)
        return header + rec.tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> DepthDatabase:
        hsize = len(MAGIC) + struct.calcsize("<BBQ")
        if data[:len(MAGIC)] != MAGIC:
            raise SearchError("not a depth database (bad magic)")
        version, kind, count = struct.unpack("<BBQ", data[len(MAGIC):hsize])
        if version != VERSION:
            raise SearchError(f"unsupported database version {version}")
        rec = np.frombuffer(data, dtype=RECORD, count=count, offset=hsize)
        keys = rec["key"].astype(np.uint64)
        if keys.size > 1 and not (keys[1:] > keys[:-1]).all():
            raise SearchError("database records are not sorted")
        return cls(KINDS[kind], keys, rec["depth"].copy(), rec["parent"].copy())

    def save(self, path) -> None:
        FsPath(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path) -> DepthDatabase:
        return cls.from_bytes(FsPath(path).read_bytes())

    def histogram_json(self) -> str:
        h = self.histogram()
        rows = [{"k": k, "N_group": g, "N_all": a} for k, (g, a) in enumerate(zip(h["group"], h["all"]))]
        return json.dumps({"game": self.kind, "histogram": rows}, indent=1)

    def histogram_csv(self) -> str:
        h = self.histogram()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "N_group", "N_all"])
        for k, (g, a) in enumerate(zip(h["group"], h["all"])):
            w.writerow([k, g, a])
        return buf.getvalue()


def expected_histogram(kind: str) -> dict[str, list[int]]:
    if kind == BASIC:
        return {"group": list(tables.DEPTH_BASIC_GROUP), "all": list(tables.DEPTH_BASIC_ALL)}
    return {"group": list(tables.DEPTH_SIGNED_GROUP), "all": list(tables.DEPTH_SIGNED_ALL)}


# -- tetracode -----------------------------------------------------------------

def max_depth_group(db: DepthDatabase) -> set[Perm13]:
    """Elements fixing the hole at the greatest depth any such element has."""
    if db.signed:
        raise SearchError("expected the basic database")
    mask = db.group_mask()
    top = int(db.depths[mask].max())
    return {key_to_position(int(k), BASIC).to_perm()
            for k in db.keys[mask & (db.depths == top)]}


def tetracode_agreement(sigma: Perm13, tau: Perm13) -> int:
    """The unique line through 0 on which ``sigma`` and ``tau`` agree."""
    if sigma == tau:
        raise SearchError("permutations must be distinct")
    plane = build_canonical_plane()
    hits = [ell for ell in plane.point_lines[0]
            if all(sigma(p) == tau(p) for p in plane.line_points[ell])]
    if len(hits) != 1:
        raise SearchError(f"expected one agreement line, found {hits}")
    return hits[0]


def orbits(perms, points: Sequence[int]) -> list[frozenset[int]]:
    remaining = set(points)
    out = []
    while remaining:
        orbit = {remaining.pop()}
        frontier = list(orbit)
        while frontier:
            x = frontier.pop()
            for g in perms:
                y = g(x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        remaining -= orbit
        out.append(frozenset(orbit))
    return sorted(out, key=min)


# -- generators and group closure ----------------------------------------------

def closure_order(generators: Sequence[Perm13]) -> int:
    """Order of the group generated, by BFS over packed elements."""
    gens = np.array([g.image for g in generators], dtype=np.uint8)
    ident = np.arange(13, dtype=np.uint8)[None]
    seen = encode(ident)
    frontier = ident
    while frontier.size:
        # g * x for every frontier element x and generator g
        new = gens[:, frontier].reshape(-1, 13)
        keys = encode(new)
        keys, idx = np.unique(keys, return_index=True)
        fresh = ~_in_sorted(seen, keys)
        frontier = new[idx[fresh]]
        seen = np.union1d(seen, keys[fresh])
    return int(seen.size)


@dataclass
class GeneratorReport:
    induced: dict[str, Perm13]
    matches: dict[str, bool]
    order: int

    @property
    def ok(self) -> bool:
        return all(self.matches.values()) and self.order == tables.M12_ORDER


def verify_generators() -> GeneratorReport:
    induced = {name: path_to_perm(path) for name, path in tables.GENERATOR_PATHS.items()}
    matches = {name: induced[name] == Perm13.parse(tables.GENERATORS[name]) for name in induced}
    return GeneratorReport(induced, matches, closure_order(list(induced.values())))


# -- nondegenerate path enumeration and the identity census --------------------

def nondegenerate_paths(length: int, start: int = 0) -> np.ndarray:
    """All nondegenerate paths of the given length from ``start``, as rows."""
    plane = build_canonical_plane()
    paths = np.array([[start]], dtype=np.int8)
    for step in range(length):
        nxt = []
        for row in paths:
            if step == 0:
                choices = [q for q in range(13) if q != start]
            else:
                bad = plane.line_points[plane.pair_to_line[row[-2], row[-1]]]
                choices = [q for q in range(13) if q not in bad]
            nxt.extend(np.append(row, q) for q in choices)
        paths = np.array(nxt, dtype=np.int8).reshape(-1, step + 2)
    return paths


def paths_to_perm_images(paths: np.ndarray) -> np.ndarray:
    """Row-wise images of the permutations induced by many paths."""
    n, length = paths.shape
    img = np.tile(np.arange(13, dtype=np.uint8), (n, 1))
    for i in range(length - 1):
        a, b = paths[:, i].astype(np.intp), paths[:, i + 1].astype(np.intp)
        # compose on the left: new(x) = move(img(x))
        img = np.take_along_axis(MOVE_SRC[a, b], img.astype(np.intp), axis=1).astype(np.uint8)
    return img


def identity_paths(length: int) -> np.ndarray:
    """Nondegenerate closed paths from 0 of ``length`` inducing the identity.

    Splits each path at its middle point ``m``: the first half is a
    nondegenerate path from 0 and the reversed second half is another one
    inducing the same permutation; the halves must not be collinear with
    ``m`` where they join.
    """
    if length < 1:
        return np.zeros((0, length + 1), dtype=np.int8)
    plane = build_canonical_plane()
    a_len, b_len = (length + 1) // 2, length // 2
    A = nondegenerate_paths(a_len)
    B = nondegenerate_paths(b_len)
    ka, kb = encode(paths_to_perm_images(A)), encode(paths_to_perm_images(B))
    order = np.argsort(kb)
    kb_sorted = kb[order]
    out = []
    lo = np.searchsorted(kb_sorted, ka, side="left")
    hi = np.searchsorted(kb_sorted, ka, side="right")
    for i in np.flatnonzero(hi > lo):
        for j in order[lo[i]:hi[i]]:
            a, b = A[i], B[j]
            if b_len == 0:
                full = a
            else:
                if plane.collinear(int(a[-2]), int(a[-1]), int(b[-2])):
                    continue
                full = np.concatenate([a, b[::-1][1:]])
            out.append(full)
    return np.array(out, dtype=np.int8).reshape(-1, length + 1)


def identity_path_census(max_len: int = 8) -> dict[int, int]:
    if not 1 <= max_len <= 8:
        raise SearchError("identity census is limited to lengths 1..8")
    return {k: int(identity_paths(k).shape[0]) for k in range(1, max_len + 1)}


# -- signed database checks ----------------------------------------------------

@dataclass
class AntipodeReport:
    min_sum: int
    violations: int
    near_pole: dict[int, list[int]]      # depth -> antipode depths seen
    poles: list[int]

    @property
    def ok(self) -> bool:
        return (self.violations == 0 and self.min_sum >= 12
                and self.near_pole.get(1) == [11] and self.near_pole.get(2) == [10]
                and self.near_pole.get(0) == [12] and self.poles == [1])


def antipode_depths(db: DepthDatabase) -> np.ndarray:
    """Depth of ``-sigma`` for every state ``sigma`` (key order)."""
    if not db.signed:
        raise SearchError("expected the signed database")
    anti = db.lookup_keys(db.keys ^ _FLIP_MASK)
    if (anti < 0).any():
        raise SearchError("antipode missing from the database")
    return anti


def verify_antipodes(db: DepthDatabase) -> AntipodeReport:
    anti = antipode_depths(db)
    total = db.depths.astype(np.int64) + anti
    near = {d: sorted(set(anti[db.depths == d].tolist())) for d in (0, 1, 2)}
    return AntipodeReport(int(total.min()), int((total < 12).sum()), near,
                          [int((db.depths == db.max_depth).sum())])


def lift_depth_mismatches(basic: DepthDatabase, signed: DepthDatabase) -> int:
    """Basic states whose depth differs from the smaller depth of its lifts."""
    base = signed.keys & _LABEL_MASK
    order = np.argsort(base, kind="stable")
    base, d = base[order], signed.depths[order]
    uniq, start = np.unique(base, return_index=True)
    lift_min = np.minimum.reduceat(d, start)
    if uniq.size != basic.keys.size or not np.array_equal(uniq, basic.keys):
        return -1
    return int((lift_min != basic.depths).sum())


def group_closure_spot_check(db: DepthDatabase, samples: int = 1000, seed: int = 0) -> bool:
    """Concatenating two closed database paths lands on a hole-at-0 state."""
    from m13.game import play
    rng = np.random.default_rng(seed)
    group = db.keys[db.group_mask()]
    for _ in range(samples):
        a, b = rng.choice(group, 2)
        pa = db.path_from_db(key_to_position(int(a), db.kind))
        pb = db.path_from_db(key_to_position(int(b), db.kind))
        path = pa + pb[1:]
        pos = play(path, signed=db.signed)
        if pos.hole != 0 or db.lookup_keys(np.array([position_key(pos)]))[0] < 0:
            return False
        if not is_nondegenerate(pa) or not is_nondegenerate(pb):
            return False
    return True
