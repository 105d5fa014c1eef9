"""Brute-force checks of sextuple transitivity for M13.

Each of the 13!/7! elements of M13 is a position of the basic game.  For a
sextuple of counters ``p`` (counter 0 being the hole) the element sends it
to the points where those counters sit; ``p`` is a universal donor when no
two elements give the same image.  Dually, a sextuple of points ``q`` is a
universal recipient when no two elements put the same counters on ``q``.
Since both counts equal 13!/7!, injectivity is the same as surjectivity.

Images are packed into 24-bit fingerprints and tested for collisions in a
direct-address bitset.
"""
from __future__ import annotations

import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from m13.game import BasicPosition
from m13.perms import Perm13
from m13.plane import build_canonical_plane
from m13.search import BASIC, DepthDatabase, bfs

DONOR, RECIPIENT = "donor", "recipient"


class TransitivityError(ValueError):
    pass


def sextuple(labels: Iterable[int]) -> tuple[int, ...]:
    t = tuple(int(x) for x in labels)
    if len(t) != 6 or len(set(t)) != 6 or not all(0 <= x < 13 for x in t):
        raise TransitivityError(f"{t} is not a sextuple of distinct labels 0..12")
    return t


def contains_line(q: Iterable[int]) -> bool:
    s = set(q)
    return any(set(pts) <= s for pts in build_canonical_plane().line_points)


class SextupleOracle:
    """Streams every element of M13 from a basic database."""

    def __init__(self, db: DepthDatabase | None = None):
        db = db if db is not None else bfs(BASIC)
        if db.signed:
            raise TransitivityError("expected the basic database")
        self.size = len(db)
        counter_at = db.cells().astype(np.intp)               # [element, point]
        where = np.empty_like(counter_at)                     # [element, counter]
        np.put_along_axis(where, counter_at, np.arange(13)[None, :], axis=1)
        # column-major so that a coordinate is one contiguous array
        self._counter_at = np.ascontiguousarray(counter_at.T.astype(np.uint32))
        self._where = np.ascontiguousarray(where.T.astype(np.uint32))

    def fingerprints(self, labels: Sequence[int], side: str) -> np.ndarray:
        cols = self._where if side == DONOR else self._counter_at
        out = np.zeros(self.size, dtype=np.uint32)
        for j, lab in enumerate(labels):
            out |= cols[lab] << np.uint32(4 * j)
        return out

    def distinct_images(self, labels: Sequence[int], side: str, bitset: np.ndarray | None = None) -> int:
        fp = self.fingerprints(sextuple(labels), side)
        if bitset is None:
            bitset = np.zeros(1 << 24, dtype=bool)
        bitset[fp] = True
        n = int(np.count_nonzero(bitset))
        bitset[fp] = False
        return n

    def is_universal(self, labels: Sequence[int], side: str, bitset: np.ndarray | None = None) -> bool:
        return self.distinct_images(labels, side, bitset) == self.size

    def collision(self, labels: Sequence[int], side: str) -> tuple[Perm13, Perm13] | None:
        fp = self.fingerprints(sextuple(labels), side)
        order = np.argsort(fp, kind="stable")
        dup = np.flatnonzero(fp[order][1:] == fp[order][:-1])
        if dup.size == 0:
            return None
        i, j = order[dup[0]], order[dup[0] + 1]
        return self.element(int(i)), self.element(int(j))

    def element(self, i: int) -> Perm13:
        return BasicPosition(tuple(int(x) for x in self._counter_at[:, i])).to_perm()


def is_universal_donor(p: Sequence[int], oracle: SextupleOracle) -> bool:
    return oracle.is_universal(p, DONOR)


def is_universal_recipient(q: Sequence[int], oracle: SextupleOracle) -> bool:
    return oracle.is_universal(q, RECIPIENT)


# -- collision witnesses -------------------------------------------------------

def _acts_alike(a: Perm13, b: Perm13, s: Sequence[int], side: str) -> bool:
    if a == b:
        return False
    if side == DONOR:
        return all(a(x) == b(x) for x in s)
    ai, bi = a.inverse(), b.inverse()
    return all(ai(x) == bi(x) for x in s)


def _short_candidates(s: Sequence[int], side: str):
    """Pairs of one- and two-move elements built from a line meeting ``s``
    (plus the hole, for donors) in at most one point."""
    from m13.game import path_to_perm
    plane = build_canonical_plane()
    s = set(s)
    for pts in plane.line_points:
        line = set(pts)
        if side == DONOR:
            hit = line & (s | {0})
            if hit == {0}:
                for q in line - {0}:
                    yield Perm13.identity(), path_to_perm((0, q))
            elif len(hit) == 1:
                (p,) = hit
                for q in line - hit:
                    yield path_to_perm((0, p)), path_to_perm((0, p, q))
            elif not hit:
                for q in line:
                    for r in line - {q}:
                        yield path_to_perm((0, q)), path_to_perm((0, q, r))
        elif not line & s:
            for p1 in line - {0}:
                for p2 in line - {p1}:
                    yield path_to_perm((0, p2)), path_to_perm((0, p1, p2))
                    # once the hole is on the line, sliding along it leaves s alone
                    yield path_to_perm((0, p1)), path_to_perm((0, p1, p2))


def find_collision_witness(s: Sequence[int], side: str,
                           oracle: SextupleOracle | None = None) -> tuple[Perm13, Perm13] | None:
    """Two distinct elements of M13 that act alike on ``s``, or ``None``.

    Short constructions along a line (nearly) missing the sextuple are tried
    and checked before falling back to a full scan.
    """
    s = sextuple(s)
    for a, b in _short_candidates(s, side):
        if _acts_alike(a, b, s, side):
            return a, b
    oracle = oracle or SextupleOracle()
    return oracle.collision(s, side)


# -- theorem verification ------------------------------------------------------

@dataclass
class TheoremReport:
    side: str
    subsets: int
    universal: int
    predicted: int
    discrepancies: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def summary(self) -> str:
        noun = "donors" if self.side == DONOR else "recipients"
        return (f"{self.universal} {noun} / {self.subsets} subsets, "
                f"{len(self.discrepancies)} discrepancies")

    def to_json(self) -> str:
        return json.dumps({"side": self.side, "subsets": self.subsets,
                           "universal": self.universal, "predicted": self.predicted,
                           "discrepancies": self.discrepancies}, indent=1)


def predicted(s: Sequence[int], side: str) -> bool:
    return 0 in s if side == DONOR else contains_line(s)


def _subsets(mode, seed: int):
    allsets = list(combinations(range(13), 6))
    if mode == "exhaustive":
        return allsets
    n = int(mode[1]) if isinstance(mode, tuple) else int(mode)
    return random.Random(seed).sample(allsets, n)


def verify_theorem(side: str, oracle: SextupleOracle, mode="exhaustive",
                   seed: int = 0, workers: int = 1) -> TheoremReport:
    """Compare brute-force universality with the geometric prediction.

    ``mode`` is ``"exhaustive"`` (all 1716 six-subsets) or
    ``("sampled", n)``.
    """
    if side not in (DONOR, RECIPIENT):
        raise TransitivityError(f"unknown side {side!r}")
    subsets = _subsets(mode, seed)

    def run(chunk):
        bitset = np.zeros(1 << 24, dtype=bool)
        return [(s, oracle.is_universal(s, side, bitset)) for s in chunk]

    chunks = [subsets[i::workers] for i in range(workers)]
    if workers == 1:
        results = run(subsets)
    else:
        with ThreadPoolExecutor(workers) as ex:
            results = [r for part in ex.map(run, chunks) for r in part]
        results.sort()
    report = TheoremReport(side, len(results), 0, 0)
    for s, observed in results:
        pred = predicted(s, side)
        report.universal += observed
        report.predicted += pred
        if observed != pred:
            report.discrepancies.append({"subset": list(s), "predicted": pred, "observed": observed})
    return report


def verify_donor_theorem(oracle: SextupleOracle, mode="exhaustive", seed: int = 0, workers: int = 1) -> TheoremReport:
    return verify_theorem(DONOR, oracle, mode, seed, workers)


def verify_recipient_theorem(oracle: SextupleOracle, mode="exhaustive", seed: int = 0, workers: int = 1) -> TheoremReport:
    return verify_theorem(RECIPIENT, oracle, mode, seed, workers)


def verify_ordered_sample(oracle: SextupleOracle, side: str, n: int = 1000, seed: int = 0) -> int:
    """Number of random ordered sextuples whose verdict disagrees with the
    verdict of their underlying set."""
    rng = random.Random(seed)
    bitset = np.zeros(1 << 24, dtype=bool)
    bad = 0
    for _ in range(n):
        s = tuple(rng.sample(range(13), 6))
        bad += oracle.is_universal(s, side, bitset) != predicted(s, side)
    return bad


def sextuple_count() -> int:
    return math.perm(13, 6)
