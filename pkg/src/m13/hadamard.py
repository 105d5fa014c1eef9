"""Hadamard matrices from the plane and the dualized game acting on them.

``E`` is the 13x13 sign matrix with ``-1`` at incident (point, line) pairs.
For an incident pair ``(p, l)``, ``H(p, l)`` drops row ``p`` and column
``l`` from ``E`` and negates the block of rows on ``l`` against columns
through ``p``; it is a 12x12 Hadamard matrix.  Point moves act on rows and
line moves on columns, and a dualized move sequence carries ``H(p, l)`` to
``H`` at the new hole pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

import numpy as np

from m13 import tables
from m13.game import dual_moves, dual_path_to_perm_pair, path_to_signed_perm, line_hole_path
from m13.perms import Perm13, SignedPerm13
from m13.plane import build_canonical_plane, point


class HadamardError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SignMatrix:
    entries: np.ndarray              # int8, +1/-1
    row_index: tuple[int, ...]       # point labels, increasing
    col_index: tuple[int, ...]       # line labels, increasing

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int8)
        if e.shape != (len(self.row_index), len(self.col_index)):
            raise HadamardError("entry shape does not match the index lists")
        if not (np.abs(e) == 1).all():
            raise HadamardError("sign matrix entries must be +1 or -1")
        if len(set(self.row_index)) != len(self.row_index) or len(set(self.col_index)) != len(self.col_index):
            raise HadamardError("duplicate index labels")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return (self.row_index == other.row_index and self.col_index == other.col_index
                and np.array_equal(self.entries, other.entries))

    __hash__ = None

    @property
    def missing_row(self) -> int:
        (p,) = set(range(13)) - set(self.row_index)
        return p

    @property
    def missing_col(self) -> int:
        (ell,) = set(range(13)) - set(self.col_index)
        return ell

    def row(self, label: int) -> np.ndarray:
        return self.entries[self.row_index.index(label)]

    def col(self, label: int) -> np.ndarray:
        return self.entries[:, self.col_index.index(label)]

    def gram(self) -> np.ndarray:
        e = self.entries.astype(np.int64)
        return e @ e.T

    def is_hadamard(self) -> bool:
        n = len(self.row_index)
        return n == len(self.col_index) and np.array_equal(self.gram(), n * np.eye(n, dtype=np.int64))

    def dump(self) -> str:
        lines = ["rows: " + " ".join(map(str, self.row_index)),
                 "cols: " + " ".join(map(str, self.col_index))]
        lines += ["".join("+" if x > 0 else "-" for x in r) for r in self.entries]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def build_E() -> SignMatrix:
    inc = build_canonical_plane().incidence.astype(np.int8)
    return SignMatrix(1 - 2 * inc, tuple(range(13)), tuple(range(13)))


@lru_cache(maxsize=None)
def build_H(p: int, ell: int) -> SignMatrix:
    plane = build_canonical_plane()
    p, ell = point(p), point(ell)
    if p not in plane.line_points[ell]:
        raise HadamardError(f"point {p} is not on line {ell}")
    e = build_E().entries.astype(np.int8).copy()
    rows_on_line = list(plane.line_points[ell])
    lines_through = list(plane.point_lines[p])
    e[np.ix_(rows_on_line, lines_through)] *= -1
    rows = tuple(i for i in range(13) if i != p)
    cols = tuple(j for j in range(13) if j != ell)
    return SignMatrix(e[np.ix_(rows, cols)], rows, cols)


def _relabel(entries: np.ndarray, index: tuple[int, ...], old: int, new: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Rename index ``old`` to ``new`` and restore increasing order."""
    labels = [new if x == old else x for x in index]
    order = np.argsort(labels, kind="stable")
    return entries[order], tuple(labels[i] for i in order)


def act_point_move(h: SignMatrix, p: int, q: int) -> SignMatrix:
    """Rows: ``new[p] = old[q]``, ``new[r] = -old[s]``, ``new[s] = -old[r]``."""
    if h.missing_row != p:
        raise HadamardError(f"matrix is missing row {h.missing_row}, not {p}")
    if p == q:
        return h
    r, s = (int(x) for x in build_canonical_plane().pair_to_complement[p, q])
    e = h.entries.copy()
    idx = {lab: k for k, lab in enumerate(h.row_index)}
    e[idx[r]], e[idx[s]] = -h.entries[idx[s]], -h.entries[idx[r]]
    # row q's contents now belong to p
    e, rows = _relabel(e, h.row_index, q, p)
    return SignMatrix(e, rows, h.col_index)


def act_line_move(h: SignMatrix, ell: int, m: int) -> SignMatrix:
    """Column analogue of :func:`act_point_move`."""
    if h.missing_col != ell:
        raise HadamardError(f"matrix is missing column {h.missing_col}, not {ell}")
    if ell == m:
        return h
    # self-duality: the column action is the row action on the transpose
    t = SignMatrix(h.entries.T, h.col_index, h.row_index)
    t = act_point_move(t, ell, m)
    return SignMatrix(t.entries.T, h.row_index, t.row_index)


def play_on_matrix(h: SignMatrix, moves) -> SignMatrix:
    for kind, target in moves:
        if kind == "point":
            h = act_point_move(h, h.missing_row, target)
        else:
            h = act_line_move(h, h.missing_col, target)
    return h


def verify_hadamard_transform(point_path: Sequence[int], start: tuple[int, int]) -> bool:
    """Check ``sigma(H(p, l)) == H(sigma(p), sigma(l))`` after every move."""
    p, ell = start
    if not point_path or point_path[0] != p:
        raise HadamardError("path must start at the point hole")
    h = build_H(p, ell)
    for mv in dual_moves(point_path, ell):
        h = play_on_matrix(h, [mv])
        if h != build_H(h.missing_row, h.missing_col):
            return False
    return True


def apply_signed(h: SignMatrix, rows: SignedPerm13, cols: SignedPerm13) -> SignMatrix:
    """Row ``i`` goes to ``rows(i)`` (negated if flipped); likewise columns."""
    e = np.empty_like(h.entries)
    ridx = {lab: k for k, lab in enumerate(h.row_index)}
    cidx = {lab: k for k, lab in enumerate(h.col_index)}
    rsign = np.array([-1 if rows.flip[i] else 1 for i in h.row_index], dtype=np.int8)
    csign = np.array([-1 if cols.flip[j] else 1 for j in h.col_index], dtype=np.int8)
    signed = h.entries * rsign[:, None] * csign[None, :]
    rdst = [ridx[rows(i)] for i in h.row_index]
    cdst = [cidx[cols(j)] for j in h.col_index]
    e[np.ix_(rdst, cdst)] = signed
    return SignMatrix(e, h.row_index, h.col_index)


@dataclass(frozen=True)
class HadamardAutomorphism:
    row_action: SignedPerm13
    col_action: SignedPerm13

    @classmethod
    def from_closed_path(cls, point_path: Sequence[int], start_line: int | None = None) -> HadamardAutomorphism:
        return cls(path_to_signed_perm(point_path),
                   path_to_signed_perm(line_hole_path(point_path, start_line)))

    def fixes(self, h: SignMatrix) -> bool:
        if {self.row_action(i) for i in h.row_index} != set(h.row_index):
            return False
        if {self.col_action(j) for j in h.col_index} != set(h.col_index):
            return False
        return apply_signed(h, self.row_action, self.col_action) == h


# -- the outer automorphism ----------------------------------------------------

def theta(pair: tuple[Perm13, Perm13]) -> tuple[Perm13, Perm13]:
    sigma_p, sigma_l = pair
    return sigma_l, sigma_p


def involution_centralizer(alpha: Perm13, support: Sequence[int] = range(1, 13)):
    """All permutations of ``support`` commuting with the involution ``alpha``.

    Generated structurally: permute the 2-cycles among themselves (choosing
    an orientation for each) and permute the fixed points arbitrarily.
    """
    support = list(support)
    if not (alpha * alpha).is_identity() or any(alpha(i) not in support for i in support):
        raise HadamardError("expected an involution of the support")
    pairs = [c for c in alpha.cycles()]
    fixed = [i for i in support if alpha(i) == i]
    for perm_pairs in permutations(range(len(pairs))):
        for orient in product((0, 1), repeat=len(pairs)):
            for perm_fixed in permutations(fixed):
                image = list(range(13))
                for src, dst_i, o in zip(pairs, perm_pairs, orient):
                    a, b = pairs[dst_i] if o == 0 else pairs[dst_i][::-1]
                    image[src[0]], image[src[1]] = a, b
                for src, dst in zip(fixed, perm_fixed):
                    image[src] = dst
                yield Perm13(tuple(image))


@dataclass
class ThetaReport:
    alphas: dict[str, Perm13]
    centralizer_size: int
    common_centralizer: list[Perm13]
    swap_pair: tuple[Perm13, Perm13]
    swap_conjugate: bool

    @property
    def witness(self) -> Perm13:
        return next(c for c in self.common_centralizer if not c.is_identity())


def theta_report() -> ThetaReport:
    alphas = {}
    for name, (path, _) in tables.THETA_FIXED_PATHS.items():
        sigma_p, sigma_l = dual_path_to_perm_pair(path)
        if sigma_p != sigma_l:
            raise AssertionError(f"{name}: point and line permutations differ")
        alphas[name] = sigma_p
    a1, a2, a3 = alphas["alpha1"], alphas["alpha2"], alphas["alpha3"]
    cent = list(involution_centralizer(a1))
    if any(c * a1 != a1 * c for c in cent):
        raise AssertionError("centralizer enumeration emitted a non-commuting element")
    common = [c for c in cent if c * a2 == a2 * c and c * a3 == a3 * c]
    pair = dual_path_to_perm_pair(tables.THETA_SWAP_PATH)
    report = ThetaReport(alphas, len(cent), common, pair, False)
    if len(common) == 2:
        s = report.witness
        report.swap_conjugate = s * pair[0] * s.inverse() == pair[1]
    return report


def verify_theta_outer() -> bool:
    r = theta_report()
    expected = {name: Perm13.parse(txt) for name, (_, txt) in tables.THETA_FIXED_PATHS.items()}
    return (r.alphas == expected
            and r.centralizer_size == 2 ** 4 * 24 * 24
            and len(r.common_centralizer) == 2
            and r.witness == Perm13.parse(tables.THETA_CENTRALIZER_WITNESS)
            and r.swap_pair == tuple(Perm13.parse(t) for t in tables.THETA_SWAP_PAIR)
            and theta(r.swap_pair) == r.swap_pair[::-1]
            and not r.swap_conjugate)
