"""Ternary codes attached to the plane.

Field elements are stored as ``0, 1, 2`` with ``2 == -1``; all arithmetic
is mod 3.  Codewords print as strings over ``0 + -`` in coordinate order.

``C`` is spanned by the 13 line indicator vectors, ``C'`` is its
zero-sum subcode, ``C_p`` is the subcode with ``c_p == -sum(c)`` and
``G_p`` is ``C_p`` with coordinate ``p`` deleted.  ``G_p`` is a ternary
Golay code for every ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from m13.perms import SignedPerm13
from m13.plane import build_canonical_plane, point

MAX_ENUM_DIM = 7
_SYMBOLS = "0+-"


class CodeError(ValueError):
    pass


# -- vectors -------------------------------------------------------------------

def f3(v) -> np.ndarray:
    return np.asarray(v, dtype=np.int64) % 3


def weight(v) -> int:
    return int(np.count_nonzero(f3(v)))


def support(v) -> frozenset[int]:
    return frozenset(int(i) for i in np.flatnonzero(f3(v)))


def dot(v, w) -> int:
    return int(f3(v) @ f3(w) % 3)


def format_word(v) -> str:
    return "".join(_SYMBOLS[x] for x in f3(v))


def parse_word(text: str) -> np.ndarray:
    try:
        return np.array([_SYMBOLS.index(ch) for ch in text], dtype=np.int64)
    except ValueError:
        raise CodeError(f"codeword {text!r} must use only '0', '+', '-'") from None


def signed_value(v) -> np.ndarray:
    """Map ``{0, 1, 2}`` to ``{0, 1, -1}``."""
    v = f3(v)
    return np.where(v == 2, -1, v)


# -- linear algebra mod 3 ------------------------------------------------------

def rref(m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(3); zero rows dropped."""
    a = f3(np.atleast_2d(m)).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        a[[r, k]] = a[[k, r]]
        a[r] = a[r] * a[r, c] % 3          # x * x == 1 for x in {1, 2}
        others = np.arange(rows) != r
        a[others] = (a[others] - np.outer(a[others, c], a[r])) % 3
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m) -> int:
    return len(rref(m)[1])


def nullspace(m) -> np.ndarray:
    """Basis (as rows) of ``{x : m @ x == 0}`` over GF(3)."""
    m = f3(np.atleast_2d(m))
    n = m.shape[1]
    r, pivots = rref(m)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = -r[row, fc] % 3
    return basis


# -- codes ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TernaryCode:
    basis: np.ndarray        # rows in reduced echelon form

    def __post_init__(self):
        b, _ = rref(self.basis)
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @classmethod
    def span(cls, vectors) -> TernaryCode:
        return cls(np.atleast_2d(f3(vectors)))

    @property
    def length(self) -> int:
        return self.basis.shape[1]

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return 3 ** self.dimension

    def contains(self, v) -> bool:
        v = f3(v)
        if not v.any():
            return True
        return rank(np.vstack([self.basis, v])) == self.dimension

    def contains_code(self, other: TernaryCode) -> bool:
        return rank(np.vstack([self.basis, other.basis])) == self.dimension

    def __eq__(self, other) -> bool:
        if not isinstance(other, TernaryCode):
            return NotImplemented
        return (self.length == other.length and self.dimension == other.dimension
                and self.contains_code(other))

    __hash__ = None

    def dual(self) -> TernaryCode:
        return TernaryCode(nullspace(self.basis))

    def is_self_orthogonal(self) -> bool:
        return not (self.basis @ self.basis.T % 3).any()

    def is_self_dual(self) -> bool:
        return self.is_self_orthogonal() and 2 * self.dimension == self.length

    def codewords(self) -> np.ndarray:
        if self.dimension > MAX_ENUM_DIM:
            raise CodeError(f"refusing to enumerate a code of dimension {self.dimension}")
        coeffs = np.array(list(product(range(3), repeat=self.dimension)), dtype=np.int64)
        return coeffs.reshape(-1, self.dimension) @ self.basis % 3

    def weight_distribution(self) -> dict[int, int]:
        w = np.count_nonzero(self.codewords(), axis=1)
        ks, counts = np.unique(w, return_counts=True)
        return {int(k): int(c) for k, c in zip(ks, counts)}

    def min_weight(self) -> int:
        return min(k for k in self.weight_distribution() if k > 0)

    def puncture(self, coord: int) -> TernaryCode:
        """Delete one coordinate."""
        keep = [i for i in range(self.length) if i != coord]
        return TernaryCode(self.basis[:, keep])


def line_vector(ell: int) -> np.ndarray:
    v = np.zeros(13, dtype=np.int64)
    v[list(build_canonical_plane().line_points[point(ell)])] = 1
    return v


def line_vectors() -> np.ndarray:
    return np.array([line_vector(ell) for ell in range(13)])


@lru_cache(maxsize=None)
def build_C() -> TernaryCode:
    return TernaryCode.span(line_vectors())


def _subcode(code: TernaryCode, functional) -> TernaryCode:
    """``{c in code : functional . c == 0}``."""
    coeffs = nullspace(code.basis @ f3(functional) % 3)
    return TernaryCode(coeffs @ code.basis % 3)


@lru_cache(maxsize=None)
def build_Cprime() -> TernaryCode:
    return _subcode(build_C(), np.ones(13, dtype=np.int64))


@lru_cache(maxsize=None)
def build_Cp(p: int) -> TernaryCode:
    # c_p + sum(c) == 0
    functional = np.ones(13, dtype=np.int64)
    functional[point(p)] += 1
    return _subcode(build_C(), functional)


@lru_cache(maxsize=None)
def restrict_Gp(p: int) -> TernaryCode:
    cp = build_Cp(p)
    gp = cp.puncture(point(p))
    if gp.dimension != cp.dimension:
        raise AssertionError("restriction of C_p is not injective")
    return gp


# -- the linear move action ----------------------------------------------------

def move_linear_action(p: int, q: int, w) -> np.ndarray:
    """Apply the move ``[p, q]`` to ``w`` (a vector or a stack of row vectors)."""
    p, q = point(p), point(q)
    if p == q:
        raise CodeError(f"degenerate move ({p}, {p})")
    r, s = (int(x) for x in build_canonical_plane().pair_to_complement[p, q])
    w = f3(w)
    out = w.copy()
    out[..., p] = w[..., q]
    out[..., q] = -w[..., p] - w[..., q]
    out[..., r] = -w[..., s]
    out[..., s] = -w[..., r]
    return out % 3


def path_linear_action(path: Sequence[int], w) -> np.ndarray:
    w = f3(w)
    for a, b in zip(path, path[1:]):
        if a != b:
            w = move_linear_action(a, b, w)
    return w


def verify_code_transport(p: int, q: int) -> bool:
    """True iff the move ``[p, q]`` carries ``C_p`` onto ``C_q``."""
    if p == q:
        raise CodeError(f"degenerate move ({p}, {p})")
    return TernaryCode(move_linear_action(p, q, build_Cp(p).basis)) == build_Cp(q)


def monomial_action(sp: SignedPerm13, w, fixed: int = 0) -> np.ndarray:
    """Move coordinate ``i`` to ``sp(i)``, negating it when ``i`` is flipped.

    ``w`` has the 12 coordinates other than ``fixed`` (in increasing label
    order); ``sp`` must fix ``fixed``.
    """
    if sp(fixed) != fixed:
        raise CodeError(f"signed permutation moves label {fixed}")
    labels = [i for i in range(13) if i != fixed]
    pos = {lab: k for k, lab in enumerate(labels)}
    w = f3(w)
    out = np.empty_like(w)
    for i in labels:
        val = w[..., pos[i]]
        out[..., pos[sp(i)]] = (-val if sp.flip[i] else val) % 3
    return out


def signed_perm_preserves_G0(sp: SignedPerm13) -> bool:
    g0 = restrict_Gp(0)
    return TernaryCode(monomial_action(sp, g0.basis)) == g0
