import random

import numpy as np
import pytest

from m13 import tables
from m13.game import dual_moves, dual_path_to_perm_pair, is_closed, random_nondegenerate_path, reduce_path
from m13.hadamard import (HadamardAutomorphism, HadamardError, SignMatrix, act_line_move,
                          act_point_move, build_E, build_H, involution_centralizer,
                          play_on_matrix, theta, theta_report, verify_hadamard_transform,
                          verify_theta_outer)
from m13.perms import Perm13
from m13.plane import build_canonical_plane

PLANE = build_canonical_plane()
INCIDENT = [(p, ell) for ell in range(13) for p in PLANE.line_points[ell]]


def test_E():
    e = build_E()
    assert e.entries.shape == (13, 13)
    assert np.array_equal(e.entries, e.entries.T)
    assert ((e.entries == -1).sum(axis=1) == 4).all()
    g = e.gram()
    assert (np.diag(g) == 13).all()
    assert (g[~np.eye(13, dtype=bool)] == 1).all()


@pytest.mark.parametrize("p,ell", INCIDENT)
def test_all_H_are_hadamard(p, ell):
    h = build_H(p, ell)
    assert h.missing_row == p and h.missing_col == ell
    assert h.is_hadamard()


def test_H_flip_pattern():
    e, h = build_E(), build_H(0, 0)
    for i in h.row_index:
        for j in h.col_index:
            flipped = i in PLANE.line_points[0] and 0 in PLANE.line_points[j]
            assert h.entries[h.row_index.index(i), h.col_index.index(j)] == (
                -1 if flipped else 1) * e.entries[i, j]


def test_H_requires_incidence():
    with pytest.raises(HadamardError):
        build_H(0, 4)


def test_sign_matrix_validation():
    with pytest.raises(HadamardError):
        SignMatrix(np.zeros((2, 2), dtype=np.int8), (0, 1), (0, 1))
    with pytest.raises(HadamardError):
        SignMatrix(np.ones((2, 2), dtype=np.int8), (0, 0), (0, 1))


def test_single_point_move():
    for q in (1, 2, 3):
        assert act_point_move(build_H(0, 0), 0, q) == build_H(q, 0)
    assert act_point_move(build_H(0, 0), 0, 0) == build_H(0, 0)
    back = act_point_move(act_point_move(build_H(0, 0), 0, 2), 2, 0)
    assert back == build_H(0, 0)
    with pytest.raises(HadamardError):
        act_point_move(build_H(0, 0), 1, 2)


def test_single_line_move():
    for m in PLANE.point_lines[0]:
        assert act_line_move(build_H(0, 0), 0, m) == build_H(0, m)
    back = act_line_move(act_line_move(build_H(0, 0), 0, 3), 3, 0)
    assert back == build_H(0, 0)


def test_point_and_line_moves_commute():
    rng = random.Random(1)
    for _ in range(100):
        p, ell = rng.choice(INCIDENT)
        h = build_H(p, ell)
        q = rng.choice([x for x in PLANE.line_points[ell] if x != p])
        m = rng.choice([x for x in PLANE.point_lines[p] if x != ell])
        # an arbitrary legal-looking pair: compare on the raw matrix actions
        a = act_line_move(act_point_move(h, p, q), ell, m)
        b = act_point_move(act_line_move(h, ell, m), p, q)
        assert a == b


def test_transform_examples():
    assert verify_hadamard_transform(tables.EXAMPLE_PATH, (0, 0))
    for q in (1, 2, 3):
        assert verify_hadamard_transform((0, q), (0, 0))
    final = play_on_matrix(build_H(0, 0), dual_moves(tables.EXAMPLE_PATH, 0))
    assert (final.missing_row, final.missing_col) == (0, 0)


def test_transform_random():
    rng = random.Random(2)
    for _ in range(1000):
        p, ell = rng.choice(INCIDENT)
        path = random_nondegenerate_path(rng, rng.randint(0, 12), p)
        assert verify_hadamard_transform(path, (p, ell))


def test_closed_paths_are_automorphisms():
    rng = random.Random(4)
    h = build_H(0, 0)
    for _ in range(100):
        path = reduce_path(random_nondegenerate_path(rng, rng.randint(1, 10)) + (0,))
        if len(path) < 2:
            continue
        auto = HadamardAutomorphism.from_closed_path(path, 0)
        assert auto.fixes(h)


def test_theta():
    pair = dual_path_to_perm_pair((0, 1, 4, 0))
    assert theta(pair) == pair
    swap = dual_path_to_perm_pair(tables.THETA_SWAP_PATH)
    assert theta(swap) == (Perm13.parse("(1 6)(2 3)(4 5)(7 11)"), Perm13.parse("(1 5)(2 3)(4 6)(10 12)"))
    assert theta(theta(swap)) == swap


def test_theta_respects_concatenation():
    rng = random.Random(6)
    for _ in range(50):
        a = reduce_path(random_nondegenerate_path(rng, rng.randint(1, 6)) + (0,))
        b = reduce_path(random_nondegenerate_path(rng, rng.randint(1, 6)) + (0,))
        ab = reduce_path(a + b[1:])
        if not all(len(x) > 1 for x in (a, b, ab)):
            continue
        pa, pb, pab = (theta(dual_path_to_perm_pair(x, 0)) for x in (a, b, ab))
        assert pab == (pb[0] * pa[0], pb[1] * pa[1])


def test_centralizer_enumeration():
    alpha = Perm13.parse("(1 4)(2 3)(5 6)(8 9)")
    cent = list(involution_centralizer(alpha))
    assert len(cent) == len(set(cent)) == 9216
    assert all(c * alpha == alpha * c and c(0) == 0 for c in cent)


def test_theta_outer():
    r = theta_report()
    assert [str(c) for c in r.common_centralizer if not c.is_identity()] == [
        "(1 6)(2 9)(3 8)(4 5)(7 12)(10 11)"]
    assert len(r.common_centralizer) == 2
    assert not r.swap_conjugate
    assert verify_theta_outer()


def test_dump_golden():
    text = build_H(0, 0).dump()
    lines = text.splitlines()
    assert lines[0] == "rows: 1 2 3 4 5 6 7 8 9 10 11 12"
    assert lines[1] == "cols: 1 2 3 4 5 6 7 8 9 10 11 12"
    assert len(lines) == 14 and all(len(x) == 12 and set(x) <= {"+", "-"} for x in lines[2:])
    # row 1: -1 on lines 4, 5, 6 through it; negated on lines 1, 2, 3 through 0
    assert lines[2] == "------++++++"
    assert text == build_H(0, 0).dump()
