import math
import random
from itertools import combinations

import pytest

from m13.game import path_to_perm
from m13.perms import Perm13
from m13.plane import automorphism_from_ovals, build_canonical_plane, enumerate_ordered_ovals
from m13.transitivity import (DONOR, RECIPIENT, TransitivityError, contains_line,
                              find_collision_witness, is_universal_donor, is_universal_recipient,
                              sextuple, sextuple_count, verify_donor_theorem,
                              verify_ordered_sample, verify_recipient_theorem)


def acts_alike(a, b, s, side):
    if side == DONOR:
        return all(a(x) == b(x) for x in s)
    return all(a.inverse()(x) == b.inverse()(x) for x in s)


def test_sextuple_validation():
    assert sextuple([5, 4, 3, 2, 1, 0]) == (5, 4, 3, 2, 1, 0)
    for bad in ([0, 1, 2], [0, 0, 1, 2, 3, 4], [0, 1, 2, 3, 4, 13]):
        with pytest.raises(TransitivityError):
            sextuple(bad)


def test_counts_agree():
    assert sextuple_count() == math.factorial(13) // math.factorial(7) == 1235520


def test_donor_examples(oracle):
    assert is_universal_donor((0, 1, 2, 3, 4, 5), oracle)
    assert not is_universal_donor((1, 2, 3, 4, 5, 6), oracle)
    assert is_universal_donor((5, 3, 0, 1, 4, 2), oracle)


def test_recipient_examples(oracle):
    assert is_universal_recipient((0, 1, 2, 3, 4, 5), oracle)
    plane = build_canonical_plane()
    no_line = next(s for s in combinations(range(13), 6) if not contains_line(s))
    assert not any(set(pts) <= set(no_line) for pts in plane.line_points)
    assert not is_universal_recipient(no_line, oracle)
    assert not is_universal_recipient(tuple(reversed(no_line)), oracle)


def test_injective_means_every_image_hit(oracle):
    fp = oracle.fingerprints((0, 1, 2, 3, 4, 5), DONOR)
    assert len(set(fp.tolist())) == sextuple_count()


def _with_disjoint_line(extra):
    plane = build_canonical_plane()
    for s in combinations(range(13), 6):
        if any(not set(pts) & (set(s) | set(extra)) for pts in plane.line_points):
            return s


def test_donor_witness_case_one():
    # line {0, 9, 10, 11} meets {0, 1, ..., 6} only in the hole
    s = (1, 2, 3, 4, 5, 6)
    a, b = find_collision_witness(s, DONOR)
    assert a.is_identity()
    q = next(x for x in range(13) if b == path_to_perm((0, x)))
    assert q in (9, 10, 11)
    assert acts_alike(a, b, s, DONOR)


def test_donor_witness_other_cases(oracle):
    plane = build_canonical_plane()
    s = next(s for s in combinations(range(1, 13), 6)
             if not any(set(pts) & (set(s) | {0}) == {0} for pts in plane.line_points))
    a, b = find_collision_witness(s, DONOR, oracle)
    assert not a.is_identity()
    assert a != b and acts_alike(a, b, s, DONOR)


def test_recipient_witness_short_construction():
    s = _with_disjoint_line(set())
    a, b = find_collision_witness(s, RECIPIENT)
    assert a != b and acts_alike(a, b, s, RECIPIENT)
    # the pair is [0, p1] and [0, p1, p2] for p1, p2 on a line missing s
    p1 = next(p for p in range(1, 13) if a == path_to_perm((0, p)))
    p2 = next(p for p in range(13) if b == path_to_perm((0, p1, p))) if a != b else None
    plane = build_canonical_plane()
    assert not set(plane.line_points[plane.line_through(p1, p2)]) & set(s)


def test_every_failing_sextuple_has_a_short_witness():
    from m13.transitivity import _acts_alike, _short_candidates
    plane = build_canonical_plane()
    for s in combinations(range(1, 13), 6):
        assert any(_acts_alike(a, b, s, DONOR) for a, b in _short_candidates(s, DONOR))
    for s in combinations(range(13), 6):
        if any(not set(pts) & set(s) for pts in plane.line_points):
            assert any(_acts_alike(a, b, s, RECIPIENT) for a, b in _short_candidates(s, RECIPIENT))


def test_no_witness_for_universal(oracle):
    assert find_collision_witness((0, 1, 2, 3, 4, 5), DONOR, oracle) is None
    assert find_collision_witness((0, 1, 2, 3, 4, 5), RECIPIENT, oracle) is None


def test_sampled_modes(oracle):
    d = verify_donor_theorem(oracle, ("sampled", 40), seed=1)
    r = verify_recipient_theorem(oracle, ("sampled", 40), seed=1, workers=2)
    assert d.ok and r.ok and d.subsets == r.subsets == 40
    assert d.summary().endswith("0 discrepancies")


def test_ordered_sample(oracle):
    assert verify_ordered_sample(oracle, DONOR, n=60, seed=4) == 0
    assert verify_ordered_sample(oracle, RECIPIENT, n=60, seed=5) == 0


def test_automorphism_relabelling(oracle):
    # collineations fixing 0 preserve the hole, hence both predicates
    ovals = [o for o in enumerate_ordered_ovals() if o[0] == 0]
    src = ovals[0]
    rng = random.Random(8)
    for dst in rng.sample(ovals, 4):
        g = automorphism_from_ovals(src, dst)
        for s in rng.sample(list(combinations(range(13), 6)), 5):
            gs = tuple(g(x) for x in s)
            assert is_universal_donor(gs, oracle) == is_universal_donor(s, oracle)
            assert is_universal_recipient(gs, oracle) == is_universal_recipient(s, oracle)
