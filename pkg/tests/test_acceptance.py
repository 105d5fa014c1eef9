"""Acceptance suite: one test per criterion, each recorded as a PASS/FAIL line
in the terminal summary (see ``conftest.pytest_terminal_summary``).

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import math
import random
import time
from contextlib import contextmanager

import numpy as np

from m13 import tables
from m13.codes import (build_C, build_Cprime, line_vectors, restrict_Gp,
                       verify_code_transport)
from m13.game import path_to_perm, path_to_signed_perm, random_nondegenerate_path
from m13.hadamard import build_E, build_H, theta, theta_report, verify_hadamard_transform
from m13.perms import Perm13
from m13.plane import build_canonical_plane
from m13.search import (BASIC, SIGNED, expected_histogram, identity_paths, key_to_position,
                        max_depth_group, orbits, tetracode_agreement, verify_antipodes,
                        verify_generators)
from m13.solver import DATABASE, solve_basic, solve_signed
from m13.transitivity import verify_donor_theorem, verify_recipient_theorem

from conftest import ACCEPTANCE, BUILD_SECONDS


def record(n, title, ok, detail):
    ACCEPTANCE.append((n, title, bool(ok), detail))
    print(f"[{'PASS' if ok else 'FAIL'}] {n}. {title}: {detail}")
    assert ok, f"criterion {n} ({title}) failed: {detail}"


@contextmanager
def stopwatch():
    box = {}
    t = time.perf_counter()
    yield box
    box["s"] = time.perf_counter() - t


def test_01_basic_depth_table(basic_db):
    h = basic_db.histogram()
    ok = h == expected_histogram(BASIC) and BUILD_SECONDS.get(BASIC, 0) < 60
    record(1, "basic depth table", ok,
           f"group={h['group']} all={h['all']} bfs={BUILD_SECONDS.get(BASIC, float('nan')):.1f}s")


def test_02_signed_depth_table(signed_db):
    h = signed_db.histogram()
    ok = (h == expected_histogram(SIGNED) and h["group"][12] == 1 and h["all"][11] == 12
          and BUILD_SECONDS.get(SIGNED, 0) < 180)
    record(2, "signed depth table", ok,
           f"group={h['group']} all={h['all']} bfs={BUILD_SECONDS.get(SIGNED, float('nan')):.1f}s")


def test_03_group_orders(basic_db, signed_db):
    counts = (int(basic_db.group_mask().sum()), len(basic_db),
              int(signed_db.group_mask().sum()), len(signed_db))
    full = math.factorial(13) // math.factorial(7)
    ok = counts == (95040, full, 2 * 95040, 2 * full) and full == 1235520
    record(3, "group orders", ok, "M12=%d M13=%d 2M12=%d 2M13=%d" % counts)


def test_04_worked_examples():
    sigma = path_to_perm(tables.EXAMPLE_PATH)
    signed = path_to_signed_perm(tables.EXAMPLE_PATH)
    minus = path_to_signed_perm(tables.MINUS_ID_PATH)
    ok = (sigma == Perm13.parse("(1 7 12 6 8)(3 4 10 5 9)")
          and signed.unsigned() == sigma and signed.flipped() == {1, 7, 9, 10}
          and minus.unsigned().is_identity() and minus.flipped() == set(range(1, 13)))
    record(4, "worked examples", ok,
           f"{sigma}; flips={sorted(signed.flipped())}; minus-id flips={len(minus.flipped())}")


def test_05_generators():
    with stopwatch() as sw:
        rep = verify_generators()
    verbatim = all(rep.induced[k] == Perm13.parse(v) for k, v in tables.GENERATORS.items())
    ok = verbatim and rep.order == 95040 and sw["s"] < 10
    record(5, "generators", ok, f"alpha,gamma,delta verbatim={verbatim} closure={rep.order} in {sw['s']:.2f}s")


def test_06_code_suite():
    with stopwatch() as sw:
        c, cp = build_C(), build_Cprime()
        words = c.codewords()
        w4 = {tuple(w) for w in words if np.count_nonzero(w) == 4}
        pm_lines = {tuple(h) for h in line_vectors()} | {tuple(-h % 3) for h in line_vectors()}
        golay = {0: 1, 6: 264, 9: 440, 12: 24}
        gp_ok = all(restrict_Gp(p).is_self_dual() and restrict_Gp(p).dimension == 6
                    and restrict_Gp(p).weight_distribution() == golay for p in range(13))
        transports = sum(verify_code_transport(p, q) for p in range(13) for q in range(13) if p != q)
    ok = (c.dimension == 7 and cp.dimension == 6 and c.min_weight() == 4 and w4 == pm_lines
          and len(w4) == 26 and cp.min_weight() == 6 and gp_ok and transports == 156 and sw["s"] < 10)
    record(6, "code suite", ok,
           f"dimC={c.dimension} dimC'={cp.dimension} wt4={len(w4)} wtmin(C')={cp.min_weight()} "
           f"golay={gp_ok} transports={transports}/156 in {sw['s']:.2f}s")


def test_07_hadamard_suite():
    plane = build_canonical_plane()
    incident = [(p, ell) for ell in range(13) for p in plane.line_points[ell]]
    rng = random.Random(2024)
    with stopwatch() as sw:
        g = build_E().gram()
        e_ok = (np.diag(g) == 13).all() and (g[~np.eye(13, dtype=bool)] == 1).all()
        hadamard = sum(build_H(p, ell).is_hadamard() for p, ell in incident)
        good = 0
        for _ in range(10_000):
            p, ell = rng.choice(incident)
            good += verify_hadamard_transform(random_nondegenerate_path(rng, rng.randint(0, 12), p), (p, ell))
    ok = e_ok and hadamard == 52 and good == 10_000 and sw["s"] < 30
    record(7, "hadamard suite", ok,
           f"E products ok={bool(e_ok)} H={hadamard}/52 transform={good}/10000 in {sw['s']:.1f}s")


def test_08_outer_automorphism():
    with stopwatch() as sw:
        r = theta_report()
    common = sorted(str(c) for c in r.common_centralizer)
    swapped = theta(r.swap_pair) == r.swap_pair[::-1] and r.swap_pair[0] != r.swap_pair[1]
    ok = (common == ["()", "(1 6)(2 9)(3 8)(4 5)(7 12)(10 11)"] and swapped
          and not r.swap_conjugate and sw["s"] < 10)
    record(8, "outer automorphism", ok,
           f"intersection={common} swapped={swapped} conjugate={r.swap_conjugate} in {sw['s']:.2f}s")


def test_09_tetracode(basic_db):
    top = max_depth_group(basic_db)
    listed = set()
    for text, _ in tables.TETRACODE:
        s = Perm13.parse(text)
        listed |= {s, s.inverse()}
    group = top | {Perm13.identity()}
    closed = all(a * b in group for a in group for b in group)
    abelian = all(a * b == b * a for a in group for b in group)
    exponent3 = all((a * a * a).is_identity() for a in group)
    plane = build_canonical_plane()
    punctured = sorted((frozenset(plane.line_points[ell]) - {0} for ell in plane.point_lines[0]), key=min)
    orbit_ok = orbits(top, range(1, 13)) == punctured
    items = sorted(top, key=str)
    agree = all(tetracode_agreement(a, b) in plane.point_lines[0]
                for i, a in enumerate(items) for b in items[i + 1:])
    ok = top == listed and len(group) == 9 and closed and abelian and exponent3 and orbit_ok and agree
    record(9, "tetracode", ok,
           f"depth-9={len(top)} match={top == listed} order-9 elementary abelian={closed and abelian and exponent3} "
           f"orbits=punctured lines {orbit_ok} one-line agreement={agree}")


def test_10_identity_path_census():
    with stopwatch() as sw:
        short = {k: len(identity_paths(k)) for k in range(1, 6)}
        eight = len(identity_paths(8))
    ok = all(v == 0 for v in short.values()) and eight == 432 and sw["s"] < 60
    record(10, "identity-path census", ok,
           f"lengths 1-5: {list(short.values())}; length 8: {eight} (expected 432) in {sw['s']:.1f}s")


def test_11_transitivity(oracle):
    with stopwatch() as sw:
        d = verify_donor_theorem(oracle)
        r = verify_recipient_theorem(oracle)
    ok = (d.ok and r.ok and d.subsets == r.subsets == 1716 and d.universal == 792
          and r.universal == 468 and sw["s"] < 15 * 60)
    record(11, "transitivity", ok, f"{d.summary()}; {r.summary()}; {sw['s']:.0f}s")


def test_12_solver(basic_db, signed_db):
    rng = np.random.default_rng(12)
    bad = []
    mim_max = db_max = signed_max = 0
    for k in rng.choice(len(basic_db), 1000, replace=False):
        target = key_to_position(int(basic_db.keys[k]), BASIC).to_perm()
        mim = solve_basic(target)
        exact = solve_basic(target, DATABASE, basic_db)
        if (path_to_perm(mim.path) != target or mim.length > 10 or path_to_perm(exact.path) != target
                or exact.length != basic_db.depths[k]):
            bad.append(str(target))
        mim_max, db_max = max(mim_max, mim.length), max(db_max, exact.length)
    for k in rng.choice(len(signed_db), 1000, replace=False):
        target = key_to_position(int(signed_db.keys[k]), SIGNED).to_signed_perm()
        res = solve_signed(target, DATABASE, signed_db)
        if path_to_signed_perm(res.path) != target or res.length != signed_db.depths[k]:
            bad.append(str(target))
        signed_max = max(signed_max, res.length)
    ok = not bad and mim_max <= 10 and db_max <= 9 and signed_max <= 12
    record(12, "solver", ok,
           f"invalid={len(bad)} max lengths: meet-in-middle={mim_max} database={db_max} signed={signed_max}")


def test_13_antipodes(signed_db):
    rep = verify_antipodes(signed_db)
    ok = rep.min_sum >= 12 and rep.violations == 0 and rep.near_pole[1] == [11] and rep.near_pole[2] == [10]
    record(13, "antipode properties", ok,
           f"min depth sum={rep.min_sum} violations={rep.violations} "
           f"antipode depths of depth-1={rep.near_pole[1]} depth-2={rep.near_pole[2]}")
