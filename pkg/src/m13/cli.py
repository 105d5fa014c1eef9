"""Command-line front end: ``m13 verify | bfs | solve | transitivity``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

FORMATS = ("text", "json", "csv")
VERIFY_SCOPES = ("plane", "game", "codes", "hadamard", "theta", "all")


@dataclass(frozen=True)
class Config:
    db_path: Path
    worker_count: int = 1
    output_format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError("worker count must be at least 1")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")

    def db_file(self, kind: str) -> Path:
        return self.db_path / f"{kind}.m13db"


def default_db_dir() -> Path:
    return Path(os.environ.get("M13_DB_DIR", "m13-db"))


# -- output --------------------------------------------------------------------

def emit_table(rows: list[dict], cfg: Config, text_line: Callable[[dict], str], out=None) -> None:
    out = out or sys.stdout
    if cfg.output_format == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        for r in rows:
            out.write(text_line(r) + "\n")


# -- verify --------------------------------------------------------------------

def _plane_checks(cfg):
    from m13.plane import build_canonical_plane, enumerate_ordered_ovals, verify_no_hyperovals
    plane = build_canonical_plane()
    yield "axioms", True, "13 points, 13 lines, 4 per line"
    yield "self-dual", bool((plane.incidence == plane.incidence.T).all()), ""
    n = len(enumerate_ordered_ovals(plane))
    yield f"ovals={n}", n == 5616, "ordered"
    yield "no-hyperovals", verify_no_hyperovals(plane), ""


def _game_checks(cfg):
    from m13 import tables
    from m13.game import path_to_perm, path_to_signed_perm
    from m13.perms import Perm13
    from m13.search import verify_generators
    sigma = path_to_perm(tables.EXAMPLE_PATH)
    yield "example-perm", sigma == Perm13.parse(tables.EXAMPLE_PERM), str(sigma)
    flips = path_to_signed_perm(tables.EXAMPLE_PATH).flipped()
    yield "example-flips", flips == frozenset(tables.EXAMPLE_FLIPS), str(sorted(flips))
    minus = path_to_signed_perm(tables.MINUS_ID_PATH)
    yield "minus-id", minus.unsigned().is_identity() and minus.flipped() == frozenset(range(1, 13)), ""
    rep = verify_generators()
    for name, ok in rep.matches.items():
        yield f"generator-{name}", ok, str(rep.induced[name])
    yield f"closure={rep.order}", rep.order == tables.M12_ORDER, ""


def _code_checks(cfg):
    from m13.codes import (build_C, build_Cp, build_Cprime, line_vectors, restrict_Gp,
                           TernaryCode, verify_code_transport)
    c, cprime = build_C(), build_Cprime()
    yield f"dimC={c.dimension}", c.dimension == 7, ""
    yield f"dimC'={cprime.dimension}", cprime.dimension == 6, ""
    words = c.codewords()
    w4 = {tuple(w) for w in words if np.count_nonzero(w) == 4}
    lines = {tuple(v) for v in line_vectors()} | {tuple(-v % 3) for v in line_vectors()}
    yield f"wtmin(C)={c.min_weight()}", c.min_weight() == 4 and w4 == lines, f"{len(w4)} weight-4 words"
    yield f"wtmin(C')={cprime.min_weight()}", cprime.min_weight() == 6, ""
    yield "C'=dual(C)", cprime == c.dual(), ""
    census = {0: 1, 6: 264, 9: 440, 12: 24}
    dists = [restrict_Gp(p).weight_distribution() for p in range(13)]
    ok = all(d == census for d in dists)
    d0 = dists[0]
    yield "golay-enum=" + "/".join(str(d0.get(k, 0)) for k in sorted(census)), ok, "all 13 points"
    yield "golay-self-dual", all(restrict_Gp(p).is_self_dual() for p in range(13)), ""
    n = sum(verify_code_transport(p, q) for p in range(13) for q in range(13) if p != q)
    yield f"transport={n}/156", n == 156, ""


def _hadamard_checks(cfg, samples: int = 10_000):
    from m13.game import random_nondegenerate_path
    from m13.hadamard import build_E, build_H, verify_hadamard_transform
    from m13.plane import build_canonical_plane
    e = build_E().entries.astype(np.int64)
    g = e @ e.T
    yield "E-products", bool((np.diag(g) == 13).all() and (g[~np.eye(13, dtype=bool)] == 1).all()), ""
    plane = build_canonical_plane()
    pairs = [(p, ell) for ell in range(13) for p in plane.line_points[ell]]
    n = sum(build_H(p, ell).is_hadamard() for p, ell in pairs)
    yield f"hadamard={n}/52", n == 52, ""
    rng = random.Random(cfg.seed)
    bad = 0
    for _ in range(samples):
        p, ell = rng.choice(pairs)
        path = random_nondegenerate_path(rng, rng.randint(0, 12), p)
        bad += not verify_hadamard_transform(path, (p, ell))
    yield f"transform={samples - bad}/{samples}", bad == 0, "random paths of length <= 12"


def _theta_checks(cfg):
    from m13 import tables
    from m13.hadamard import theta_report, verify_theta_outer
    from m13.perms import Perm13
    r = theta_report()
    for name, (_, text) in tables.THETA_FIXED_PATHS.items():
        yield f"{name}-fixed", r.alphas[name] == Perm13.parse(text), str(r.alphas[name])
    yield f"centralizer={r.centralizer_size}", r.centralizer_size == 9216, ""
    yield "witness", len(r.common_centralizer) == 2 and r.witness == Perm13.parse(
        tables.THETA_CENTRALIZER_WITNESS), str(r.witness) if len(r.common_centralizer) > 1 else "none"
    yield "not-conjugate", not r.swap_conjugate, " / ".join(map(str, r.swap_pair))
    yield "theta-outer", verify_theta_outer(), ""


_SCOPES = {"plane": _plane_checks, "game": _game_checks, "codes": _code_checks,
           "hadamard": _hadamard_checks, "theta": _theta_checks}


def cmd_verify(scope: str, cfg: Config) -> int:
    names = [s for s in _SCOPES] if scope == "all" else [scope]
    rows = []
    for s in names:
        for check, ok, detail in _SCOPES[s](cfg):
            rows.append({"scope": s, "check": check, "status": "PASS" if ok else "FAIL",
                         "detail": detail})
    emit_table(rows, cfg, lambda r: f"{r['status']}  {r['scope']:<9} {r['check']:<22} {r['detail']}".rstrip())
    return 0 if all(r["status"] == "PASS" for r in rows) else 1


# -- bfs -----------------------------------------------------------------------

def cmd_bfs(game: str, cfg: Config) -> int:
    from m13.search import bfs, expected_histogram
    db = bfs(game, workers=cfg.worker_count)
    cfg.db_path.mkdir(parents=True, exist_ok=True)
    db.save(cfg.db_file(game))
    got, want = db.histogram(), expected_histogram(game)
    n = max(len(got["all"]), len(want["all"]))
    pad = lambda xs: list(xs) + [0] * (n - len(xs))
    rows = []
    for k, (g, a, wg, wa) in enumerate(zip(pad(got["group"]), pad(got["all"]),
                                           pad(want["group"]), pad(want["all"]))):
        rows.append({"k": k, "group": g, "all": a, "expected_group": wg, "expected_all": wa,
                     "status": "PASS" if (g, a) == (wg, wa) else "FAIL"})

    def line(r):
        s = f"k={r['k']}: group={r['group']} all={r['all']}"
        if r["status"] == "FAIL":
            s += f"  MISMATCH expected group={r['expected_group']} all={r['expected_all']}"
        return s

    emit_table(rows, cfg, line)
    ok = all(r["status"] == "PASS" for r in rows)
    if cfg.output_format == "text":
        print(f"{'PASS' if ok else 'FAIL'}: {len(db)} states written to {cfg.db_file(game)}")
    return 0 if ok else 1


# -- solve ---------------------------------------------------------------------

def _load_db(cfg: Config, kind: str):
    from m13.search import DepthDatabase
    f = cfg.db_file(kind)
    if not f.exists():
        raise FileNotFoundError(f"no {kind} database at {f}; run 'm13 bfs {kind}' first")
    return DepthDatabase.load(f)


def cmd_solve(text: str, cfg: Config, signed: bool = False, optimal: bool = False) -> int:
    from m13.perms import PermError, Perm13, SignedPerm13
    from m13.solver import DATABASE, MEET_IN_MIDDLE, NotInPseudogroupError, solve_basic, solve_signed
    try:
        target = SignedPerm13.parse(text) if signed else Perm13.parse(text)
    except PermError as exc:
        print(f"error: cannot parse permutation: {exc}", file=sys.stderr)
        return 2
    try:
        if signed:
            res = solve_signed(target, DATABASE, _load_db(cfg, "signed"))
        elif optimal:
            res = solve_basic(target, DATABASE, _load_db(cfg, "basic"))
        else:
            res = solve_basic(target, MEET_IN_MIDDLE)
    except NotInPseudogroupError as exc:
        print(f"error: not in pseudogroup: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    row = {"target": str(target), "path": res.as_json(), "length": res.length,
           "certified_optimal": res.certified_optimal}
    if cfg.output_format == "json":
        print(json.dumps(row))
    elif cfg.output_format == "csv":
        print("target,path,length,certified_optimal")
        print(f"\"{row['target']}\",\"{res}\",{res.length},{str(res.certified_optimal).lower()}")
    else:
        print(json.dumps(res.as_json()))
        print(f"{res}  length={res.length}" + ("  (optimal)" if res.certified_optimal else ""))
    return 0


# -- transitivity --------------------------------------------------------------

def cmd_transitivity(side: str, cfg: Config, mode: str = "exhaustive", samples: int = 100) -> int:
    from m13.search import BASIC, bfs
    from m13.transitivity import DONOR, RECIPIENT, SextupleOracle, verify_theorem
    f = cfg.db_file(BASIC)
    from m13.search import DepthDatabase
    db = DepthDatabase.load(f) if f.exists() else bfs(BASIC)
    oracle = SextupleOracle(db)
    which = DONOR if side == "donors" else RECIPIENT
    m = "exhaustive" if mode == "exhaustive" else ("sampled", samples)
    report = verify_theorem(which, oracle, m, seed=cfg.seed, workers=cfg.worker_count)
    if cfg.output_format == "json":
        print(report.to_json())
    elif cfg.output_format == "csv":
        print("subset,predicted,observed")
        for d in report.discrepancies:
            print(f"\"{d['subset']}\",{d['predicted']},{d['observed']}")
        print(f"# {report.summary()}")
    else:
        for d in report.discrepancies:
            print(f"DISCREPANCY {d['subset']}: predicted={d['predicted']} observed={d['observed']}")
        print(report.summary())
    return 0 if report.ok else 1


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="m13", description="Verification and search tools for the M13 sliding-counter game.")
    ap.add_argument("--db", type=Path, default=None,
                    help="directory holding depth databases (default: $M13_DB_DIR or ./m13-db)")
    ap.add_argument("--workers", type=int, default=1, help="worker threads for transitivity checks")
    ap.add_argument("--format", choices=FORMATS, default="text", help="output format")
    ap.add_argument("--seed", type=int, default=0, help="seed for sampled modes")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the structural checks and print a PASS/FAIL table")
    v.add_argument("scope", choices=VERIFY_SCOPES)

    b = sub.add_parser("bfs", help="build a depth database and compare its histogram with the known table")
    b.add_argument("game", choices=("basic", "signed"))

    s = sub.add_parser("solve", help="find a move sequence realising a permutation given in cycle notation")
    s.add_argument("perm", help='e.g. "(1 7 12 6 8)(3 4 10 5 9)"; flipped counters carry a "!" suffix')
    s.add_argument("--signed", action="store_true", help="solve in the signed game (needs the signed database)")
    s.add_argument("--optimal", action="store_true", help="shortest path from the basic database")

    t = sub.add_parser("transitivity", help="check universal donors or recipients over six-subsets")
    t.add_argument("side", choices=("donors", "recipients"))
    t.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    t.add_argument("--samples", type=int, default=100, help="subset count in sampled mode")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(args.db or default_db_dir(), args.workers, args.format, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        return cmd_verify(args.scope, cfg)
    if args.command == "bfs":
        return cmd_bfs(args.game, cfg)
    if args.command == "solve":
        return cmd_solve(args.perm, cfg, args.signed, args.optimal)
    return cmd_transitivity(args.side, cfg, args.mode, args.samples)


if __name__ == "__main__":
    sys.exit(main())
