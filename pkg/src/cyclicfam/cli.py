"""Command-line front end: parameter tables, claim verification, distance engines.

Exit codes: 0 success, 1 a claim failed, 2 usage error, 3 an engine limit was hit.
Set CYCLICFAM_THREADS to fan table cells and certificate checks out over threads;
output order and content do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import cycliccode as cc
from . import distance, families
from .field import FieldError, make_field
from .records import CodeRecord, to_csv, to_jsonl

EXIT_OK, EXIT_CLAIM, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
M_MAX = 20
THREADS_ENV = "CYCLICFAM_THREADS"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str | None = None
    ms: tuple[int, ...] = ()
    member: int | None = None
    method: str | None = None
    w_max: int = 8
    target: int | None = None
    iterations: int = 100_000
    seed: int | None = None
    fmt: str = "jsonl"
    out: str | None = None
    poly: int | None = None
    exhaustive_k: int = 22

    def __post_init__(self):
        if self.method == "randomized" and self.seed is None:
            raise UsageError("--seed is required with --method randomized")


def parse_m_range(text: str) -> tuple[int, ...]:
    """'5', '3..6' or '3,5,7'."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            ms = tuple(range(lo, hi + 1))
        else:
            ms = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse m range {text!r}") from None
    if not ms or any(not 2 <= m <= M_MAX for m in ms):
        raise UsageError(f"m range {text!r} must be nonempty and within 2..{M_MAX}")
    return ms


def _threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(n) as ex:
        return list(ex.map(fn, items))


def _field(m: int, poly: int | None):
    try:
        return make_field(m, poly)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def describe(code: cc.CyclicCode, family: str, m: int, exhaustive_k: int = 22, w_max: int = 8,
             mitm_n_max: int = 63) -> CodeRecord:
    """Record with exact d where an exact engine fits, certificate bound otherwise."""
    n, k = code.n, code.k
    if k == 0:
        return CodeRecord(family, m, n, 0, None, "zero-code")
    cert = cc.best_bch_certificate(code)
    if k <= exhaustive_k:
        d = distance.min_distance_exhaustive(code, k_limit=exhaustive_k)
        return CodeRecord(family, m, n, k, cert.bound, "exhaustive", cert, d_exact=d)
    if n <= mitm_n_max:
        d = distance.min_distance_mitm(code, w_max)
        if d is not None:
            return CodeRecord(family, m, n, k, cert.bound, "mitm", cert, d_exact=d)
        return CodeRecord(family, m, n, k, max(cert.bound, w_max + 1), "mitm", cert)
    return CodeRecord(family, m, n, k, cert.bound, "certificate", cert)


def table_records(cfg: RunConfig) -> list[CodeRecord]:
    fams = [cfg.family]
    if cfg.family == "duadic":
        fams = ["duadic", "duadic-dual"]
    cells = []
    for m in cfg.ms:
        for fam in fams:
            cells += [(fam, m, mem) for mem in families.family_members(fam, m)]
    if not cells:
        raise UsageError(f"family {cfg.family} has no members for m in {list(cfg.ms)}")
    fields = {m: _field(m, cfg.poly) for m in cfg.ms}

    def run(cell):
        fam, m, mem = cell
        code = families.build_family_code(fam, m, mem, fields[m])
        return describe(code, families.member_label(fam, m, mem), m, cfg.exhaustive_k, cfg.w_max)

    return _pmap(run, cells)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(cfg: RunConfig) -> int:
    records = table_records(cfg)
    _emit(to_csv(records) if cfg.fmt == "csv" else to_jsonl(records), cfg.out)
    return EXIT_OK


def _report(rows: list[dict], out: str | None) -> int:
    _emit("[\n" + ",\n".join(json.dumps(r, separators=(",", ":")) for r in rows) + "\n]\n", out)
    failed = [r for r in rows if r["status"] == "fail"]
    print(f"{len(rows) - len(failed)}/{len(rows)} checks passed", file=sys.stderr)
    return EXIT_CLAIM if failed else EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "lemmas":
        rows = families.lemma_report(args.m_max)
    elif args.suite == "theorems":
        rows = families.dimension_report(args.m_max)
    elif args.suite == "certificates":
        claims = [(c, m) for c in families.THEOREMS for m in c.cond.values(args.m_max)]

        def run(item):
            claim, m = item
            want = families.expected_bound(claim, m)
            got, cert = families.certified_bound(claim, m)
            return {"claim_id": claim.id, "m": m, "status": "pass" if got >= want else "fail",
                    "expected": want, "certified": got, "certificate": cert.to_dict()}

        rows = _pmap(run, claims)
    else:
        if args.m % 2 == 0 or args.m < 3:
            raise UsageError("verify duadic needs odd m >= 3")
        rows = families.verify_duadic_structure(args.m, _field(args.m, args.poly))
    return _report(rows, args.out)


def cmd_mindist(cfg: RunConfig) -> int:
    (m,) = cfg.ms
    members = families.family_members(cfg.family, m)
    member = members[0] if cfg.member is None and len(members) == 1 else cfg.member
    if member not in members:
        raise UsageError(f"{cfg.family} at m={m} has members {members}; choose one with --i/--member/--r")
    code = families.build_family_code(cfg.family, m, member, _field(m, cfg.poly))
    label = families.member_label(cfg.family, m, member)
    n, k = code.n, code.k
    cert = cc.best_bch_certificate(code) if k else None
    lower = cert.bound if cert else None
    if cfg.method == "exhaustive":
        d = distance.min_distance_exhaustive(code)
        rec = CodeRecord(label, m, n, k, lower, "exhaustive", cert, d_exact=d)
    elif cfg.method == "mitm":
        d = distance.min_distance_mitm(code, cfg.w_max)
        if d is None:
            rec = CodeRecord(label, m, n, k, max(lower or 0, cfg.w_max + 1), "mitm", cert)
        else:
            rec = CodeRecord(label, m, n, k, lower, "mitm", cert, d_exact=d)
    else:
        target = cfg.target if cfg.target is not None else n
        word = distance.low_weight_search(code, target, cfg.iterations, cfg.seed) if k else None
        up = word.bit_count() if word else None
        rec = CodeRecord(label, m, n, k, lower, "randomized", cert, d_upper=up, seed=cfg.seed)
    _emit(rec.to_json() + "\n", cfg.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclicfam", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def poly_arg(sp):
        sp.add_argument("--poly", type=lambda s: int(s, 0), default=None,
                        help="primitive polynomial as an int (0b/0x accepted); default is the pinned one")

    t = sub.add_parser("table", help="parameter table for a family over a range of m")
    t.add_argument("--family", required=True, choices=families.FAMILIES)
    t.add_argument("--m", required=True, help="m, a..b or a,b,c")
    t.add_argument("--format", dest="fmt", choices=("jsonl", "csv"), default="jsonl")
    t.add_argument("--out")
    t.add_argument("--wmax", type=int, default=8, help="meet-in-the-middle weight cap")
    t.add_argument("--exhaustive-k", type=int, default=22, help="largest k enumerated exhaustively")
    poly_arg(t)

    v = sub.add_parser("verify", help="check the claim catalog")
    vs = v.add_subparsers(dest="suite", required=True)
    for name, default in (("lemmas", 25), ("theorems", 20), ("certificates", 15)):
        sp = vs.add_parser(name)
        sp.add_argument("--m-max", type=int, default=default)
        sp.add_argument("--out")
    d = vs.add_parser("duadic")
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--out")
    poly_arg(d)

    md = sub.add_parser("mindist", help="run one distance engine on one code")
    md.add_argument("--family", required=True, choices=families.FAMILIES)
    md.add_argument("--m", type=int, required=True)
    sel = md.add_mutually_exclusive_group()
    sel.add_argument("--i", type=int, dest="member", help="mod3 member i")
    sel.add_argument("--member", type=int, dest="member", help="duadic member index (0 or 1)")
    sel.add_argument("--r", type=int, dest="member", help="punctured Reed-Muller order")
    md.add_argument("--method", required=True, choices=("exhaustive", "mitm", "randomized"))
    md.add_argument("--wmax", type=int, default=8)
    md.add_argument("--target", type=int)
    md.add_argument("--iterations", type=int, default=100_000)
    md.add_argument("--seed", type=int)
    md.add_argument("--out")
    poly_arg(md)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.suite != "duadic" and not 1 <= args.m_max <= 32:
                raise UsageError("--m-max must be in 1..32")
            return cmd_verify(args)
        if args.command == "table":
            cfg = RunConfig("table", family=args.family, ms=parse_m_range(args.m), w_max=args.wmax,
                            fmt=args.fmt, out=args.out, poly=args.poly, exhaustive_k=args.exhaustive_k)
            return cmd_table(cfg)
        if args.iterations < 1 or args.wmax < 1:
            raise UsageError("--iterations and --wmax must be positive")
        cfg = RunConfig("mindist", family=args.family, ms=parse_m_range(str(args.m)), member=args.member,
                        method=args.method, w_max=args.wmax, target=args.target,
                        iterations=args.iterations, seed=args.seed, out=args.out, poly=args.poly)
        return cmd_mindist(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except distance.EngineLimitError as exc:
        print(f"engine limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
