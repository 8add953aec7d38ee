"""Command-line driver: verify one (n, s) or sweep all even s <= n <= max_n.

    python3 -m typeb_contraction verify --n 6 --s 4 --json out.json
    python3 -m typeb_contraction sweep --max-n 12 --jobs 4 --json sweep.json
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .adapted_pair import (
    build_certificate, chain_dot, chain_graph, check_S_basis, exceptional_roots, is_stationary,
    verify_all_chains, verify_conditions,
)
from .contraction import build_contraction, centre_of_contraction
from .errors import ContractionError, DomainError
from .invariants import compute_per_gamma, index_and_c, lower_character, upper_character
from .oracle import index_trials, phi_restricted_det, regularity_and_complement
from .rootspace import N_EQ_S, ParabolicContext, build_context, fmt_root

CHECKS = (
    "s_basis", "partition", "heisenberg", "condition_C", "condition_Cprime", "o_pm_locality",
    "stationarity", "chain_matching", "phi_det", "regular_rank", "direct_sum", "character_match",
    "centre_zero", "oracle_index",
)
COMBINATORIAL = ("partition", "heisenberg", "condition_C", "condition_Cprime", "o_pm_locality",
                 "stationarity", "chain_matching", "phi_det")
ORACLE = ("oracle_index", "regular_rank", "direct_sum", "phi_det")
MIN_AGREEING_TRIALS = 3

SKIP_N_EQ_S = "Heisenberg families are not constructed for n = s"
SKIP_CHARACTER = "closed-form lower bound needs n > s"
SKIP_ORACLE = "oracle checks disabled by --skip-oracle"


@dataclass
class VerifyOptions:
    seed: int = 0
    trials: int = 5
    skip_oracle: bool = False
    dot_dir: str | None = None
    timing: bool = True


@dataclass
class CaseReport:
    n: int
    s: int
    regime: str
    dim: int = 0
    index: int = 0
    c: int = 0
    sum_degrees: int = 0
    fundamental_degree: int = 0
    S: list[str] = field(default_factory=list)
    T: list[str] = field(default_factory=list)
    checks: dict[str, dict] = field(default_factory=dict)
    degrees: list[int] = field(default_factory=list)
    weights: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n, "s": self.s, "regime": self.regime, "dim": self.dim, "index": self.index,
            "c": self.c, "sum_degrees": self.sum_degrees, "fundamental_degree": self.fundamental_degree,
            "S": self.S, "T": self.T, "checks": {k: self.checks[k] for k in CHECKS},
            "degrees": self.degrees, "weights": self.weights, "elapsed_ms": self.elapsed_ms,
        }

    @property
    def failed(self) -> list[str]:
        return [k for k in CHECKS if self.checks[k]["status"] == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed


def passed(detail: str = "") -> dict:
    return {"status": "pass", "reason": detail}


def failed(detail: str) -> dict:
    return {"status": "fail", "reason": detail}


def skipped(reason: str) -> dict:
    return {"status": "skipped", "reason": reason}


def _from_bool(ok: bool, detail: str = "") -> dict:
    return passed(detail) if ok else failed(detail or "check returned false")


def _from_condition(res) -> dict:
    return passed() if res.passed else failed("; ".join(res.counterexamples[:5]))


def case_seed(seed: int, n: int, s: int) -> int:
    """Per-case seed, independent of run order and process layout."""
    digest = hashlib.sha256(f"{seed}:{n}:{s}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def write_chain_dots(data, out_dir: str) -> list[Path]:
    """One DOT file per distinct chain through a stationary root of O."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    n, s = data.ctx.n, data.ctx.s
    exceptional = exceptional_roots(data)
    written, seen = [], set()
    for a in data.O:
        if a in exceptional or not is_stationary(a, data).stationary:
            continue
        verts = frozenset(chain_graph(a, data)[0])
        if verts in seen:
            continue
        seen.add(verts)
        text = chain_dot(a, data)
        path = out / f"chain_n{n}_s{s}_{len(written):03d}.dot"
        path.write_text(text, encoding="utf-8")
        written.append(path)
    return written


def verify_case(n: int, s: int, options: VerifyOptions | None = None) -> CaseReport:
    options = options or VerifyOptions()
    start = time.perf_counter()
    ctx: ParabolicContext = build_context(n, s)
    report = CaseReport(n, s, ctx.regime)
    checks = report.checks
    try:
        data = build_certificate(ctx)
    except ContractionError as exc:
        for k in CHECKS:
            checks[k] = failed(f"certificate construction failed: {exc}")
        return report
    report.S = [fmt_root(r) for r in data.S]
    report.T = [fmt_root(r) for r in data.T]

    checks["s_basis"] = _from_bool(len(data.S) == n - 1 and check_S_basis(data.S, ctx),
                                   f"|S| = {len(data.S)}")

    if ctx.regime == N_EQ_S:
        for k in COMBINATORIAL:
            checks[k] = skipped(SKIP_N_EQ_S)
    else:
        parts = [r for fam in data.gamma_families.values() for r in fam] + list(data.T)
        checks["partition"] = _from_bool(
            len(parts) == len(set(parts)) and set(parts) == set(ctx.delta_pi_prime),
            f"{len(parts)} roots against |Delta(pi')| = {len(ctx.delta_pi_prime)}")
        cond = verify_conditions(data)
        for k in ("heisenberg", "condition_C", "o_pm_locality", "stationarity"):
            checks[k] = _from_condition(cond[k])
        cp, shape = cond["condition_Cprime"], cond["o3_witness_shape"]
        checks["condition_Cprime"] = (_from_condition(cp) if not cp.passed else _from_condition(shape))
        if all(cond[k].passed for k in cond if k != "o3_regime"):
            checks["chain_matching"] = _from_condition(verify_all_chains(data))
            if options.dot_dir:
                write_chain_dots(data, options.dot_dir)
        else:
            checks["chain_matching"] = failed("chains need the conditions above to hold")

    try:
        per_gamma = compute_per_gamma(data)
    except (ArithmeticError, ContractionError) as exc:
        per_gamma = None
        checks["character_match"] = failed(str(exc))
    if per_gamma is not None:
        report.degrees = [per_gamma[g].degree for g in data.T]
        report.weights = [fmt_root(per_gamma[g].weight) for g in data.T]
        if ctx.regime == N_EQ_S:
            checks["character_match"] = skipped(SKIP_CHARACTER)
        else:
            checks["character_match"] = _from_bool(upper_character(per_gamma) == lower_character(ctx),
                                                   "weight multiset differs from the lower bound")
    counts = index_and_c(ctx, report.degrees)
    report.dim, report.index, report.c = counts.dim, counts.index, counts.c
    report.sum_degrees, report.fundamental_degree = counts.sum_degrees, counts.fundamental_degree

    algebra = build_contraction(ctx)
    centre = centre_of_contraction(ctx, algebra)
    checks["centre_zero"] = _from_bool(centre == 0, f"centre has dimension {centre}")

    if options.skip_oracle:
        for k in ORACLE:
            checks[k] = skipped(SKIP_ORACLE)
    else:
        reg = regularity_and_complement(data.y_support, data.T, ctx, algebra)
        checks["regular_rank"] = _from_bool(reg.rank_ok and reg.rank == counts.dim - counts.index,
                                            f"rank {reg.rank}, dim {reg.dim}")
        checks["direct_sum"] = _from_bool(reg.direct_sum_ok, f"stacked rank {reg.stacked_rank} of {reg.dim}")
        ranks = index_trials(algebra, options.trials, case_seed(options.seed, n, s))
        best = max(ranks)
        agree = ranks.count(best)
        detail = f"ranks {ranks}"
        if algebra.dim - best != counts.index:
            checks["oracle_index"] = failed(f"generic index {algebra.dim - best} != {counts.index}; {detail}")
        elif agree < MIN_AGREEING_TRIALS:
            checks["oracle_index"] = failed(f"only {agree} agreeing trials; {detail}")
        else:
            checks["oracle_index"] = passed(detail)
        if ctx.regime != N_EQ_S:
            try:
                det = phi_restricted_det(data.O, data.y_support, ctx, algebra)
                checks["phi_det"] = _from_bool(det != 0, f"|O| = {len(data.O)}")
            except ArithmeticError as exc:
                checks["phi_det"] = failed(str(exc))

    if options.timing:
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def case_list(max_n: int) -> list[tuple[int, int]]:
    return [(n, s) for n in range(2, max_n + 1) for s in range(2, n + 1, 2)]


def _verify_tuple(args) -> CaseReport:
    n, s, options = args
    return verify_case(n, s, options)


def sweep(max_n: int, options: VerifyOptions | None = None, jobs: int = 1) -> list[CaseReport]:
    if max_n < 2:
        raise DomainError("max_n must be at least 2")
    options = options or VerifyOptions()
    work = [(n, s, options) for n, s in case_list(max_n)]
    if jobs <= 1:
        reports = [_verify_tuple(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_tuple, work))
    return sorted(reports, key=lambda r: (r.n, r.s))


# -- output -----------------------------------------------------------------

def to_json(reports: list[CaseReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False) + "\n"


def to_markdown(reports: list[CaseReport]) -> str:
    short = {"pass": "ok", "fail": "FAIL", "skipped": "-"}
    head = ["n", "s", "regime", "dim", "index", "c", "sum deg", "fund deg"] + list(CHECKS)
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for r in reports:
        cells = [r.n, r.s, r.regime, r.dim, r.index, r.c, r.sum_degrees, r.fundamental_degree]
        cells += [short[r.checks[k]["status"]] for k in CHECKS]
        lines.append("| " + " | ".join(str(c) for c in cells) + " |")
    total = len(reports)
    bad = sum(1 for r in reports if not r.ok)
    lines += ["", f"{total - bad}/{total} cases without failures."]
    return "\n".join(lines) + "\n"


def write_reports(reports: list[CaseReport], json_path: str | None) -> None:
    if json_path:
        path = Path(json_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(to_json(reports), encoding="utf-8")
        path.with_suffix(".md").write_text(to_markdown(reports), encoding="utf-8")
    sys.stdout.write(to_markdown(reports))
    for r in reports:
        for k in r.failed:
            sys.stdout.write(f"FAIL ({r.n},{r.s}) {k}: {r.checks[k]['reason']}\n")


# -- argument parsing ---------------------------------------------------------

def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def default_seed() -> int:
    env = os.environ.get("CONTRACTION_SEED")
    return _u64(env) if env else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="typeb-contraction",
                                     description="Exact certificates for contracted type-B maximal parabolics.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one (n, s)")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--dot", metavar="DIR", help="write chain graphs as DOT files")
    v.add_argument("--seed", type=_u64, default=None, help="defaults to $CONTRACTION_SEED or 0")
    v.add_argument("--trials", type=_positive, default=5)
    v.add_argument("--skip-oracle", action="store_true")
    v.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")

    w = sub.add_parser("sweep", help="verify every even s <= n <= max_n")
    w.add_argument("--max-n", type=int, required=True)
    w.add_argument("--jobs", type=_positive, default=1)
    w.add_argument("--json", metavar="PATH")
    w.add_argument("--seed", type=_u64, default=None, help="defaults to $CONTRACTION_SEED or 0")
    w.add_argument("--trials", type=_positive, default=5)
    w.add_argument("--skip-oracle", action="store_true")
    w.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        seed = args.seed if args.seed is not None else default_seed()
    except (ValueError, argparse.ArgumentTypeError) as exc:
        parser.error(f"CONTRACTION_SEED: {exc}")
    options = VerifyOptions(seed=seed, trials=args.trials, skip_oracle=args.skip_oracle,
                            timing=not args.no_timing)
    if args.command == "verify":
        options.dot_dir = args.dot
        try:
            build_context(args.n, args.s)
        except DomainError as exc:
            parser.error(str(exc))
        reports = [verify_case(args.n, args.s, options)]
    else:
        if args.max_n < 2:
            parser.error("--max-n must be at least 2")
        reports = sweep(args.max_n, options, args.jobs)
    write_reports(reports, args.json)
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
