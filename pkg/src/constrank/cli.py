"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 a computation contradicted the theory.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional

from . import cartan, irrep, tensor
from .cartan import RootSystemError
from .irrep import DEFAULT_GUARD, GuardExceeded, weyl_dim
from .ranklab import RankConfig, corank1_pipeline, sl2_scan, wedge_kernel_compare

log = logging.getLogger("constrank")

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    root_system: Optional[str] = None
    seed: int = 42
    samples: int = 5
    coeff_bound: int = 10
    dim_guard: int = DEFAULT_GUARD
    output_format: str = "json"
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.samples < 1:
            raise UsageError("--samples must be >= 1")
        if self.coeff_bound < 1:
            raise UsageError("--bound must be >= 1")
        if self.dim_guard < 1:
            raise UsageError("--guard must be >= 1")

    def rank_config(self) -> RankConfig:
        return RankConfig(samples=self.samples, bound=self.coeff_bound, seed=self.seed, guard=self.dim_guard)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rs(text: str):
    return cartan.build_root_system(cartan.RootSystemSpec.parse(text))


def _weight(rs, text: str):
    w = cartan.parse_weight(text)
    if len(w) != rs.rank:
        raise UsageError(f"weight {text!r} needs {rs.rank} coordinates for {rs}")
    if not cartan.is_dominant(w):
        raise UsageError(f"weight {text!r} is not dominant")
    return w


def cmd_decompose(args, cfg: RunConfig) -> int:
    rs = _rs(args.rs)
    mu, lam = _weight(rs, args.mu), _weight(rs, args.lam)
    hom = tensor.HomModule(irrep.build_irrep(rs, mu, cfg.dim_guard), irrep.build_irrep(rs, lam, cfg.dim_guard))
    summands = tensor.decompose(hom)
    if cfg.output_format == "csv":
        rows = [[",".join(map(str, g)), m, weyl_dim(rs, g)] for g, m in summands]
        _emit(cfg, _csv(["weight", "multiplicity", "dim"], rows))
    else:
        _emit(cfg, tensor.dumps_decomposition(rs, summands))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    rs = _rs(args.rs)
    nu, mu, lam = _weight(rs, args.nu), _weight(rs, args.mu), _weight(rs, args.lam)
    rep = corank1_pipeline(rs, nu, mu, lam, cfg.rank_config())
    if cfg.output_format == "csv":
        rows = []
        for c in rep.candidates:
            v = c.verdict
            rows.append([str(rs), ",".join(map(str, nu)), ",".join(map(str, mu)), ",".join(map(str, lam)),
                         rep.multiplicity, c.label, v.min_rank_witness[1], v.max_rank_witness[1],
                         v.kind.value, rep.conditions.holds, rep.consistent, cfg.seed])
        _emit(cfg, _csv(["rs", "nu", "mu", "lambda", "mult", "candidate", "rank_closed_orbit",
                         "rank_generic", "verdict", "conditions", "consistent", "seed"], rows))
    else:
        _emit(cfg, json.dumps(rep.to_dict(), sort_keys=True))
    if rep.multiplicity == 0:
        log.warning("V%s is not a summand of Hom(V%s, V%s)", nu, mu, lam)
    for p in rep.problems:
        log.error(p)
    return EXIT_OK if rep.consistent else EXIT_INCONSISTENT


def cmd_scan_sl2(args, cfg: RunConfig) -> int:
    if args.max_n < 0:
        raise UsageError("maxN must be non-negative")
    res = sl2_scan(args.max_n, cfg.rank_config(), budget_seconds=args.budget)
    _emit(cfg, res.to_csv() if cfg.output_format == "csv" else res.to_json())
    for r in res.flagged:
        log.error("possible constant corank >= 2 at m=%d n=%d k=%d", r.m, r.n, r.k)
    for r in res.inconsistent:
        log.error("theorem inconsistency at m=%d n=%d k=%d", r.m, r.n, r.k)
    if res.truncated:
        log.error("scan stopped after the %.0f s budget", args.budget)
    return EXIT_OK if not (res.flagged or res.inconsistent or res.truncated) else EXIT_INCONSISTENT


def cmd_wedge(args, cfg: RunConfig) -> int:
    n, r, k = args.n, args.r, args.k
    if r < 1 or k < 1 or r + k >= n:
        raise UsageError("need r, k >= 1 and r + k < n")
    ker_e, ker_sum = wedge_kernel_compare(n, r, k)
    ok = ker_e > ker_sum if k >= 2 else ker_e == ker_sum
    if cfg.output_format == "csv":
        _emit(cfg, _csv(["n", "r", "k", "dim_ker_E", "dim_ker_E_plus_Eprime", "ok"], [[n, r, k, ker_e, ker_sum, ok]]))
    else:
        _emit(cfg, json.dumps({"n": n, "r": r, "k": k, "dim_ker_E": ker_e,
                               "dim_ker_E_plus_Eprime": ker_sum, "ok": ok}, sort_keys=True))
    return EXIT_OK if ok else EXIT_INCONSISTENT


def lemma_sweep(rs, nu_max: int, r_max: int, dim_max: int, guard: int) -> list[dict]:
    """All admissible sym-power and generation checks within the bounds."""
    rows = []
    nus = sorted({w for total in range(1, nu_max + 1) for w in _weights_of_sum(rs.rank, total)})
    for nu in nus:
        for r in range(1, r_max + 1):
            for i in range(rs.rank):
                gamma = cartan.sub(cartan.scale(r, nu), rs.simple_root(i))
                if not cartan.is_dominant(gamma):
                    continue
                try:
                    ok = tensor.sym_primitive_vanishing(rs, nu, r, i, guard)
                except GuardExceeded:
                    continue
                rows.append({"check": "sym_primitive_vanishing", "weight": list(nu), "r": r, "i": i, "ok": ok})
    for mu in _dominant_weights_up_to_dim(rs, dim_max):
        if not any(mu):
            continue
        rows.append({"check": "b_generation", "weight": list(mu), "r": None, "i": None,
                     "ok": tensor.b_generation_check(rs, mu, guard)})
    return rows


def _weights_of_sum(rank: int, total: int):
    if rank == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weights_of_sum(rank - 1, total - first):
            yield (first,) + rest


def _dominant_weights_up_to_dim(rs, dim_max: int) -> list:
    """Dominant weights with weyl_dim <= dim_max (dimension grows in every coordinate)."""
    out = []
    total = 0
    while True:
        found = False
        for w in _weights_of_sum(rs.rank, total):
            if weyl_dim(rs, w) <= dim_max:
                out.append(w)
                found = True
        if not found and total > 0:
            return out
        total += 1


def cmd_lemmas(args, cfg: RunConfig) -> int:
    rs = _rs(args.rs)
    nu_max = args.nu_max if args.nu_max is not None else (6 if rs.rank == 1 else 1)
    rows = lemma_sweep(rs, nu_max, args.r_max, args.dim_max, cfg.dim_guard)
    if not rows:
        log.warning("no admissible parameters within the bounds; nothing checked")
    if cfg.output_format == "csv":
        _emit(cfg, _csv(["check", "weight", "r", "i", "ok"],
                        [[x["check"], ",".join(map(str, x["weight"])), x["r"], x["i"], x["ok"]] for x in rows]))
    else:
        _emit(cfg, json.dumps({"root_system": str(rs), "checks": rows,
                               "all_ok": all(x["ok"] for x in rows)}, sort_keys=True))
    return EXIT_OK if all(x["ok"] for x in rows) else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=5)
    common.add_argument("--bound", type=int, default=10, help="sample coordinates lie in [-bound, bound]")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="maximum module dimension")
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="constrank", description="Equivariant spaces of matrices and their rank profiles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("decompose", parents=[common], help="decompose Hom(V(mu), V(lambda))")
    s.add_argument("rs")
    s.add_argument("mu")
    s.add_argument("lam", metavar="lambda")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", parents=[common], help="rank verdict for V(nu) in Hom(V(mu), V(lambda))")
    s.add_argument("rs")
    s.add_argument("nu")
    s.add_argument("mu")
    s.add_argument("lam", metavar="lambda")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan-sl2", parents=[common], help="scan all sl2 summands with m <= n <= maxN")
    s.add_argument("max_n", type=int, metavar="maxN")
    s.add_argument("--budget", type=float, default=600.0, help="wall-clock budget in seconds")
    s.set_defaults(func=cmd_scan_sl2)

    s = sub.add_parser("wedge", parents=[common], help="kernel comparison for Lambda^k -> Hom(Lambda^r, Lambda^(r+k))")
    s.add_argument("n", type=int)
    s.add_argument("r", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_wedge)

    s = sub.add_parser("lemmas", parents=[common], help="sweep the symmetric-power and generation lemmas")
    s.add_argument("rs")
    s.add_argument("--nu-max", type=int, default=None, help="largest coordinate sum of nu (default 6 in rank 1, else 1)")
    s.add_argument("--r-max", type=int, default=3)
    s.add_argument("--dim-max", type=int, default=200)
    s.set_defaults(func=cmd_lemmas)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        cfg = RunConfig(getattr(args, "rs", None), args.seed, args.samples, args.bound, args.guard,
                        args.format, args.out)
        return args.func(args, cfg)
    except (UsageError, RootSystemError, GuardExceeded, ValueError) as exc:
        print(f"constrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
