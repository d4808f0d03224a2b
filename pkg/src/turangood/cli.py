"""Command line front end.

Subcommands: count, verify, table.  Exit codes: 0 when everything
computed or verified, 1 when a verifier found a counterexample, 2 on
usage or parse errors.  Machine formats (json, csv) are the contract;
human output mirrors the JSON fields one per line.

Defaults for --format, --workers, --cap and --witnesses can be set via
the TURANGOOD_FORMAT, TURANGOOD_WORKERS, TURANGOOD_CAP and
TURANGOOD_WITNESSES environment variables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .forest import LinearForest, aut_order
from .multipartite import PartSizes, count_copies_turan, count_injective_homs, turan_parts
from .oracle import EXHAUSTIVE_CAP_DEFAULT, WITNESS_CAP_DEFAULT
from . import verify as verify_mod

ENV_PREFIX = "TURANGOOD_"
CLAIMS = ("multipartite-max", "balance", "odd-identity", "even-identity",
          "isolated-identity", "conjecture")
FORMATS = ("human", "json", "csv")


@dataclass
class RunConfig:
    subcommand: str
    fmt: str
    forest: LinearForest | None = None
    parts: PartSizes | None = None
    claim: str | None = None
    n_range: tuple[int, int] | None = None
    k_range: tuple[int, int] | None = None
    cap: int = EXHAUSTIVE_CAP_DEFAULT
    workers: int | None = None
    witness_cap: int = WITNESS_CAP_DEFAULT


def _env_default(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return raw


def _parse_range(text: str) -> tuple[int, int]:
    """Inclusive integer range "a..b"; a single value "a" means a..a."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _parse_turan(text: str) -> PartSizes:
    """Turan shorthand "n/k", e.g. "10/3"."""
    try:
        n_s, k_s = text.split("/", 1)
        n, k = int(n_s), int(k_s)
    except ValueError:
        raise ValueError(f"invalid Turan shorthand {text!r}; expected n/k") from None
    return turan_parts(n, k)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_count(cfg: RunConfig) -> int:
    forest = cfg.forest
    parts = cfg.parts
    inj = count_injective_homs(forest, parts)
    aut = aut_order(forest)
    payload = {
        "forest": str(forest),
        "parts": list(parts.canonical),
        "injective_homs": inj,
        "aut": aut,
        "copies": inj // aut,
    }
    if cfg.fmt == "json":
        _emit(_json_dumps(payload))
    elif cfg.fmt == "csv":
        _emit(_csv_text(
            ["forest", "parts", "injective_homs", "aut", "copies"],
            [[payload["forest"], ",".join(map(str, payload["parts"])),
              inj, aut, payload["copies"]]]))
    else:
        for key in ("forest", "parts", "injective_homs", "aut", "copies"):
            val = payload[key]
            if key == "parts":
                val = ",".join(map(str, val))
            _emit(f"{key}: {val}")
    return 0


def _sweep_reports(cfg: RunConfig) -> list[verify_mod.VerificationReport]:
    forest = cfg.forest
    reports: list[verify_mod.VerificationReport] = []
    claim = cfg.claim

    if claim == "multipartite-max":
        if cfg.n_range is None or cfg.k_range is None:
            raise ValueError("multipartite-max needs --n and --k")
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            for n in range(cfg.n_range[0], cfg.n_range[1] + 1):
                reports.append(verify_mod.verify_multipartite_max(forest, n, k))
    elif claim == "balance":
        if cfg.parts is None:
            raise ValueError("balance needs --parts")
        reports.append(verify_mod.verify_balancing_monotone(forest, cfg.parts))
    elif claim == "odd-identity":
        lo, hi = cfg.n_range or _default_window(forest)
        orders = sorted(set(c for c in forest.components if c % 2 == 1 and c >= 3))
        if not orders:
            raise ValueError(f"forest {forest} has no odd component of order >= 3")
        for order in orders:
            reports.append(verify_mod.verify_odd_extension_identity(
                forest, order, range(lo, hi + 1)))
    elif claim == "even-identity":
        lo, hi = cfg.n_range or _default_window(forest)
        orders = sorted(set(c for c in forest.components if c % 2 == 0))
        if not orders:
            raise ValueError(f"forest {forest} has no even component")
        for order in orders:
            reports.append(verify_mod.verify_even_extension_identity(
                forest, order, range(lo, hi + 1)))
    elif claim == "isolated-identity":
        lo, hi = cfg.n_range or _default_window(forest)
        reports.append(verify_mod.verify_isolated_identity(
            forest, range(lo, hi + 1)))
    elif claim == "conjecture":
        if cfg.n_range is None or cfg.k_range is None:
            raise ValueError("conjecture needs --n and --k")
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            for n in range(cfg.n_range[0], cfg.n_range[1] + 1):
                reports.append(verify_mod.verify_conjecture(
                    forest, n, k, cap=cfg.cap,
                    witness_cap=cfg.witness_cap, workers=cfg.workers))
    else:
        raise ValueError(f"unknown claim {claim!r}")
    return reports


def _default_window(forest: LinearForest) -> tuple[int, int]:
    v = forest.total_vertices
    return v, v + 4


def cmd_verify(cfg: RunConfig) -> int:
    reports = _sweep_reports(cfg)
    dicts = [r.to_json_dict() for r in reports]
    if cfg.fmt == "json":
        _emit(_json_dumps(dicts))
    elif cfg.fmt == "csv":
        rows = [[d["claim"], json.dumps(d["params"], sort_keys=True), d["verdict"],
                 d["instances_checked"],
                 json.dumps(d.get("counterexample"), sort_keys=True)
                 if d.get("counterexample") is not None else ""]
                for d in dicts]
        _emit(_csv_text(
            ["claim", "params", "verdict", "instances_checked", "counterexample"],
            rows))
    else:
        blocks = []
        for d in dicts:
            lines = [f"claim: {d['claim']}",
                     f"params: {json.dumps(d['params'], sort_keys=True)}",
                     f"verdict: {d['verdict']}",
                     f"maximizers: {json.dumps(d['maximizers'])}",
                     f"instances_checked: {d['instances_checked']}"]
            if "ratio" in d:
                lines.append(f"ratio: {d['ratio']}")
            if "counterexample" in d:
                lines.append(
                    f"counterexample: {json.dumps(d['counterexample'], sort_keys=True)}")
            blocks.append("\n".join(lines))
        _emit("\n\n".join(blocks))
    return 0 if all(r.holds for r in reports) else 1


def cmd_table(cfg: RunConfig) -> int:
    forest = cfg.forest
    rows = []
    for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
        for n in range(cfg.n_range[0], cfg.n_range[1] + 1):
            rows.append([n, k, str(forest), count_copies_turan(forest, n, k)])
    if cfg.fmt == "json":
        _emit(_json_dumps([
            {"n": n, "k": k, "forest": f, "count": c} for n, k, f, c in rows]))
    else:
        _emit(_csv_text(["n", "k", "forest", "count"], rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turangood",
        description="Exact linear-forest copy counts in complete multipartite "
                    "graphs and exhaustive extremal verification.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, host: bool = False) -> None:
        p.add_argument("--forest", required=True,
                       help="component orders, e.g. 5,3,1")
        p.add_argument("--format", choices=FORMATS,
                       default=_env_default("FORMAT", "human"))
        if host:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--parts", help="part sizes, e.g. 2,3")
            group.add_argument("--turan", help="Turan shorthand n/k, e.g. 10/3")

    p_count = sub.add_parser("count", help="copy count in one host graph")
    add_common(p_count, host=True)

    p_verify = sub.add_parser("verify", help="machine-check a claim")
    p_verify.add_argument("claim", choices=CLAIMS)
    add_common(p_verify)
    p_verify.add_argument("--parts", help="part sizes (balance claim)")
    p_verify.add_argument("--n", help="n value or inclusive range a..b")
    p_verify.add_argument("--k", help="k value or inclusive range a..b")
    p_verify.add_argument("--cap", type=int,
                          default=int(_env_default("CAP", EXHAUSTIVE_CAP_DEFAULT)),
                          help="exhaustive search cap on n (hard limit 8)")
    p_verify.add_argument("--workers", type=int,
                          default=_env_default("WORKERS", None),
                          help="worker count for exhaustive sweeps")
    p_verify.add_argument("--witnesses", type=int,
                          default=int(_env_default("WITNESSES", WITNESS_CAP_DEFAULT)),
                          help="maximum witnesses kept per counterexample")

    p_table = sub.add_parser("table", help="Turan-graph counts over an n range")
    add_common(p_table)
    p_table.add_argument("--n", required=True, help="n value or inclusive range a..b")
    p_table.add_argument("--k", required=True, help="k value or inclusive range a..b")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand, fmt=args.format)
    cfg.forest = LinearForest.parse(args.forest)
    if args.subcommand == "count":
        cfg.parts = (_parse_turan(args.turan) if args.turan
                     else PartSizes.parse(args.parts))
        return cfg
    if args.subcommand == "table":
        cfg.n_range = _parse_range(args.n)
        cfg.k_range = _parse_range(args.k)
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            if k < 1:
                raise ValueError(f"k must be >= 1, got {k}")
        return cfg
    # verify
    cfg.claim = args.claim
    if args.parts is not None:
        cfg.parts = PartSizes.parse(args.parts)
    if args.n is not None:
        cfg.n_range = _parse_range(args.n)
    if args.k is not None:
        cfg.k_range = _parse_range(args.k)
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            if k < 1:
                raise ValueError(f"k must be >= 1, got {k}")
    cfg.cap = args.cap
    workers = args.workers
    if workers is not None:
        workers = int(workers)
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
    else:
        workers = os.cpu_count() or 1
    cfg.workers = workers
    cfg.witness_cap = args.witnesses
    return cfg


def run(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"turangood: error: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = _config_from_args(args)
        if cfg.subcommand == "count":
            return cmd_count(cfg)
        if cfg.subcommand == "verify":
            return cmd_verify(cfg)
        return cmd_table(cfg)
    except ValueError as exc:
        print(f"turangood: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
