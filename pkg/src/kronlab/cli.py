"""Command-line front end.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage or parse error, 3 internal error.  JSON goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import characters as ch
from . import classify as cl
from . import extreme as ex
from . import kronecker as kr
from . import lr
from . import partitions as pt
from .errors import KronlabError


@dataclass
class CliConfig:
    cache_dir: Path | None
    output: str
    threads: int
    max_n: int


def format_virtual(coeffs: dict) -> str:
    """Bracket rendering with exponent compression, e.g. [3] + 2[2,1]."""
    items = sorted(coeffs.items(), reverse=True)
    if not items:
        return "0"
    chunks = []
    for i, (lam, c) in enumerate(items):
        magnitude = ("" if abs(c) == 1 else str(abs(c))) + pt.bracket(lam)
        if i == 0:
            chunks.append(("-" if c < 0 else "") + magnitude)
        else:
            chunks.append(("- " if c < 0 else "+ ") + magnitude)
    return " ".join(chunks)


def decomposition_json(coeffs: dict) -> dict:
    return {pt.format_partition(lam): c for lam, c in sorted(coeffs.items(), reverse=True)}


def parse_decomposition_json(data: dict, n: int) -> kr.VirtualCharacter:
    return kr.VirtualCharacter(n, {pt.parse_partition(k): v for k, v in data.items()})


def _emit(config: CliConfig, text: str, payload) -> None:
    if config.output == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_chartable(config: CliConfig, args) -> int:
    if not 0 <= args.n <= config.max_n:
        raise KronlabError(f"n={args.n} outside [0, {config.max_n}]")
    table = ch.character_table(args.n, cache_dir=config.cache_dir)
    if config.output == "json":
        print(json.dumps(ch.table_to_json_dict(table)))
        return 0
    classes = "  ".join(pt.format_partition(t) or "-" for t in table.labels)
    print(f"classes: {classes}")
    for lam, row in zip(table.labels, table.rows):
        values = "  ".join(str(v) for v in row)
        print(f"{pt.bracket(lam)}: {values}")
    return 0


def _cmd_kron(config: CliConfig, args) -> int:
    mu = pt.parse_partition(args.mu)
    nu = pt.parse_partition(args.nu)
    if args.method == "both":
        brute = kr.kron_decompose(mu, nu, "brute")
        recursive = kr.kron_decompose(mu, nu, "dvir")
        if brute != recursive:
            print(
                "method disagreement:\n"
                f"  brute: {format_virtual(brute.coeffs)}\n"
                f"  dvir:  {format_virtual(recursive.coeffs)}",
                file=sys.stderr,
            )
            return 1
        dec = brute
    else:
        dec = kr.kron_decompose(mu, nu, args.method)
    _emit(config, format_virtual(dec.coeffs), decomposition_json(dec.coeffs))
    return 0


def _cmd_kroncoeff(config: CliConfig, args) -> int:
    mu = pt.parse_partition(args.mu)
    nu = pt.parse_partition(args.nu)
    lam = pt.parse_partition(args.lam)
    c = kr.kron_coefficient(mu, nu, lam)
    _emit(config, str(c), {"coefficient": c})
    return 0


def _cmd_lr(config: CliConfig, args) -> int:
    beta = pt.parse_partition(args.beta)
    gamma = pt.parse_partition(args.gamma)
    dec = lr.outer_product_expand(beta, gamma)
    _emit(config, format_virtual(dec), decomposition_json(dec))
    return 0


def _cmd_skew(config: CliConfig, args) -> int:
    shape = pt.parse_skew(args.shape)
    dec = lr.skew_decompose(shape)
    _emit(config, format_virtual(dec), decomposition_json(dec))
    return 0


def _cmd_classify_skew(config: CliConfig, args) -> int:
    shape = pt.parse_skew(args.shape)
    cls = lr.classify_skew_shape(shape)
    if cls.tag == "proper-skew":
        text = cls.tag
    else:
        text = f"{cls.tag} {pt.bracket(cls.alpha)}"
    payload = {
        "tag": cls.tag,
        "alpha": pt.format_partition(cls.alpha) if cls.alpha is not None else None,
    }
    _emit(config, text, payload)
    return 0


def _cmd_extreme(config: CliConfig, args) -> int:
    mu = pt.parse_partition(args.mu)
    nu = pt.parse_partition(args.nu)
    report = ex.almost_extreme_report(mu, nu)
    if config.output == "json":
        print(json.dumps(report.to_json_dict()))
        return 0
    print(f"m = {report.m}, m~ = {report.m_tilde}")
    for name, block in (
        ("width-max", report.width_max),
        ("width-almost", report.width_almost),
        ("length-max", report.length_max),
        ("length-almost", report.length_almost),
    ):
        print(f"{name}: {format_virtual(block)}")
    print(f"count: {report.count}")
    return 0


def _cmd_sweep(config: CliConfig, args) -> int:
    entries = cl.sweep(args.n, threads=config.threads, max_n=config.max_n)
    lines = [json.dumps(e.to_json_dict()) for e in entries]
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_verify(config: CliConfig, args) -> int:
    if args.theorem == "34c":
        report = cl.verify_34c(args.n_max, max_n=config.max_n)
    elif args.theorem == "extcomp":
        report = cl.verify_extcomp(args.n_max, max_n=config.max_n)
    elif args.theorem == "special":
        report = cl.verify_special(args.n_max, max_n=config.max_n)
    elif args.theorem == "skew2":
        report = cl.skew_two_component_census(args.n_max)
    else:
        report = cl.verify_dvir_oracle(
            args.n_max,
            samples=args.samples,
            sample_n=args.sample_n,
            seed=args.seed,
            max_n=config.max_n,
        )
    if config.output == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        verdict = "PASS" if report.passed else "FAIL"
        print(
            f"{verdict} theorem={report.theorem} n_max={report.n_max} "
            f"counterexamples={report.total_counterexamples} "
            f"time={report.wall_time_s:.1f}s"
        )
        for ce in report.counterexamples:
            print(f"  counterexample: {ce}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronlab",
        description="Exact Kronecker products of symmetric-group characters.",
    )
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--cache-dir", default=None, help="character table cache directory")
    parser.add_argument("--threads", default="1", help="worker count for sweeps, or 'auto'")
    parser.add_argument("--max-n", type=int, default=cl.DEFAULT_MAX_N)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="print the character table of S_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_chartable)

    p = sub.add_parser("kron", help="decompose a Kronecker product")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--method", choices=("brute", "dvir", "both"), default="brute")
    p.set_defaults(func=_cmd_kron)

    p = sub.add_parser("kroncoeff", help="one Kronecker coefficient")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("lam")
    p.set_defaults(func=_cmd_kroncoeff)

    p = sub.add_parser("lr", help="expand an outer product")
    p.add_argument("beta")
    p.add_argument("gamma")
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("skew", help="decompose a skew character")
    p.add_argument("shape", metavar="outer/inner")
    p.set_defaults(func=_cmd_skew)

    p = sub.add_parser("classify-skew", help="partition / rotated / proper skew")
    p.add_argument("shape", metavar="outer/inner")
    p.set_defaults(func=_cmd_classify_skew)

    p = sub.add_parser("extreme", help="(almost) extreme component report")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(func=_cmd_extreme)

    p = sub.add_parser("sweep", help="catalog all pairs of partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", help="machine-check one classification")
    p.add_argument(
        "--theorem",
        required=True,
        choices=("34c", "extcomp", "special", "skew2", "dvir-oracle"),
    )
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--sample-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def _resolve_config(args) -> CliConfig:
    cache_dir = args.cache_dir or os.environ.get("KRONLAB_CACHE")
    if cache_dir is None:
        cache_dir = Path.home() / ".cache" / "kronlab"
    threads = os.cpu_count() or 1 if args.threads == "auto" else int(args.threads)
    if threads < 1:
        raise KronlabError("--threads must be positive")
    return CliConfig(Path(cache_dir), args.output, threads, args.max_n)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _resolve_config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ch.set_default_cache_dir(config.cache_dir)
    try:
        return args.func(config, args)
    except KronlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal error, not a usage problem
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


def entry_point() -> None:
    sys.exit(main())
