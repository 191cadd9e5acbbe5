"""
Games over posets: command-line front end.

Builds one term store and relation cache per invocation over the configured
atom poset (default L5) and runs a single subcommand.

Usage:
    python src/main.py compare "G(0)" "G(1)"
    python src/main.py verify --n-max 10 --json
    python src/main.py enumerate L4
    python src/main.py enumerate L5 --max-rounds 3
    python src/main.py np "G(0)" "G(1)"
    python src/main.py parse "Pn(0, 0)"
    python src/main.py domination --poset L3 --samples 10000 --seed 7

Exit codes:
    0: success
    1: verification failure (claim mismatch, incomplete finite enumeration,
       domination counterexample)
    2: usage, configuration or parse error
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Tuple

import yaml

from games.claims import CLAIM_IDS, LEMMA_IDS, BASE_FACT_IDS, verify_claims, verify_sequence_lemmas
from games.errors import ConfigError, GameError
from games.poset import Poset
from games.sequence import mean_value
from models.config import Config
from models.reports import (
    ClaimRecord,
    CompareResult,
    DominationResult,
    EnumerationExport,
    GameSummary,
    NormalPlayResult,
)
from ops.logging import setup_logging
from runtime.context import RuntimeContext
from values.domination import check_domination, check_domination_exhaustive
from values.enumeration import EnumerationBudget, enumerate_monotone_values

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively merge override into base and return base."""
    for k, v in (override or {}).items():
        if isinstance(v, dict) and isinstance(base.get(k), dict):
            _deep_merge(base[k], v)
        else:
            base[k] = v
    return base


def _read_yaml(path: str) -> Dict[str, Any]:
    if not os.path.exists(path):
        return {}
    with open(path, "r") as f:
        return yaml.safe_load(f) or {}


def load_config(config_path: str) -> Dict[str, Any]:
    """
    Load configuration with layering:
    - `config/default.yaml` (checked in)
    - `config/config.yaml` (local overrides)
    - plus any explicitly provided `--config` path (treated as overrides)
    """
    try:
        config_dir = os.path.dirname(config_path)
        merged = _read_yaml(os.path.join(config_dir, "default.yaml"))

        local_overrides_path = os.path.join(config_dir, "config.yaml")
        merged = _deep_merge(merged, _read_yaml(local_overrides_path))

        # Apply explicit config_path if different from local override
        if (os.path.exists(config_path) and
                os.path.abspath(config_path) != os.path.abspath(local_overrides_path)):
            merged = _deep_merge(merged, _read_yaml(config_path))

        return merged
    except (OSError, yaml.YAMLError) as e:
        logging.error(f"Failed to load configuration: {e}")
        raise ConfigError(f"failed to load configuration from {config_path}: {e}") from e


def validate_config(config: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
    """
    Validate configuration structure and values.

    Args:
        config: Configuration dictionary

    Returns:
        Tuple of (is_valid, error_message)
    """
    try:
        Poset.from_spec(str(config.get("poset", "L5")))
    except GameError as e:
        return False, f"poset: {e}"

    if config.get("output", "text") not in ("text", "json"):
        return False, "output must be one of: text, json"

    log_level = config.get("log_level", "WARNING")
    if log_level not in VALID_LOG_LEVELS:
        return False, f"log_level must be one of: {', '.join(VALID_LOG_LEVELS)}"

    verify = config.get("verify") or {}
    n_max = verify.get("n_max", 10)
    if not isinstance(n_max, int) or n_max < 0:
        return False, "verify.n_max must be a non-negative integer"
    workers = verify.get("workers", 1)
    if not isinstance(workers, int) or workers < 1:
        return False, "verify.workers must be a positive integer"

    enumeration = config.get("enumeration") or {}
    for key in ("max_rounds", "max_values", "domination_samples", "workers"):
        value = enumeration.get(key)
        if value is not None and (not isinstance(value, int) or value <= 0):
            return False, f"enumeration.{key} must be a positive integer"
    time_limit = enumeration.get("time_limit")
    if time_limit is not None and (not isinstance(time_limit, (int, float)) or time_limit <= 0):
        return False, "enumeration.time_limit must be a positive number"

    sampling = config.get("sampling") or {}
    for key in ("max_depth", "max_options"):
        value = sampling.get(key)
        if value is not None and (not isinstance(value, int) or value < (1 if key == "max_options" else 0)):
            return False, f"sampling.{key} is out of range"
    seed = sampling.get("seed")
    if seed is not None and not isinstance(seed, int):
        return False, "sampling.seed must be an integer"

    return True, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str, default='config/config.yaml',
                        help='Path to configuration file')
    common.add_argument('--poset', type=str, default=None,
                        help='Atom poset, e.g. L5 (default from config)')
    common.add_argument('--json', action='store_true', default=None,
                        help='Emit JSON instead of text')
    common.add_argument('--seed', type=int, default=None,
                        help='Seed for random sampling')
    common.add_argument('--log-level', type=str, default=None, choices=VALID_LOG_LEVELS,
                        help='Logging level (stderr)')

    parser = argparse.ArgumentParser(description='Combinatorial games over partially ordered atoms')
    commands = parser.add_subparsers(dest='command', required=True)

    compare = commands.add_parser('compare', parents=[common], help='Compare two games')
    compare.add_argument('g', help='First game')
    compare.add_argument('h', help='Second game')

    verify = commands.add_parser('verify', parents=[common], help='Verify the G_n sequence claims')
    verify.add_argument('--n-max', type=int, default=None, help='Largest n to check')
    verify.add_argument('--workers', type=int, default=None, help='Threads evaluating distinct n')
    verify.add_argument('--negate', action='append', default=[], metavar='CLAIM',
                        choices=list(CLAIM_IDS + LEMMA_IDS + BASE_FACT_IDS),
                        help='Flip the expected value of a claim (harness self-test)')

    enumerate_cmd = commands.add_parser('enumerate', parents=[common], help='Enumerate monotone values')
    enumerate_cmd.add_argument('poset_spec', nargs='?', default=None, help='Poset, e.g. L4')
    enumerate_cmd.add_argument('--max-rounds', type=int, default=None)
    enumerate_cmd.add_argument('--max-values', type=int, default=None)
    enumerate_cmd.add_argument('--time-limit', type=float, default=None)
    enumerate_cmd.add_argument('--no-prune', action='store_true', help='Try every option subset')
    enumerate_cmd.add_argument('--export', type=str, default=None, help='Write the JSON export to a file')

    np_cmd = commands.add_parser('np', parents=[common], help='Check the normal-play correspondence')
    np_cmd.add_argument('g')
    np_cmd.add_argument('h')

    parse_cmd = commands.add_parser('parse', parents=[common], help='Parse and summarise a game')
    parse_cmd.add_argument('game')

    domination = commands.add_parser('domination', parents=[common], help='Validate dominated-option removal')
    domination.add_argument('--samples', type=int, default=None, help='Random trials')
    domination.add_argument('--depth', type=int, default=None, help='Depth of random games')
    domination.add_argument('--exhaustive-birthday', type=int, default=1,
                            help='Birthday bound for the exhaustive check (0 disables)')

    return parser


def _section(raw: Dict[str, Any], key: str) -> Dict[str, Any]:
    section = raw.get(key) or {}
    raw[key] = section
    return section


def apply_overrides(raw: Dict[str, Any], args: argparse.Namespace) -> Dict[str, Any]:
    """Command-line flags take precedence over configuration files."""
    if args.poset:
        raw["poset"] = args.poset
    if getattr(args, "poset_spec", None):
        raw["poset"] = args.poset_spec
    if args.json:
        raw["output"] = "json"
    if args.log_level:
        raw["log_level"] = args.log_level
    sampling = _section(raw, "sampling")
    if args.seed is not None:
        sampling["seed"] = args.seed

    verify = _section(raw, "verify")
    if getattr(args, "n_max", None) is not None:
        verify["n_max"] = args.n_max
    if getattr(args, "workers", None) is not None:
        verify["workers"] = args.workers

    enumeration = _section(raw, "enumeration")
    for key in ("max_rounds", "max_values", "time_limit"):
        if getattr(args, key, None) is not None:
            enumeration[key] = getattr(args, key)
    if getattr(args, "no_prune", False):
        enumeration["prune"] = False
    if getattr(args, "samples", None) is not None:
        enumeration["domination_samples"] = args.samples
    if getattr(args, "depth", None) is not None:
        sampling["max_depth"] = args.depth
    return raw


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


# Subcommands

def cmd_compare(ctx: RuntimeContext, args: argparse.Namespace) -> int:
    g, h = ctx.parse(args.g), ctx.parse(args.h)
    engine = ctx.engine
    result = CompareResult(
        g=ctx.format(g),
        h=ctx.format(h),
        leq_gh=engine.leq(g, h),
        leq_hg=engine.leq(h, g),
        tri_gh=engine.tri(g, h),
        tri_hg=engine.tri(h, g),
        verdict=engine.compare(g, h).value,
    )
    if ctx.config.json:
        _emit(result.model_dump_json())
        return EXIT_OK
    _emit(f"G = {result.g}")
    _emit(f"H = {result.h}")
    _emit(f"G <= H: {str(result.leq_gh).lower()}")
    _emit(f"H <= G: {str(result.leq_hg).lower()}")
    _emit(f"G <| H: {str(result.tri_gh).lower()}")
    _emit(f"H <| G: {str(result.tri_hg).lower()}")
    _emit(f"verdict: {result.verdict}")
    return EXIT_OK


def cmd_verify(ctx: RuntimeContext, args: argparse.Namespace) -> int:
    vcfg = ctx.config.verify
    negate = set(args.negate)
    reports = verify_claims(ctx.engine, vcfg.n_max, negate=negate, workers=vcfg.workers)
    reports += verify_sequence_lemmas(ctx.engine, vcfg.n_max, negate=negate, workers=vcfg.workers)
    ctx.engine.log_stats()

    failed = [r for r in reports if r.ok is False]
    if ctx.config.json:
        for report in reports:
            _emit(ClaimRecord(**report.to_dict()).model_dump_json())
    else:
        _emit(f"{'claim':<22}{'n':>4}  {'expected':<9}{'actual':<9}{'status':<9}{'micros':>10}")
        for r in reports:
            status = "skipped" if r.skipped else ("ok" if r.ok else "FAIL")
            actual = "-" if r.actual is None else str(r.actual).lower()
            _emit(f"{r.claim:<22}{r.n:>4}  {str(r.expected).lower():<9}{actual:<9}{status:<9}{r.micros:>10}")
        checked = sum(not r.skipped for r in reports)
        _emit(f"{checked} checked, {len(failed)} failed, {len(reports) - checked} skipped")
    for r in failed:
        logging.error(f"Claim {r.claim} at n={r.n} ({r.description}): expected {r.expected}, got {r.actual}")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_enumerate(ctx: RuntimeContext, args: argparse.Namespace) -> int:
    ecfg = ctx.config.enumeration
    prune = ecfg.prune
    if prune and ecfg.validate_pruning:
        report = check_domination(
            ctx.engine, ecfg.domination_samples, seed=ctx.config.sampling.seed,
            max_depth=ctx.config.sampling.max_depth, max_options=ctx.config.sampling.max_options,
        )
        report = report.merge(check_domination_exhaustive(ctx.engine, birthday=1))
        if not report.ok:
            logging.warning("Domination pruning failed validation; falling back to full option subsets")
            prune = False

    budget = EnumerationBudget(
        max_rounds=ecfg.max_rounds,
        max_values=ecfg.max_values,
        time_limit=ecfg.time_limit,
    )
    table = enumerate_monotone_values(ctx.poset, budget, prune=prune, workers=ecfg.workers, store=ctx.store)
    export = EnumerationExport(**table.to_export(ctx.format))

    if args.export:
        with open(args.export, "w") as f:
            f.write(export.model_dump_json(indent=2) + "\n")
        logging.info(f"Wrote enumeration export to {args.export}")

    if ctx.config.json:
        _emit(export.model_dump_json(indent=2))
    else:
        for round_no, count in enumerate(table.counts_per_round):
            _emit(f"round {round_no}: {count} values")
        state = "saturated" if table.saturated else f"not saturated ({table.exhausted})"
        _emit(f"final: {len(table)} values over {table.poset.name}, {state}")
        if not prune:
            _emit("pruning: off (full option subsets)")
    if table.flagged:
        logging.error(f"{table.poset.name} has finitely many values but the budget ran out first")
        return EXIT_FAILED
    return EXIT_OK


def cmd_np(ctx: RuntimeContext, args: argparse.Namespace) -> int:
    g, h = ctx.parse(args.g), ctx.parse(args.h)
    normal = ctx.normal_play
    result = normal.correspondence(ctx.engine, g, h)
    warnings: List[str] = []
    if not result.in_class:
        warnings.append("out of class: a game has no mean value, correspondence not claimed")
    elif not result.claimed:
        warnings.append(f"mean values differ ({result.mean_g} vs {result.mean_h}), correspondence not claimed")

    out = NormalPlayResult(
        g=ctx.format(g),
        h=ctx.format(h),
        np_g=normal.format(normal.np(g)),
        np_h=normal.format(normal.np(h)),
        leq=result.leq,
        np_leq=result.np_leq,
        agree=result.agree,
        mean_g=result.mean_g,
        mean_h=result.mean_h,
        claimed=result.claimed,
        warnings=warnings,
    )
    if ctx.config.json:
        _emit(out.model_dump_json())
        return EXIT_OK
    _emit(f"G <= H: {str(out.leq).lower()}")
    _emit(f"np(G) <= np(H): {str(out.np_leq).lower()}")
    _emit(f"agree: {'yes' if out.agree else 'no'}")
    for w in warnings:
        _emit(f"warning: {w}")
    return EXIT_OK


def cmd_parse(ctx: RuntimeContext, args: argparse.Namespace) -> int:
    g = ctx.parse(args.game)
    store, engine = ctx.store, ctx.engine
    summary = GameSummary(
        game=ctx.format(g),
        size=store.size(g),
        depth=store.depth(g),
        positions=len(store.positions(g)),
        mean_value=mean_value(store, g).value,
        locally_monotone=engine.is_locally_monotone(g),
        monotone=engine.is_monotone(g),
    )
    if ctx.config.json:
        _emit(summary.model_dump_json())
        return EXIT_OK
    _emit(summary.game)
    _emit(f"size: {summary.size}, depth: {summary.depth}, positions: {summary.positions}")
    _emit(f"mean value: {'absent' if summary.mean_value is None else summary.mean_value}")
    _emit(f"monotone: {str(summary.monotone).lower()} (locally: {str(summary.locally_monotone).lower()})")
    return EXIT_OK


def cmd_domination(ctx: RuntimeContext, args: argparse.Namespace) -> int:
    sampling = ctx.config.sampling
    report = check_domination(
        ctx.engine, ctx.config.enumeration.domination_samples, seed=sampling.seed,
        max_depth=max(1, sampling.max_depth), max_options=sampling.max_options,
    )
    exhaustive = None
    if args.exhaustive_birthday > 0:
        full = check_domination_exhaustive(ctx.engine, birthday=args.exhaustive_birthday)
        exhaustive = {"trials": full.trials, "applicable": full.applicable,
                      "counterexamples": len(full.counterexamples)}
        report = report.merge(full)

    data = report.to_dict(ctx.store)
    result = DominationResult(
        poset=ctx.poset.name,
        trials=data["trials"],
        applicable=data["applicable"],
        ok=data["ok"],
        counterexamples=data["counterexamples"],
        exhaustive=exhaustive,
    )
    if ctx.config.json:
        _emit(result.model_dump_json())
    else:
        _emit(f"{result.trials} trials, {result.applicable} applicable, "
              f"{len(result.counterexamples)} counterexamples over {result.poset}")
        for base, extended in result.counterexamples[:10]:
            _emit(f"  {base}  !=  {extended}")
    return EXIT_OK if result.ok else EXIT_FAILED


COMMANDS = {
    "compare": cmd_compare,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "np": cmd_np,
    "parse": cmd_parse,
    "domination": cmd_domination,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main application function."""
    args = build_parser().parse_args(argv)

    try:
        raw = apply_overrides(load_config(args.config), args)
    except ConfigError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    is_valid, error_msg = validate_config(raw)
    if not is_valid:
        logging.error(f"Configuration validation failed: {error_msg}")
        sys.stderr.write(f"error: {error_msg}\n")
        return EXIT_USAGE

    config = Config.from_dict(raw)
    setup_logging(config.log_path, config.log_level)
    logging.info(f"Running {args.command} over {config.poset}")

    try:
        ctx = RuntimeContext.from_config(config)
        return COMMANDS[args.command](ctx, args)
    except (GameError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
