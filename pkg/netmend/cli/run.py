import argparse
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from pydantic import ValidationError

from netmend.core.config import Settings
from netmend.core.exceptions import AttackFailedError, ConfigError, GraphParseError
from netmend.core.logging import configure_logging
from netmend.schemas.attack import AttackSpec
from netmend.schemas.generator import GeneratorSpec
from netmend.schemas.run import RunConfig
from netmend.services.pipeline import RunSummary, run_pipeline
from netmend.utils.text import read_lines

logger = logging.getLogger(__name__)

GENERATOR_KINDS = {"er": "erdos_renyi", "erdos_renyi": "erdos_renyi", "power_law": "power_law"}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "run", help="Generate or load a network, attack it and restore it"
    )
    parser.add_argument("--config", type=Path, help="flat key=value config file")

    source = parser.add_argument_group("network")
    source.add_argument("--gen", choices=sorted(GENERATOR_KINDS))
    source.add_argument("--n", type=int)
    source.add_argument("--p", type=float)
    source.add_argument("--gamma", type=float)
    source.add_argument("--dataset", type=Path)
    source.add_argument("--transactions", type=Path, help="CSV of i,j,T_ij,U_ij")
    source.add_argument("--tx-range", help="transaction count range lo,hi")

    attack = parser.add_argument_group("attack")
    attack.add_argument("--attack", choices=["random", "targeted"])
    attack.add_argument("--q", type=int, help="target number of components")
    attack.add_argument("--max-removals", type=int)

    restore = parser.add_argument_group("restoration")
    restore.add_argument("--mechanism", choices=["strategic", "budget", "both"])
    restore.add_argument("--budget", help="total budget B or 'auto'")
    restore.add_argument("--threshold", choices=["n", "n-1"])
    restore.add_argument("--tiebreak", choices=["random", "deterministic"])
    restore.add_argument(
        "--compare-random",
        action="store_true",
        default=None,
        help="also run the random rewiring baseline",
    )

    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", type=Path)
    parser.add_argument("--repeats", type=int)
    parser.set_defaults(handler=cmd_run)


def load_config_file(path: Path) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment line."""
    values: dict[str, str] = {}
    try:
        for line_number, raw in read_lines(path):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise ConfigError(f"{path}:{line_number}: expected key=value, got {line!r}")
            values[key.strip().replace("-", "_")] = value.strip()
    except GraphParseError as e:
        raise ConfigError(str(e)) from e
    return values


def _parse_tx_range(value: str) -> tuple[int, int]:
    try:
        low, high = (int(part) for part in value.split(","))
    except ValueError as e:
        raise ConfigError(f"transaction range must be 'lo,hi', got {value!r}") from e
    return low, high


def build_run_config(values: dict[str, object]) -> RunConfig:
    """Validate merged config-file and flag values into a RunConfig."""
    values = {k: v for k, v in values.items() if v is not None and v != ""}

    if "seed" not in values:
        raise ConfigError("a seed is required (--seed or seed=...)")
    if "q" not in values:
        raise ConfigError("a target component count is required (--q or q=...)")

    try:
        seed = int(values["seed"])
        generator = None
        if "gen" in values:
            kind = GENERATOR_KINDS.get(str(values["gen"]))
            if kind is None:
                raise ConfigError(f"unknown generator {values['gen']!r}")
            generator = GeneratorSpec(
                kind=kind,
                n=values.get("n"),
                p=values.get("p"),
                gamma=values.get("gamma"),
                seed=seed,
            )

        attack = AttackSpec(
            mode=values.get("attack", "random"),
            target_components=values["q"],
            seed=seed,
            max_removals=values.get("max_removals"),
        )

        options: dict[str, object] = {}
        if "tx_range" in values:
            options["tx_low"], options["tx_high"] = _parse_tx_range(str(values["tx_range"]))
        if "budget" in values:
            budget = str(values["budget"])
            options["budget"] = budget if budget == "auto" else float(budget)
        for key, field in (
            ("dataset", "dataset"),
            ("transactions", "transactions"),
            ("mechanism", "mechanism"),
            ("threshold", "threshold_mode"),
            ("tiebreak", "tiebreak"),
            ("compare_random", "compare_random"),
            ("repeats", "repeats"),
            ("out", "out"),
        ):
            if key in values:
                options[field] = values[key]

        # NETMEND_OUT wins over both the config file and --out
        override = Settings().OUT
        if override is not None:
            options["out"] = override

        return RunConfig(generator=generator, attack=attack, seed=seed, **options)
    except (ValidationError, ValueError) as e:
        raise ConfigError(f"invalid run configuration: {e}") from e


def _run_isolated(config: RunConfig, log_level: str | None) -> RunSummary:
    configure_logging(log_level)
    return run_pipeline(config)


def cmd_run(args: argparse.Namespace) -> int:
    """Run the pipeline once, or once per seed with --repeats."""
    values: dict[str, object] = load_config_file(args.config) if args.config else {}
    for key in (
        "gen",
        "n",
        "p",
        "gamma",
        "dataset",
        "transactions",
        "tx_range",
        "attack",
        "q",
        "max_removals",
        "mechanism",
        "budget",
        "threshold",
        "tiebreak",
        "compare_random",
        "seed",
        "out",
        "repeats",
    ):
        flag = getattr(args, key)
        if flag is not None:
            values[key] = flag

    config = build_run_config(values)

    if config.repeats == 1:
        summary = run_pipeline(config)
        print(summary.model_dump_json())
        return 0

    runs = [
        config.with_seed(seed, config.out / f"seed_{seed}")
        for seed in range(config.seed, config.seed + config.repeats)
    ]
    workers = min(len(runs), os.cpu_count() or 1)
    logger.info("Running %d seeds on %d workers", len(runs), workers)

    exit_code = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_isolated, run, args.log_level) for run in runs]
        for run, future in zip(runs, futures, strict=True):
            try:
                print(future.result().model_dump_json())
            except AttackFailedError as e:
                logger.error("Seed %d: %s", run.seed, e)
                exit_code = 3
    return exit_code
