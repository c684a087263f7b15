import argparse
import sys

from pydantic import ValidationError

from netmend.cli import metrics, run
from netmend.core.config import settings
from netmend.core.exceptions import AttackFailedError, NetmendError
from netmend.core.logging import configure_logging

EXIT_CONFIG = 2
EXIT_ATTACK_FAILED = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Fragment networks by edge removal and restore them by rewiring",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument("--log-level", help=f"default {settings.LOG_LEVEL}")

    subparsers = parser.add_subparsers(dest="command", required=True)
    run.register(subparsers)
    metrics.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except AttackFailedError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ATTACK_FAILED
    except (NetmendError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
