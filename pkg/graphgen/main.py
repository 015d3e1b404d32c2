"""
Main entry point for graphgen.

Parses the command line, configures structured logging on stderr and maps
failures to exit codes: 0 success, 1 runtime or domain failure, 2 usage error.
"""

import logging
import sys
from collections.abc import Sequence

import structlog
from pydantic import ValidationError

from graphgen import __version__
from graphgen.cli import (
    RANDOM_SEED,
    SUITES,
    build_parser,
    request_from_args,
    resolve_seed,
    run_generate,
    run_verify,
)
from graphgen.config import Settings, get_settings
from graphgen.errors import GraphGenError, UsageError

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def configure_logging(settings: Settings, log_format: str | None = None) -> None:
    """
    Configure structlog on the stdlib backend, writing to stderr.

    Args:
        settings: Supplies the level and the default renderer
        log_format: Overrides settings.log_format for this run
    """
    fmt = log_format or settings.log_format
    if fmt == "json":
        renderer = structlog.processors.JSONRenderer()
    elif fmt == "console":
        renderer = structlog.dev.ConsoleRenderer()
    else:
        renderer = structlog.processors.LogfmtRenderer(key_order=["event", "level"])

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=settings.log_level.upper(),
        force=True,
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def _usage_error(message: str) -> int:
    print(f"graphgen: usage error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _validation_message(error: ValidationError) -> str:
    parts = []
    for detail in error.errors():
        field = ".".join(str(part) for part in detail["loc"])
        parts.append(f"{field}: {detail['msg']}" if field else detail["msg"])
    return "; ".join(parts)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one graphgen command.

    A seed drawn from entropy (`--seed random`) is printed to stderr so the
    run can be repeated, whatever the log level.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser(list(SUITES))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = get_settings()
    except ValidationError as e:
        return _usage_error(_validation_message(e))
    configure_logging(settings, args.log_format)
    logger.debug("Starting graphgen", version=__version__, command=args.command)

    try:
        seed = resolve_seed(args.seed, settings)
        if args.seed == RANDOM_SEED:
            print(f"graphgen: seed={seed}", file=sys.stderr)

        if args.command == "generate":
            run_generate(request_from_args(args, settings, seed), settings)
            return EXIT_OK
        samples = settings.verify_samples if args.samples is None else args.samples
        workers = args.parallel_regions
        if workers is None:
            workers = settings.parallel_regions
        return run_verify(args.suite, samples=samples, seed=seed, workers=workers)
    except ValidationError as e:
        return _usage_error(_validation_message(e))
    except UsageError as e:
        return _usage_error(str(e))
    except (GraphGenError, OSError) as e:
        logger.error("Command failed", error=str(e), error_type=type(e).__name__)
        print(f"graphgen: error: {e}", file=sys.stderr)
        return EXIT_FAILURE


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
