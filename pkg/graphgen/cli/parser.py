"""
Argument parsing for the graphgen command line.
"""

import argparse

from graphgen import __version__
from graphgen.errors import DomainError
from graphgen.sampling import parse_seed

MODELS = ("er", "chung-lu", "sbm", "kron")
METHODS = ("coin", "ball", "grass", "fixed")
FORMATS = ("tsv", "mm")
LOG_FORMATS = ("logfmt", "json", "console")

RANDOM_SEED = "random"


def seed_argument(text: str) -> int | str:
    """Parse --seed: decimal, 0x-hex, or the word 'random'."""
    if text.strip().lower() == RANDOM_SEED:
        return RANDOM_SEED
    try:
        return parse_seed(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def positive_int(text: str) -> int:
    """Parse a count that must be at least 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def sizes_argument(text: str) -> list[int]:
    """Parse --sizes a,b,c into positive block sizes."""
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        message = f"sizes must be comma-separated integers: {text!r}"
        raise argparse.ArgumentTypeError(message) from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError(f"sizes must be positive: {text!r}")
    return sizes


def build_parser(suites: list[str]) -> argparse.ArgumentParser:
    """
    Build the top-level parser with generate and verify subcommands.

    Args:
        suites: Verification suite names accepted by `verify`
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=seed_argument, help="64-bit seed, 0x-hex, or 'random'")
    common.add_argument(
        "--parallel-regions", type=positive_int, default=None, metavar="N", help="worker threads"
    )
    common.add_argument("--log-format", choices=LOG_FORMATS, help="diagnostics renderer")

    parser = argparse.ArgumentParser(prog="graphgen", description="Exact random graph sampling")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", parents=[common], help="sample one graph")
    generate.add_argument("model", choices=MODELS)
    generate.add_argument("--method", choices=METHODS)
    generate.add_argument("--nodes", type=int)
    generate.add_argument("--prob", type=float)
    generate.add_argument("--fixed-edges", type=int)
    generate.add_argument("--degrees", metavar="FILE", help="one expected degree per line")
    generate.add_argument("--sizes", type=sizes_argument, help="block sizes a,b,c")
    generate.add_argument("--qmatrix", metavar="FILE", help="block probability matrix")
    generate.add_argument("--within", type=float, help="within-block probability")
    generate.add_argument("--between", type=float, help="between-block probability")
    generate.add_argument("--initiator", metavar="FILE", help="Kronecker initiator matrix")
    generate.add_argument("--power", type=int, help="Kronecker power k")
    generate.add_argument("--undirected", action="store_true", help="mirror the upper triangle")
    generate.add_argument("--format", choices=FORMATS, default="tsv")
    generate.add_argument("--out", metavar="FILE", help="output file (default stdout)")
    generate.add_argument("--sort", action="store_true", help="sort edges by (src, dst)")

    verify = commands.add_parser("verify", parents=[common], help="run a statistical check")
    verify.add_argument("suite", choices=[*suites, "all"])
    verify.add_argument("--samples", type=positive_int, help="samples per frequency check")

    return parser
