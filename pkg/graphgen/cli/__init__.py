"""
Command-line front end for graphgen.

`generate` samples one graph to a file; `verify` runs the statistical
acceptance battery.
"""

from graphgen.cli.generate import GenerateRequest, request_from_args, resolve_seed, run_generate
from graphgen.cli.parser import RANDOM_SEED, build_parser
from graphgen.cli.verify import SUITES, CheckResult, VerifyContext, run_verify

__all__ = [
    # Parsing
    "RANDOM_SEED",
    "build_parser",
    # Generate
    "GenerateRequest",
    "request_from_args",
    "resolve_seed",
    "run_generate",
    # Verify
    "SUITES",
    "CheckResult",
    "VerifyContext",
    "run_verify",
]
