"""
The `generate` command: validate a request, sample one graph, write it out.
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Literal

import numpy as np
import structlog
from pydantic import BaseModel, Field, model_validator

from graphgen.cli.parser import RANDOM_SEED
from graphgen.combinat import count_regions
from graphgen.config import Settings
from graphgen.errors import CapacityError
from graphgen.formats import EdgeFileFormat, read_degrees, read_matrix, read_text, write_edges
from graphgen.sampling import MASK_64, RandomStream
from graphgen.samplers import (
    BallDropReport,
    BlockSpec,
    EdgeList,
    Initiator,
    ball_drop_er,
    ball_drop_er_complement,
    chung_lu_ball,
    chung_lu_grass,
    coin_flip_er,
    coin_flip_kron,
    fixed_edge_er,
    grass_hop_er,
    grass_hop_kron,
    sbm_ball,
    sbm_grass,
    symmetrize,
)

logger = structlog.get_logger()

Model = Literal["er", "chung-lu", "sbm", "kron"]
Method = Literal["coin", "ball", "grass", "fixed"]

# Methods each model supports
SUPPORTED_METHODS: dict[str, tuple[str, ...]] = {
    "er": ("coin", "ball", "grass", "fixed"),
    "chung-lu": ("ball", "grass"),
    "sbm": ("ball", "grass"),
    "kron": ("coin", "grass"),
}


class GenerateRequest(BaseModel):
    """A validated `generate` invocation."""

    model: Model
    method: Method | None = None
    seed: int = Field(..., ge=0, le=MASK_64)

    # Model parameters
    nodes: int | None = Field(default=None, ge=1)
    prob: float | None = Field(default=None, ge=0.0, le=1.0)
    fixed_edges: int | None = Field(default=None, ge=0)
    degrees: Path | None = None
    sizes: list[int] | None = None
    qmatrix: Path | None = None
    within: float | None = Field(default=None, ge=0.0, le=1.0)
    between: float | None = Field(default=None, ge=0.0, le=1.0)
    initiator: Path | None = None
    power: int | None = Field(default=None, ge=1)

    # Output
    undirected: bool = False
    format: Literal["tsv", "mm"] = "tsv"
    out: Path | None = None
    sort: bool = False
    parallel_regions: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_combination(self) -> "GenerateRequest":
        """Resolve the default method and check parameters against the model."""
        if self.method is None:
            self.method = "fixed" if self.fixed_edges is not None else "grass"
        if self.method not in SUPPORTED_METHODS[self.model]:
            raise ValueError(f"method {self.method!r} is not available for model {self.model!r}")

        if self.model == "er":
            if self.nodes is None:
                raise ValueError("er needs --nodes")
            if self.method == "fixed" and self.fixed_edges is None:
                raise ValueError("method 'fixed' needs --fixed-edges")
            if self.method != "fixed" and self.fixed_edges is not None:
                raise ValueError("--fixed-edges only applies to method 'fixed'")
            if self.method != "fixed" and self.prob is None:
                raise ValueError("er needs --prob")
        elif self.model == "chung-lu":
            if self.degrees is None:
                raise ValueError("chung-lu needs --degrees")
        elif self.model == "sbm":
            if not self.sizes:
                raise ValueError("sbm needs --sizes")
            planted = self.within is not None and self.between is not None
            if (self.qmatrix is None) == (not planted):
                raise ValueError("sbm needs either --qmatrix or both --within and --between")
        elif self.initiator is None or self.power is None:
            raise ValueError("kron needs --initiator and --power")
        return self


def resolve_seed(value: int | str | None, settings: Settings) -> int:
    """Explicit seed, fresh entropy for 'random', or the configured default."""
    if value is None:
        return settings.seed
    if value == RANDOM_SEED:
        return int(np.random.SeedSequence().entropy) & MASK_64
    return int(value)


def request_from_args(
    args: argparse.Namespace, settings: Settings, seed: int | None = None
) -> GenerateRequest:
    """
    Build a GenerateRequest from parsed arguments and settings defaults.

    Args:
        args: Parsed `generate` arguments
        settings: Defaults for anything the command line leaves unset
        seed: Already-resolved seed; resolved from args.seed when omitted
    """
    workers = args.parallel_regions
    return GenerateRequest(
        model=args.model,
        method=args.method,
        seed=resolve_seed(args.seed, settings) if seed is None else seed,
        nodes=args.nodes,
        prob=args.prob,
        fixed_edges=args.fixed_edges,
        degrees=args.degrees,
        sizes=args.sizes,
        qmatrix=args.qmatrix,
        within=args.within,
        between=args.between,
        initiator=args.initiator,
        power=args.power,
        undirected=args.undirected,
        format=args.format,
        out=args.out,
        sort=args.sort,
        parallel_regions=settings.parallel_regions if workers is None else workers,
    )


def _report(report: BallDropReport, diagnostics: dict[str, Any]) -> EdgeList:
    diagnostics["draws"] = report.draws
    diagnostics["duplicates"] = report.duplicates
    return report.edges


def _sample_er(
    request: GenerateRequest, stream: RandomStream, settings: Settings, diagnostics: dict[str, Any]
) -> EdgeList:
    n = request.nodes
    assert n is not None
    if request.method == "fixed":
        assert request.fixed_edges is not None
        return fixed_edge_er(n, request.fixed_edges, stream)

    p = request.prob
    assert p is not None
    if request.method == "coin":
        if n > settings.dense_oracle_cells:
            raise CapacityError(f"Coin flipping is limited to {settings.dense_oracle_cells} nodes")
        return coin_flip_er(n, p, stream)
    if request.method == "ball":
        if p > 0.5:
            diagnostics["variant"] = "complement"
            return _report(ball_drop_er_complement(n, p, stream), diagnostics)
        return _report(ball_drop_er(n, p, stream), diagnostics)
    return grass_hop_er(n, p, stream)


def _sample_chung_lu(
    request: GenerateRequest, stream: RandomStream, diagnostics: dict[str, Any]
) -> EdgeList:
    assert request.degrees is not None
    d = read_degrees(read_text(request.degrees))
    d.validate()
    diagnostics["blocks"] = len(set(d.degrees)) ** 2
    if request.method == "ball":
        return _report(chung_lu_ball(d, stream), diagnostics)
    return chung_lu_grass(d, stream, request.parallel_regions)


def _sample_sbm(
    request: GenerateRequest, stream: RandomStream, diagnostics: dict[str, Any]
) -> EdgeList:
    assert request.sizes is not None
    if request.qmatrix is not None:
        spec = BlockSpec(tuple(request.sizes), read_matrix(read_text(request.qmatrix)))
    else:
        assert request.within is not None and request.between is not None
        spec = BlockSpec.planted(request.sizes, request.within, request.between)
    diagnostics["blocks"] = len(spec.sizes) ** 2
    if request.method == "ball":
        return _report(sbm_ball(spec, stream), diagnostics)
    return sbm_grass(spec, stream, request.parallel_regions)


def _sample_kron(
    request: GenerateRequest, stream: RandomStream, settings: Settings, diagnostics: dict[str, Any]
) -> EdgeList:
    assert request.initiator is not None and request.power is not None
    K = Initiator(read_matrix(read_text(request.initiator)))
    if request.method == "coin":
        return coin_flip_kron(K, request.power, stream, settings.dense_oracle_cells)
    diagnostics["regions"] = count_regions(K.n * K.n, request.power)
    return grass_hop_kron(K, request.power, stream, request.parallel_regions)


def sample(
    request: GenerateRequest, stream: RandomStream, settings: Settings, diagnostics: dict[str, Any]
) -> EdgeList:
    """Dispatch a request to its sampler; extra counts land in diagnostics."""
    if request.model == "er":
        return _sample_er(request, stream, settings, diagnostics)
    if request.model == "chung-lu":
        return _sample_chung_lu(request, stream, diagnostics)
    if request.model == "sbm":
        return _sample_sbm(request, stream, diagnostics)
    return _sample_kron(request, stream, settings, diagnostics)


def run_generate(request: GenerateRequest, settings: Settings) -> dict[str, Any]:
    """
    Sample the requested graph and write it to --out or stdout.

    Output bytes depend only on the request and its seed.

    Returns:
        Diagnostics: seed, edge count, draw counts, and model-specific counts

    Raises:
        GraphGenError: On capacity, domain or parse failures
        OSError: If the output file cannot be opened
    """
    started = time.perf_counter()
    stream = RandomStream(request.seed)
    diagnostics: dict[str, Any] = {
        "model": request.model,
        "method": request.method,
        "seed": request.seed,
    }

    edges = sample(request, stream, settings, diagnostics)
    if request.undirected:
        edges = symmetrize(edges)
    if request.sort:
        edges = edges.sorted()

    fmt = EdgeFileFormat.from_name(request.format)
    if request.out is None:
        written = write_edges(edges, fmt, sys.stdout.buffer)
    else:
        with open(request.out, "wb") as sink:
            written = write_edges(edges, fmt, sink)

    diagnostics.update(
        nodes=edges.num_rows,
        edges=len(edges),
        bytes=written,
        geometric_draws=stream.tally["geometric"],
        uniform_draws=stream.tally["uniform"],
        binomial_draws=stream.tally["binomial"],
        elapsed=round(time.perf_counter() - started, 6),
    )
    logger.info("Graph generated", **diagnostics)
    return diagnostics
