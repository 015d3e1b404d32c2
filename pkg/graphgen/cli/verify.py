"""
The `verify` command: executable acceptance checks.

Each suite yields named checks. A check prints one `PASS|FAIL <check>
<detail>` line on stdout and logs one key=value record.
"""

import math
import sys
import time
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from typing import TextIO

import numpy as np
import structlog

from graphgen.combinat import (
    count_regions,
    iter_regions,
    morton_decode,
    morton_encode,
    ndseq_to_counter,
    num_multiset_permutations,
    rank_multiset,
    regions,
    unrank_multiset,
)
from graphgen.combinat.multiset import MultisetCounter
from graphgen.errors import UsageError
from graphgen.sampling import RandomStream, map_with_children
from graphgen.samplers import (
    BlockSpec,
    DegreeSequence,
    EdgeList,
    Initiator,
    backward_map,
    ball_drop_er,
    ball_drop_er_complement,
    chung_lu_grass,
    chung_lu_matrix,
    coin_flip_er,
    fixed_edge_er,
    grass_hop_er,
    grass_hop_kron,
    kronecker_power_dense,
    map_mult_to_kron,
    multtable,
    sbm_ball,
    sbm_grass,
    vectorize,
)
from graphgen.stats import (
    chi_square,
    chi_square_binomial,
    empirical_frequency,
    expected_ball_drop_ratio,
    expected_ball_drops_exact,
    sigma_bound,
    upper_regularized_gamma,
)

logger = structlog.get_logger()

ALPHA = 0.001

TWO_BY_TWO = [[0.99, 0.5], [0.5, 0.2]]
THREE_BY_THREE = [[0.9, 0.6, 0.3], [0.5, 0.4, 0.2], [0.7, 0.1, 0.05]]
DEGREES = (4, 3, 2, 2, 2, 1, 1, 1)
DICE_OBSERVED = (30, 32, 33, 31, 29, 25)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named assertion."""

    check: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyContext:
    """Sample budget, parent stream and worker count shared by every suite."""

    samples: int
    stream: RandomStream
    workers: int = 1


Suite = Callable[[VerifyContext], Iterator[CheckResult]]


def _check(check: str, passed: bool, **detail: object) -> CheckResult:
    text = " ".join(f"{key}={value}" for key, value in detail.items())
    return CheckResult(check, bool(passed), text)


def region_count(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Region enumeration and the counting formula."""
    listed = regions(4, 3)
    distinct = {tuple(r) for r in listed}
    ordered = listed == sorted(listed) and len(distinct) == len(listed)
    yield _check("regions(4,3)", len(listed) == 20 and ordered, count=len(listed))
    yield _check("count_regions(4,7)", count_regions(4, 7) == 120, count=count_regions(4, 7))

    brute = all(
        count_regions(m, k) == sum(1 for _ in combinations_with_replacement(range(m), k))
        for m in range(1, 10)
        for k in range(1, 6)
    )
    yield _check("count_regions brute force", brute, m_max=9, k_max=5)

    start = math.ceil(math.e * 3)
    bound = all(count_regions(4, k) <= (math.e + 1.0) ** k for k in range(start, 31))
    yield _check("region growth bound", bound, n=2, k_range=f"{start}..30")


def morton_roundtrip(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Morton encode inverts decode on every code."""
    yield _check("morton_decode(7,2)", morton_decode(7, 2) == (3, 1), got=morton_decode(7, 2))
    code = morton_encode(1, 2, 2, 2)
    yield _check("morton_encode(1,2)", code == 9, got=code)
    for n in (2, 3, 4):
        for k in range(1, 5):
            ok = all(morton_encode(*morton_decode(c, n), n, k) == c for c in range(n ** (2 * k)))
            yield _check(f"morton roundtrip n={n} k={k}", ok, codes=n ** (2 * k))


def kron_mapping(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Multiplication-table cells land on Kronecker cells of equal value, bijectively."""
    yield _check("map([1,3],2)", map_mult_to_kron([1, 3], 2) == (3, 1))
    yield _check("map([4,0,7],3)", map_mult_to_kron([4, 0, 7], 3) == (10, 11))

    for rows in (TWO_BY_TWO, THREE_BY_THREE):
        K = Initiator.from_rows(rows)
        v = vectorize(K)
        for k in (2, 3):
            dense = kronecker_power_dense(K, k)
            cells: set[tuple[int, int]] = set()
            equal = agree = True
            for mind in product(range(K.n * K.n), repeat=k):
                row, col = map_mult_to_kron(mind, K.n)
                cells.add((row, col))
                agree &= backward_map(mind, K.n) == (row, col)
                expected = multtable(mind, v)
                equal &= math.isclose(dense[row, col], expected, rel_tol=1e-12, abs_tol=0.0)
            bijective = len(cells) == (K.n**k) ** 2
            yield _check(f"values n={K.n} k={k}", equal)
            yield _check(f"bijection n={K.n} k={k}", bijective, cells=len(cells))
            yield _check(f"backward map n={K.n} k={k}", agree)


def unrank_oracle(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Unranking enumerates the sorted distinct permutations of every small multiset."""
    first = [unrank_multiset([0, 1, 1, 3], i) for i in range(3)]
    yield _check(
        "unrank([0,1,1,3],{0,1,2})",
        first == [[0, 1, 1, 3], [0, 1, 3, 1], [0, 3, 1, 1]],
        got=first,
    )
    yield _check("unrank([0,1,2,2],4)", unrank_multiset([0, 1, 2, 2], 4) == [1, 2, 0, 2])
    count = num_multiset_permutations(MultisetCounter({0: 1, 1: 1, 2: 2}))
    yield _check("num_multiset_permutations", count == 12, count=count)

    checked = 0
    ok = True
    for m in range(1, 5):
        for k in range(1, 7):
            for region in iter_regions(m, k):
                expected = sorted(set(permutations(region)))
                total = num_multiset_permutations(ndseq_to_counter(region))
                got = [tuple(unrank_multiset(region, i)) for i in range(total)]
                ok &= got == expected
                ok &= all(rank_multiset(perm) == i for i, perm in enumerate(got))
                checked += 1
    yield _check("unrank brute force", ok, multisets=checked)


def er_marginals(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Every Erdos-Renyi method hits each cell with probability p."""
    n = 8
    for block, p in enumerate((0.25, 0.9)):
        ball = ball_drop_er if p <= 0.5 else ball_drop_er_complement
        methods: dict[str, Callable[[RandomStream], EdgeList]] = {
            "grass": lambda s, p=p: grass_hop_er(n, p, s),
            "ball": lambda s, p=p, ball=ball: ball(n, p, s).edges,
            "coin": lambda s, p=p: coin_flip_er(n, p, s),
        }
        P = np.full((n, n), p)
        for index, (name, sampler) in enumerate(methods.items()):
            sub = ctx.stream.child(3 * block + index)
            freq = empirical_frequency(sampler, ctx.samples, sub, ctx.workers)
            bad = freq.violations(P)
            yield _check(f"er {name} p={p} cells", not bad, violations=len(bad))
            fit = chi_square_binomial(freq.edge_counts, n * n, p)
            yield _check(
                f"er {name} p={p} edge counts", fit.passes(ALPHA), p_value=f"{fit.p_value:.4f}"
            )


def coupon_collector(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Mean ball-drop draws follow n^2 ln(1 / (1 - p))."""
    n = 1000
    trials = 200
    for index, p in enumerate((0.001, 0.01, 0.1)):
        parent = ctx.stream.child(index)
        reports = map_with_children(
            lambda _, s, p=p: ball_drop_er(n, p, s), list(range(trials)), parent, ctx.workers
        )
        mean_draws = float(np.mean([r.draws for r in reports]))
        mean_edges = float(np.mean([len(r.edges) for r in reports]))
        expected = n * n * -math.log1p(-p)
        error = abs(mean_draws - expected) / expected
        yield _check(
            f"coupon p={p} mean draws",
            error <= 0.05,
            mean=f"{mean_draws:.1f}",
            expected=f"{expected:.1f}",
        )
        exact = float(np.mean([expected_ball_drops_exact(n * n, len(r.edges)) for r in reports]))
        yield _check(
            f"coupon p={p} exact expectation",
            abs(mean_draws - exact) <= 0.05 * exact,
            mean=f"{mean_draws:.1f}",
            exact=f"{exact:.1f}",
        )
        ratio = mean_draws / mean_edges
        yield _check(
            f"coupon p={p} ratio",
            expected_ball_drop_ratio(p) > 1.0 and ratio > 1.0,
            ratio=f"{ratio:.5f}",
        )


def kron_marginals(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Kronecker grass-hopping matches K^(3) entrywise and draws edges + regions gaps."""
    K = Initiator.from_rows(TWO_BY_TWO)
    k = 3
    nonzero = sum(1 for r in iter_regions(K.n * K.n, k) if multtable(r, vectorize(K)) > 0.0)
    mismatched: list[int] = []

    def sampler(sub: RandomStream) -> EdgeList:
        edges = grass_hop_kron(K, k, sub)
        if sub.tally["geometric"] != len(edges) + nonzero:
            mismatched.append(sub.tally["geometric"])
        return edges

    freq = empirical_frequency(sampler, ctx.samples, ctx.stream, ctx.workers)
    bad = freq.violations(kronecker_power_dense(K, k))
    yield _check("kron cells", not bad, violations=len(bad), samples=ctx.samples)
    yield _check("kron geometric draws", not mismatched, mismatched=len(mismatched))


def chung_lu(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Chung-Lu grass-hopping matches d_i d_j / sum(d) and the expected degrees."""
    d = DegreeSequence(DEGREES)
    P = chung_lu_matrix(d)
    freq = empirical_frequency(lambda s: chung_lu_grass(d, s), ctx.samples, ctx.stream, ctx.workers)
    bad = freq.violations(P)
    yield _check("chung-lu cells", not bad, violations=len(bad))
    yield _check("chung-lu corner", int(freq.counts[0, 0]) == ctx.samples)

    mean_degrees = freq.counts.sum(axis=1) / ctx.samples
    spread = 4.0 * np.sqrt((P * (1.0 - P)).sum(axis=1) / ctx.samples)
    ok = bool(np.all(np.abs(mean_degrees - np.asarray(DEGREES)) <= spread))
    yield _check("chung-lu degrees", ok, mean=np.round(mean_degrees, 3).tolist())


def sbm(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Block model samplers hit within and between blocks at the planted rates."""
    spec = BlockSpec.planted((3, 5), 0.7, 0.1)
    P = spec.probability_matrix()
    samplers: dict[str, Callable[[RandomStream], EdgeList]] = {
        "grass": lambda s: sbm_grass(spec, s),
        "ball": lambda s: sbm_ball(spec, s).edges,
    }
    for index, (name, sampler) in enumerate(samplers.items()):
        freq = empirical_frequency(sampler, ctx.samples, ctx.stream.child(index), ctx.workers)
        bad = freq.violations(P)
        yield _check(f"sbm {name} cells", not bad, violations=len(bad))


def fixed_edge(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Fixed-edge sampling is uniform over the 15 two-edge graphs on 4 nodes."""
    n, m = 4, 2
    graphs = map_with_children(
        lambda _, s: fixed_edge_er(n, m, s), list(range(ctx.samples)), ctx.stream, ctx.workers
    )
    yield _check("fixed-edge sizes", all(len(g) == m for g in graphs))

    seen = Counter(tuple(g.pairs()) for g in graphs)
    freq = np.array([seen[key] for key in sorted(seen)], dtype=np.float64) / ctx.samples
    bound = sigma_bound(1.0 / 15.0, ctx.samples)
    yield _check("fixed-edge graphs", len(seen) == 15, graphs=len(seen))
    yield _check(
        "fixed-edge uniform",
        len(seen) == 15 and bool(np.all(np.abs(freq - 1.0 / 15.0) <= bound)),
        worst=f"{float(np.abs(freq - 1.0 / 15.0).max()):.5f}",
    )


def chi_square_fixture(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Dice-table statistic and p-value."""
    result = chi_square(DICE_OBSERVED, [30] * 6)
    yield _check(
        "dice statistic",
        math.isclose(result.statistic, 4 / 3, rel_tol=1e-12),
        statistic=f"{result.statistic:.6f}",
    )
    yield _check(
        "dice p-value", abs(result.p_value - 0.931) <= 0.001, p_value=f"{result.p_value:.4f}"
    )
    skewed = chi_square([10, 0], [5, 5])
    yield _check(
        "two-cell tail",
        math.isclose(skewed.statistic, 10.0)
        and skewed.p_value == upper_regularized_gamma(0.5, 5.0),
        p_value=f"{skewed.p_value:.3e}",
    )


def _timed(action: Callable[[], object], repeats: int = 3) -> float:
    best = math.inf
    for _ in range(repeats):
        started = time.perf_counter()
        action()
        best = min(best, time.perf_counter() - started)
    return best


def performance(ctx: VerifyContext) -> Iterator[CheckResult]:
    """Grass-hopping work tracks the edge count, not n^2."""
    m = 100_000
    times = {}
    for index, n in enumerate((1_000, 10_000, 100_000)):
        sub = ctx.stream.child(index)
        times[n] = _timed(lambda n=n, sub=sub: grass_hop_er(n, m / (n * n), sub))
    spread = max(times.values()) / min(times.values())
    yield _check("grass-hop flat in n", spread <= 3.0, spread=f"{spread:.2f}")

    n = 10_000
    coin = _timed(lambda: coin_flip_er(n, m / (n * n), ctx.stream.child(3)))
    ratio = coin / times[n]
    yield _check("coin flip slower", ratio >= 10.0, ratio=f"{ratio:.1f}")


SUITES: dict[str, Suite] = {
    "region-count": region_count,
    "morton-roundtrip": morton_roundtrip,
    "kron-mapping": kron_mapping,
    "unrank-oracle": unrank_oracle,
    "er-marginals": er_marginals,
    "coupon-collector": coupon_collector,
    "kron-marginals": kron_marginals,
    "chung-lu": chung_lu,
    "sbm": sbm,
    "fixed-edge": fixed_edge,
    "chi-square": chi_square_fixture,
    "performance": performance,
}


def run_verify(
    suite: str,
    samples: int,
    seed: int,
    workers: int = 1,
    out: TextIO | None = None,
) -> int:
    """
    Run one suite (or `all`) and report every check.

    Args:
        suite: Suite name or "all"
        samples: Sample budget for frequency checks
        seed: Root seed; suite i draws from its child stream i
        workers: Thread count for sampling
        out: Report stream (default stdout)

    Returns:
        0 if every check passed, 1 otherwise

    Raises:
        UsageError: If the suite is unknown
    """
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    out = out or sys.stdout
    names = list(SUITES) if suite == "all" else [suite]
    root = RandomStream(seed)

    failures = 0
    for name in names:
        ctx = VerifyContext(samples, root.child(list(SUITES).index(name)), workers)
        for result in SUITES[name](ctx):
            status = "PASS" if result.passed else "FAIL"
            print(f"{status} {result.check} {result.detail}".rstrip(), file=out)
            logger.info(
                "Verification check",
                suite=name,
                check=result.check,
                passed=result.passed,
                detail=result.detail,
            )
            failures += not result.passed

    logger.info(
        "Verification finished", suite=suite, seed=seed, failures=failures, samples=samples
    )
    return 0 if failures == 0 else 1
