"""Randomized and exhaustive property suites shared by ``slodowy verify`` and the tests."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Callable, Iterable

from .chambers import enumerate_chambers, flop_graph, locate, slice_chambers, weyl_reflect
from .errors import SlodowyError
from .liealg import (
    ad_matrix,
    centralizer_basis,
    jordan_nilpotent,
    slodowy_slice_basis,
    sl2_completion,
    transversality_check,
)
from .partitions import (
    Partition,
    all_partitions,
    count_resolutions,
    dominates,
    dual,
    nested_pairs,
    orbit_dim,
    random_nested_pair,
    random_partition,
)
from .quiverlab import (
    all_A_surjective,
    from_flag,
    is_one_stable,
    moment_map,
    nilpotent_partition,
    random_flag_point,
    reflect,
    reflection_sequence_exact,
    same_orbit_invariants,
    sample_tilde,
    theta,
)
from .slices import (
    SlicePair,
    count_slice_resolutions,
    decompose_quiver,
    decompose_young,
    dimension_vectors,
    make_slice_pair,
    tilde_vectors,
)

MAX_REPORTED = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    failed: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and self.failed == 0

    def record(self, label: str, problems: Iterable[str]) -> None:
        self.checked += 1
        problems = list(problems)
        if problems:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append(f"{label}: {'; '.join(problems)}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failed": self.failed,
            "failures": self.failures,
            "passed": self.passed,
        }


def _run(name: str, items: Iterable, check: Callable) -> SuiteResult:
    result = SuiteResult(name)
    start = time.perf_counter()
    for label, item in items:
        try:
            problems = list(check(item))
        except SlodowyError as exc:
            problems = [f"{type(exc).__name__}: {exc}"]
        result.record(label, problems)
    result.seconds = time.perf_counter() - start
    return result


def _label(*parts) -> str:
    return " ".join(",".join(map(str, p)) if isinstance(p, tuple) else str(p) for p in parts)


# -- fixed reproductions ------------------------------------------------------


def _factor_keys(factors) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [f.key() for f in factors]


def check_two_factor_slice() -> list[str]:
    sp = make_slice_pair(Partition([4, 4, 4, 2, 2, 1, 1]), Partition([5, 4, 3, 3, 2, 1]))
    want = [((3, 2, 1), (2, 2, 1, 1)), ((2, 1), (1, 1, 1))]
    problems = []
    for method, fn in (("quiver", decompose_quiver), ("young", decompose_young)):
        got = _factor_keys(fn(sp))
        if got != want:
            problems.append(f"{method} factors {got}")
    if count_slice_resolutions(sp) != 12:
        problems.append(f"count {count_slice_resolutions(sp)}")
    return problems


def check_single_factor_slice() -> list[str]:
    sp = make_slice_pair(Partition([5, 3, 3, 2]), Partition([5, 4, 3, 1]))
    want = [((3, 2), (2, 2, 1))]
    problems = []
    for method, fn in (("quiver", decompose_quiver), ("young", decompose_young)):
        got = _factor_keys(fn(sp))
        if got != want:
            problems.append(f"{method} factors {got}")
    if count_slice_resolutions(sp) != 3:
        problems.append(f"count {count_slice_resolutions(sp)}")
    if count_resolutions(Partition([5, 4, 3, 1])) != 60:
        problems.append("count_resolutions([5,4,3,1]) != 60")
    return problems


STAIRCASE_FLAG_TYPES = {(3, 2, 1), (2, 3, 1), (2, 1, 3), (1, 2, 3), (1, 3, 2), (3, 1, 2)}


def check_staircase_chambers() -> list[str]:
    d = Partition([3, 2, 1])
    problems = []
    chambers = enumerate_chambers(d)
    labels = [c.flag_type for c in chambers]
    if len(chambers) != 6 or set(labels) != STAIRCASE_FLAG_TYPES:
        problems.append(f"chamber labels {labels}")
    home = locate((1, 1), d)
    if getattr(home, "flag_type", None) != (3, 2, 1):
        problems.append(f"locate((1,1)) = {home}")
    g = flop_graph(d)
    is_cycle = (
        len(g.nodes) == 6 and len(g.edges) == 6 and g.is_connected() and all(g.degree(n) == 2 for n in g.nodes)
    )
    if not is_cycle:
        problems.append("flop graph is not a 6-cycle")
    return problems


def examples_suite() -> SuiteResult:
    items = [("two-factor slice", check_two_factor_slice), ("single-factor slice", check_single_factor_slice), ("staircase chambers", check_staircase_chambers)]
    return _run("examples", items, lambda check: check())


# -- decomposition oracles ----------------------------------------------------


def _compare_decompositions(sp: SlicePair) -> list[str]:
    q = _factor_keys(decompose_quiver(sp))
    y = _factor_keys(decompose_young(sp))
    return [] if q == y else [f"quiver {q} != young {y}"]


def oracle_suite(max_exhaustive: int = 12, random_pairs: int = 10_000, random_max: int = 30, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)

    def items():
        for n in range(1, max_exhaustive + 1):
            for dp, d in nested_pairs(n):
                if not d.is_trivial():
                    yield _label(tuple(dp), tuple(d)), (dp, d)
        done = 0
        while done < random_pairs:
            dp, d = random_nested_pair(rng.randint(2, random_max), rng)
            if not d.is_trivial():
                done += 1
                yield _label(tuple(dp), tuple(d)), (dp, d)

    return _run("decomposition oracles", items(), lambda pair: _compare_decompositions(make_slice_pair(*pair)))


# -- quiver laboratory ---------------------------------------------------------


def _random_flag_type(rng: random.Random, max_n: int) -> tuple[Partition, list[int]]:
    while True:
        d = random_partition(rng.randint(2, max_n), rng)
        if not d.is_trivial():
            a = list(dual(d))
            rng.shuffle(a)
            return d, a


def _tilde_dims(flag_type: list[int]) -> tuple[int, ...]:
    big_n = sum(flag_type)
    return tuple(big_n - sum(flag_type[: i + 1]) for i in range(len(flag_type) - 1))


def _quiver_item(args) -> list[str]:
    seed, max_n = args
    rng = random.Random(seed)
    d, a = _random_flag_type(rng, max_n)
    problems = []
    fp = random_flag_point(a, rng)
    r = from_flag(fp)
    if r.v != _tilde_dims(a):
        problems.append(f"dimension vector {r.v}")
    if not all(m.is_zero() for m in moment_map(r)):
        problems.append("moment map nonzero")
    stable, onto = is_one_stable(r), all_A_surjective(r)
    if not (stable and onto):
        problems.append(f"flag rep: stable={stable} surjective={onto}")
    if not theta(r).same_as(fp):
        problems.append("theta(from_flag) differs from the flag point")
    x = r.Delta[0] @ r.Gamma[0]
    if not dominates(nilpotent_partition(x), d):
        problems.append(f"B0A0 has type {list(nilpotent_partition(x))}")

    # a sampled fiber point, unstable half of the time
    ranks = None
    if rng.random() < 0.5:
        ranks = list(_tilde_dims(a))  # full ranks, since v is strictly decreasing
        ranks[rng.randrange(len(ranks))] -= 1
    s = sample_tilde(a, rng, a_ranks=ranks)
    if not all(m.is_zero() for m in moment_map(s)):
        problems.append("sampled rep off the fiber")
    stable, onto = is_one_stable(s), all_A_surjective(s)
    if stable != onto or onto != (ranks is None):
        problems.append(f"sampled rep: stable={stable} surjective={onto} deficient={ranks is not None}")
    return problems


def quiver_suite(trials: int = 1000, max_n: int = 8, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    items = ((f"trial {k}", (rng.getrandbits(64), max_n)) for k in range(trials))
    return _run("quiver", items, _quiver_item)


def _reflection_item(args) -> list[str]:
    seed, max_n = args
    rng = random.Random(seed)
    _, a = _random_flag_type(rng, max_n)
    r = from_flag(random_flag_point(a, rng)) if rng.random() < 0.5 else sample_tilde(a, rng)
    n = r.n
    i = rng.randint(1, n)
    problems = []
    r2 = reflect(r, i)
    swapped = list(a)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    if r2.v != _tilde_dims(swapped):
        problems.append(f"s_{i}: dims {r2.v}, expected {_tilde_dims(swapped)}")
    if not reflection_sequence_exact(r, r2, i):
        problems.append(f"s_{i}: sequence not exact")
    if r2.Delta[0] @ r2.Gamma[0] != r.Delta[0] @ r.Gamma[0]:
        problems.append(f"s_{i}: B0A0 changed")
    if not all(m.is_zero() for m in moment_map(r2)):
        problems.append(f"s_{i}: left the fiber")
    r3 = reflect(r2, i, weyl_reflect((1,) * n, i))
    if not same_orbit_invariants(r, r3):
        problems.append(f"s_{i} twice: orbit invariants differ")
    return problems


def reflection_suite(trials: int = 200, max_n: int = 7, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    items = ((f"trial {k}", (rng.getrandbits(64), max_n)) for k in range(trials))
    return _run("reflection", items, _reflection_item)


# -- Lie algebra ---------------------------------------------------------------


def _lie_item(dp: Partition) -> list[str]:
    problems = []
    n = dp.N
    x = jordan_nilpotent(dp)
    if nilpotent_partition(x) != dp:
        problems.append("Jordan type of the representative")
    if ad_matrix(x).rank() != orbit_dim(dp):
        problems.append("rank of ad x differs from orbit_dim")
    if dp.is_trivial():
        return problems
    t = sl2_completion(dp)
    if not t.relations_hold():
        problems.append("sl2 relations")
    squares = sum(c * c for c in dual(dp))
    if centralizer_basis(t.y, traceless=False).ncols != squares:
        problems.append("dim Ker(ad y) in gl_N")
    if len(slodowy_slice_basis(t)) != squares - 1:
        problems.append("dim Ker(ad y) in sl_N")
    if not transversality_check(t, dp):
        problems.append(f"transversality fails in sl_{n}")
    return problems


def lie_suite(max_n: int = 7) -> SuiteResult:
    items = ((_label(tuple(p)), p) for n in range(1, max_n + 1) for p in all_partitions(n))
    return _run("lie", items, _lie_item)


# -- product chambers and the tilde case ---------------------------------------


def _edge_count(d: Partition) -> int:
    """Closed form for the flop graph's edge count from multiplicities of dual(d)."""
    a = dual(d)
    m = len(a)
    mult: dict[int, int] = {}
    for x in a:
        mult[x] = mult.get(x, 0) + 1
    denom = prod(factorial(k) for k in mult.values())
    # arrangements starting with x then y, x > y; every edge is one such at one of m-1 slots
    starts = sum(mult[x] * mult[y] for x in mult for y in mult if x > y) * factorial(m - 2) // denom
    return (m - 1) * starts


def _product_item(pair) -> list[str]:
    sp = make_slice_pair(*pair)
    problems = []
    factors = decompose_quiver(sp) if not sp.is_point() else []
    sizes = [count_resolutions(f.d) for f in factors]
    edges = [_edge_count(f.d) for f in factors]
    for f, size, e in zip(factors, sizes, edges):
        g = flop_graph(f.d)
        if len(g.nodes) != size or len(g.edges) != e or not g.is_connected():
            problems.append(f"factor {list(f.d)}: {len(g.nodes)} nodes, {len(g.edges)} edges")
        if any(g.degree(node) > len(node) - 1 for node in g.nodes):
            problems.append(f"factor {list(f.d)}: degree bound")
    sc = slice_chambers(sp)
    want_nodes = prod(sizes)
    want_edges = sum(e * want_nodes // s for e, s in zip(edges, sizes))
    if len(sc.graph.nodes) != want_nodes or want_nodes != count_slice_resolutions(sp):
        problems.append(f"{len(sc.graph.nodes)} nodes, expected {want_nodes}")
    if len(sc.graph.edges) != want_edges:
        problems.append(f"{len(sc.graph.edges)} edges, expected {want_edges}")
    if not sc.graph.is_connected():
        problems.append("product graph disconnected")
    return problems


def product_suite(max_n: int = 10) -> SuiteResult:
    items = (
        (_label(tuple(dp), tuple(d)), (dp, d))
        for n in range(1, max_n + 1)
        for dp, d in nested_pairs(n)
        if not d.is_trivial()
    )
    return _run("product chambers", items, _product_item)


def _tilde_item(d: Partition) -> list[str]:
    got = dimension_vectors(make_slice_pair(Partition([1] * d.N), d))
    want = tilde_vectors(d)
    return [] if got == want else [f"{got} != {want}"]


def tilde_suite(max_n: int = 12) -> SuiteResult:
    items = (
        (_label(tuple(d)), d)
        for n in range(2, max_n + 1)
        for d in all_partitions(n)
        if not d.is_trivial()
    )
    return _run("tilde consistency", items, _tilde_item)


# -- registry -----------------------------------------------------------------


SUITES = ("examples", "oracle", "quiver", "reflection", "lie", "products", "tilde")


def run_suite(name: str, seed: int = 0, trials: int | None = None) -> SuiteResult:
    """Run one suite; ``trials`` overrides the number of random cases where there are any."""
    if name == "examples":
        return examples_suite()
    if name == "oracle":
        return oracle_suite(random_pairs=10_000 if trials is None else trials, seed=seed)
    if name == "quiver":
        return quiver_suite(trials=1000 if trials is None else trials, seed=seed)
    if name == "reflection":
        return reflection_suite(trials=200 if trials is None else trials, seed=seed)
    if name == "lie":
        return lie_suite()
    if name == "products":
        return product_suite()
    if name == "tilde":
        return tilde_suite()
    raise ValueError(f"unknown suite {name!r}")
