"""Slodowy slices ``S_{dp,d}``: quiver data and product decomposition.

Two independent routes split a slice into a product of smaller slices:

* :func:`decompose_quiver` cuts the quiver dimension vector ``v`` at its
  zero entries and rebuilds a pair of partitions from each block;
* :func:`decompose_young` cuts the Young diagrams into column blocks of
  equal box count and strips their common top rows.

They must agree on every nested pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from math import prod

from .errors import DegenerateAmbient, InternalInconsistency, NotNested
from .partitions import (
    Partition,
    count_resolutions,
    dominates,
    dual,
    orbit_dim,
    padded,
)


@dataclass(frozen=True)
class SlicePair:
    """A validated pair ``(dp, d)`` with ``O_dp`` in the closure of ``O_d``."""

    dp: Partition
    d: Partition
    a: tuple[int, ...] = field(init=False)
    ap: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        if not dominates(self.dp, self.d):
            raise NotNested(f"NotNested: {list(self.dp)} is not dominated by {list(self.d)}")
        a = tuple(dual(self.d))
        ap = tuple(dual(self.dp))
        # dominance gives dp_1 <= d_1, so dual(dp) is never longer than dual(d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "ap", padded(ap, len(a)))

    @property
    def N(self) -> int:
        return self.d.N

    @property
    def m(self) -> int:
        return len(self.a)

    def is_point(self) -> bool:
        return self.d == self.dp


def make_slice_pair(dp: Partition, d: Partition) -> SlicePair:
    return SlicePair(Partition(dp), Partition(d))


@dataclass(frozen=True)
class DimVectors:
    v: tuple[int, ...]
    w: tuple[int, ...]


@dataclass(frozen=True)
class SliceFactor:
    d: Partition
    dp: Partition
    vertex_range: tuple[int, int]  # first and last original vertex, 1-based inclusive

    @property
    def N(self) -> int:
        return self.d.N

    def as_pair(self) -> SlicePair:
        return SlicePair(self.dp, self.d)

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (tuple(self.d), tuple(self.dp))


def _require_nontrivial(d: Partition) -> None:
    if d.is_trivial():
        raise DegenerateAmbient("DegenerateAmbient: d = [1,...,1] has a point as orbit closure")


def dimension_vectors(sp: SlicePair) -> DimVectors:
    """``v_i = sum_{k<=i} (ap_k - a_k)`` and ``w_i = #{k : dp_k = i}``, i < m."""
    _require_nontrivial(sp.d)
    m = sp.m
    diff = list(accumulate(x - y for x, y in zip(sp.ap, sp.a)))
    v = tuple(diff[: m - 1])
    w = tuple(sum(1 for r in sp.dp if r == i) for i in range(1, m))
    return DimVectors(v, w)


def tilde_vectors(d: Partition) -> DimVectors:
    """Dimension vectors of the framed quiver realizing ``T^*F_a``."""
    _require_nontrivial(d)
    a = dual(d)
    partial = list(accumulate(a))
    v = tuple(d.N - s for s in partial[:-1])
    w = (d.N,) + (0,) * (len(a) - 2)
    return DimVectors(v, w)


def _blocks(v: tuple[int, ...]) -> list[tuple[int, int]]:
    """Maximal runs of nonzero entries, as 0-based half-open ranges."""
    out = []
    start = None
    for i, x in enumerate(v + (0,)):
        if x and start is None:
            start = i
        elif not x and start is not None:
            out.append((start, i))
            start = None
    return out


def factor_from_block(vb: tuple[int, ...], wb: tuple[int, ...]) -> tuple[Partition, Partition]:
    """Rebuild ``(d, dp)`` from a block of dimension vectors with no zero ``v``."""
    n = len(vb)
    n_i = sum(k * x for k, x in enumerate(wb, start=1))
    vt = [vb[j] + sum((k - j) * wb[k] for k in range(j + 1, n)) for j in range(n)]
    cols = [n_i - vt[0]] + [vt[j] - vt[j + 1] for j in range(n - 1)] + [vt[-1]]
    while cols and cols[-1] == 0:
        cols.pop()
    try:
        d = dual(Partition(cols))
        dp = Partition(r for j in range(n, 0, -1) for r in [j] * wb[j - 1])
    except ValueError as exc:
        raise InternalInconsistency(f"block v={vb}, w={wb} gives no partition pair: {exc}") from exc
    return d, dp


def _checked(factors: list[SliceFactor]) -> list[SliceFactor]:
    for f in factors:
        if f.d.N != f.dp.N or not dominates(f.dp, f.d) or f.d == f.dp:
            raise InternalInconsistency(f"reconstructed factor {list(f.d)} / {list(f.dp)} is not a proper nested pair")
    return factors


def decompose_quiver(sp: SlicePair) -> list[SliceFactor]:
    """Split at the zero entries of ``v`` and rebuild each block's pair."""
    dv = dimension_vectors(sp)
    factors = []
    for lo, hi in _blocks(dv.v):
        d, dp = factor_from_block(dv.v[lo:hi], dv.w[lo:hi])
        factors.append(SliceFactor(d, dp, (lo + 1, hi)))
    return _checked(factors)


def _rows_of_columns(cols: list[int]) -> list[int]:
    """Row lengths of a diagram given (weakly decreasing) column heights."""
    cols = [c for c in cols if c]
    if not cols:
        return []
    return [sum(1 for c in cols if c >= k) for k in range(1, cols[0] + 1)]


def decompose_young(sp: SlicePair) -> list[SliceFactor]:
    """Column blocks of equal box count, minus their common top rows."""
    _require_nontrivial(sp.d)
    a, ap = sp.a, sp.ap
    cum_a = list(accumulate(a))
    cum_ap = list(accumulate(ap))
    cuts = [q + 1 for q in range(sp.m) if cum_a[q] == cum_ap[q]]
    factors = []
    p = 1
    for q in cuts:
        block = _rows_of_columns(list(a[p - 1 : q]))
        block_p = _rows_of_columns(list(ap[p - 1 : q]))
        common = 0
        while common < min(len(block), len(block_p)) and block[common] == block_p[common]:
            common += 1
        rest, rest_p = block[common:], block_p[common:]
        if rest or rest_p:
            if not rest or not rest_p:
                raise InternalInconsistency(f"column block {p}..{q} leaves only one diagram nonempty")
            # columns p..q are cut by vertices p..q-1 of the quiver
            factors.append(SliceFactor(Partition(rest), Partition(rest_p), (p, q - 1)))
        p = q + 1
    return _checked(factors)


def decompose(sp: SlicePair, method: str = "quiver") -> list[SliceFactor]:
    if method == "quiver":
        return decompose_quiver(sp)
    if method == "young":
        return decompose_young(sp)
    raise ValueError(f"unknown decomposition method {method!r}")


def count_slice_resolutions(sp: SlicePair) -> int:
    """Product of the resolution counts of the factors (1 for a point)."""
    if sp.is_point():
        return 1
    return prod(count_resolutions(f.d) for f in decompose_quiver(sp))


def slice_dim(sp: SlicePair) -> int:
    return orbit_dim(sp.d) - orbit_dim(sp.dp)


def decomposition_report(sp: SlicePair, factors: list[SliceFactor]) -> dict:
    """JSON-ready summary shared by both decomposition routes."""
    return {
        "factors": [
            {"d": list(f.d), "dp": list(f.dp), "N": f.N, "count": count_resolutions(f.d)}
            for f in factors
        ],
        "total_count": prod(count_resolutions(f.d) for f in factors),
        "slice_dim": slice_dim(sp),
    }
