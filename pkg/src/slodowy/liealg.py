"""Concrete sl_N computations: Jordan representatives, sl2-triples, slices."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DegenerateAmbient, SamplingExhausted
from .linalg import Matrix, Scalar
from .partitions import Partition, dominates, dual
from .quiverlab import nilpotent_partition
from .slices import SlicePair


@dataclass(frozen=True)
class Sl2Triple:
    x: Matrix
    y: Matrix
    h: Matrix

    @property
    def N(self) -> int:
        return self.x.nrows

    def relations_hold(self) -> bool:
        x, y, h = self.x, self.y, self.h
        return (
            bracket(x, y) == h
            and bracket(h, x) == 2 * x
            and bracket(h, y) == -2 * y
            and x.trace() == y.trace() == h.trace() == 0
        )


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def jordan_nilpotent(d: Partition) -> Matrix:
    """Block-diagonal nilpotent with one superdiagonal Jordan block per row of ``d``."""
    blocks = [Matrix(((1 if c == r + 1 else 0 for c in range(k)) for r in range(k)), k, k) for k in d]
    return Matrix.block_diag(blocks)


def sl2_completion(d: Partition) -> Sl2Triple:
    """Standard triple through ``jordan_nilpotent(d)``, built block by block."""
    if d.is_trivial():
        raise DegenerateAmbient("DegenerateAmbient: the zero matrix has no sl2-triple")
    ys, hs = [], []
    for k in d:
        ys.append(Matrix(((r * (k - r) if c == r - 1 else 0 for c in range(k)) for r in range(k)), k, k))
        hs.append(Matrix(((k - 1 - 2 * r if c == r else 0 for c in range(k)) for r in range(k)), k, k))
    return Sl2Triple(jordan_nilpotent(d), Matrix.block_diag(ys), Matrix.block_diag(hs))


def ad_matrix(x: Matrix) -> Matrix:
    """``ad x`` on row-major vectorized N x N matrices, as an N^2 x N^2 matrix."""
    n = x.nrows
    rows = [[0] * (n * n) for _ in range(n * n)]
    # [x, v]_{ij} = sum_k x_ik v_kj - v_ik x_kj
    for i in range(n):
        for j in range(n):
            row = rows[i * n + j]
            for k in range(n):
                if x[i, k]:
                    row[k * n + j] += x[i, k]
                if x[k, j]:
                    row[i * n + k] -= x[k, j]
    return Matrix(rows, n * n, n * n)


def _trace_row(n: int) -> Matrix:
    return Matrix([[1 if i % (n + 1) == 0 else 0 for i in range(n * n)]], 1, n * n)


def centralizer_basis(y: Matrix, traceless: bool = True) -> Matrix:
    """Columns: vectorized basis of ``Ker(ad y)``, intersected with sl_N if requested."""
    system = ad_matrix(y)
    if traceless:
        system = system.vstack(_trace_row(y.nrows))
    return system.nullspace()


def slodowy_slice_basis(t: Sl2Triple) -> list[Matrix]:
    """Basis of ``Ker(ad y)`` inside sl_N; ``x`` plus their span is the slice."""
    n = t.N
    basis = centralizer_basis(t.y)
    return [Matrix.unvec(col, n, n) for col in basis.columns()]


def image_of_ad(x: Matrix) -> Matrix:
    return ad_matrix(x).column_space()


def transversality_check(t: Sl2Triple, dp: Partition | None = None) -> bool:
    """``Im(ad x)`` and ``Ker(ad y)`` form a direct sum equal to sl_N."""
    n = t.N
    if dp is not None and nilpotent_partition(t.x) != dp:
        return False
    image = image_of_ad(t.x)
    kernel = centralizer_basis(t.y)
    if image.ncols + kernel.ncols != n * n - 1:
        return False
    return image.hstack(kernel).rank() == n * n - 1


def expected_slice_basis_dim(dp: Partition) -> int:
    return sum(a * a for a in dual(dp)) - 1


def _upper_orders(dp: Partition, rng: random.Random) -> list[int]:
    """Random linear order on the basis in which ``jordan_nilpotent(dp)`` is strictly upper."""
    chains = []
    start = 0
    for k in dp:
        chains.append(list(range(start, start + k)))
        start += k
    order = []
    heads = [0] * len(chains)
    while len(order) < start:
        live = [c for c in range(len(chains)) if heads[c] < len(chains[c])]
        c = rng.choice(live)
        order.append(chains[c][heads[c]])
        heads[c] += 1
    rank = [0] * start
    for pos, idx in enumerate(order):
        rank[idx] = pos
    return rank


def _nilpotent_slice_directions(t: Sl2Triple, rank: list[int]) -> Matrix:
    """``Ker(ad y)`` restricted to matrices strictly upper triangular in the order ``rank``."""
    n = t.N
    slots = [(i, j) for i in range(n) for j in range(n) if rank[i] < rank[j]]
    ad_y = ad_matrix(t.y)
    system = ad_y.submatrix(range(n * n), [i * n + j for i, j in slots])
    kernel = system.nullspace()
    cols = []
    for col in kernel.columns():
        full = [Scalar(0)] * (n * n)
        for (i, j), val in zip(slots, col):
            full[i * n + j] = val
        cols.append(full)
    return Matrix.from_columns(cols, n * n)


def _climb(t: Sl2Triple, d: Partition, rng: random.Random) -> Matrix | None:
    """Add random slice directions to ``x`` while the Jordan type stays below ``d``."""
    n = t.N
    directions = _nilpotent_slice_directions(t, _upper_orders(nilpotent_partition(t.x), rng))
    picks = list(range(directions.ncols))
    rng.shuffle(picks)
    z = t.x
    for k in picks:
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        step = z + c * Matrix.unvec(directions.column(k), n, n)
        p = nilpotent_partition(step)
        if dominates(p, d):
            z = step
            if p == d:
                return z
    return None


def slice_sample_dim(sp: SlicePair, trials: int = 200, seed: int = 0) -> int:
    """Randomized estimate of ``dim(S_x cap O_d)`` from tangent spaces.

    Each trial walks from ``x`` through ``x + Ker(ad y)``, staying strictly
    upper triangular in a random order compatible with ``x`` (so every point
    is nilpotent) and below ``d`` in dominance, until it reaches type ``d``.
    Returns the largest dimension of ``Im(ad z) cap Ker(ad y)`` seen;
    ``slice_dim`` is the exact value.
    """
    if sp.is_point():
        return 0
    rng = random.Random(seed)
    dp, d = sp.dp, sp.d
    n = sp.N
    if dp.is_trivial():
        # x = 0: the slice is all of sl_N
        x = y = Matrix.zeros(n, n)
        kernel = centralizer_basis(x)
    else:
        t = sl2_completion(dp)
        x, y = t.x, t.y
        kernel = centralizer_basis(y)
    triple = Sl2Triple(x, y, x)
    best = None
    for _ in range(trials):
        z = _climb(triple, d, rng)
        if z is None:
            continue
        tangent = image_of_ad(z)
        dim = tangent.ncols + kernel.ncols - tangent.hstack(kernel).rank()
        best = dim if best is None else max(best, dim)
    if best is None:
        raise SamplingExhausted(f"SamplingExhausted: no point of type {list(d)} in {trials} trials")
    return best
