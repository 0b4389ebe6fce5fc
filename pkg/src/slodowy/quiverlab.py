"""Exact-rational laboratory for framed type-A quiver representations.

A representation of the doubled framed quiver with ``n`` vertices carries
maps ``A_i: V_i -> V_{i+1}``, ``B_i: V_{i+1} -> V_i`` (``i = 1..n-1``) and
``Gamma_j: W_j -> V_j``, ``Delta_j: V_j -> W_j`` (``j = 1..n``).  Lists are
stored 0-based, so ``rep.A[0]`` is ``A_1``.

The *tilde* shape ``w = (N, 0, ..., 0)`` realizes the cotangent bundle of a
partial flag variety.  In that shape it is convenient to extend the chains by
``A_0 := Gamma_1`` and ``B_0 := Delta_1``, with ``V_0 = W_1 = Q^N``; see
:func:`a_chain` and :func:`b_chain`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    ExactnessFailure,
    IncidenceViolation,
    InternalInconsistency,
    NotNilpotent,
    NotOnFiber,
    NotStable,
    ShapeError,
)
from .linalg import (
    Matrix,
    Scalar,
    matrix_from_json,
    matrix_to_json,
    random_full_rank,
    random_invertible,
    random_of_rank,
    span_contains,
    span_equal,
)
from .partitions import Partition, dual


@dataclass(frozen=True)
class QuiverRep:
    v: tuple[int, ...]
    w: tuple[int, ...]
    A: tuple[Matrix, ...]
    B: tuple[Matrix, ...]
    Gamma: tuple[Matrix, ...]
    Delta: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        v, w = self.v, self.w
        n = len(v)
        if len(w) != n or n == 0:
            raise ShapeError(f"dimension vectors must have equal positive length, got v={v}, w={w}")
        if any(x < 0 for x in v + w):
            raise ShapeError("dimension vectors must be nonnegative")
        if len(self.A) != n - 1 or len(self.B) != n - 1 or len(self.Gamma) != n or len(self.Delta) != n:
            raise ShapeError("wrong number of maps for the dimension vectors")
        for i in range(n - 1):
            _expect(self.A[i], (v[i + 1], v[i]), f"A_{i + 1}")
            _expect(self.B[i], (v[i], v[i + 1]), f"B_{i + 1}")
        for j in range(n):
            _expect(self.Gamma[j], (v[j], w[j]), f"Gamma_{j + 1}")
            _expect(self.Delta[j], (w[j], v[j]), f"Delta_{j + 1}")

    @property
    def n(self) -> int:
        return len(self.v)

    @classmethod
    def zero(cls, v: Sequence[int], w: Sequence[int]) -> QuiverRep:
        v, w = tuple(v), tuple(w)
        n = len(v)
        return cls(
            v,
            w,
            tuple(Matrix.zeros(v[i + 1], v[i]) for i in range(n - 1)),
            tuple(Matrix.zeros(v[i], v[i + 1]) for i in range(n - 1)),
            tuple(Matrix.zeros(v[j], w[j]) for j in range(n)),
            tuple(Matrix.zeros(w[j], v[j]) for j in range(n)),
        )

    @classmethod
    def tilde(cls, a_maps: Sequence[Matrix], b_maps: Sequence[Matrix]) -> QuiverRep:
        """Build a tilde-shaped rep from the chains ``A_0..A_{n-1}``, ``B_0..B_{n-1}``."""
        if not a_maps or len(a_maps) != len(b_maps):
            raise ShapeError("tilde chains must be nonempty and of equal length")
        big_n = a_maps[0].ncols
        v = tuple(m.nrows for m in a_maps)
        n = len(v)
        w = (big_n,) + (0,) * (n - 1)
        gamma = (a_maps[0],) + tuple(Matrix.zeros(v[j], 0) for j in range(1, n))
        delta = (b_maps[0],) + tuple(Matrix.zeros(0, v[j]) for j in range(1, n))
        return cls(v, w, tuple(a_maps[1:]), tuple(b_maps[1:]), gamma, delta)

    def is_tilde(self) -> bool:
        return self.w[0] > 0 and all(x == 0 for x in self.w[1:])

    def act(self, g: Sequence[Matrix]) -> QuiverRep:
        """Action of ``(g_1, ..., g_n)`` in ``prod GL(V_i)``."""
        if len(g) != self.n:
            raise DimensionMismatch("need one group element per vertex")
        ginv = [x.inverse() for x in g]
        return QuiverRep(
            self.v,
            self.w,
            tuple(g[i + 1] @ self.A[i] @ ginv[i] for i in range(self.n - 1)),
            tuple(g[i] @ self.B[i] @ ginv[i + 1] for i in range(self.n - 1)),
            tuple(g[j] @ self.Gamma[j] for j in range(self.n)),
            tuple(self.Delta[j] @ ginv[j] for j in range(self.n)),
        )

    def to_json(self) -> dict:
        return {
            "v": list(self.v),
            "w": list(self.w),
            "A": [matrix_to_json(m) for m in self.A],
            "B": [matrix_to_json(m) for m in self.B],
            "Gamma": [matrix_to_json(m) for m in self.Gamma],
            "Delta": [matrix_to_json(m) for m in self.Delta],
        }

    @classmethod
    def from_json(cls, data: dict) -> QuiverRep:
        try:
            v, w = tuple(data["v"]), tuple(data["w"])
            n = len(v)
            return cls(
                v,
                w,
                tuple(matrix_from_json(data["A"][i], v[i + 1], v[i]) for i in range(n - 1)),
                tuple(matrix_from_json(data["B"][i], v[i], v[i + 1]) for i in range(n - 1)),
                tuple(matrix_from_json(data["Gamma"][j], v[j], w[j]) for j in range(n)),
                tuple(matrix_from_json(data["Delta"][j], w[j], v[j]) for j in range(n)),
            )
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            if isinstance(exc, ShapeError):
                raise
            raise ShapeError(f"malformed quiver representation: {exc}") from exc


def _expect(m: Matrix, shape: tuple[int, int], name: str) -> None:
    if m.shape != shape:
        raise ShapeError(f"{name} has shape {m.shape}, expected {shape}")


def _require_tilde(r: QuiverRep) -> None:
    if not r.is_tilde():
        raise ShapeError(f"ShapeError: expected framing (N, 0, ..., 0), got w={r.w}")


def a_chain(r: QuiverRep) -> list[Matrix]:
    """``[A_0, A_1, ..., A_{n-1}]`` for a tilde-shaped rep."""
    _require_tilde(r)
    return [r.Gamma[0], *r.A]


def b_chain(r: QuiverRep) -> list[Matrix]:
    _require_tilde(r)
    return [r.Delta[0], *r.B]


# -- moment map and stability -------------------------------------------------


def moment_map(r: QuiverRep) -> list[Matrix]:
    """``Gamma_j Delta_j + A_{j-1} B_{j-1} - B_j A_j`` at every vertex."""
    out = []
    for j in range(r.n):
        mu = r.Gamma[j] @ r.Delta[j]
        if j > 0:
            mu = mu + r.A[j - 1] @ r.B[j - 1]
        if j < r.n - 1:
            mu = mu - r.B[j] @ r.A[j]
        out.append(mu)
    return out


def on_fiber(r: QuiverRep) -> bool:
    return all(m.is_zero() for m in moment_map(r))


def _require_fiber(r: QuiverRep) -> None:
    if not on_fiber(r):
        raise NotOnFiber("NotOnFiber: the moment map does not vanish")


def stable_envelope(r: QuiverRep) -> list[Matrix]:
    """Smallest subspaces ``S_j`` containing ``Im Gamma_j`` and closed under all A, B."""
    spans = [m.column_space() for m in r.Gamma]
    changed = True
    while changed:
        changed = False
        for i in range(r.n - 1):
            for src, dst, f in ((i, i + 1, r.A[i]), (i + 1, i, r.B[i])):
                image = f @ spans[src]
                if image.ncols and not span_contains(spans[dst], image):
                    spans[dst] = spans[dst].hstack(image).column_space()
                    changed = True
    return spans


def is_one_stable(r: QuiverRep) -> bool:
    """Stability at the character ``(1, ..., 1)``: the envelope of ``Im Gamma`` is everything."""
    _require_fiber(r)
    return all(s.ncols == dim for s, dim in zip(stable_envelope(r), r.v))


def all_A_surjective(r: QuiverRep) -> bool:
    return all(m.rank() == m.nrows for m in a_chain(r))


# -- flags and the map to the cotangent bundle --------------------------------


@dataclass(frozen=True)
class FlagPoint:
    """A nilpotent ``x`` with a flag ``0 = U_0 < U_1 < ... < U_m = Q^N``."""

    x: Matrix
    U: tuple[Matrix, ...]  # basis matrices, U[0] has no columns, U[-1] spans Q^N

    @property
    def N(self) -> int:
        return self.x.nrows

    def dims(self) -> list[int]:
        return [u.rank() for u in self.U]

    def flag_type(self) -> tuple[int, ...]:
        dims = self.dims()
        return tuple(dims[i + 1] - dims[i] for i in range(len(dims) - 1))

    def incidence_holds(self) -> bool:
        return all(span_contains(self.U[i], self.x @ self.U[i + 1]) for i in range(len(self.U) - 1))

    def same_as(self, other: FlagPoint) -> bool:
        """Equal ``x`` and equal subspaces (bases may differ)."""
        return (
            self.x == other.x
            and len(self.U) == len(other.U)
            and all(span_equal(a, b) for a, b in zip(self.U, other.U))
        )

    def to_json(self) -> dict:
        return {"x": matrix_to_json(self.x), "flag": [matrix_to_json(u) for u in self.U]}


def _check_flag(x: Matrix, U: Sequence[Matrix]) -> None:
    n = x.nrows
    if x.ncols != n or any(u.nrows != n for u in U) or len(U) < 2:
        raise ShapeError("flag bases must have N rows and x must be N x N")
    dims = [u.rank() for u in U]
    if dims[0] != 0 or dims[-1] != n:
        raise ShapeError("flag must start at 0 and end at the whole space")
    for i in range(len(U) - 1):
        if dims[i] >= dims[i + 1] or not span_contains(U[i + 1], U[i]):
            raise ShapeError("flag subspaces must be strictly increasing and nested")
    for i in range(len(U) - 1):
        if not span_contains(U[i], x @ U[i + 1]):
            raise IncidenceViolation(f"IncidenceViolation: x(U_{i + 1}) is not inside U_{i}")


def theta(r: QuiverRep) -> FlagPoint:
    """``(B_0 A_0, 0 < Ker A_0 < Ker A_1 A_0 < ... < Q^N)``."""
    _require_fiber(r)
    a = a_chain(r)
    if not all(m.rank() == m.nrows for m in a):
        raise NotStable("NotStable: some A_i is not surjective")
    big_n = r.w[0]
    x = r.Delta[0] @ r.Gamma[0]
    flag = [Matrix.zeros(big_n, 0)]
    comp = Matrix.identity(big_n)
    for ai in a:
        comp = ai @ comp
        flag.append(comp.nullspace())
    flag.append(Matrix.identity(big_n))
    point = FlagPoint(x, tuple(flag))
    dims = point.dims()
    if any(dims[i + 1] != big_n - r.v[i] for i in range(r.n)):
        raise InternalInconsistency("kernel flag has the wrong dimensions")
    if not point.incidence_holds():
        raise InternalInconsistency("kernel flag violates the incidence condition")
    return point


def _complement(u: Matrix) -> Matrix:
    """Standard basis vectors at the non-pivot coordinates of ``u``'s column span."""
    n = u.nrows
    _, pivots = u.T.rref()
    rest = [j for j in range(n) if j not in set(pivots)]
    return Matrix.from_columns([[1 if i == j else 0 for i in range(n)] for j in rest], n)


def _quotient(u: Matrix) -> tuple[Matrix, Matrix]:
    """``(P, R)`` with ``Ker P = span(u)``, ``P R = I``; ``R`` spans a coordinate complement."""
    basis = u.column_space()
    comp = _complement(basis)
    inv = basis.hstack(comp).inverse()
    k = basis.ncols
    return inv.submatrix(range(k, u.nrows), range(u.nrows)), comp


def from_flag(x: Matrix | FlagPoint, flag: Sequence[Matrix] | None = None) -> QuiverRep:
    """Tilde-shaped rep with ``V_i = Q^N / U_i``, projections ``A`` and ``B`` induced by ``x``."""
    if isinstance(x, FlagPoint):
        x, flag = x.x, x.U
    if flag is None:
        raise ShapeError("a flag is required")
    _check_flag(x, flag)
    big_n = x.nrows
    inner = flag[1:-1]
    if not inner:
        raise ShapeError("flag needs at least one proper subspace (m >= 2)")
    proj = [Matrix.identity(big_n)]
    lift = [Matrix.identity(big_n)]
    for u in inner:
        p, rr = _quotient(u)
        proj.append(p)
        lift.append(rr)
    a_maps = [proj[i + 1] @ lift[i] for i in range(len(inner))]
    b_maps = [proj[i] @ x @ lift[i + 1] for i in range(len(inner))]
    return QuiverRep.tilde(a_maps, b_maps)


def nilpotent_partition(x: Matrix) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    n = x.nrows
    if x.ncols != n or n == 0:
        raise ShapeError("nilpotent_partition needs a nonempty square matrix")
    ranks = [n]
    power = Matrix.identity(n)
    for _ in range(n):
        power = power @ x
        ranks.append(power.rank())
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise NotNilpotent("NotNilpotent: x^N is not zero")
    cols = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return dual(Partition(c for c in cols if c))


# -- reflection functors ------------------------------------------------------


def reflected_dims(v: Sequence[int], big_n: int, i: int) -> tuple[int, ...]:
    """``s_i`` on a tilde dimension vector, with ``V_0 = Q^N`` and ``V_m = 0``."""
    ext = [big_n, *v, 0]
    out = list(v)
    out[i - 1] = ext[i - 1] + ext[i + 1] - ext[i]
    return tuple(out)


def reflect(r: QuiverRep, i: int, chi: Sequence | None = None) -> QuiverRep:
    """Representative of the reflection isomorphism at vertex ``i`` (1-based).

    With ``alpha = [A_{i-1} | -B_i]`` and ``beta = [B_{i-1}; A_i]`` the new
    rep satisfies ``beta' alpha' = beta alpha`` and has exact sequence
    ``0 -> V'_i -> V_{i-1} + V_{i+1} -> V_i -> 0``.  For ``chi_i > 0``
    ``alpha`` must be onto and ``V'_i = Ker alpha``; for ``chi_i < 0``
    ``beta`` must be injective and ``V'_i = Coker beta``.  ``chi`` defaults
    to ``(1, ..., 1)``.
    """
    _require_tilde(r)
    _require_fiber(r)
    n = r.n
    if not 1 <= i <= n:
        raise DimensionMismatch(f"DimensionMismatch: vertex {i} outside 1..{n}")
    chi = (1,) * n if chi is None else tuple(Fraction(c) for c in chi)
    if len(chi) != n:
        raise DimensionMismatch(f"DimensionMismatch: character has {len(chi)} coordinates, expected {n}")
    if chi[i - 1] == 0:
        raise ExactnessFailure(f"ExactnessFailure: character lies on the wall chi_{i} = 0")

    a, b = a_chain(r), b_chain(r)
    big_n = r.w[0]
    vi = r.v[i - 1]
    p = a[i - 1].ncols  # dim V_{i-1}
    q = r.v[i] if i < n else 0  # dim V_{i+1}
    a_in = a[i - 1]
    b_in = b[i] if i < n else Matrix.zeros(vi, 0)
    a_out = a[i] if i < n else Matrix.zeros(0, vi)
    b_out = b[i - 1]
    alpha = a_in.hstack(-b_in)
    beta = b_out.vstack(a_out)
    ends = beta @ alpha
    k = p + q - vi
    if k < 0:
        raise ExactnessFailure(f"ExactnessFailure: negative reflected dimension {k}")

    if chi[i - 1] > 0:
        if alpha.rank() != vi:
            raise ExactnessFailure("ExactnessFailure: A_{i-1} - B_i is not surjective (non-generic point)")
        new_beta = alpha.nullspace()
        new_alpha = new_beta.solve(ends)
        if new_alpha is None:
            raise ExactnessFailure("ExactnessFailure: reflected maps are inconsistent (non-generic point)")
    else:
        if beta.rank() != vi:
            raise ExactnessFailure("ExactnessFailure: B_{i-1} + A_i is not injective (non-generic point)")
        new_alpha = beta.T.nullspace().T
        sol = new_alpha.T.solve(ends.T)
        if sol is None:
            raise ExactnessFailure("ExactnessFailure: reflected maps are inconsistent (non-generic point)")
        new_beta = sol.T

    if new_beta.shape != (p + q, k) or new_alpha.shape != (k, p + q):
        raise InternalInconsistency("reflected maps have unexpected shapes")
    a2, b2 = list(a), list(b)
    a2[i - 1] = new_alpha.submatrix(range(k), range(p))
    b2[i - 1] = new_beta.submatrix(range(p), range(k))
    if i < n:
        b2[i] = -new_alpha.submatrix(range(k), range(p, p + q))
        a2[i] = new_beta.submatrix(range(p, p + q), range(k))
    out = QuiverRep.tilde(a2, b2)

    if out.v != reflected_dims(r.v, big_n, i):
        raise InternalInconsistency("reflected dimension vector is not s_i(v)")
    if not reflection_sequence_exact(r, out, i):
        raise InternalInconsistency("reflection sequence is not exact")
    if not on_fiber(out):
        raise InternalInconsistency("reflected rep leaves the zero fiber")
    if out.Delta[0] @ out.Gamma[0] != r.Delta[0] @ r.Gamma[0]:
        raise InternalInconsistency("reflection changed B_0 A_0")
    return out


def reflection_maps(r: QuiverRep, i: int) -> tuple[Matrix, Matrix]:
    """``(alpha, beta)`` at vertex ``i`` of a tilde rep, sign convention of :func:`reflect`."""
    a, b = a_chain(r), b_chain(r)
    n, vi = r.n, r.v[i - 1]
    b_in = b[i] if i < n else Matrix.zeros(vi, 0)
    a_out = a[i] if i < n else Matrix.zeros(0, vi)
    return a[i - 1].hstack(-b_in), b[i - 1].vstack(a_out)


def reflection_sequence_exact(r: QuiverRep, r2: QuiverRep, i: int) -> bool:
    """Exactness of ``0 -> V'_i -> V_{i-1} + V_{i+1} -> V_i -> 0`` in either direction."""
    alpha, beta = reflection_maps(r, i)
    alpha2, beta2 = reflection_maps(r2, i)
    if (beta2 @ alpha2) != (beta @ alpha):
        return False

    def exact(inj: Matrix, surj: Matrix) -> bool:
        return (
            inj.rank() == inj.ncols
            and surj.rank() == surj.nrows
            and (surj @ inj).is_zero()
            and inj.ncols + surj.nrows == surj.ncols
        )

    return exact(beta2, alpha) or exact(beta, alpha2)


def orbit_invariants(r: QuiverRep) -> tuple[Matrix, list[Matrix]]:
    """``B_0 A_0`` and the kernels of the composites ``A_{k} ... A_0``."""
    a = a_chain(r)
    big_n = r.w[0]
    comp = Matrix.identity(big_n)
    kernels = []
    for ai in a:
        comp = ai @ comp
        kernels.append(comp.nullspace())
    return r.Delta[0] @ r.Gamma[0], kernels


def same_orbit_invariants(r1: QuiverRep, r2: QuiverRep) -> bool:
    if r1.v != r2.v or r1.w != r2.w:
        return False
    x1, k1 = orbit_invariants(r1)
    x2, k2 = orbit_invariants(r2)
    return x1 == x2 and all(span_equal(a, b) for a, b in zip(k1, k2))


# -- sampling ---------------------------------------------------------------


def random_flag_point(flag_type: Sequence[int], rng: random.Random) -> FlagPoint:
    """Random incidence pair of the given flag type.

    ``x`` is a conjugate of a random block strictly upper triangular matrix,
    which is generic in the nilradical of the parabolic of the flag type.
    """
    big_n = sum(flag_type)
    block = [k for k, size in enumerate(flag_type) for _ in range(size)]
    x0 = Matrix(
        (rng.randint(-9, 9) if block[r] < block[c] else 0 for c in range(big_n)) for r in range(big_n)
    )
    g = random_invertible(big_n, rng)
    x = g @ x0 @ g.inverse()
    ends = [0]
    for size in flag_type:
        ends.append(ends[-1] + size)
    flag = tuple(g.submatrix(range(big_n), range(e)) for e in ends)
    return FlagPoint(x, flag)


def _unknown_slots(v: Sequence[int], w: Sequence[int]) -> list[tuple[str, int, int, int]]:
    slots = []
    n = len(v)
    for i in range(n - 1):
        slots += [("B", i, r, c) for r in range(v[i]) for c in range(v[i + 1])]
    for j in range(n):
        slots += [("Delta", j, r, c) for r in range(w[j]) for c in range(v[j])]
    return slots


def sample_on_fiber(
    v: Sequence[int],
    w: Sequence[int],
    rng: random.Random,
    a_ranks: Sequence[int] | None = None,
    a_maps: Sequence[Matrix] | None = None,
    gamma_maps: Sequence[Matrix] | None = None,
) -> QuiverRep:
    """Random point of the zero fiber of the moment map.

    ``A`` and ``Gamma`` are drawn at random (``A_i`` of full rank, or of the
    rank given in ``a_ranks``) unless supplied; the moment map is then linear
    in ``(B, Delta)`` and a random integer combination of its kernel is used.
    """
    v, w = tuple(v), tuple(w)
    n = len(v)
    if a_maps is None:
        if a_ranks is None:
            a_maps = [random_full_rank(v[i + 1], v[i], rng) for i in range(n - 1)]
        else:
            a_maps = [random_of_rank(v[i + 1], v[i], a_ranks[i], rng) for i in range(n - 1)]
    if gamma_maps is None:
        gamma_maps = [Matrix.random_int(v[j], w[j], rng) for j in range(n)]
    base = QuiverRep.zero(v, w)
    base = QuiverRep(v, w, tuple(a_maps), base.B, tuple(gamma_maps), base.Delta)
    slots = _unknown_slots(v, w)
    kernel = _fiber_system(base, slots).nullspace()
    coeffs = [rng.randint(-9, 9) for _ in range(kernel.ncols)]
    values = [sum((c * kernel[s, k] for k, c in enumerate(coeffs) if c), Scalar(0)) for s in range(len(slots))]
    return _fill(base, slots, values)


def _fiber_system(base: QuiverRep, slots) -> Matrix:
    """Matrix of the moment map as a linear function of the ``(B, Delta)`` entries."""
    v = base.v
    offsets = [0]
    for x in v:
        offsets.append(offsets[-1] + x * x)
    rows = [[0] * len(slots) for _ in range(offsets[-1])]

    def put(vertex: int, s: int, t: int, col: int, val) -> None:
        if val:
            rows[offsets[vertex] + s * v[vertex] + t][col] += val

    for col, (kind, idx, r, c) in enumerate(slots):
        if kind == "Delta":
            g = base.Gamma[idx]
            for s in range(v[idx]):
                put(idx, s, c, col, g[s, r])  # Gamma_j Delta_j
        else:
            a = base.A[idx]
            for s in range(v[idx + 1]):
                put(idx + 1, s, c, col, a[s, r])  # + A_i B_i at vertex i+1
            for t in range(v[idx]):
                put(idx, r, t, col, -a[c, t])  # - B_i A_i at vertex i
    return Matrix(rows, offsets[-1], len(slots))


def _fill(base: QuiverRep, slots, values) -> QuiverRep:
    b = [m.to_lists() for m in base.B]
    delta = [m.to_lists() for m in base.Delta]
    for (kind, idx, r, c), val in zip(slots, values):
        (b if kind == "B" else delta)[idx][r][c] = val
    return QuiverRep(
        base.v,
        base.w,
        base.A,
        tuple(Matrix(m, *base.B[k].shape) for k, m in enumerate(b)),
        base.Gamma,
        tuple(Matrix(m, *base.Delta[k].shape) for k, m in enumerate(delta)),
    )


def sample_tilde(flag_type: Sequence[int], rng: random.Random, a_ranks: Sequence[int] | None = None) -> QuiverRep:
    """Point of the zero fiber for the tilde quiver of the given flag type."""
    big_n = sum(flag_type)
    v = []
    rest = big_n
    for size in flag_type[:-1]:
        rest -= size
        v.append(rest)
    w = [big_n] + [0] * (len(v) - 1)
    a0_rank = None if a_ranks is None else a_ranks[0]
    a0 = random_full_rank(v[0], big_n, rng) if a0_rank is None else random_of_rank(v[0], big_n, a0_rank, rng)
    gammas = [a0] + [Matrix.zeros(v[j], 0) for j in range(1, len(v))]
    inner = None if a_ranks is None else list(a_ranks[1:])
    return sample_on_fiber(v, w, rng, a_ranks=inner, gamma_maps=gammas)


def random_group_element(v: Sequence[int], rng: random.Random) -> list[Matrix]:
    return [random_invertible(x, rng) for x in v]
