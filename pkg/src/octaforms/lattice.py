"""Integer quadratic lattices: representation, similitudes, and transfer.

Everything here is exact integer arithmetic; numpy is used only to batch
loops whose entries stay far inside int64.  The central objects are
positive definite Gram matrices, the sets of integral similitude matrices
between two lattices, and two "transfer" checks that push representations
of an arithmetic progression from one lattice to another:

* progression transfer: every residue vector of N in the class a (mod d)
  maps into M under some similitude of ratio d^2 (an emptiness check);
* stable-vector transfer: leftover residues are recycled by an
  infinite-order self-similitude of N, losing only finitely many square
  classes along its fixed line.

A side door connects octagonal forms to lattices: u is a value of the
form with coefficients a iff 3u + sum(a) is represented by the diagonal
lattice <a> with every coordinate coprime to 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, lcm

import numpy as np

from .polygonal import ResourceBudgetError, coeff_vector, octagonal_number

__all__ = [
    "GramMatrix",
    "GenusFixture",
    "TransferInstance",
    "ConditionFailed",
    "NoEigenvector",
    "gram_value",
    "lattice_vectors",
    "represents_lattice",
    "count_representations",
    "lattice_values_up_to",
    "represents_coprime3",
    "coprime3_values_up_to",
    "octagonal_via_lattice",
    "residues",
    "transfer_matrices",
    "check_prec",
    "check_bad_partition",
    "two_threes_params",
    "two_threes_sufficient",
    "jones_strengthen",
]

# Lattice-point budget for a single ellipsoid enumeration.
DEFAULT_POINT_BUDGET = 10**8


class ConditionFailed(Exception):
    """A stable-vector transfer condition is violated by the given data."""

    def __init__(self, condition: str, block: int, witness=None, detail: str = ""):
        self.condition = condition  # "i" or "ii"
        self.block = block
        self.witness = witness
        msg = f"condition ({condition}) fails for block {block}"
        if witness is not None:
            msg += f" at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NoEigenvector(Exception):
    """A self-similitude has no rational fixed line; the instance is malformed."""


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _det(m) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return _det3(m)
    # Laplace expansion; dimensions here never exceed 4.
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


class GramMatrix:
    """Symmetric positive definite integer Gram matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        n = len(rows)
        if n < 1 or any(len(row) != n for row in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i},{j})")
        for k in range(1, n + 1):
            minor = [row[:k] for row in rows[:k]]
            if _det(minor) <= 0:
                raise ValueError("Gram matrix not positive definite")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("GramMatrix is immutable")

    @classmethod
    def diagonal(cls, entries) -> "GramMatrix":
        entries = tuple(int(e) for e in entries)
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def det(self) -> int:
        return _det(self.rows)

    @property
    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0 for i in range(self.dim) for j in range(self.dim) if i != j
        )

    def value(self, v) -> int:
        """The quadratic value t(v) M v."""
        v = tuple(int(e) for e in v)
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} != dimension {self.dim}")
        return sum(self.rows[i][j] * v[i] * v[j] for i in range(self.dim) for j in range(self.dim))

    def bilinear(self, u, v) -> int:
        """The bilinear value t(u) M v."""
        u = tuple(int(e) for e in u)
        v = tuple(int(e) for e in v)
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("vector length mismatch")
        return sum(self.rows[i][j] * u[i] * v[j] for i in range(self.dim) for j in range(self.dim))

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def __eq__(self, other) -> bool:
        return isinstance(other, GramMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        if self.is_diagonal:
            return f"GramMatrix.diagonal({[self.rows[i][i] for i in range(self.dim)]})"
        return f"GramMatrix({list(map(list, self.rows))})"


def gram_value(M: GramMatrix, v) -> int:
    """Quadratic value of the lattice with Gram matrix M at vector v."""
    return M.value(v)


@dataclass(frozen=True)
class GenusFixture:
    """A genus shipped as an explicit list of isometry class representatives."""

    name: str
    classes: tuple[GramMatrix, ...]

    def __post_init__(self):
        if not self.classes:
            raise ValueError("genus fixture needs at least one class")
        dets = {c.det for c in self.classes}
        if len(dets) != 1:
            raise ValueError(f"genus classes disagree on determinant: {sorted(dets)}")

    def represents(self, v: int, budget: int = DEFAULT_POINT_BUDGET) -> bool:
        """Genus membership at desk scale: some listed class represents v."""
        return any(represents_lattice(c, v, budget) for c in self.classes)


@dataclass(frozen=True)
class TransferInstance:
    """One transfer check: lattices M, N, depth d, progression class a.

    transforms (with optional matching partition blocks) configure the
    stable-vector check; plain progression transfer needs neither.
    """

    name: str
    M: GramMatrix
    N: GramMatrix
    d: int
    a: int
    transforms: tuple[tuple[tuple[int, ...], ...], ...] = ()
    blocks: tuple[tuple[tuple[int, ...], ...], ...] | None = None
    excluded: tuple[int, ...] | None = None  # expected square classes, if recorded


def _range_bounds(M: GramMatrix, v: int) -> list[int]:
    # |x_i| <= sqrt(v * (M^-1)_ii); exact via adjugate over determinant.
    det = M.det
    bounds = []
    for i in range(M.dim):
        minor = [
            [M.rows[r][c] for c in range(M.dim) if c != i]
            for r in range(M.dim)
            if r != i
        ]
        adj = _det(minor)
        b = isqrt(v * adj // det)
        while (b + 1) * (b + 1) * det <= v * adj:
            b += 1
        while b > 0 and b * b * det > v * adj:
            b -= 1
        bounds.append(b)
    return bounds


def _disc_fits_int64(m, v: int, b1: int, b2: int) -> bool:
    # magnitude bound for e^2 - a33*f computed below; checked in exact ints
    emax = abs(m[0][2]) * b1 + abs(m[1][2]) * b2
    fmax = abs(m[0][0]) * b1 * b1 + 2 * abs(m[0][1]) * b1 * b2 + abs(m[1][1]) * b2 * b2 + v
    return emax * emax + m[2][2] * fmax < 2**62


def _vector_batches_exact(m, v: int, b1: int, b2: int):
    # plain-int fallback for magnitudes beyond int64
    a33 = m[2][2]
    for x1 in range(-b1, b1 + 1):
        found = []
        for x2 in range(-b2, b2 + 1):
            e = m[0][2] * x1 + m[1][2] * x2
            f = m[0][0] * x1 * x1 + 2 * m[0][1] * x1 * x2 + m[1][1] * x2 * x2 - v
            disc = e * e - a33 * f
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            for num in {-e + r, -e - r}:
                if num % a33 == 0:
                    found.append((x1, x2, num // a33))
        if found:
            yield np.array(found, dtype=object)


def _vector_batches(M: GramMatrix, v: int, budget: int):
    """Yield per-x1 arrays of solutions of Q_M(x) = v (dimension 3 only)."""
    if M.dim != 3:
        raise ValueError("vector enumeration requires a ternary lattice")
    if v < 0:
        return
    if v == 0:
        yield np.zeros((1, 3), dtype=np.int64)
        return
    m = M.rows
    b1, b2, _ = _range_bounds(M, v)
    if (2 * b1 + 1) * (2 * b2 + 1) > budget:
        raise ResourceBudgetError(
            f"ellipsoid scan of {(2 * b1 + 1) * (2 * b2 + 1)} points exceeds budget {budget}"
        )
    if not _disc_fits_int64(m, v, b1, b2):
        yield from _vector_batches_exact(m, v, b1, b2)
        return
    a33 = m[2][2]
    x2 = np.arange(-b2, b2 + 1, dtype=np.int64)
    for x1 in range(-b1, b1 + 1):
        e = m[0][2] * x1 + m[1][2] * x2
        f = m[0][0] * x1 * x1 + 2 * m[0][1] * x1 * x2 + m[1][1] * x2 * x2 - v
        disc = e * e - a33 * f
        ok = disc >= 0
        if not ok.any():
            continue
        r = np.sqrt(disc.clip(min=0)).astype(np.int64)
        # round-off repair keeps the integer square root exact
        r = np.where((r + 1) * (r + 1) <= disc, r + 1, r)
        r = np.where(r * r > disc.clip(min=0), r - 1, r)
        ok &= r * r == disc
        rows = []
        for sign in (1, -1):
            num = -e + sign * r
            good = ok & (num % a33 == 0)
            if sign == -1:
                good &= r != 0
            if good.any():
                xs2 = x2[good]
                xs3 = num[good] // a33
                batch = np.empty((xs2.size, 3), dtype=np.int64)
                batch[:, 0] = x1
                batch[:, 1] = xs2
                batch[:, 2] = xs3
                rows.append(batch)
        if rows:
            yield np.concatenate(rows)


@lru_cache(maxsize=4096)
def _vectors_cached(M: GramMatrix, v: int, budget: int) -> np.ndarray:
    batches = list(_vector_batches(M, v, budget))
    if not batches:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(batches)


def lattice_vectors(M: GramMatrix, v: int, budget: int = DEFAULT_POINT_BUDGET) -> np.ndarray:
    """All integer vectors x with Q_M(x) = v, as an (n, 3) array."""
    return _vectors_cached(M, v, budget).copy()


def represents_lattice(M: GramMatrix, v: int, budget: int = DEFAULT_POINT_BUDGET) -> bool:
    """True iff the ternary lattice M represents v."""
    for batch in _vector_batches(M, v, budget):
        if batch.size:
            return True
    return False


def count_representations(M: GramMatrix, v: int, budget: int = DEFAULT_POINT_BUDGET) -> int:
    """Number of integer vectors x with Q_M(x) = v (signs and order distinct)."""
    return _vectors_cached(M, v, budget).shape[0]


def lattice_values_up_to(M: GramMatrix, bound: int, budget: int = DEFAULT_POINT_BUDGET) -> np.ndarray:
    """Boolean array r where r[v] says whether M represents v, v = 0..bound."""
    if M.dim != 3:
        raise ValueError("bulk enumeration requires a ternary lattice")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    m = M.rows
    b1, b2, b3 = _range_bounds(M, bound)
    if (2 * b1 + 1) * (2 * b2 + 1) * (2 * b3 + 1) > budget:
        raise ResourceBudgetError("ellipsoid box exceeds the point budget")
    if not _disc_fits_int64(m, bound, b1, b2) or m[2][2] * b3 * b3 >= 2**60:
        raise ResourceBudgetError("bulk scan bound too large for exact int64 batches")
    rep = np.zeros(bound + 1, dtype=bool)
    x2 = np.arange(-b2, b2 + 1, dtype=np.int64)[:, None]
    x3 = np.arange(-b3, b3 + 1, dtype=np.int64)[None, :]
    tail = m[1][1] * x2 * x2 + 2 * m[1][2] * x2 * x3 + m[2][2] * x3 * x3
    cross = 2 * (m[0][1] * x2 + m[0][2] * x3)
    for x1 in range(-b1, b1 + 1):
        q = m[0][0] * x1 * x1 + cross * x1 + tail
        vals = q[(q >= 0) & (q <= bound)]
        rep[vals] = True
    return rep


def _coprime_units(cap: int) -> list[int]:
    # positive y with y % 3 != 0 and y*y <= cap
    return [y for y in range(1, isqrt(cap) + 1) if y % 3 != 0] if cap >= 1 else []


def represents_coprime3(diag, v: int) -> bool:
    """True iff v = sum(b_i * y_i^2) with every y_i coprime to 3.

    diag is the list of diagonal coefficients; coordinates equal to zero are
    not allowed (zero is divisible by 3).
    """
    ds = sorted((int(b) for b in diag), reverse=True)
    if any(b < 1 for b in ds):
        raise ValueError("diagonal entries must be positive")
    if v < 0:
        raise ValueError("v must be >= 0")
    if v % gcd(*ds):
        return False
    suffix = [0] * (len(ds) + 1)
    for i in range(len(ds) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ds[i]
    dead: set[tuple[int, int]] = set()

    def go(i: int, rem: int) -> bool:
        if i == len(ds):
            return rem == 0
        if (i, rem) in dead:
            return False
        b = ds[i]
        y = 1
        while b * y * y + suffix[i + 1] <= rem:
            if go(i + 1, rem - b * y * y):
                return True
            y += 2 if y % 3 == 2 else 1  # skip multiples of 3
        dead.add((i, rem))
        return False

    return go(0, v)


def coprime3_values_up_to(diag, bound: int) -> int:
    """Packed bit array of all values representable with coordinates coprime to 3."""
    ds = sorted(int(b) for b in diag)
    if any(b < 1 for b in ds):
        raise ValueError("diagonal entries must be positive")
    if bound < 0:
        raise ValueError("bound must be >= 0")
    full = (1 << (bound + 1)) - 1
    bits = 1
    for b in ds:
        acc = 0
        for y in _coprime_units(bound // b):
            acc |= bits << (b * y * y)
        bits = acc & full
        if bits == 0:
            break
    return bits


def octagonal_via_lattice(a, u: int) -> bool:
    """Decide u -> p8(a) through the lattice side of the correspondence.

    u is a value of the octagonal form with coefficients a exactly when
    3u + sum(a) is a coprime-to-3 value of the diagonal form <a>.
    """
    a = coeff_vector(a)
    if u < 0:
        raise ValueError("u must be >= 0")
    return represents_coprime3(a, 3 * u + sum(a))


def _h_cube(d: int) -> np.ndarray:
    if d > 512:
        raise ResourceBudgetError(f"residue cube of size {d}^3 is out of budget")
    r = np.arange(d, dtype=np.int64)
    grid = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1)
    return grid.reshape(-1, 3)


def _residue_array(N: GramMatrix, d: int, a: int) -> np.ndarray:
    V = _h_cube(d)
    q = np.einsum("ni,ij,nj->n", V, N.as_array(), V)
    return V[q % d == a]


def residues(N: GramMatrix, d: int, a: int) -> set[tuple[int, int, int]]:
    """Residue vectors v in H_d^3 whose value under N is a mod d."""
    if N.dim != 3:
        raise ValueError("residue scan requires a ternary lattice")
    if not 0 <= a < d:
        raise ValueError("need 0 <= a < d")
    return {tuple(int(e) for e in row) for row in _residue_array(N, d, a)}


def _similitude_columns(M: GramMatrix, N: GramMatrix, d: int, budget: int):
    t = d * d
    return [lattice_vectors(M, t * N.rows[j][j], budget) for j in range(3)]


def _iter_similitudes(M: GramMatrix, N: GramMatrix, d: int, budget: int):
    """Yield all T (3x3 int64 arrays) with t(T) M T = d^2 N, column by column."""
    t = d * d
    C1, C2, C3 = _similitude_columns(M, N, d, budget)
    if min(len(C1), len(C2), len(C3)) == 0:
        return
    if len(C1) * len(C2) > budget or any(c.dtype == object for c in (C1, C2, C3)):
        raise ResourceBudgetError("similitude column sets too large to pair up")
    Marr = M.as_array()
    G12 = C1 @ Marr @ C2.T
    pairs = np.argwhere(G12 == t * N.rows[0][1])
    if pairs.size == 0:
        return
    MC3 = Marr @ C3.T
    t13 = t * N.rows[0][2]
    t23 = t * N.rows[1][2]
    for i, j in pairs:
        ks = np.flatnonzero((C1[i] @ MC3 == t13) & (C2[j] @ MC3 == t23))
        for k in ks:
            yield np.column_stack((C1[i], C2[j], C3[k]))


def transfer_matrices(
    M: GramMatrix, N: GramMatrix, d: int, budget: int = DEFAULT_POINT_BUDGET
) -> list[tuple[tuple[int, ...], ...]]:
    """The full set of integer matrices T with t(T) M T = d^2 N.

    Finite because each column lies on an ellipsoid of M.  Returned sorted
    as nested tuples (deterministic).
    """
    if M.dim != 3 or N.dim != 3:
        raise ValueError("similitudes require ternary lattices")
    if d < 1:
        raise ValueError("d must be >= 1")
    out = {tuple(tuple(int(e) for e in row) for row in T) for T in _iter_similitudes(M, N, d, budget)}
    return sorted(out)


def check_prec(
    M: GramMatrix, N: GramMatrix, d: int, a: int, budget: int = DEFAULT_POINT_BUDGET
) -> bool:
    """Progression transfer test: is every residue of N in class a covered?

    True iff each v in H_d^3 with Q_N(v) = a (mod d) satisfies T v = 0
    (mod d) for some similitude T of ratio d^2 from M to N.  True lets
    representations of d u + a by N transfer to M.
    """
    if not 0 <= a < d:
        raise ValueError("need 0 <= a < d")
    R = _residue_array(N, d, a)
    if R.shape[0] == 0:
        return True
    covered = np.zeros(R.shape[0], dtype=bool)
    for T in _iter_similitudes(M, N, d, budget):
        covered |= ((T @ R.T) % d == 0).all(axis=0)
        if covered.all():
            return True
    return False


def _covered_mask(M: GramMatrix, N: GramMatrix, d: int, R: np.ndarray, budget: int) -> np.ndarray:
    covered = np.zeros(R.shape[0], dtype=bool)
    for T in _iter_similitudes(M, N, d, budget):
        covered |= ((T @ R.T) % d == 0).all(axis=0)
    return covered


def _matrix_power_is_identity(T, d: int, max_power: int = 6) -> bool:
    # finite order in GL_3(Q) forces order 1, 2, 3, 4 or 6
    P = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for k in range(1, max_power + 1):
        P = [
            [sum(P[i][l] * T[l][j] for l in range(3)) for j in range(3)]
            for i in range(3)
        ]
        scale = d**k
        if all(P[i][j] == (scale if i == j else 0) for i in range(3) for j in range(3)):
            return True
    return False


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _primitive(w):
    g = gcd(gcd(abs(w[0]), abs(w[1])), abs(w[2]))
    if g == 0:
        return None
    w = tuple(e // g for e in w)
    for e in w:
        if e != 0:
            return w if e > 0 else tuple(-x for x in w)
    return None


def _fixed_line(T, d: int) -> tuple[int, int, int]:
    """Primitive integer w with (1/d) T w = det((1/d)T) w, deterministic sign."""
    detT = _det3(T)
    if abs(detT) != d**3:
        raise NoEigenvector(f"determinant {detT} is not +-d^3")
    lam = detT // (d**3)
    A = [[T[i][j] - (lam * d if i == j else 0) for j in range(3)] for i in range(3)]
    if _det3(A) != 0:
        raise NoEigenvector("eigenvalue has no rational line")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        w = _primitive(_cross(A[i], A[j]))
        if w is not None:
            return w
    # rank <= 1: pick the deterministic primitive vector orthogonal to a row
    for row in A:
        if any(row):
            p, q, s = row
            for cand in ((q, -p, 0), (s, 0, -p), (0, s, -q)):
                w = _primitive(cand)
                if w is not None:
                    return w
    return (1, 0, 0)  # A = 0: every direction is fixed


def check_bad_partition(
    inst: TransferInstance, budget: int = DEFAULT_POINT_BUDGET
) -> list[int]:
    """Verify a stable-vector transfer instance; return the excluded classes.

    The uncovered residues of N in class a (mod d) are split into blocks,
    each recycled by its own self-similitude T of N with ratio d^2.  The
    two conditions checked exhaustively are: (i) (1/d) T has infinite
    order, and (ii) every residue reachable from a block stays in that
    block or becomes covered.  On success, values of N in the progression
    transfer to M except along each T's fixed line, whose square class
    t(w) N w is returned per block.
    """
    M, N, d, a = inst.M, inst.N, inst.d, inst.a
    if not 0 <= a < d:
        raise ValueError("need 0 <= a < d")
    if not inst.transforms:
        raise ValueError("instance carries no transform matrices")
    R = _residue_array(N, d, a)
    covered = _covered_mask(M, N, d, R, budget)
    bad = R[~covered]
    bad_set = {tuple(int(e) for e in v) for v in bad}

    if inst.blocks is not None:
        blocks = [tuple(tuple(int(e) for e in v) for v in block) for block in inst.blocks]
        union: set = set()
        total = 0
        for block in blocks:
            union.update(block)
            total += len(block)
        if union != bad_set or total != len(bad_set):
            raise ValueError(
                f"blocks do not partition the uncovered residue set "
                f"({len(bad_set)} uncovered, blocks cover {len(union)})"
            )
    else:
        if len(inst.transforms) != 1:
            raise ValueError("implicit single block requires exactly one transform")
        blocks = [tuple(sorted(bad_set))]
    if len(blocks) != len(inst.transforms):
        raise ValueError("need exactly one transform per block")

    Narr = N.as_array()
    covered_set = {tuple(int(e) for e in v) for v in R[covered]}
    excluded: list[int] = []
    for bi, (block, T) in enumerate(zip(blocks, inst.transforms), start=1):
        Tm = tuple(tuple(int(e) for e in row) for row in T)
        # self-similitude sanity: t(T) N T = d^2 N
        Ta = np.array(Tm, dtype=np.int64)
        if not np.array_equal(Ta.T @ Narr @ Ta, d * d * Narr):
            raise ValueError(f"transform {bi} is not a self-similitude of ratio d^2")
        if _matrix_power_is_identity(Tm, d):
            raise ConditionFailed("i", bi, detail="(1/d) T has finite order")
        allowed = covered_set | set(block)
        # residues reachable from x = v + d*s under x -> (1/d) T x are
        # (1/d) T v + T s (mod d); these stay inside the class a (mod d)
        shifts = (Ta @ _h_cube(d).T) % d
        for v in block:
            img = Ta @ np.array(v, dtype=np.int64)
            if (img % d).any():
                raise ConditionFailed(
                    "ii", bi, witness=v, detail="(1/d) T v is not integral"
                )
            reach = ((img // d)[:, None] + shifts) % d
            for col in np.unique(reach, axis=1).T:
                if tuple(int(e) for e in col) not in allowed:
                    raise ConditionFailed(
                        "ii",
                        bi,
                        witness=v,
                        detail=f"residue {tuple(int(e) for e in col)} escapes the block",
                    )
        w = _fixed_line(Tm, d)
        excluded.append(N.value(w))
    return excluded


def two_threes_params(a: int, b: int) -> tuple[int, int, int]:
    """Constants (l, alpha, beta) of the coefficient-pair reduction for (3,3,a,b).

    Requires a = b (mod 3) with neither divisible by 3; beta is then an
    integer automatically.
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if a % 3 == 0 or a % 3 != b % 3:
        raise ValueError(f"need a = b (mod 3) and a,b not divisible by 3: ({a}, {b})")
    l = lcm(a, b)
    alpha = (a + b) * l * l // (a * b)
    assert (a + b) * l * l % (a * b) == 0
    num = alpha - a - b - 6
    assert num % 3 == 0, (a, b, alpha)
    return l, alpha, num // 3


def two_threes_sufficient(a: int, b: int, u: int, w: int) -> bool:
    """Sufficient test that u is a value of the quaternary form (3, 3, a, b).

    True iff u - alpha*P8(w) - beta is nonnegative, 2 mod 3, and represented
    by the diagonal ternary lattice <1, 1, 3(a+b)>.
    """
    _, alpha, beta = two_threes_params(a, b)
    val = u - alpha * octagonal_number(w) - beta
    if val < 0 or val % 3 != 2:
        return False
    return represents_lattice(GramMatrix.diagonal((1, 1, 3 * (a + b))), val)


def jones_strengthen(v: int) -> tuple[int, int] | None:
    """Solution (x, y) of x^2 + 2y^2 = v with xy coprime to 3, if one exists.

    Requires v divisible by 3 and the equation solvable at all (checked by
    enumeration); returns None when solutions exist but every one has a
    coordinate divisible by 3, which would contradict the strengthening.
    """
    if v % 3 != 0 or v <= 0:
        raise ValueError(f"v must be a positive multiple of 3: {v}")
    solutions = []
    for x in range(isqrt(v) + 1):
        rest = v - x * x
        if rest % 2 != 0:
            continue
        y2 = rest // 2
        y = isqrt(y2)
        if y * y == y2:
            solutions.append((x, y))
    if not solutions:
        raise ValueError(f"x^2 + 2y^2 = {v} has no integer solution")
    for x, y in solutions:
        if x % 3 != 0 and y % 3 != 0:
            return (x, y)
    return None
