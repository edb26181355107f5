"""Exact integer matrix algebra.

Smith and Hermite normal forms over Z, kernels, cokernels, lattice
membership and quotient groups.  Everything uses Python ints, so there is
no overflow however large the intermediate entries get.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntMatrix",
    "SmithDecomposition",
    "AbelianGroupShape",
    "smith_normal_form",
    "hermite_basis",
    "kernel_basis",
    "cokernel_shape",
    "solve_in_lattice",
    "quotient_shape",
    "same_lattice",
    "determinant",
    "rank",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(int(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        """Build a ``rows x len(columns)`` matrix; ``rows`` is needed for empty input."""
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError(f"column of length {len(c)}, expected {rows}")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.to_rows(), self.cols) if self.rows else IntMatrix(self.cols, 0)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            a, b = self.to_rows(), other.to_rows()
            out = [
                sum(a[i][k] * b[k][j] for k in range(self.cols))
                for i in range(self.rows)
                for j in range(other.cols)
            ]
            return IntMatrix(self.rows, other.cols, tuple(out))
        v = tuple(other)
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(sum(x * y for x, y in zip(self.row(i), v)) for i in range(self.rows))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})" if self.rows else f"IntMatrix(0x{self.cols})"


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.diagonal

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@dataclass(frozen=True)
class AbelianGroupShape:
    """Finitely generated abelian group ``Z^free_rank + Z/t1 + ... + Z/tk``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(t) for t in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for t in torsion:
            if t < 2:
                raise ValueError(f"torsion coefficient {t} < 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {torsion} is not a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        """Group order, or ``None`` when the group is infinite."""
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _as_matrix(A) -> IntMatrix:
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix.from_rows(A)


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form by elementary row and column operations.

    The pivot is always the smallest nonzero ``|entry|`` of the remaining
    block, ties broken by row-major position, so the result is a
    deterministic function of ``A``.  Diagonal entries come out
    non-negative, each dividing the next, zeros last.
    """
    A = _as_matrix(A)
    m, n = A.shape
    a = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad_row = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad_row is None:
                break
            add_row(t, bad_row, 1)
        if t < m and t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    return SmithDecomposition(
        U=IntMatrix.from_rows(U, m),
        D=IntMatrix.from_rows(a, n),
        V=IntMatrix.from_rows(V, n),
    )


def rank(A) -> int:
    return smith_normal_form(A).rank


def determinant(A) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss elimination)."""
    A = _as_matrix(A)
    if not A.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    a = A.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def hermite_basis(vectors: Iterable[Sequence[int]], dim: Optional[int] = None) -> list[tuple[int, ...]]:
    """Canonical basis of the lattice spanned by ``vectors``.

    Returns the nonzero rows of the row-style Hermite normal form: echelon
    shape, positive pivots, entries above each pivot reduced into
    ``[0, pivot)``.  Two generating sets span the same lattice iff their
    Hermite bases are equal.
    """
    rows = [list(v) for v in vectors]
    if dim is None:
        if not rows:
            return []
        dim = len(rows[0])
    for r in rows:
        if len(r) != dim:
            raise ValueError("vectors of unequal length")
    rows = [r for r in rows if any(r)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < dim:
        active = [r for r in rows if r[col]]
        if not active:
            col += 1
            continue
        rest = [r for r in rows if not r[col]]
        # Euclid on the column: repeatedly reduce by the smallest entry.
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        basis.append(piv)
        rows = rest
        col += 1
    # reduce above pivots
    for k, b in enumerate(basis):
        pc = next(j for j, x in enumerate(b) if x)
        for i in range(k):
            q = basis[i][pc] // b[pc]
            if q:
                basis[i] = [x - q * y for x, y in zip(basis[i], b)]
    return [tuple(b) for b in basis]


def kernel_basis(A) -> list[tuple[int, ...]]:
    """Hermite-reduced Z-basis of ``{v : A v = 0}``."""
    A = _as_matrix(A)
    snf = smith_normal_form(A)
    r = snf.rank
    V = snf.V
    raw = [V.column(j) for j in range(r, A.cols)]
    return hermite_basis(raw, A.cols)


def cokernel_shape(A) -> AbelianGroupShape:
    """Shape of ``Z^rows / A Z^cols``."""
    A = _as_matrix(A)
    snf = smith_normal_form(A)
    return AbelianGroupShape(
        free_rank=A.rows - snf.rank,
        torsion=tuple(d for d in snf.diagonal if d > 1),
    )


def solve_in_lattice(G, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Integer ``c`` with ``G @ c == v``, or ``None`` if ``v`` is not in the column lattice."""
    G = _as_matrix(G)
    v = tuple(v)
    if len(v) != G.rows:
        raise ValueError(f"vector of length {len(v)} for matrix with {G.rows} rows")
    snf = smith_normal_form(G)
    b = snf.U @ v
    diag = snf.diagonal
    w = [0] * G.cols
    for i, bi in enumerate(b):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if bi:
                return None
        elif bi % d:
            return None
        else:
            w[i] = bi // d
    return snf.V @ w


def same_lattice(gens_a: Iterable[Sequence[int]], gens_b: Iterable[Sequence[int]], dim: int) -> bool:
    return hermite_basis(gens_a, dim) == hermite_basis(gens_b, dim)


def quotient_shape(ambient_basis, sub_generators) -> AbelianGroupShape:
    """Shape of (lattice spanned by ``ambient_basis``) / (lattice spanned by ``sub_generators``).

    Both arguments hold lattice vectors as columns.  The ambient columns
    must be linearly independent and every sub-generator must lie in
    their span over Z.
    """
    B = _as_matrix(ambient_basis)
    S = _as_matrix(sub_generators)
    if S.rows != B.rows and S.cols:
        raise ValueError("ambient and sub-generators live in different dimensions")
    if rank(B) != B.cols:
        raise ValueError("ambient basis columns are linearly dependent")
    coords = []
    for j in range(S.cols):
        c = solve_in_lattice(B, S.column(j))
        if c is None:
            raise ValueError(f"generator {S.column(j)} lies outside the ambient lattice")
        coords.append(c)
    return cokernel_shape(IntMatrix.from_columns(coords, B.cols))
