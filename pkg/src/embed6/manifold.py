"""Closed orientable 3-manifolds given by integral surgery on framed links.

A manifold is stored as its linking matrix ``A`` (framings on the
diagonal, pairwise linking numbers off it).  Then ``H_1 = coker A`` in the
meridian basis and ``H_2 = ker A``.  The pairing between them is the
meridian dot product, which is well defined on ``H_1`` because ``A`` is
symmetric and ``A v = 0``.

H_1 and H_2 classes are plain integer tuples of length ``size``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterator, Sequence

from .intlinalg import (
    AbelianGroupShape,
    IntMatrix,
    SmithDecomposition,
    cokernel_shape,
    kernel_basis,
    smith_normal_form,
    solve_in_lattice,
)

__all__ = [
    "SurgeryPresentation",
    "HomologyData",
    "homology",
    "pairing",
    "canonical_h1",
    "h1_from_canonical",
    "h1_equal",
    "divisibility",
    "h1_elements",
    "load_presentation",
]


@dataclass(frozen=True, eq=False)
class HomologyData:
    h1: AbelianGroupShape
    h1_snf: SmithDecomposition
    h2_basis: tuple[tuple[int, ...], ...]

    @cached_property
    def h1_snf_inverse_U(self) -> IntMatrix:
        return _inverse_unimodular(self.h1_snf.U)

    @property
    def h2(self) -> AbelianGroupShape:
        return AbelianGroupShape(free_rank=len(self.h2_basis))


@dataclass(frozen=True, eq=False)
class SurgeryPresentation:
    """A 3-manifold as a symmetric integer linking matrix."""

    name: str
    matrix: IntMatrix = field(default_factory=lambda: IntMatrix(0, 0))

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, IntMatrix):
            m = IntMatrix.from_rows(m)
            object.__setattr__(self, "matrix", m)
        if not m.is_square():
            raise ValueError(f"{self.name}: linking matrix is {m.rows}x{m.cols}, not square")
        if not m.is_symmetric():
            bad = next((i, j) for i in range(m.rows) for j in range(i) if m[i, j] != m[j, i])
            raise ValueError(f"{self.name}: linking matrix is not symmetric at entry {bad}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name: str = "M") -> "SurgeryPresentation":
        return cls(name, IntMatrix.from_rows(rows, len(rows)))

    @property
    def size(self) -> int:
        return self.matrix.rows

    @cached_property
    def homology(self) -> HomologyData:
        A = self.matrix
        data = HomologyData(
            h1=cokernel_shape(A),
            h1_snf=smith_normal_form(A),
            h2_basis=tuple(kernel_basis(A)),
        )
        if data.h1.free_rank != len(data.h2_basis):
            raise AssertionError("rank H_1 != rank H_2 for a symmetric presentation")
        return data

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.size

    def check_vector(self, x: Sequence[int], what: str = "class") -> tuple[int, ...]:
        x = tuple(int(c) for c in x)
        if len(x) != self.size:
            raise ValueError(
                f"{self.name}: {what} has {len(x)} coordinates, presentation has {self.size} components"
            )
        return x

    def to_dict(self) -> dict:
        return {"name": self.name, "linking_matrix": self.matrix.to_rows()}

    def __repr__(self):
        return f"SurgeryPresentation({self.name!r}, {self.matrix.to_rows()!r})"


def homology(P: SurgeryPresentation) -> HomologyData:
    return P.homology


def pairing(P: SurgeryPresentation, x: Sequence[int], v: Sequence[int]) -> int:
    """Intersection pairing of ``x`` in H_1 with ``v`` in H_2."""
    x = P.check_vector(x, "H_1 class")
    v = P.check_vector(v, "H_2 class")
    if any(P.matrix @ v):
        raise ValueError(f"{P.name}: {v} is not an H_2 class (A v != 0)")
    return sum(a * b for a, b in zip(x, v))


def canonical_h1(P: SurgeryPresentation, x: Sequence[int]) -> tuple[int, ...]:
    """Canonical coordinates of ``x`` in ``Z/d_1 + ... + Z^f``.

    Coordinate ``i`` is ``(U x)_i`` reduced mod the i-th diagonal entry of
    the Smith form (so unit factors always read 0); free coordinates are
    left as they are.
    """
    x = P.check_vector(x, "H_1 class")
    snf = P.homology.h1_snf
    y = snf.U @ x
    diag = snf.diagonal
    return tuple(yi % d if d else yi for yi, d in zip(y, diag))


def h1_from_canonical(P: SurgeryPresentation, c: Sequence[int]) -> tuple[int, ...]:
    """Meridian-basis representative of canonical coordinates ``c``."""
    c = P.check_vector(c, "canonical class")
    return P.homology.h1_snf_inverse_U @ c


def h1_equal(P: SurgeryPresentation, x: Sequence[int], y: Sequence[int]) -> bool:
    return canonical_h1(P, x) == canonical_h1(P, y)


def divisibility(P: SurgeryPresentation, x: Sequence[int]) -> int:
    """Divisibility of the image of ``x`` in H_1 / torsion; 0 for torsion classes."""
    c = canonical_h1(P, x)
    g = 0
    for ci, d in zip(c, P.homology.h1_snf.diagonal):
        if d == 0:
            g = gcd(g, ci)
    return g


def h1_elements(P: SurgeryPresentation) -> Iterator[tuple[int, ...]]:
    """One meridian-basis representative per element of a finite H_1."""
    data = P.homology
    if data.h1.free_rank:
        raise ValueError(f"{P.name}: H_1 = {data.h1} is infinite")
    ranges = [range(d) for d in data.h1_snf.diagonal]
    for y in itertools.product(*ranges):
        yield data.h1_snf_inverse_U @ y


def _inverse_unimodular(U: IntMatrix) -> IntMatrix:
    n = U.rows
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        c = solve_in_lattice(U, e)
        if c is None:
            raise ValueError("matrix is not unimodular")
        cols.append(c)
    return IntMatrix.from_columns(cols, n)


def load_presentation(path) -> SurgeryPresentation:
    """Read a manifold spec file: ``{"name": ..., "linking_matrix": [[...], ...]}``."""
    path = Path(path)
    data = json.loads(path.read_text(encoding="utf-8"))
    return presentation_from_dict(data, default_name=path.stem)


def presentation_from_dict(data: dict, default_name: str = "M") -> SurgeryPresentation:
    if not isinstance(data, dict) or "linking_matrix" not in data:
        raise ValueError("manifold spec needs a 'linking_matrix' field")
    rows = data["linking_matrix"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("'linking_matrix' must be a list of lists")
    for r in rows:
        for e in r:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"non-integer linking matrix entry {e!r}")
    name = str(data.get("name", default_name))
    return SurgeryPresentation(name, IntMatrix.from_rows(rows))
