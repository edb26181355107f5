"""Framed link diagrams as signed crossing lists.

Text format, one declaration per line::

    # positive Hopf link
    components 2
    framings 0 0
    x 1 2 +
    x 2 1 +

``x i j s`` records a crossing where component ``i`` passes over component
``j`` with sign ``s`` (``+`` or ``-``).  Components are numbered from 1.
Only linking numbers and framings are extracted; no planarity check is made.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .intlinalg import IntMatrix
from .manifold import SurgeryPresentation

__all__ = [
    "DiagramParseError",
    "Crossing",
    "LinkDiagram",
    "FramedFamily",
    "parse_diagram",
    "linking_number",
    "hopf_invariant",
    "framed_family",
    "surgery_matrix",
]


class DiagramParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Crossing:
    over: int
    under: int
    sign: int


@dataclass(frozen=True)
class LinkDiagram:
    """Component indices are 0-based here; the text format is 1-based."""

    components: int
    crossings: tuple[Crossing, ...]
    framings: tuple[int, ...]

    def __post_init__(self):
        if len(self.framings) != self.components:
            raise ValueError(f"{len(self.framings)} framings for {self.components} components")
        for c in self.crossings:
            if not (0 <= c.over < self.components and 0 <= c.under < self.components):
                raise ValueError(f"crossing {c} refers to a missing component")
            if c.sign not in (1, -1):
                raise ValueError(f"crossing sign {c.sign} is not +1 or -1")
        for i in range(self.components):
            for j in range(i):
                if _over_sum(self, i, j) != _over_sum(self, j, i):
                    raise ValueError(
                        f"components {j + 1} and {i + 1}: over-crossing signs sum to "
                        f"{_over_sum(self, j, i)} one way and {_over_sum(self, i, j)} the other"
                    )


@dataclass(frozen=True)
class FramedFamily:
    """Framed circles: self-linking numbers and pairwise linking numbers."""

    framings: tuple[int, ...]
    pairwise_lk: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.framings)
        lk = tuple(tuple(int(x) for x in row) for row in self.pairwise_lk)
        if len(lk) != n or any(len(row) != n for row in lk):
            raise ValueError("pairwise_lk must be square of the same size as framings")
        for i in range(n):
            if lk[i][i]:
                raise ValueError("pairwise_lk must have zero diagonal")
            for j in range(i):
                if lk[i][j] != lk[j][i]:
                    raise ValueError("pairwise_lk must be symmetric")
        object.__setattr__(self, "framings", tuple(int(f) for f in self.framings))
        object.__setattr__(self, "pairwise_lk", lk)

    @property
    def size(self) -> int:
        return len(self.framings)


def _over_sum(d: LinkDiagram, i: int, j: int) -> int:
    return sum(c.sign for c in d.crossings if c.over == i and c.under == j)


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DiagramParseError(f"expected an integer, got {tok!r}", line, col) from None


def _tokens(raw: str):
    """Split on whitespace, keeping 1-based column numbers."""
    out, i = [], 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((raw[i:j], i + 1))
        i = j
    return out


def parse_diagram(text: str) -> LinkDiagram:
    n = None
    framings = None
    crossings: list[Crossing] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks or toks[0][0].startswith("#"):
            continue
        key, kcol = toks[0]
        args = toks[1:]
        if key == "components":
            if n is not None:
                raise DiagramParseError("duplicate 'components' line", lineno, kcol)
            if len(args) != 1:
                raise DiagramParseError("'components' takes one integer", lineno, kcol)
            n = _int(args[0][0], lineno, args[0][1])
            if n < 0:
                raise DiagramParseError("negative component count", lineno, args[0][1])
        elif key == "framings":
            if n is None:
                raise DiagramParseError("'framings' before 'components'", lineno, kcol)
            if framings is not None:
                raise DiagramParseError("duplicate 'framings' line", lineno, kcol)
            if len(args) != n:
                raise DiagramParseError(f"expected {n} framings, got {len(args)}", lineno, kcol)
            framings = tuple(_int(t, lineno, c) for t, c in args)
        elif key == "x":
            if n is None:
                raise DiagramParseError("crossing before 'components'", lineno, kcol)
            if len(args) != 3:
                raise DiagramParseError("crossing line is 'x OVER UNDER SIGN'", lineno, kcol)
            ends = []
            for tok, col in args[:2]:
                k = _int(tok, lineno, col)
                if not 1 <= k <= n:
                    raise DiagramParseError(f"component {k} out of range 1..{n}", lineno, col)
                ends.append(k - 1)
            stok, scol = args[2]
            if stok not in ("+", "-"):
                raise DiagramParseError(f"crossing sign must be '+' or '-', got {stok!r}", lineno, scol)
            crossings.append(Crossing(ends[0], ends[1], 1 if stok == "+" else -1))
        else:
            raise DiagramParseError(f"unknown declaration {key!r}", lineno, kcol)
    if n is None:
        raise DiagramParseError("missing 'components' line")
    if framings is None:
        raise DiagramParseError("missing 'framings' line")
    try:
        return LinkDiagram(n, tuple(crossings), framings)
    except ValueError as exc:
        raise DiagramParseError(str(exc)) from None


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    """Sum of the signs of crossings where ``i`` passes over ``j`` (0-based)."""
    if i == j:
        raise ValueError("linking number of a component with itself; use its framing")
    if not (0 <= i < d.components and 0 <= j < d.components):
        raise IndexError((i, j))
    return _over_sum(d, i, j)


def framed_family(d: LinkDiagram) -> FramedFamily:
    n = d.components
    lk = [[0 if i == j else linking_number(d, i, j) for j in range(n)] for i in range(n)]
    return FramedFamily(d.framings, lk)


def hopf_invariant(f: FramedFamily, subset: Iterable[int]) -> int:
    """Self-linking of the union of the components in ``subset``.

    ``h(a + b) = h(a) + h(b) + 2 lk(a, b)``, so this is the sum of the
    framings plus twice the pairwise linking numbers.
    """
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("empty subset")
    if idx[0] < 0 or idx[-1] >= f.size:
        raise IndexError(f"subset {idx} out of range for {f.size} components")
    h = sum(f.framings[i] for i in idx)
    h += 2 * sum(f.pairwise_lk[i][j] for a, i in enumerate(idx) for j in idx[a + 1:])
    return h


def surgery_matrix(d: LinkDiagram, name: str = "M") -> SurgeryPresentation:
    f = framed_family(d)
    n = f.size
    rows = [[f.framings[i] if i == j else f.pairwise_lk[i][j] for j in range(n)] for i in range(n)]
    return SurgeryPresentation(name, IntMatrix.from_rows(rows, n))
