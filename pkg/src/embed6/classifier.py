"""Isotopy classification of embeddings M1 + M2 -> S^6.

An embedding class is described by its Whitney invariants
``(W1, L1, W2, L2)`` (H_1 classes of the two components) together with a
sphere-link class ``delta`` locating it inside the set of embeddings with
those Whitney invariants.  Sphere links act on that set by connected sum,
transitively, and two offsets give the same embedding exactly when their
difference lies in the stabilizer lattice computed here.

Offsets are relative: ``delta = 0`` is an arbitrary base point of each
fiber, and only differences of offsets carry meaning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .intlinalg import (
    AbelianGroupShape,
    IntMatrix,
    hermite_basis,
    quotient_shape,
    solve_in_lattice,
)
from .linkgroup import LINK_BASIS, PL_LINK_BASIS, LinkClass, pl_forget
from .manifold import (
    SurgeryPresentation,
    canonical_h1,
    divisibility,
    h1_elements,
    h1_equal,
    pairing,
)

__all__ = [
    "WLValue",
    "EmbeddingInvariants",
    "StabilizerSubgroup",
    "FiberStructure",
    "InfiniteH1",
    "Corollary1Witness",
    "stabilizer",
    "is_in_stabilizer",
    "stabilizer_certificate",
    "fiber_structure",
    "isotopic",
    "act",
    "pl_stabilizer",
    "pl_fiber_structure",
    "pl_isotopic",
    "pl_simplification_check",
    "enumerate_wl",
    "corollary1_witness",
]


def _vec(x) -> tuple[int, ...]:
    return tuple(int(c) for c in x)


@dataclass(frozen=True)
class WLValue:
    """Whitney invariants: ``W1, L1`` in H_1(M1) and ``W2, L2`` in H_1(M2)."""

    W1: tuple[int, ...]
    L1: tuple[int, ...]
    W2: tuple[int, ...]
    L2: tuple[int, ...]

    def __post_init__(self):
        for name in ("W1", "L1", "W2", "L2"):
            object.__setattr__(self, name, _vec(getattr(self, name)))

    def check(self, M1: SurgeryPresentation, M2: SurgeryPresentation) -> "WLValue":
        M1.check_vector(self.W1, "W1")
        M1.check_vector(self.L1, "L1")
        M2.check_vector(self.W2, "W2")
        M2.check_vector(self.L2, "L2")
        return self

    def canonical(self, M1: SurgeryPresentation, M2: SurgeryPresentation) -> "WLValue":
        self.check(M1, M2)
        return WLValue(
            canonical_h1(M1, self.W1),
            canonical_h1(M1, self.L1),
            canonical_h1(M2, self.W2),
            canonical_h1(M2, self.L2),
        )

    def same_class(self, other: "WLValue", M1: SurgeryPresentation, M2: SurgeryPresentation) -> bool:
        return (
            h1_equal(M1, self.W1, other.W1)
            and h1_equal(M1, self.L1, other.L1)
            and h1_equal(M2, self.W2, other.W2)
            and h1_equal(M2, self.L2, other.L2)
        )

    @classmethod
    def zero(cls, M1: SurgeryPresentation, M2: SurgeryPresentation) -> "WLValue":
        return cls(M1.zero(), M1.zero(), M2.zero(), M2.zero())

    def to_dict(self) -> dict:
        return {"W1": list(self.W1), "L1": list(self.L1), "W2": list(self.W2), "L2": list(self.L2)}


@dataclass(frozen=True)
class EmbeddingInvariants:
    wl: WLValue
    delta: LinkClass = field(default_factory=LinkClass)

    @classmethod
    def from_dict(cls, data: dict) -> "EmbeddingInvariants":
        missing = [k for k in ("W1", "L1", "W2", "L2") if k not in data]
        if missing:
            raise ValueError(f"embedding invariants missing fields {missing}")
        for k in ("W1", "L1", "W2", "L2"):
            if not isinstance(data[k], list) or not all(
                isinstance(e, int) and not isinstance(e, bool) for e in data[k]
            ):
                raise ValueError(f"field {k!r} must be a list of integers")
        wl = WLValue(data["W1"], data["L1"], data["W2"], data["L2"])
        delta = data.get("delta", [0, 0, 0, 0])
        if not isinstance(delta, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in delta):
            raise ValueError("field 'delta' must be a list of 4 integers")
        return cls(wl, LinkClass.from_tuple(delta))

    def to_dict(self) -> dict:
        d = self.wl.to_dict()
        d["delta"] = list(self.delta.as_tuple())
        return d


@dataclass(frozen=True)
class StabilizerSubgroup:
    """Sublattice of Z^4 (smooth) or Z^2 (PL) given by labelled generators.

    ``labels[k]`` names the family and H_2 basis index that produced
    ``generators[k]``, e.g. ``("alpha", 0)``.  Zero generators are dropped.
    ``hnf`` is the canonical Hermite basis of the lattice.
    """

    dim: int
    generators: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[str, int], ...] = ()
    hnf: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        gens = tuple(_vec(g) for g in self.generators)
        for g in gens:
            if len(g) != self.dim:
                raise ValueError(f"generator {g} not of length {self.dim}")
            if (g[0] - g[1]) % 2:
                raise AssertionError(f"stabilizer generator {g} violates lambda1 = lambda2 mod 2")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "hnf", tuple(hermite_basis(gens, self.dim)))

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.generators, self.dim)

    @property
    def is_zero(self) -> bool:
        return not self.hnf

    def contains(self, v: Sequence[int]) -> bool:
        return solve_in_lattice(self.matrix, _vec(v)) is not None

    def same_lattice(self, other: "StabilizerSubgroup") -> bool:
        return self.dim == other.dim and self.hnf == other.hnf

    def to_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "labels": [f"{fam}[{i}]" for fam, i in self.labels],
            "hnf": [list(b) for b in self.hnf],
        }


@dataclass(frozen=True)
class FiberStructure:
    """The group ``Z~4 / Stab_f`` parametrizing one fiber of the Whitney invariants."""

    shape: AbelianGroupShape
    stab: StabilizerSubgroup


@dataclass(frozen=True)
class InfiniteH1:
    """Returned by :func:`enumerate_wl` when a first homology group is infinite."""

    h1_m1: AbelianGroupShape
    h1_m2: AbelianGroupShape


@dataclass(frozen=True)
class Corollary1Witness:
    wl: WLValue
    g: LinkClass
    alpha: tuple[int, ...]
    g_is_unlinked: bool
    g_in_stabilizer: bool

    @property
    def ok(self) -> bool:
        return not self.g.is_trivial and not self.g_is_unlinked and self.g_in_stabilizer


def _h2_bases(M1, M2, h2_bases):
    if h2_bases is None:
        return M1.homology.h2_basis, M2.homology.h2_basis
    b1, b2 = h2_bases
    return tuple(_vec(v) for v in b1), tuple(_vec(v) for v in b2)


def _families(M1, M2, wl, h2_bases):
    """Yield ``(label, generator)`` for the four smooth families on H_2 bases."""
    wl.check(M1, M2)
    basis1, basis2 = _h2_bases(M1, M2, h2_bases)
    for i, a in enumerate(basis1):
        L, W = pairing(M1, wl.L1, a), pairing(M1, wl.W1, a)
        yield ("alpha", i), (0, 2 * L, W, 0)
    for i, b in enumerate(basis1):
        L, W = pairing(M1, wl.L1, b), pairing(M1, wl.W1, b)
        yield ("beta", i), (2 * L, 2 * W, 0, 0)
    for i, c in enumerate(basis2):
        L, W = pairing(M2, wl.L2, c), pairing(M2, wl.W2, c)
        yield ("gamma", i), (2 * L, 0, 0, W)
    for i, d in enumerate(basis2):
        L, W = pairing(M2, wl.L2, d), pairing(M2, wl.W2, d)
        yield ("delta", i), (2 * W, 2 * L, 0, 0)


def _subgroup(dim, labelled) -> StabilizerSubgroup:
    labelled = [(lab, g) for lab, g in labelled if any(g)]
    return StabilizerSubgroup(
        dim=dim,
        generators=tuple(g for _, g in labelled),
        labels=tuple(lab for lab, _ in labelled),
    )


def stabilizer(
    M1: SurgeryPresentation,
    M2: SurgeryPresentation,
    wl: WLValue,
    h2_bases: Optional[tuple[Sequence[Sequence[int]], Sequence[Sequence[int]]]] = None,
) -> StabilizerSubgroup:
    """Sublattice of sphere links whose connected sum fixes the embedding.

    Each generator family is linear in its H_2 argument, so evaluating on
    an H_2 basis is enough.  ``h2_bases`` overrides the canonical bases of
    ``H_2(M1)`` and ``H_2(M2)``; the lattice does not depend on the choice.
    """
    return _subgroup(4, _families(M1, M2, wl, h2_bases))


def is_in_stabilizer(stab: StabilizerSubgroup, g: LinkClass) -> bool:
    return stab.contains(g.as_tuple())


def stabilizer_certificate(stab: StabilizerSubgroup, g: LinkClass) -> Optional[tuple[int, ...]]:
    """Coefficients expressing ``g`` in ``stab.generators``, or ``None``."""
    return solve_in_lattice(stab.matrix, g.as_tuple())


def fiber_structure(M1: SurgeryPresentation, M2: SurgeryPresentation, wl: WLValue) -> FiberStructure:
    stab = stabilizer(M1, M2, wl)
    ambient = IntMatrix.from_columns(LINK_BASIS, 4)
    return FiberStructure(shape=quotient_shape(ambient, stab.matrix), stab=stab)


def isotopic(
    M1: SurgeryPresentation,
    M2: SurgeryPresentation,
    inv: EmbeddingInvariants,
    inv2: EmbeddingInvariants,
) -> bool:
    inv.wl.check(M1, M2)
    inv2.wl.check(M1, M2)
    if not inv.wl.same_class(inv2.wl, M1, M2):
        return False
    return is_in_stabilizer(stabilizer(M1, M2, inv.wl), inv.delta - inv2.delta)


def act(inv: EmbeddingInvariants, g: LinkClass) -> EmbeddingInvariants:
    """Connected sum with the sphere link ``g``: Whitney invariants are unchanged."""
    return replace(inv, delta=inv.delta + g)


def _pl_families(M1, M2, wl, h2_bases):
    for (fam, i), g in _families(M1, M2, wl, h2_bases):
        yield (fam, i), g[:2]


def pl_stabilizer(
    M1: SurgeryPresentation,
    M2: SurgeryPresentation,
    wl: WLValue,
    h2_bases=None,
) -> StabilizerSubgroup:
    return _subgroup(2, _pl_families(M1, M2, wl, h2_bases))


def pl_fiber_structure(M1: SurgeryPresentation, M2: SurgeryPresentation, wl: WLValue) -> AbelianGroupShape:
    stab = pl_stabilizer(M1, M2, wl)
    return quotient_shape(IntMatrix.from_columns(PL_LINK_BASIS, 2), stab.matrix)


def pl_isotopic(
    M1: SurgeryPresentation,
    M2: SurgeryPresentation,
    inv: EmbeddingInvariants,
    inv2: EmbeddingInvariants,
) -> bool:
    """PL isotopy of the two embeddings (``r1, r2`` are invisible in PL)."""
    inv.wl.check(M1, M2)
    inv2.wl.check(M1, M2)
    if not inv.wl.same_class(inv2.wl, M1, M2):
        return False
    diff = pl_forget(inv.delta) - pl_forget(inv2.delta)
    return pl_stabilizer(M1, M2, inv.wl).contains(diff.as_tuple())


def pl_simplification_check(M1: SurgeryPresentation, M2: SurgeryPresentation, wl: WLValue) -> bool:
    """Check that the alpha and gamma PL families may be replaced by the
    single generators ``(0, 2 div L1)`` and ``(2 div L2, 0)``."""
    original = pl_stabilizer(M1, M2, wl)
    kept = [
        (lab, g) for lab, g in _pl_families(M1, M2, wl, None) if lab[0] in ("beta", "delta")
    ]
    kept.append((("div L1", 0), (0, 2 * divisibility(M1, wl.L1))))
    kept.append((("div L2", 0), (2 * divisibility(M2, wl.L2), 0)))
    simplified = _subgroup(2, kept)
    return all(original.contains(g) for g in simplified.generators) and all(
        simplified.contains(g) for g in original.generators
    )


def enumerate_wl(M1: SurgeryPresentation, M2: SurgeryPresentation):
    """Every value of the Whitney invariants, one canonical tuple each.

    All of ``H_1(M1)^2 x H_1(M2)^2`` is realized, so the list has
    ``|H_1(M1)|^2 |H_1(M2)|^2`` entries.  If either group is infinite an
    :class:`InfiniteH1` carrying both shapes is returned instead.
    """
    h1, h2 = M1.homology.h1, M2.homology.h1
    if not (h1.is_finite and h2.is_finite):
        return InfiniteH1(h1, h2)
    e1 = list(h1_elements(M1))
    e2 = list(h1_elements(M2))
    return [
        WLValue(W1, L1, W2, L2)
        for W1, L1, W2, L2 in itertools.product(e1, e1, e2, e2)
    ]


def corollary1_witness(M1: SurgeryPresentation, M2: SurgeryPresentation) -> Optional[Corollary1Witness]:
    """A knotted-but-not-unlinked sphere link that fixes some embedding.

    Exists whenever ``H_1(M1)`` is infinite: take ``alpha`` in H_2 and
    ``L1`` pairing to 1 with it, ``W1 = 0``; then ``(0, 2, 0, 0)`` is the
    alpha-family generator.  Returns ``None`` for finite ``H_1(M1)``.
    """
    basis = M1.homology.h2_basis
    if not basis:
        return None
    alpha = basis[0]
    # alpha is primitive, so some x has x . alpha = 1
    x = solve_in_lattice(IntMatrix.from_rows([alpha]), (1,))
    if x is None:
        raise AssertionError(f"H_2 basis vector {alpha} is not primitive")
    wl = WLValue(M1.zero(), x, M2.zero(), M2.zero())
    g = LinkClass(0, 2, 0, 0)
    stab = stabilizer(M1, M2, wl)
    return Corollary1Witness(
        wl=wl,
        g=g,
        alpha=alpha,
        g_is_unlinked=g.is_unlinked,
        g_in_stabilizer=is_in_stabilizer(stab, g),
    )
