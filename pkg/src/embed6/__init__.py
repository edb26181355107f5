"""Isotopy classification of embeddings M1 + M2 -> S^6 of closed orientable
3-manifolds, computed exactly from integral surgery presentations."""

from .intlinalg import (
    AbelianGroupShape,
    IntMatrix,
    SmithDecomposition,
    cokernel_shape,
    hermite_basis,
    kernel_basis,
    quotient_shape,
    smith_normal_form,
    solve_in_lattice,
)
from .manifold import (
    HomologyData,
    SurgeryPresentation,
    canonical_h1,
    divisibility,
    homology,
    pairing,
)
from .linkgroup import (
    KnotClass,
    LinkClass,
    ParityError,
    PLLinkClass,
    knot_stabilizer_check,
    knot_sum,
    lambda_of_sum,
    linkclass_new,
    pl_forget,
)
from .classifier import (
    EmbeddingInvariants,
    FiberStructure,
    StabilizerSubgroup,
    WLValue,
    act,
    corollary1_witness,
    enumerate_wl,
    fiber_structure,
    is_in_stabilizer,
    isotopic,
    pl_fiber_structure,
    pl_simplification_check,
    pl_stabilizer,
    stabilizer,
)
from .framedlink import (
    FramedFamily,
    LinkDiagram,
    hopf_invariant,
    linking_number,
    parse_diagram,
    surgery_matrix,
)

__version__ = "0.1.0"
