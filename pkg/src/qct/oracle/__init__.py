"""Independent brute-force homological algebra used to check the closed formulas."""
from qct.oracle.core import DecompositionError, Oracle
from qct.oracle.homology import (
    Resolution,
    auslander_reiten_translate,
    cosyzygy_rep,
    ext_dim,
    projective_cover,
    syzygy_rep,
    tau,
    tau_inverse,
    transpose,
)
from qct.oracle.representation import (
    Morphism,
    ProjectiveSum,
    Representation,
    cokernel,
    direct_sum,
    dual,
    hom_basis,
    hom_dim,
    kernel,
    realize,
)
from qct.oracle.verify import find_cluster_tilting, verify_n_cluster_tilting, verify_nZ
from qct.oracle.arquiver import ARQuiver, ar_quiver

__all__ = [
    "ARQuiver", "DecompositionError", "Morphism", "Oracle", "ProjectiveSum", "Representation",
    "Resolution", "ar_quiver", "auslander_reiten_translate", "cokernel", "cosyzygy_rep",
    "direct_sum", "dual", "ext_dim", "find_cluster_tilting", "hom_basis", "hom_dim", "kernel",
    "projective_cover", "realize", "syzygy_rep", "tau", "tau_inverse", "transpose",
    "verify_nZ", "verify_n_cluster_tilting",
]
