"""n-cluster tilting for radical square zero bound quiver algebras kQ/J^2."""
from qct.admissibility import (
    admissible_degree,
    admits_nZ,
    enumerate_flow_paths,
    generate_admissible,
    is_n_admissible,
    is_n_pre_admissible,
)
from qct.modules import build_M, cluster_tilting_subcategories, enumerate_indecomposables, lattice_of_ct
from qct.quiver import Quiver, load_quiver, parse_quiver, serialize

__version__ = "0.1.0"

__all__ = [
    "Quiver", "admissible_degree", "admits_nZ", "build_M", "cluster_tilting_subcategories",
    "enumerate_flow_paths", "enumerate_indecomposables", "generate_admissible", "is_n_admissible",
    "is_n_pre_admissible", "lattice_of_ct", "load_quiver", "parse_quiver", "serialize",
]
