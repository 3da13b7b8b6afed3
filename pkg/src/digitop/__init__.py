"""Digital images on the integer lattice, jointly continuous homotopies,
subdivision, standard covers, winding numbers, and a bounded homotopy search."""

from .core import (DigitalImage, DigitalMap, Point, adjacent, check_continuity,
                   compose, diamond, interval, is_continuous, is_isomorphism,
                   neighbours, octagon, product_image, pt, symmetric_interval)
from .homotopy import (EquivalenceWitness, HomotopyGrid, MapHomotopy,
                       cube_contraction, inverse_homotopy, reparam_homotopy,
                       side_concat, stack, verify_grid, verify_witness,
                       whisker)
from .oracle import (Verdict, decide_equivalence, equivalent_bounded,
                     rho_iso_evidence)
from .paths import (LatticeLoop, LatticePath, concat, constant_loop, make_path,
                    reparam, reverse, winding, winding_hom)
from .subdivision import Subdivision, rho_partial, subdivide

__version__ = "0.1.0"

__all__ = [
    "DigitalImage", "DigitalMap", "Point", "adjacent", "check_continuity",
    "compose", "diamond", "interval", "is_continuous", "is_isomorphism",
    "neighbours", "octagon", "product_image", "pt", "symmetric_interval",
    "EquivalenceWitness", "HomotopyGrid", "MapHomotopy", "cube_contraction",
    "inverse_homotopy", "reparam_homotopy", "side_concat", "stack",
    "verify_grid", "verify_witness", "whisker", "Verdict",
    "decide_equivalence", "equivalent_bounded", "rho_iso_evidence",
    "LatticeLoop", "LatticePath", "concat", "constant_loop", "make_path",
    "reparam", "reverse", "winding", "winding_hom", "Subdivision",
    "rho_partial", "subdivide", "__version__",
]
