"""Certified Hamilton cycles and paths in cubic Cayley graphs of (2,s,3)-groups."""

__version__ = "0.1.0"

from .catalog import CatalogEntry, catalog_entries, lookup
from .cayley import CayleyGraph, Face, build_cayley, enumerate_hexagons, enumerate_sgons, map_summary
from .errors import (BudgetExhausted, CayleyHamError, CosetEnumerationError, GraphError, GroupValidationError,
                     InvariantViolation, NoWitnessFound, PresentationError)
from .groups import (FiniteGroup, GroupPresentation, Permutation, coset_enumerate, group_from_permutations,
                     group_from_presentation, parse_presentation, validate_233)
from .hamilton import (BoundaryCycle, FaceTree, HamiltonCertificate, boundary, face_tree_from_witness,
                       hamilton_path_from_near_cycle, hamilton_tree_of_faces_search, solve_theorem,
                       verify_certificate)
from .hexgraph import HexGraph, certify_constructions_agree, hex_from_cosets, hex_from_faces, verify_group_action
from .invariants import (Exceptional, InvariantReport, analyze, cyclic_edge_connectivity, girth, is_isomorphic,
                         jaeger_audit, recognize_exceptional)
from .multigraph import MultiGraph
from .stability import (StableSetSolution, brute_force_stability, solve_mod0, solve_mod0_via_reduction,
                        solve_mod2)

__all__ = [name for name in dir() if not name.startswith("_")]
