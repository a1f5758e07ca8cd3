"""Lazy tournaments, parking functions and multidegrees of the iterated Kapranov embedding."""

from .kapranov import (INF, EmbeddingCoordinates, FactorCoordinates, boundary_factor_coords,
                       embed_boundary, embed_interior, verify_hyperplanes)
from .multidegrees import (compositions, is_support, ktilde, multidegree, rightmost_zero,
                          total_degree)
from .parking import (ParkingFunction, cpf_set, dominance, is_column_restricted, r_map, tau,
                      tau_inverse)
from .tournament import classify, pi_lazy, pi_lazy_inverse, run_tournament, tour_set
from .trees import (A, B, C, LabeledTree, branches_at, enumerate_trees, forget, insert_leaf,
                    parse_tree, star_tree)

__version__ = "0.1.0"
