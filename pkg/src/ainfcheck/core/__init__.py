"""Exact graded linear algebra: scalars, matrices, Koszul tensor calculus,
complexes, inner homs, shifts, duals and homology."""

from .scalars import PrimeField, Rationals, Integers, QQ, ZZ, parse_ring
from .linalg import (Matrix, rref, rank, solve_right, solve_left,
                     nullspace_left, row_space_basis)
from .graded import (GradedSpace, TensorSpace, GradedMap, tensor_space,
                     unit_space, element_map, basis_element, koszul_sign,
                     signed_permutation, transposition, tensor_map, compose,
                     direct_sum_space)
from .complexes import (Complex, k_complex, tensor_complex, HomSpace,
                        hom_space, hom_to_map,
                        map_to_hom, hom_element, ev_map, coev_map, m2_map,
                        hom_post, hom_pre, compose_m2, hom_complex, curry,
                        uncurry, is_chain_map, shift_space, shift_iso,
                        shift_map, shift_complex, suspend, dual_complex,
                        dual_map_of, double_dual_embedding, Homology,
                        homology, induced_map, homotopic, find_homotopy)
