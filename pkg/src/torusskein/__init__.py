"""SL2(Z) conjugacy classes, torus mapping tori, and twisted HH0 / skein dimensions."""
from .errors import ConsistencyError, DomainError, ParseError
from .mapping_torus import GeometryType, H1Result, SeifertData, geometry_type, h1, seifert_lookup
from .skein import (HH0Dimension, SL2Summands, gl1_skein_dim, hh0_dim, hh0_dim_general,
                    sl2_summand_dims)
from .sl2 import (ConjClass, CyclicRLWord, Elliptic, GroupWord, Hyperbolic, Mat2, Shear,
                  class_to_matrix, classify, conjugate_in_sl2, enumerate_classes,
                  equivalent_unoriented, parse_element, parse_label, parse_word, word_to_matrix)
from .torus_quantum import (k_perp, kernel_K, omega, renorm_exponent, twisted_commutator,
                            vanishing_witness, verify_renorm_constraint)
from .zmatrix import AbelianGroupStructure, SmithDecomposition, ZMatrix, cokernel, kronecker, smith_normal_form

__version__ = "0.1.0"
