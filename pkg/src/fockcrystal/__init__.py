"""Crystals, abacus periods and the Heisenberg crystal on higher-level Fock spaces."""
from .abacus import T, T_inv, TripleVertex, to_one_view
from .crystal import crystal_component, e_tilde, f_tilde, highest_weight
from .decomposition import decompose, enumerate_flotw, iota, is_flotw
from .heisenberg import b_minus_sigma, b_plus_sigma, depth, heis_op, kappa
from .partitions import ChargedMultipartition, parse_charged

__version__ = "0.1.0"
