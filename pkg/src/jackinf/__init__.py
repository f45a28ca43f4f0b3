"""Exact computer algebra for Jack symmetric functions and the commuting
differential operators they diagonalize, in any number of variables."""

from .alpha import ALPHA, AlphaPoleError, AlphaPoly, AlphaRat, AlphaZeroDivisionError, alpha, eval_alpha, specialized
from .jack import jack_P, jack_norm, pieri_down_coeff, pieri_up_coeff
from .operators import (
    apply_A,
    apply_B,
    apply_C,
    apply_H1,
    apply_H2,
    eigenvalue_A_k,
    eigenvalue_A_series,
    heisenberg_a,
    matrix_element_B,
    matrix_element_C,
    step_down,
    step_up,
)
from .partitions import Partition, parse_partition
from .spectral import PochhammerExpansion, UPolyRat, expand_pochhammer
from .symfun import SymFun, inner_product, m, p

__version__ = "0.1.0"
