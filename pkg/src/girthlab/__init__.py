"""Difference-matrix girth conditions, lifting-degree bounds and search for QC-LDPC codes."""

from .bounds import BoundReport, bound_girth10, bound_girth12, bound_legacy, bound_me_girth6
from .core import ExponentMatrix, FormatError, LiftedGraph, format_matrix, hstack, lift, parse_matrix, read_matrix
from .diffmat import DiffD, DiffDD, build_D, build_DD, format_D, format_DD, row_pair_index
from .girth_me import (InevitableCycleReport, check_me_4cycles, check_me_6cycles, detect_inevitable_cycles,
                       girth_me)
from .girth_se import (ConditionViolation, GirthReport, check_4cycles, check_6cycles, check_8cycles,
                       check_10cycles, girth, six_cycle_values)
from .mindist import MinDistance, min_distance
from .oracle import (CycleWitness, bfs_girth_of, count_fossorier_equations, fossorier_girth, girth_bfs,
                     has_cycle_fossorier)
from .search import SearchConfig, SearchResult, canonical_form, ni_count, search_min_N

__version__ = "0.1.0"
