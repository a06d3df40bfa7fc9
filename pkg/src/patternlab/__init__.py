"""
patternlab: exact generating functions for pattern occurrences in 132- and
123-avoiding permutations.

>>> from patternlab import fh_table
>>> str(fh_table(3)[3])
'x1^3 + x1^2*x2 + 2*x1*x2^2 + x2^3'
"""

from .perm import (GAMMA2, GAMMA3, GAMMA4, InvalidInput, PatternSet, Permutation, avoids,
                   complement, direct_sum, enumerate_avoiders, inverse, max_split, occurrences,
                   parse_perm, reduce, reverse, reverse_complement, skew_decompositions,
                   skew_sum, stats, symmetry)
from .dyck import (DyckPath, PathStats, first_return_split, parse_path, path_stats, phi,
                   phi_inv, psi, psi_inv)
from .polyring import (MultiPoly, SeriesZ, Substitution, catalan, parse_poly, series_add,
                       series_div, series_from_poly_family, series_mul)
from .table import FamilyTable
from .rec132 import (fh_table, good_recursion_census, incr_tower_table, p_table, s3_table,
                     s4_table)
from .rec123 import coeff_equality_check, d_table, desc_tower_table
from .popularity import (PopularitySeries, f12, f_incr, g12_oracle, g12_printed, g_desc,
                         popularity_from_table)
from .oracle import GfSpec, brute_gf, check_family, observation_suite

__version__ = "0.1.0"
