"""Exact character codegrees of finite groups.

Character tables via Dixon-Schneider with exact cyclotomic values,
codegree sets, the normal-subgroup lattice, Fitting series/heights, and
mechanical verification of codegree/Fitting-height theorems on a catalog
of constructed groups.
"""

from .perm import Permutation, parse_cycles, print_cycles
from .group import (PermGroup, SubgroupHandle, subgroup, normal_closure,
                    derived_series, derived_length, is_solvable,
                    is_nilpotent, conjugacy_classes, sylow, coset_action,
                    p_part)
from .cyclo import Cyclotomic, root_of_unity, rational, integer
from .chartab import (CharacterTable, ClassFunction, character_table,
                      classes_of, inner_product, restrict, induce,
                      constituents)
from .invariants import (NormalSubgroup, CodegreeSet, FittingData, kernel,
                         codegree, codegree_set, cod_partition,
                         normal_subgroups, fitting_subgroup,
                         solvable_radical, fitting_height,
                         vanishing_off_subgroup)
from .constructions import (GF, MatrixGroupSpec, AffineGroupSpec,
                            matrix_to_perm, dual_action, affine, symmetric,
                            alternating, cyclic, dihedral,
                            generalized_quaternion, elementary_abelian,
                            gamma_semilinear, monomial_pm1, gl23, csu23,
                            catalog, build, catalog_names)
from .verify import (VerificationReport, run_catalog, run_checks,
                     check_half_transitive, CHECK_IDS)

__version__ = "0.1.0"
