"""Alexander modules of finitely presented groups via Fox calculus."""

from .abelian import (AbelianElement, AbelianGroup, AbelianGroupHom, Cokernel, IntMatrix,
                      Subquotient, coker_invariants, invariant_factors, lattice_kernel,
                      reduce_mod, smith_normal_form, subgroup_chain, subquotient_invariants)
from .coverings import (CoverReport, RamificationData, cover_homology, cover_quotient,
                        cyclic_ramification, gamma_presentation, riemann_hurwitz_genus,
                        validate_ramification)
from .crowell import (CrowellSequence, bimodule_oracle, c1_induced_map, c1_map_report,
                      c2_exactness_check, check_crowell_exactness, crowell_sequence,
                      phi3_kernel_check, rab_via_crowell, theta2_between)
from .finite_groups import FiniteGroupTable
from .fox import (AlexanderPresentation, alexander_invariants, alexander_matrix,
                  alexander_polynomial, fox_derivative, fox_jacobian)
from .group_algebra import AlgebraMatrix, GroupAlgebraElement, laurent, laurent_gcd
from .presentations import (AbelianHom, GroupPresentation, abelianization,
                            reidemeister_schreier, subgroup_abelianization)
from .words import FreeAlgebraElement, Word

__version__ = "0.1.0"
