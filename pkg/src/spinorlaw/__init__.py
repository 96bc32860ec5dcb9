"""Exact tensor-power multiplicities, characters and the boundary limit law
for the spinor representation of so(2n+1)."""
from .characters import (character_An, character_An_weightsum, character_Bn, dim_weyl,
                         freudenthal_weights, spinor_character)
from .errors import InvalidWeightError, ScaleGuardError, SingularPointError
from .limitlaw import convergence_table, limit_density, limit_normalization
from .measure import (character_measure, measure_table, normalization_check, plancherel_measure,
                      sample, support)
from .multiplicities import multiplicity_asymptotic, multiplicity_exact, tensor_decompose_oracle
from .rootsys import is_dominant, lambda_from_s, rho, weyl_elements

__version__ = "0.1.0"
