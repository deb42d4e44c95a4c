"""
Finite-field sieve machinery: the counts w and w', their exhaustive Fourier
transforms, the lattices L_p and twisted Poisson summation.
"""
from .forms import (BinaryFormModP, irreducible_forms, monic_irreducibles,
                    w_value, w_pointed_value, w_monic_value, forms_array)
from .transform import (CharacterSum, FourierTransform, FourierReport,
                        fourier_full, fourier_reports,
                        double_transform_check)
from .lattices import (LatticeDescriptor, DeltaSplit, lattice_Lp,
                       lambda_delta_split, transport)
from .poisson import PoissonCheck, twisted_poisson_check
