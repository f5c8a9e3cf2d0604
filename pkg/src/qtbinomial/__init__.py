"""Exact (q,t)-binomial coefficients, their combinatorial expansions and Schur-type generalizations."""

from .exprcore import QExp, WeightExpr, WeightError, we_limit_q1, we_limit_t1, we_to_poly
from .tpoly import DegreeGuardError, FpPoly2, NonZeroRemainder, TPoly, degree_guard
from .qtnum import (
    gaussian_binomial, qt_binomial, qt_factorial, qt_multinomial, qt_multinomial_direct,
)
from .boxes import BoxedPartition, box_sum, compatible_sum, partition_weight
from .ffield import EchelonMatrix, dickson_product, enumerate_subspaces, subspace_statistic, subspace_sum
from .macschur import (
    SkewShape, bialternant_spec, dual_jacobi_trudi_spec, enumerate_tableaux, ez, hz,
    jacobi_trudi_spec, tableau_sum, tableau_weight,
)
from .permstat import multinomial_perm_sum, perm_weight, ribbon_classical, ribbon_qt

__version__ = "0.1.0"
