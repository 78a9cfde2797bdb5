"""Exact fixed-point localization on Quot-scheme compactifications of maps P^1 -> Gr_r(C^n)."""
from .errors import InvariantError, UsageError
from .symalg import AlphaSeries, MPoly, Rat, poly_add, poly_mul, series_mul
from .partitions import (
    FixedComponent,
    admissible_pairs,
    component_dimension,
    conjugate,
    distinguished_components,
    fixed_components,
    hilbert_poly,
    quot_dim,
    runs,
)
from .weights import (
    WeightMultiset,
    full_weight_system,
    wt1,
    wt1_via_generating_function,
    wt2,
    wt3,
    zero_multiplicity_check,
)
from .blockform import BlockForm, P0Weight, block_forms, p0_weight_system, render_ascii
from .euler import EulerFactor, euler_class, euler_factors, inverse_series
from .flagint import FlagIntegrator, FlagType, integrate_monomial, integrate_poly
from .mirror import (
    ComponentIntegral,
    component_integral,
    degree_total,
    duality_check,
    euler_series_table,
    hyperplane_class,
)

__version__ = "0.1.0"
