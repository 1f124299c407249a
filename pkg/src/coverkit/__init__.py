"""Exact classification, counting and annotation of p-cyclic covers of curves."""

from .arith import (
    GF,
    PrimeCtx,
    dlog_mu_p,
    inv_mod_p,
    is_prime,
    mobius_invert_by_support,
    unit_zero_sum_count,
)
from .divisors import (
    INF,
    Divisor,
    DivModP,
    FactoredFunction,
    divisor_of,
    divisor_to_function_mod_p,
    is_pth_power,
    valuation_vector,
)
from .harrison import (
    AdeleClass,
    BudgetExceededError,
    CurveCtx,
    SigmaClass,
    adele_classes_with_ram_in,
    adelically_equivalent,
    algebras_isomorphic,
    exists_rational,
    filtration_size,
    in_filtration,
    ramification,
    rational_witness,
    sigma_classes_with_ram_in,
    sigma_group_law,
    stratum_size,
    tensor_to_adeles,
)
from .covers import (
    CornalbaPair,
    CoverClass,
    bruteforce_cover_count,
    cornalba_equivalent,
    cornalba_pair_of,
    count_ram_contained,
    count_ram_exact,
    count_unramified_nontrivial,
    cover_from_sigma,
    existence_check,
    quotient_by_jacobian,
)
from .ringlab import (
    Character,
    FqAlgebra,
    GAction,
    eigenspace,
    equivariantly_isomorphic,
    harrison_product,
    is_galois,
    kummer_extension,
    primitive_element,
    trivial_extension,
    twist,
    unit_class_of,
)
from .rotation import (
    LocalClass,
    LocalGaloisElt,
    SuperellipticData,
    cover_genus,
    kummer_symbol,
    rotation_data,
    rotation_equivalent,
    superelliptic_to_sigma,
)

__version__ = "0.1.0"
