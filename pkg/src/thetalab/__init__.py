"""Exact and numeric tools for symplectic congruence subgroups, boolean
polynomial coinvariants over F2, and theta-constant multipliers."""

from .boolean import (
    BooleanPolynomial,
    QuotientSpace,
    abar,
    b3_space,
    bar_of_class,
    bbar,
    bp_mul,
    coinvariants,
    contraction,
    johnson_mu_reference,
    monomial_basis,
    sp2_action,
)
from .errors import ThetaLabError
from .homology import (
    ChainReport,
    HomologyClass,
    a_class,
    b_class,
    chain_shadow,
    curve_class,
    intersection,
    transvection,
    verify_factorizations,
)
from .symplectic import (
    Characteristic,
    OrbitCertificate,
    RootOfUnity,
    SiegelPoint,
    SymplecticMatrix,
    all_igusa_generators,
    char_apply,
    cocycle_det,
    igusa_generator,
    in_gamma_p2,
    in_level,
    is_symplectic_mod2,
    j_matrix,
    orbit_index,
    psi,
    siegel_apply,
    stabilizer_generators_mod2,
    validate_symplectic,
)
from .sampling import (
    compatible_pair_generators,
    gamma_p2_generators,
    random_compatible_pair,
    random_word,
    random_word_pool,
    sp_generators,
)
from .theta import (
    CompatiblePair,
    ThetaValue,
    char_reduce,
    d_sign,
    e_value,
    embed_prym,
    multiplier_product,
    multiplier_squared,
    pair_compatible,
    phi_eval,
    random_siegel,
    siegel_samples,
    theta_eval,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
