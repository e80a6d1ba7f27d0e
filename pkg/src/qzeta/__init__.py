"""qzeta: q-deformed Bernoulli families, q-zeta and Dirichlet q-L-functions.

The library evaluates the classical Bernoulli/zeta/L hierarchy, its
q-deformations (Carlitz, one-parameter and multiple Changhee families,
with and without Dirichlet characters), and ships a verification harness
that checks every interpolation and decomposition identity numerically.
"""

from .characters import (
    CharacterGroup,
    DirichletCharacter,
    build_group,
    conductor,
    enumerate_characters,
)
from .classical import (
    barnes_bernoulli,
    barnes_zeta_series,
    bernoulli_number,
    bernoulli_poly,
    dirichlet_L,
    gen_bernoulli_number,
    gen_bernoulli_poly,
    hurwitz_zeta,
    riemann_zeta,
    two_variable_L,
)
from .errors import (
    ConsistencyError,
    DomainError,
    PoleError,
    QZetaError,
    SingularSeriesError,
    TruncationError,
)
from .numkernel import (
    DEFAULT_SUM_CONFIG,
    QParams,
    SumConfig,
    SumStats,
    complex_gamma,
    geometric_tail_sum,
    qbracket,
    qpow,
)
from .powerseries import (
    TruncatedSeries,
    barnes_gf_coeffs,
    ts_exp_linear,
    ts_mul,
    ts_reciprocal,
)
from .qfamily import (
    ExponentConvention,
    L_q,
    L_q_multiple,
    WeightVector,
    carlitz_beta_number,
    carlitz_beta_poly,
    changhee_beta_number,
    changhee_beta_poly,
    changhee_correction,
    gen_changhee_beta_number,
    gen_changhee_beta_poly,
    multiple_beta_binomial_form,
    multiple_beta_binomial_from_numbers,
    multiple_changhee_beta,
    zeta_q,
    zeta_q_correction,
    zeta_q_multiple,
)

__version__ = "0.1.0"
