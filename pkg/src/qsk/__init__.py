"""qsk: a numerical kernel for basic hypergeometric orthogonal polynomials.

Evaluates q-Pochhammer symbols and r_phi_s series, the Askey-Wilson,
continuous q-ultraspherical, little q-Laguerre and q-Laguerre families,
their one-free-parameter connection coefficients, and numerically
verifies a catalog of generating-function identities together with the
definite integrals, infinite series, bilateral series, and q-integrals
that follow from orthogonality.
"""

from .bhs import SeriesResult, SeriesSpec, check_qbinomial, eval_phi
from .connect import (
    ConnectionExpansion,
    aw_connection,
    expansion_residual,
    lql_connection,
    qlag_connection,
    ultra_connection,
)
from .context import EvalContext, ParamPoint
from .genfun import (
    IdentityId,
    IdentityReport,
    eval_lhs,
    eval_rhs,
    in_domain,
    list_identities,
    sample_point,
    verify_identity,
    verify_source,
)
from .polyfam import (
    AWParams,
    FamilyId,
    LqLParams,
    QLagParams,
    UltraParams,
    askey_wilson,
    aw_norm,
    aw_weight,
    cont_q_ultra,
    little_q_laguerre,
    lql_norm,
    q_laguerre,
    qlag_bilateral_norm,
    qlag_continuous_norm,
    qlag_jackson_norm,
    ultra_norm,
    ultra_weight,
)
from .qpoch import (
    PochIdentity,
    PochSymbol,
    QBase,
    check_lemma1,
    check_poch_identity,
    poch_finite,
    poch_infinite,
    q_factorial,
    q_number,
)

__version__ = "1.0.0"

__all__ = [
    "AWParams",
    "ConnectionExpansion",
    "EvalContext",
    "FamilyId",
    "IdentityId",
    "IdentityReport",
    "LqLParams",
    "ParamPoint",
    "PochIdentity",
    "PochSymbol",
    "QBase",
    "QLagParams",
    "SeriesResult",
    "SeriesSpec",
    "UltraParams",
    "askey_wilson",
    "aw_connection",
    "aw_norm",
    "aw_weight",
    "check_lemma1",
    "check_poch_identity",
    "check_qbinomial",
    "cont_q_ultra",
    "eval_lhs",
    "eval_phi",
    "eval_rhs",
    "expansion_residual",
    "in_domain",
    "list_identities",
    "little_q_laguerre",
    "lql_connection",
    "lql_norm",
    "poch_finite",
    "poch_infinite",
    "q_factorial",
    "q_laguerre",
    "q_number",
    "qlag_bilateral_norm",
    "qlag_connection",
    "qlag_continuous_norm",
    "qlag_jackson_norm",
    "sample_point",
    "ultra_connection",
    "ultra_norm",
    "ultra_weight",
    "verify_identity",
    "verify_source",
]
