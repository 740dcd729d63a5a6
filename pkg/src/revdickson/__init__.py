"""Reversed Dickson polynomials D_{n,k}(1, x) over odd-characteristic
finite fields: evaluators, closed forms for structured indices,
permutation testing, and a machine-checked claim registry."""

from .errors import (
    BadParity,
    CharacteristicMismatch,
    DegreeBoundExceeded,
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLarge,
    IndexTooSmall,
    InternalError,
    KindOutOfRange,
    NoRoot,
    NotPrime,
    OrderOverflow,
    StructureOverflow,
    ToolkitError,
    UnknownClaim,
    WrongCharacteristic,
)
from .ff import Embedding, FieldCtx, embed_subfield, is_prime, legendre, make_field
from .polyring import (
    Poly,
    is_irreducible,
    poly_gcd,
    polys_equal_as_functions,
    pow_mod,
    render_terms,
)
from .dickson import (
    DEFAULT_DEGREE_BOUND,
    INDEX_CAP,
    DicksonParams,
    PrimePowerSum,
    SparsePoly,
    binom_mod,
    check_char3_square_substitution,
    check_kind_mixing_identities,
    closed_form_as_x_poly,
    closed_form_sum,
    dickson_first_eval,
    dickson_first_poly,
    rdk_eval_functional,
    rdk_eval_matrix,
    rdk_eval_rec,
    rdk_eval_rec_seq,
    rdk_poly,
    rdk_poly_direct,
    rdk_poly_seq,
    rdk_value_quarter,
    reduced_pp_poly,
)
from .permcheck import (
    Q_CAP,
    EquivalenceReport,
    PPReport,
    is_pp_exhaustive,
    is_pp_monomial,
    pp_equivalent,
)
from .theorems import (
    CSV_COLUMNS,
    DEFAULT_GRID,
    Case,
    Claim,
    ClaimResult,
    GridConfig,
    REGISTRY,
    TupleOutcome,
    claim_ids,
    get_claim,
    verify_all,
    verify_claim,
    write_csv,
    write_lines,
)

__version__ = "1.0.0"

__all__ = [
    "BadParity",
    "CharacteristicMismatch",
    "DegreeBoundExceeded",
    "DivisionByZero",
    "EvenCharacteristic",
    "FieldTooLarge",
    "IndexTooSmall",
    "InternalError",
    "KindOutOfRange",
    "NoRoot",
    "NotPrime",
    "OrderOverflow",
    "StructureOverflow",
    "ToolkitError",
    "UnknownClaim",
    "WrongCharacteristic",
    "Embedding",
    "FieldCtx",
    "embed_subfield",
    "is_prime",
    "legendre",
    "make_field",
    "Poly",
    "is_irreducible",
    "poly_gcd",
    "polys_equal_as_functions",
    "pow_mod",
    "render_terms",
    "DEFAULT_DEGREE_BOUND",
    "INDEX_CAP",
    "DicksonParams",
    "PrimePowerSum",
    "SparsePoly",
    "binom_mod",
    "check_char3_square_substitution",
    "check_kind_mixing_identities",
    "closed_form_as_x_poly",
    "closed_form_sum",
    "dickson_first_eval",
    "dickson_first_poly",
    "rdk_eval_functional",
    "rdk_eval_matrix",
    "rdk_eval_rec",
    "rdk_eval_rec_seq",
    "rdk_poly",
    "rdk_poly_direct",
    "rdk_poly_seq",
    "rdk_value_quarter",
    "reduced_pp_poly",
    "Q_CAP",
    "EquivalenceReport",
    "PPReport",
    "is_pp_exhaustive",
    "is_pp_monomial",
    "pp_equivalent",
    "CSV_COLUMNS",
    "DEFAULT_GRID",
    "Case",
    "Claim",
    "ClaimResult",
    "GridConfig",
    "REGISTRY",
    "TupleOutcome",
    "claim_ids",
    "get_claim",
    "verify_all",
    "verify_claim",
    "write_csv",
    "write_lines",
    "__version__",
]
