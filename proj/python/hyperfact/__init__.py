"""Exact rational evaluation of terminating hypergeometric series, identity
checks and Wilson / Askey-Wilson polynomial factorizations.

Rational arguments may be ints, fractions.Fraction or strings like "-3/7";
rational results come back as fractions.Fraction.
"""

from ._hyperfact import (
    FactorizationMismatch,
    HyperfactError,
    InvalidSpec,
    PoleInNormalization,
    PoleInRHS,
    ZeroCheckFailed,
    aw_eval,
    aw_poly,
    case1_factorize,
    case2_split,
    case2_zeros,
    checks,
    det_poly,
    diophantine_check,
    fuzz,
    q_case1_factorize,
    q_case2_split,
    q_lattice_zeros,
    recurrence_poly,
    verify_fields_wimp,
    verify_karlsson_minton,
    verify_q_saalschutz,
    verify_saalschutz,
    verify_sears,
    verify_whipple,
    wilson_eval,
    wilson_poly,
)
from ._hyperfact import eval_series as _eval_series

import json as _json


def eval_series(spec):
    """Evaluate a terminating series given as a dict or a JSON string."""
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    return _eval_series(spec)


__all__ = [name for name in dir() if not name.startswith("_")]
