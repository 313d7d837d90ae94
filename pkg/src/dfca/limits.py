"""Guard rails for the exponential enumerations.

Both brute-force procedures in this package (valuation sweeps in the
propositional module, subset sweeps in the conditional-set validator) walk
2**n cases. They refuse to start past a cap: 20 by default, overridable
through the DFCA_MAX_ATOMS environment variable or an explicit argument.
"""

import os

from .errors import StructureError

DEFAULT_ENUMERATION_CAP = 20
CAP_ENV_VAR = "DFCA_MAX_ATOMS"


def enumeration_cap(explicit=None):
    """Resolve the active cap: explicit argument, then env var, then default."""
    if explicit is not None:
        if explicit < 0:
            raise StructureError("enumeration cap must be non-negative")
        return explicit
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUMERATION_CAP
    try:
        value = int(raw)
    except ValueError:
        raise StructureError(
            f"{CAP_ENV_VAR} must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise StructureError(f"{CAP_ENV_VAR} must be non-negative, got {value}")
    return value
