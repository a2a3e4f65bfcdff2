"""Working precision for high-precision float evaluation.

The bit count defaults to 96 and can be overridden through the
TORSIONLAB_PRECISION environment variable.
"""

from __future__ import annotations

import os

DEFAULT_PRECISION_BITS = 96
_MIN_BITS = 80


def working_precision() -> int:
    raw = os.environ.get("TORSIONLAB_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION_BITS
    try:
        bits = int(raw)
    except ValueError:
        raise ValueError(f"TORSIONLAB_PRECISION must be an integer, got {raw!r}") from None
    if bits < _MIN_BITS:
        raise ValueError(f"TORSIONLAB_PRECISION must be at least {_MIN_BITS} bits")
    return bits
