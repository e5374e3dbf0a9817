"""Size caps shared by the constructors and enumerators.

Every cap can be overridden per call; ``CK_MAX_ELEMENTS`` overrides the
element cap process-wide.
"""
import os

DEFAULT_MAX_ELEMENTS = 512
MAX_IDEAL_ENUMERATION_SIZE = 20
HOM_SCAN_BUDGET = 10**7
# Products larger than this are verified coordinatewise instead of building a table.
MATERIALIZE_LIMIT = 512


def max_elements():
    raw = os.environ.get("CK_MAX_ELEMENTS")
    if raw is None or raw == "":
        return DEFAULT_MAX_ELEMENTS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CK_MAX_ELEMENTS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("CK_MAX_ELEMENTS must be positive")
    return value
