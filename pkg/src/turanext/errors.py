"""Exception types shared across the package.

The CLI maps these onto its exit codes: bad parameters/config -> 2,
exceeded exact-computation windows -> 3, broken internal invariants -> 4.
"""


class ConfigError(ValueError):
    """Invalid CLI/config input (unknown key, unparsable value, bad combination)."""


class SearchCapError(RuntimeError):
    """An exact-computation window (vertex cap, search cap) was exceeded."""


class InternalCheckError(RuntimeError):
    """An internal exactness invariant failed; this always indicates a bug."""
