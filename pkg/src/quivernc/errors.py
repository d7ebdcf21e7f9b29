"""Shared exception types."""


class QuiverSyntaxError(ValueError):
    """Malformed quiver DSL text."""


class NotFiniteTypeError(ValueError):
    """Operation requires a quiver whose symmetrized form is positive definite."""


class OracleCapError(ValueError):
    """Brute-force enumeration would exceed the configured dimension cap."""


class FingerprintError(RuntimeError):
    """Hom-dimension fingerprint failed to resolve a module; signals a bug."""
