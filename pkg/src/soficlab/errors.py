"""Exception types shared across the library."""


class SoficlabError(Exception):
    """Base class for library-specific failures."""


class ResourceCapError(SoficlabError):
    """A construction would exceed a configured resource cap."""


class MalformedCertificateError(SoficlabError):
    """A certificate file or object violates its structural invariants.

    Distinct from verification failure: a malformed certificate cannot even
    be measured (non-bijective permutation, non-unitary matrix, missing
    assignments), while a failing one is well-formed but misses its claims.
    """


class BackendMismatchError(SoficlabError):
    """Two objects built over incompatible group backends were combined."""
