"""Exception types shared across the package."""


class CheckFailure(Exception):
    """A mathematical verification check failed.

    Raised when a structural property that the construction guarantees
    (rate bound, invariance, orbit coverage, ...) does not hold.  The CLI
    maps this to exit code 1, distinct from usage/IO errors (exit 2).
    """


class ConstructionError(ValueError):
    """A parameter set was rejected while building an object.

    Examples: a generator set that is not symmetric, a torus orbit that
    collapses, a generator polynomial that does not divide x^n - 1.
    """
