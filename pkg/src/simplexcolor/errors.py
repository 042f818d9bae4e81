"""Exception types shared across the library."""


class SimplexColorError(Exception):
    """Base class for all library errors."""


class InputError(SimplexColorError):
    """Malformed or out-of-contract input (bad file, dimension mismatch, ...)."""


class UnrealizableComplexError(SimplexColorError):
    """Raised when peeling stalls: no simplex has an exposed facet.

    This cannot happen for a complex that is geometrically realizable in
    R^d; it is reachable for abstract inputs such as the boundary of a
    (d+1)-simplex forced into R^d.
    """

    def __init__(self, residual_size: int):
        self.residual_size = residual_size
        super().__init__(
            f"no simplex with an exposed facet in residual complex of "
            f"{residual_size} simplices"
        )


class InvariantError(SimplexColorError):
    """Internal invariant violated; indicates a bug, not bad input."""
