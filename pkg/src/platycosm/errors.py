"""Exception types shared across the package."""


class PlatycosmError(Exception):
    """Base class for all domain errors."""


class NotPositiveDefinite(PlatycosmError):
    pass


class NonTermination(PlatycosmError):
    """Reduction exceeded its certified iteration cap; the input diagram is invalid."""


class InconsistentVonorms(PlatycosmError):
    pass


class AmbiguousPlacement(PlatycosmError):
    """Zero-position choices disagreed on a placement-invariant quantity (a bug, never valid input)."""


class ZeroDeterminant(PlatycosmError):
    pass


class DegenerateDiagram(PlatycosmError):
    pass


class InvalidParameters(PlatycosmError):
    pass


class FrameMismatch(PlatycosmError):
    pass


class NotAHomomorphism(PlatycosmError):
    pass


class HasFixedPoint(PlatycosmError):
    pass


class NotCocompact(PlatycosmError):
    pass


class Unrecognized(PlatycosmError):
    """Internal consistency failure while classifying a space group."""


class DoesNotNormalize(PlatycosmError):
    pass


class NotPrimitive(PlatycosmError):
    pass


class BoundNotCertified(PlatycosmError):
    pass
