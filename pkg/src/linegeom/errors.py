"""Exception hierarchy shared by every module."""


class LineGeomError(Exception):
    """Base class for all errors raised by linegeom."""


class DivisionNotExact(LineGeomError, ArithmeticError):
    pass


class ArityMismatch(LineGeomError, ValueError):
    pass


class ExtensionMismatch(LineGeomError, ValueError):
    """Two quadratic extensions with different radicands were combined."""


class DegenerateError(LineGeomError):
    """Input lies in a special position where the construction is undefined."""


class CoincidentError(DegenerateError):
    pass


class ContainmentError(DegenerateError):
    """A line lies in the plane (or a point lies on the line) being met."""


class RankError(LineGeomError, ValueError):
    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class SingularPlaneError(RankError):
    pass


class PositiveDimensionalLocus(LineGeomError):
    """The singular locus of a surface contains a curve."""


class PreconditionError(LineGeomError, ValueError):
    pass
