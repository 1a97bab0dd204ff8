"""Exception hierarchy shared by every module in the package."""


class ThetaError(ValueError):
    """Base class for domain errors raised by torus_theta."""


class InvalidInput(ThetaError):
    pass


class NotInvertible(ThetaError):
    pass


class SumNotZero(ThetaError):
    pass


class NonPrimitiveClass(ThetaError):
    pass


class NotRealizable(ThetaError):
    pass


class NoSolution(ThetaError):
    pass


class MultipleSolutions(ThetaError):
    pass


class DegenerateGeometry(ThetaError):
    pass
