"""Exception hierarchy shared by all hydromoments modules."""


class HydromomentsError(Exception):
    """Base class for all library errors."""


class DimensionTooSmall(HydromomentsError):
    pass


class QuantumNumberOutOfRange(HydromomentsError):
    pass


class NonpositiveCharge(HydromomentsError):
    pass


class OrderOutOfDomain(HydromomentsError):
    pass


class OrderOutOfRegime(HydromomentsError):
    pass


class SingularDenominator(HydromomentsError):
    pass


class CancellationOverflow(HydromomentsError):
    pass


class NotCircular(HydromomentsError):
    pass


class NotSWave(HydromomentsError):
    pass


class QuadratureFailure(HydromomentsError):
    pass


class NonpositiveArgument(HydromomentsError):
    pass


class UnsupportedArgument(HydromomentsError):
    pass


class PoleInBottomParameter(HydromomentsError):
    pass


class NonTerminating(HydromomentsError):
    pass


class ParameterOutOfRange(HydromomentsError):
    pass


class NonpositiveParameters(HydromomentsError):
    pass
