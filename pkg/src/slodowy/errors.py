"""Exception hierarchy.

Input errors (bad partitions, shape problems, non-generic data) derive from
:class:`InputError`; the CLI maps them to exit status 1.  Failures of an
internal cross-check derive from :class:`ConsistencyError` (exit status 2).
"""


class SlodowyError(Exception):
    pass


class InputError(SlodowyError, ValueError):
    pass


class ConsistencyError(SlodowyError, RuntimeError):
    pass


class ParseError(InputError):
    pass


class NotAPartition(InputError):
    pass


class SizeMismatch(InputError):
    pass


class NotNested(InputError):
    pass


class DegenerateAmbient(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ShapeError(InputError):
    pass


class NotOnFiber(InputError):
    pass


class NotStable(InputError):
    pass


class IncidenceViolation(InputError):
    pass


class NotNilpotent(InputError):
    pass


class ExactnessFailure(InputError):
    pass


class SamplingExhausted(SlodowyError):
    """Raised by randomized estimators that found no usable sample."""


class InternalInconsistency(ConsistencyError):
    pass
