"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class InvalidLabelError(DomainError):
    """A quantum-number triple does not label any realizable string."""


class ConvergenceError(RuntimeError):
    """An iterative procedure exhausted its budget without converging."""


class UndersampledError(RuntimeError):
    """Samples are too sparse for the requested topological computation."""


class SingularSampleError(RuntimeError):
    """A curve sample fell on (or numerically at) a projection pole."""


class VertexError(RuntimeError):
    """The conformal arclength density vanished; invariants degenerate."""


class FrameDriftError(RuntimeError):
    """Frame integration left the structure group beyond tolerance."""
