"""Exception hierarchy shared by the whole package."""


class ChemKernelError(Exception):
    """Base class for all package-specific errors."""


class CadlSyntaxError(ChemKernelError):
    """Malformed source text; carries a 1-based line/column position."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column


class CadlSemanticError(ChemKernelError):
    """Well-formed text describing an invalid network (unknown species,
    non-positive rate coefficient, duplicate name, ...)."""


class SearchBoundExceeded(ChemKernelError):
    """Conserved-quantity search refused: too many species to enumerate."""


class NegativeConcentration(ChemKernelError):
    """An injection or withdrawal would drive a concentration below zero."""


class PatchConflict(ChemKernelError):
    """A reconfiguration patch references entities absent from the target
    network, or would create duplicates."""


class ResourceExceeded(ChemKernelError):
    """Network does not fit the engine's reserved resources."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class MalformedMap(ChemKernelError):
    """Register map violates the layout invariants (non-contiguous or
    mixed-address records within a slot)."""


class IneligibleReaction(ChemKernelError):
    """Reaction applied while some reactant cell holds fewer molecules than
    the reaction consumes."""


class NotAFixedPoint(ChemKernelError):
    """Linearization requested at a point where the rate of change is not
    negligible."""


class IntegrationError(ChemKernelError):
    """The ODE integrator gave up (step-size underflow on a stiff system)."""


class ScenarioError(ChemKernelError):
    """Scenario description is inconsistent (dangling references, bad
    schedule, species role conflicts)."""


class UsageError(ChemKernelError):
    """Bad command-line invocation or unreadable input file."""
