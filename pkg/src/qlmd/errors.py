"""Package exception types."""


class QlmdError(Exception):
    """Base class for package errors."""


class ConfigError(QlmdError):
    """Invalid run configuration or input file."""


class UnsupportedElementError(QlmdError):
    """Element outside the s-orbital basis scope (Z > 2)."""


class CoincidentNucleiError(QlmdError):
    """Two nuclei closer than the integral engine tolerates."""


class SCFConvergenceError(QlmdError):
    """Restricted Hartree-Fock failed to converge within the iteration cap."""


class TermSetMismatchError(QlmdError):
    """Coefficient-derivative operator left the Hamiltonian's Pauli term set
    (signals coefficient pruning too aggressive for measurement reuse)."""


class SampleCacheMissError(QlmdError):
    """Force estimation in reuse mode found no cached measurement for a term."""


class StabilityError(QlmdError):
    """Friction-step product gamma*dt or zeta*dt reached 1 (time step too
    large or shot count too small for the requested temperature)."""


class NumericalAbortError(QlmdError):
    """Non-finite state component encountered during integration."""


class InitializationError(QlmdError):
    """Gradient-based parameter initialization stalled before reaching the
    target gradient norm."""
