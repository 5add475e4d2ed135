"""Exception types the CLI maps onto distinct exit codes."""


class ResourceLimitError(RuntimeError):
    """A state or unitary would exceed the documented size limits."""


class NormDriftError(RuntimeError):
    """Statevector norm drifted past 1e-8: an internal kernel bug, never user error."""


class QasmExportError(ValueError):
    """The circuit contains an op outside the exportable OpenQASM 2.0 subset."""
