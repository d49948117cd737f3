"""Exception hierarchy shared by the library and the command line front end."""


class HwfaceError(Exception):
    """Base class for all errors raised by hwface."""

    exit_code = 3


class InputError(HwfaceError, ValueError):
    """Bad user input: malformed diagram, out-of-range node, wrong preset."""

    exit_code = 1


class ValidationError(InputError):
    """A module description failed its consistency checks.

    ``diagnostics`` is a list of ``(node, message)`` pairs; ``node`` is a
    0-based node index or ``None`` for spec-level problems.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = []
        for node, msg in self.diagnostics:
            where = "spec" if node is None else f"node {node + 1}"
            lines.append(f"{where}: {msg}")
        super().__init__("; ".join(lines) or "invalid module spec")


class UnsupportedAssumptionError(InputError):
    """Raised when an operation needs the polyhedral-hull assumption and the
    spec does not assert it."""


class ResourceError(HwfaceError, RuntimeError):
    """An enumeration exceeded its configured cap."""

    exit_code = 2


class InvariantViolation(HwfaceError, AssertionError):
    """Two independent routes to the same quantity disagreed."""

    exit_code = 3
