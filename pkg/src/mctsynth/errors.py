# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Errors raised by mctsynth."""

from typing import Iterable, Optional


class MctSynthError(Exception):
    """Base class for custom errors raised by this package."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ConfigurationError(MctSynthError):
    """Raised when user-provided configuration fails validation."""


class CircuitValidationError(MctSynthError):
    """Raised when a circuit violates its well-formedness invariants."""


class GateStructureError(MctSynthError):
    """Raised if a gate has the wrong number of controls or a bad root exponent."""


class IndexOutOfRangeError(CircuitValidationError):
    """Raised if a gate references a line outside the circuit."""

    def __init__(self, gate: str, line: int, width: int):
        self.gate = gate
        self.line = line
        self.width = width
        super().__init__(f"Gate '{gate}' references line {line} but the circuit has {width}")


class DuplicateLineError(CircuitValidationError):
    """Raised if a gate or a construction uses one line twice."""

    def __init__(self, gate: str, line: int):
        self.gate = gate
        self.line = line
        super().__init__(f"Gate '{gate}' uses line {line} more than once")


class BadRolesError(CircuitValidationError):
    """Raised if line roles are present but do not single out exactly one target."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid line roles: {reason}")


class WidthMismatchError(CircuitValidationError):
    """Raised if circuits of different widths are joined."""

    def __init__(self, widths: Iterable[int]):
        self.widths = sorted(set(widths))
        super().__init__(f"Cannot join circuits of widths {self.widths}")


class UnknownFormulaError(MctSynthError):
    """Raised if a closed-form cost is requested under a name that has none."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"No closed-form cost named '{name}'")


class LineCollisionError(MctSynthError):
    """Raised if the lines handed to a construction overlap."""

    def __init__(self, lines: Iterable[int]):
        self.lines = sorted(set(lines))
        super().__init__(f"Lines {self.lines} are assigned more than one role")


class OutOfRangeError(MctSynthError):
    """Raised if a size parameter is outside the range a construction supports."""

    def __init__(self, what: str, value: int, constraint: str):
        self.what = what
        self.value = value
        self.constraint = constraint
        super().__init__(f"{what}={value} is out of range: {constraint}")


class InfeasibleError(MctSynthError):
    """Raised if an explicitly requested construction needs more garbage than allowed."""

    def __init__(self, strategy: str, garbage: int, budget: int):
        self.strategy = strategy
        self.garbage = garbage
        self.budget = budget
        super().__init__(
            f"Strategy '{strategy}' needs {garbage} garbage line(s), budget is {budget}"
        )


class WidthLimitExceededError(MctSynthError):
    """Raised if a simulation is requested for a circuit wider than the configured limit."""

    def __init__(self, width: int, limit: int, kind: str):
        self.width = width
        self.limit = limit
        super().__init__(f"Width {width} exceeds the {kind} simulation limit of {limit}")


class ZeroMatrixError(MctSynthError):
    """Raised if global phase normalization finds no significant entry."""

    def __init__(self, threshold: float):
        super().__init__(f"No entry of magnitude above {threshold} to normalize against")


class NotPermutationError(MctSynthError):
    """Raised if exact permutation simulation meets a non-permutation gate."""

    def __init__(self, gate: str):
        self.gate = gate
        super().__init__(f"Gate '{gate}' is not a permutation gate")


class CircuitSyntaxError(MctSynthError):
    """Raised when circuit text cannot be parsed."""

    def __init__(self, line_number: int, token: Optional[str], reason: str):
        self.line_number = line_number
        self.token = token
        self.reason = reason
        where = f"line {line_number}" + (f", token '{token}'" if token is not None else "")
        super().__init__(f"Syntax error at {where}: {reason}")


class UsageError(MctSynthError):
    """Raised when command-line arguments are missing or malformed."""
