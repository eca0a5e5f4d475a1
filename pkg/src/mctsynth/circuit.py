# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Gate set and circuits.

A circuit is a fixed number of lines and an ordered sequence of gates applied left to
right. Line 0 is the most significant bit of a basis-state index everywhere in this
package.

The gate set holds elementary gates (X, CX, controlled-V and its inverse, controlled
roots of X) and macro gates (Toffoli, Peres, inverse Peres, multi-controlled Toffoli)
which `mctsynth.decomposition.expand` lowers to elementary gates.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple, Union

from mctsynth.errors import (
    BadRolesError,
    DuplicateLineError,
    GateStructureError,
    IndexOutOfRangeError,
    LineCollisionError,
    OutOfRangeError,
    WidthMismatchError,
)

logger = logging.getLogger(__name__)


class GateKind(Enum):
    """Gate kinds; the value is the mnemonic of the circuit text format."""

    X = "x"
    CX = "cx"
    CCX = "ccx"
    CV = "cv"
    CVD = "cv+"
    CRX = "crx"
    CRXD = "crx+"
    PERES = "peres"
    IPERES = "peres+"
    MCT = "mct"

    @property
    def control_count(self) -> Optional[int]:
        """Number of control lines, `None` for MCT where it is free."""
        if self is GateKind.MCT:
            return None
        if self is GateKind.X:
            return 0
        if self in (GateKind.CCX, GateKind.PERES, GateKind.IPERES):
            return 2
        return 1

    @property
    def is_elementary(self) -> bool:
        """Whether the gate counts as one elementary operation."""
        return self in _ELEMENTARY

    @property
    def is_permutation(self) -> bool:
        """Whether the gate maps basis states to basis states."""
        return self in _PERMUTATION

    @property
    def is_v_type(self) -> bool:
        """Whether the gate applies a root of X to its target."""
        return self in _V_TYPE

    @property
    def is_self_inverse(self) -> bool:
        """Whether the gate is its own inverse."""
        return self in _SELF_INVERSE

    @property
    def is_controlled_x(self) -> bool:
        """Whether the gate is an X on its target under conjunctive controls."""
        return self in _SELF_INVERSE

    @property
    def has_root(self) -> bool:
        """Whether the gate carries a root exponent."""
        return self in (GateKind.CRX, GateKind.CRXD)


_ELEMENTARY = frozenset(
    {GateKind.X, GateKind.CX, GateKind.CV, GateKind.CVD, GateKind.CRX, GateKind.CRXD}
)
_V_TYPE = frozenset({GateKind.CV, GateKind.CVD, GateKind.CRX, GateKind.CRXD})
_SELF_INVERSE = frozenset({GateKind.X, GateKind.CX, GateKind.CCX, GateKind.MCT})
_PERMUTATION = _SELF_INVERSE | {GateKind.PERES, GateKind.IPERES}
_INVERSE_KIND = {
    GateKind.CV: GateKind.CVD,
    GateKind.CVD: GateKind.CV,
    GateKind.CRX: GateKind.CRXD,
    GateKind.CRXD: GateKind.CRX,
    GateKind.PERES: GateKind.IPERES,
    GateKind.IPERES: GateKind.PERES,
}


@dataclass(frozen=True)
class Gate:
    """One gate instance.

    For PERES and IPERES the controls are `(x1, x2)` and the target is `x3`: the gate
    flips `x3` under `x1 and x2` and additionally flips `x2` under `x1`.
    """

    kind: GateKind
    controls: Tuple[int, ...]
    target: int
    k: Optional[int] = None

    def __post_init__(self):
        """Check the number of controls and the root exponent."""
        expected = self.kind.control_count
        if expected is not None and len(self.controls) != expected:
            raise GateStructureError(
                f"{self.kind.value} takes {expected} control(s), got {len(self.controls)}"
            )
        if any(line < 0 for line in self.lines):
            raise GateStructureError(f"{self.kind.value} has a negative line index")
        if self.kind.has_root:
            if self.k is None or self.k < 1:
                raise GateStructureError(f"{self.kind.value} needs a root exponent k >= 1")
        elif self.k is not None:
            raise GateStructureError(f"{self.kind.value} takes no root exponent")

    @classmethod
    def x(cls, target: int) -> "Gate":
        """Build an X gate."""
        return cls(GateKind.X, (), target)

    @classmethod
    def cx(cls, control: int, target: int) -> "Gate":
        """Build a CNOT."""
        return cls(GateKind.CX, (control,), target)

    @classmethod
    def ccx(cls, control1: int, control2: int, target: int) -> "Gate":
        """Build a Toffoli gate."""
        return cls(GateKind.CCX, (control1, control2), target)

    @classmethod
    def cv(cls, control: int, target: int) -> "Gate":
        """Build a controlled-V."""
        return cls(GateKind.CV, (control,), target)

    @classmethod
    def cvd(cls, control: int, target: int) -> "Gate":
        """Build a controlled-V dagger."""
        return cls(GateKind.CVD, (control,), target)

    @classmethod
    def crx(cls, control: int, target: int, k: int) -> "Gate":
        """Build a controlled 2^k-th root of X."""
        return cls(GateKind.CRX, (control,), target, k)

    @classmethod
    def crxd(cls, control: int, target: int, k: int) -> "Gate":
        """Build the inverse of a controlled 2^k-th root of X."""
        return cls(GateKind.CRXD, (control,), target, k)

    @classmethod
    def peres(cls, x1: int, x2: int, x3: int) -> "Gate":
        """Build a Peres gate."""
        return cls(GateKind.PERES, (x1, x2), x3)

    @classmethod
    def iperes(cls, x1: int, x2: int, x3: int) -> "Gate":
        """Build an inverse Peres gate."""
        return cls(GateKind.IPERES, (x1, x2), x3)

    @classmethod
    def mct(cls, controls: Iterable[int], target: int) -> "Gate":
        """Build a multi-controlled Toffoli gate."""
        return cls(GateKind.MCT, tuple(controls), target)

    @property
    def lines(self) -> Tuple[int, ...]:
        """Controls followed by the target."""
        return self.controls + (self.target,)

    @property
    def support(self) -> FrozenSet[int]:
        """Lines the gate touches."""
        return frozenset(self.lines)

    @property
    def pure_controls(self) -> FrozenSet[int]:
        """Lines whose value the gate reads but never changes."""
        if self.kind in (GateKind.PERES, GateKind.IPERES):
            return frozenset(self.controls[:1])
        return frozenset(self.controls)

    def inverse(self) -> "Gate":
        """Return the gate undoing this one."""
        kind = _INVERSE_KIND.get(self.kind)
        if kind is None:
            return self
        return Gate(kind, self.controls, self.target, self.k)

    def __str__(self) -> str:
        """Return a compact description such as `ccx(0, 1, 2)`."""
        return f"{self.kind.value}({', '.join(str(line) for line in self.lines)})" + (
            f"[k={self.k}]" if self.k is not None else ""
        )


class LineRole(Enum):
    """Role of a circuit line; the value is its letter in the circuit text format."""

    CONTROL = "c"
    TARGET = "t"
    ANCILLA = "a"


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence over a fixed number of lines."""

    width: int
    gates: Tuple[Gate, ...] = ()
    roles: Optional[Tuple[LineRole, ...]] = field(default=None)

    def __len__(self) -> int:
        """Return the number of gates."""
        return len(self.gates)

    def count(self, *kinds: GateKind) -> int:
        """Return how many gates are of one of the given kinds."""
        return sum(1 for gate in self.gates if gate.kind in kinds)

    @property
    def macro_free(self) -> bool:
        """Whether only elementary gates remain."""
        return all(gate.kind.is_elementary for gate in self.gates)

    @property
    def is_permutation(self) -> bool:
        """Whether every gate is a permutation gate."""
        return all(gate.kind.is_permutation for gate in self.gates)

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        """Return a circuit on the same lines and roles with another gate sequence."""
        return Circuit(self.width, tuple(gates), self.roles)

    def lines_with_role(self, role: LineRole) -> Tuple[int, ...]:
        """Return the lines carrying `role`, in increasing order."""
        if self.roles is None:
            return ()
        return tuple(line for line, r in enumerate(self.roles) if r is role)


def make_roles(width: int, controls: Sequence[int], target: int) -> Tuple[LineRole, ...]:
    """Return roles marking `controls` and `target`; every other line is an ancilla."""
    roles = [LineRole.ANCILLA] * width
    for line in controls:
        roles[line] = LineRole.CONTROL
    roles[target] = LineRole.TARGET
    return tuple(roles)


def validate(circuit: Circuit) -> None:
    """Check that every gate fits the circuit and the roles name a single target.

    Raises:
        IndexOutOfRangeError: if a gate references a line >= width.
        DuplicateLineError: if a gate uses a line twice.
        BadRolesError: if roles are present but do not have exactly one target.
    """
    for gate in circuit.gates:
        seen = set()
        for line in gate.lines:
            if line >= circuit.width:
                raise IndexOutOfRangeError(str(gate), line, circuit.width)
            if line in seen:
                raise DuplicateLineError(str(gate), line)
            seen.add(line)
    if circuit.roles is None:
        return
    if len(circuit.roles) != circuit.width:
        raise BadRolesError(f"{len(circuit.roles)} roles for {circuit.width} lines")
    targets = circuit.lines_with_role(LineRole.TARGET)
    if len(targets) != 1:
        raise BadRolesError(f"expected exactly one target line, found {len(targets)}")


def support(gate: Gate) -> FrozenSet[int]:
    """Return the set of lines the gate touches."""
    return gate.support


def inverse(circuit: Circuit) -> Circuit:
    """Return the circuit that undoes `circuit`: reversed order, every gate inverted."""
    return circuit.with_gates(gate.inverse() for gate in reversed(circuit.gates))


def relabel(
    circuit: Circuit,
    mapping: Union[Sequence[int], Mapping[int, int]],
    width: Optional[int] = None,
) -> Circuit:
    """Move the gates of `circuit` onto other lines.

    Args:
        circuit: The circuit to move.
        mapping: New index of every old line, injective.
        width: Width of the result, defaults to the width of `circuit`.

    Returns:
        The relabelled circuit; roles are dropped since the target may change meaning.

    Raises:
        LineCollisionError: if two old lines map to the same new line.
    """
    lookup = dict(enumerate(mapping)) if isinstance(mapping, Sequence) else dict(mapping)
    if len(set(lookup.values())) != len(lookup):
        images = list(lookup.values())
        raise LineCollisionError(line for line in images if images.count(line) > 1)

    def move(gate: Gate) -> Gate:
        return Gate(
            gate.kind, tuple(lookup[line] for line in gate.controls), lookup[gate.target], gate.k
        )

    return Circuit(width if width is not None else circuit.width, tuple(map(move, circuit.gates)))


def concatenate(circuits: Sequence[Circuit]) -> Circuit:
    """Join same-width circuits in order; roles of the first circuit are kept.

    Raises:
        OutOfRangeError: if `circuits` is empty.
        WidthMismatchError: if the widths differ.
    """
    if not circuits:
        raise OutOfRangeError("circuits", 0, "needs at least one circuit")
    widths = {c.width for c in circuits}
    if len(widths) != 1:
        raise WidthMismatchError(widths)
    return circuits[0].with_gates(gate for c in circuits for gate in c.gates)
