# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Reading and writing the line-oriented circuit text format.

Example:
    .lines 4
    .roles c c c t
    mct 0 1 2 : 3
    crx 0 3 k=2
    .end

`#` starts a comment; blank lines are ignored.
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from mctsynth.circuit import Circuit, Gate, GateKind, LineRole, validate
from mctsynth.errors import CircuitSyntaxError, GateStructureError
from mctsynth.templating import render

logger = logging.getLogger(__name__)

CIRCUIT_TEMPLATE = "circuit.j2"

_MNEMONICS = {kind.value: kind for kind in GateKind}


def format_gate(gate: Gate) -> str:
    """Return the text form of one gate, e.g. `mct 0 1 2 : 3` or `crx 0 1 k=2`."""
    if gate.kind is GateKind.MCT:
        operands = [str(line) for line in gate.controls] + [":", str(gate.target)]
    else:
        operands = [str(line) for line in gate.lines]
    if gate.k is not None:
        operands.append(f"k={gate.k}")
    return " ".join([gate.kind.value] + operands)


def serialize(circuit: Circuit) -> str:
    """Render `circuit` in the text format, LF line endings and a final newline."""
    roles = [role.value for role in circuit.roles] if circuit.roles is not None else None
    return render(
        CIRCUIT_TEMPLATE,
        width=circuit.width,
        roles=roles,
        gates=[format_gate(gate) for gate in circuit.gates],
    )


def _parse_index(token: str, line_number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise CircuitSyntaxError(line_number, token, "expected a non-negative line index")
    return int(token)


def _parse_gate(tokens: Sequence[str], line_number: int) -> Gate:
    mnemonic, operands = tokens[0], list(tokens[1:])
    kind = _MNEMONICS.get(mnemonic)
    if kind is None:
        raise CircuitSyntaxError(line_number, mnemonic, "unknown gate mnemonic")
    k: Optional[int] = None
    if kind.has_root:
        if not operands or not operands[-1].startswith("k="):
            raise CircuitSyntaxError(line_number, mnemonic, "missing root exponent k=<int>")
        exponent = operands.pop()
        k = _parse_index(exponent[2:], line_number)
    if kind is GateKind.MCT:
        if operands.count(":") != 1 or operands.index(":") != len(operands) - 2:
            raise CircuitSyntaxError(
                line_number, mnemonic, "expected 'mct <controls> : <target>'"
            )
        operands.remove(":")
    if not operands:
        raise CircuitSyntaxError(line_number, mnemonic, "missing target line")
    lines = [_parse_index(token, line_number) for token in operands]
    try:
        return Gate(kind, tuple(lines[:-1]), lines[-1], k)
    except GateStructureError as e:
        raise CircuitSyntaxError(line_number, mnemonic, e.message) from e


def _parse_roles(tokens: Sequence[str], line_number: int) -> Tuple[LineRole, ...]:
    roles = []
    for token in tokens:
        try:
            roles.append(LineRole(token))
        except ValueError as e:
            raise CircuitSyntaxError(line_number, token, "role must be one of c, t, a") from e
    return tuple(roles)


def parse(text: str) -> Circuit:
    """Parse circuit text and validate the result.

    Raises:
        CircuitSyntaxError: on malformed text, with the 1-based line number.
        CircuitValidationError: if the parsed circuit is not well formed.
    """
    width: Optional[int] = None
    roles: Optional[Tuple[LineRole, ...]] = None
    gates: List[Gate] = []
    ended = False
    line_number = 0
    for line_number, raw in enumerate(text.split("\n"), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head = tokens[0]
        if ended:
            raise CircuitSyntaxError(line_number, head, "content after .end")
        if width is None:
            if head != ".lines" or len(tokens) != 2:
                raise CircuitSyntaxError(line_number, head, "expected '.lines <n>' header")
            width = _parse_index(tokens[1], line_number)
            if width < 1:
                raise CircuitSyntaxError(line_number, tokens[1], "a circuit needs a line")
        elif head == ".roles":
            if roles is not None or gates:
                raise CircuitSyntaxError(line_number, head, ".roles must follow .lines")
            roles = _parse_roles(tokens[1:], line_number)
        elif head == ".end":
            if len(tokens) != 1:
                raise CircuitSyntaxError(line_number, tokens[1], "unexpected token after .end")
            ended = True
        else:
            gates.append(_parse_gate(tokens, line_number))
    if width is None:
        raise CircuitSyntaxError(max(line_number, 1), None, "missing '.lines <n>' header")
    if not ended:
        raise CircuitSyntaxError(line_number, None, "missing .end")
    circuit = Circuit(width, tuple(gates), roles)
    validate(circuit)
    logger.debug("Parsed %d gate(s) on %d line(s)", len(gates), width)
    return circuit


def load_circuit(path: Union[str, Path]) -> Circuit:
    """Read and parse a circuit file."""
    return parse(Path(path).read_text(encoding="utf-8"))


def save_circuit(circuit: Circuit, path: Union[str, Path]) -> None:
    """Write `circuit` to `path` in the text format."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize(circuit))
    logger.info("Wrote %d gate(s) to %s", len(circuit), path)
