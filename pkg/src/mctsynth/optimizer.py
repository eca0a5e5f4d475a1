# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Peephole pass moving identical self-inverse gates together and cancelling them."""

import logging
from typing import Callable, List, Optional

from mctsynth.circuit import Circuit, Gate

logger = logging.getLogger(__name__)

CommuteCallback = Callable[[Gate, Gate], None]


def _is_x_type(gate: Gate) -> bool:
    return gate.kind.is_controlled_x


def commutes(first: Gate, second: Gate) -> bool:
    """Return whether two gates may be swapped without changing the circuit operator.

    The rules are conservative, `False` makes no claim:

    - the gates touch disjoint lines;
    - both are controlled-X gates (Peres gates excluded) and neither target is a control
      of the other;
    - one of them is a controlled root of X and every shared line is a control the
      other gate never changes.
    """
    shared = first.support & second.support
    if not shared:
        return True
    if _is_x_type(first) and _is_x_type(second):
        return first.target not in second.controls and second.target not in first.controls
    if first.kind.is_v_type or second.kind.is_v_type:
        return all(
            line in first.pure_controls and line in second.pure_controls for line in shared
        )
    return False


def _same(first: Gate, second: Gate) -> bool:
    return (
        first.kind is second.kind
        and first.target == second.target
        and frozenset(first.controls) == frozenset(second.controls)
    )


def _find_partner(gates: List[Gate], index: int) -> Optional[int]:
    """Return the index of the gate cancelling `gates[index]`, if one can be reached."""
    gate = gates[index]
    for later in range(index + 1, len(gates)):
        if _same(gate, gates[later]):
            return later
        if not commutes(gate, gates[later]):
            return None
    return None


def cancel_pairs(circuit: Circuit, on_commute: Optional[CommuteCallback] = None) -> Circuit:
    """Remove pairs of identical self-inverse gates separated only by commuting gates.

    The leftmost gate with a reachable partner is cancelled first and the scan repeats
    until no pair is left.

    Args:
        circuit: The circuit to simplify.
        on_commute: Called with (moved gate, gate it moved past) for every commutation a
            cancellation relied on.

    Returns:
        A circuit with the same operator, roles and width and no more gates.
    """
    gates = list(circuit.gates)
    removed = 0
    while True:
        for index, gate in enumerate(gates):
            if not gate.kind.is_self_inverse:
                continue
            partner = _find_partner(gates, index)
            if partner is None:
                continue
            if on_commute is not None:
                for between in gates[index + 1 : partner]:
                    on_commute(gate, between)
            logger.debug(
                "Cancelling %s at positions %d and %d past %d gate(s)",
                gate,
                index,
                partner,
                partner - index - 1,
            )
            del gates[partner]
            del gates[index]
            removed += 2
            break
        else:
            break
    if removed:
        logger.info("Removed %d gate(s), %d left", removed, len(gates))
    return circuit.with_gates(gates)
