# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Quantum cost of gates and circuits, and the closed-form cost formulas.

One-qubit gates and all controlled-V type gates count as one elementary operation.
The cost of a circuit is the sum of the costs of its gates.
"""

import logging
from enum import Enum
from typing import Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mctsynth.circuit import Circuit, Gate, GateKind
from mctsynth.errors import OutOfRangeError, UnknownFormulaError

logger = logging.getLogger(__name__)

ELEMENTARY_COST = 1
PERES_COST = 4
TOFFOLI_COST = 5


class Formula(Enum):
    """Closed forms for the cost (or gate count) of a construction with m controls."""

    LEMMA71 = "lemma71"
    LEMMA72_TOFFOLI_COUNT = "lemma72_toffoli_count"
    LEMMA72_PERES = "lemma72_peres"
    COR74_PERES = "cor74_peres"
    COR74_BARENCO = "cor74_barenco"
    COR74_TOFFOLI_COUNT = "cor74_toffoli_count"
    PERES_GATE_COUNT = "toffoli_peres_gate_count"

    @property
    def minimum_controls(self) -> int:
        """Smallest m for which the formula is valid."""
        if self is Formula.LEMMA71:
            return 1
        if self in _LADDER_FORMULAS:
            return 3
        return 5


_LADDER_FORMULAS = frozenset(
    {Formula.LEMMA72_TOFFOLI_COUNT, Formula.LEMMA72_PERES, Formula.PERES_GATE_COUNT}
)


def mct_cost(controls: int) -> int:
    """Return the garbage-free cost of a Toffoli gate with the given number of controls."""
    if controls <= 1:
        return ELEMENTARY_COST
    return formula_cost(Formula.LEMMA71, controls)


def gate_cost(gate: Gate) -> int:
    """Return the quantum cost of one gate.

    Macro gates cost what their cheapest garbage-free realization costs, so costing a
    macro circuit never assumes free ancillas.
    """
    if gate.kind.is_elementary:
        return ELEMENTARY_COST
    if gate.kind in (GateKind.PERES, GateKind.IPERES):
        return PERES_COST
    if gate.kind is GateKind.CCX:
        return TOFFOLI_COST
    return mct_cost(len(gate.controls))


def circuit_cost(circuit: Circuit) -> int:
    """Return the sum of the gate costs of `circuit`."""
    return sum(gate_cost(gate) for gate in circuit.gates)


def formula_cost(strategy: Union[Formula, str], m: int) -> int:
    """Evaluate a closed-form cost.

    Args:
        strategy: Which formula, as a `Formula` or its value.
        m: Number of controls of the Toffoli gate.

    Returns:
        The value of the formula.

    Raises:
        OutOfRangeError: if m is below the formula's minimum.
        UnknownFormulaError: if the strategy is unknown.
    """
    try:
        formula = Formula(strategy)
    except ValueError as e:
        raise UnknownFormulaError(str(strategy)) from e
    if m < formula.minimum_controls:
        raise OutOfRangeError("m", m, f"{formula.value} needs m >= {formula.minimum_controls}")
    if formula is Formula.LEMMA71:
        return 2 ** (m + 1) - 3
    if formula in (Formula.LEMMA72_TOFFOLI_COUNT, Formula.PERES_GATE_COUNT):
        return 4 * (m - 2)
    if formula is Formula.LEMMA72_PERES:
        return 16 * m - 32
    if formula is Formula.COR74_PERES:
        return 32 * m - 96
    if formula is Formula.COR74_TOFFOLI_COUNT:
        return 8 * (m - 3)
    return 48 * m - 116


class CostRow(BaseModel):
    """One row of the cost table."""

    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1, description="Number of lines of the Toffoli gate, m + 1.")
    garbage: int = Field(ge=0)
    cost: int = Field(ge=0)
    strategy: str
    uses_peres: bool = False

    @model_validator(mode="after")
    def _positive_cost(self) -> "CostRow":
        if self.cost < 1:
            raise ValueError(f"size {self.size} must cost at least 1")
        return self
