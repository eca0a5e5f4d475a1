# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Synthesis, costing and verification of multi-controlled Toffoli gate networks."""

from mctsynth.circuit import Circuit, Gate, GateKind, LineRole
from mctsynth.cost import CostRow, circuit_cost, formula_cost, gate_cost
from mctsynth.decomposition import (
    Strategy,
    SynthesisResult,
    corollary74,
    expand,
    lemma71,
    lemma72,
    synthesize,
)
from mctsynth.errors import MctSynthError
from mctsynth.optimizer import cancel_pairs, commutes
from mctsynth.simulation import EquivalenceReport, Verdict, check_mct, unitary
from mctsynth.table import cost_table

__all__ = [
    "Circuit",
    "CostRow",
    "EquivalenceReport",
    "Gate",
    "GateKind",
    "LineRole",
    "MctSynthError",
    "Strategy",
    "SynthesisResult",
    "Verdict",
    "cancel_pairs",
    "check_mct",
    "circuit_cost",
    "commutes",
    "corollary74",
    "cost_table",
    "expand",
    "formula_cost",
    "gate_cost",
    "lemma71",
    "lemma72",
    "synthesize",
    "unitary",
]
