# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

from typing import Sequence

import numpy as np
import pytest

from mctsynth.circuit import Circuit, Gate, GateKind
from mctsynth.config import SimulationConfig
from mctsynth.simulation import global_phase_normalize, unitary

RANDOM_SEED = 20260101

RANDOM_KINDS = (
    GateKind.X,
    GateKind.CX,
    GateKind.CCX,
    GateKind.CV,
    GateKind.CVD,
    GateKind.CRX,
    GateKind.CRXD,
    GateKind.PERES,
    GateKind.IPERES,
    GateKind.MCT,
)

PERMUTATION_KINDS = tuple(kind for kind in RANDOM_KINDS if kind.is_permutation)


class MctSynthUnitTestFixtures:
    @pytest.fixture(autouse=True)
    def setup(self):
        self.rng = np.random.default_rng(RANDOM_SEED)
        self.simulation_config = SimulationConfig()

    def random_gate(self, width: int, kinds: Sequence[GateKind] = RANDOM_KINDS) -> Gate:
        kind = kinds[int(self.rng.integers(len(kinds)))]
        if kind is GateKind.MCT:
            controls = int(self.rng.integers(0, width))
        else:
            controls = kind.control_count or 0
            if controls + 1 > width:
                kind, controls = GateKind.X, 0
        lines = [int(line) for line in self.rng.permutation(width)[: controls + 1]]
        k = int(self.rng.integers(1, 4)) if kind.has_root else None
        return Gate(kind, tuple(lines[:-1]), lines[-1], k)

    def random_circuit(
        self, width: int, length: int, kinds: Sequence[GateKind] = RANDOM_KINDS
    ) -> Circuit:
        return Circuit(width, tuple(self.random_gate(width, kinds) for _ in range(length)))

    @staticmethod
    def assert_same_operator(first: Circuit, second: Circuit, tolerance: float = 1e-9) -> None:
        left = global_phase_normalize(unitary(first))
        right = global_phase_normalize(unitary(second))
        assert np.max(np.abs(left - right)) <= tolerance
