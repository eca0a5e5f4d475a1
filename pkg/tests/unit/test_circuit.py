# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

import numpy as np
import pytest

from mctsynth.circuit import (
    Circuit,
    Gate,
    GateKind,
    LineRole,
    concatenate,
    inverse,
    make_roles,
    relabel,
    support,
    validate,
)
from mctsynth.errors import (
    BadRolesError,
    DuplicateLineError,
    GateStructureError,
    IndexOutOfRangeError,
    LineCollisionError,
    OutOfRangeError,
    WidthMismatchError,
)
from mctsynth.simulation import unitary
from tests.unit.fixtures import MctSynthUnitTestFixtures


class TestGate:
    def test_given_toffoli_when_support_then_all_three_lines_returned(self):
        assert support(Gate.ccx(0, 1, 2)) == frozenset({0, 1, 2})

    def test_given_peres_gate_when_pure_controls_then_only_first_control_returned(self):
        gate = Gate.peres(0, 1, 2)

        assert gate.pure_controls == frozenset({0})

    def test_given_toffoli_with_one_control_when_built_then_gate_structure_error_raised(self):
        with pytest.raises(GateStructureError):
            Gate(GateKind.CCX, (0,), 2)

    def test_given_controlled_root_without_exponent_when_built_then_gate_structure_error_raised(
        self,
    ):
        with pytest.raises(GateStructureError):
            Gate(GateKind.CRX, (0,), 1)

    def test_given_cnot_with_exponent_when_built_then_gate_structure_error_raised(self):
        with pytest.raises(GateStructureError):
            Gate(GateKind.CX, (0,), 1, k=2)

    @pytest.mark.parametrize(
        "gate,expected",
        [
            (Gate.cv(0, 1), Gate.cvd(0, 1)),
            (Gate.crx(2, 0, 3), Gate.crxd(2, 0, 3)),
            (Gate.peres(0, 1, 2), Gate.iperes(0, 1, 2)),
            (Gate.mct([0, 1, 2], 3), Gate.mct([0, 1, 2], 3)),
            (Gate.x(1), Gate.x(1)),
        ],
    )
    def test_given_gate_when_inverse_then_expected_gate_returned(self, gate, expected):
        assert gate.inverse() == expected
        assert gate.inverse().inverse() == gate

    def test_given_controlled_root_when_str_then_exponent_shown(self):
        assert str(Gate.crx(0, 1, 2)) == "crx(0, 1)[k=2]"


class TestValidate:
    def test_given_width_3_and_gate_on_line_3_when_validate_then_index_out_of_range_error_raised(
        self,
    ):
        with pytest.raises(IndexOutOfRangeError) as e:
            validate(Circuit(3, (Gate.cx(0, 3),)))

        assert e.value.line == 3
        assert e.value.width == 3

    def test_given_gate_with_repeated_line_when_validate_then_duplicate_line_error_raised(self):
        with pytest.raises(DuplicateLineError):
            validate(Circuit(2, (Gate.cx(1, 1),)))

    def test_given_roles_with_two_targets_when_validate_then_bad_roles_error_raised(self):
        roles = (LineRole.TARGET, LineRole.CONTROL, LineRole.TARGET)

        with pytest.raises(BadRolesError):
            validate(Circuit(3, (), roles))

    def test_given_roles_of_wrong_length_when_validate_then_bad_roles_error_raised(self):
        with pytest.raises(BadRolesError):
            validate(Circuit(3, (), make_roles(2, [0], 1)))

    def test_given_empty_circuit_when_validate_then_no_error(self):
        validate(Circuit(1))


class TestCircuitOperations(MctSynthUnitTestFixtures):
    def test_given_random_circuits_when_composed_with_inverse_then_identity(self):
        for _ in range(25):
            width = int(self.rng.integers(1, 6))
            circuit = self.random_circuit(width, int(self.rng.integers(0, 12)))

            composed = concatenate([circuit, inverse(circuit)])

            assert np.allclose(unitary(composed), np.eye(2**width), atol=1e-9)

    def test_given_two_circuits_when_concatenate_then_gates_joined_and_first_roles_kept(self):
        roles = make_roles(3, [0, 1], 2)
        first = Circuit(3, (Gate.cx(0, 1),), roles)
        second = Circuit(3, (Gate.ccx(0, 1, 2),))

        joined = concatenate([first, second])

        assert joined.gates == (Gate.cx(0, 1), Gate.ccx(0, 1, 2))
        assert joined.roles == roles

    def test_given_circuits_of_different_widths_when_concatenate_then_width_mismatch_error_raised(  # noqa: E501
        self,
    ):
        with pytest.raises(WidthMismatchError):
            concatenate([Circuit(2), Circuit(3)])

    def test_given_mapping_when_relabel_then_gates_moved_onto_wider_circuit(self):
        circuit = Circuit(3, (Gate.ccx(0, 1, 2), Gate.crx(2, 0, 2)))

        moved = relabel(circuit, [4, 0, 2], width=5)

        assert moved.width == 5
        assert moved.gates == (Gate.ccx(4, 0, 2), Gate.crx(2, 4, 2))
        assert moved.roles is None

    def test_given_no_circuits_when_concatenate_then_out_of_range_error_raised(self):
        with pytest.raises(OutOfRangeError):
            concatenate([])

    def test_given_non_injective_mapping_when_relabel_then_line_collision_error_raised(self):
        with pytest.raises(LineCollisionError) as e:
            relabel(Circuit(2, (Gate.cx(0, 1),)), {0: 1, 1: 1})

        assert e.value.lines == [1]

    def test_given_random_circuits_when_inverted_twice_then_identical_gate_for_gate(self):
        for _ in range(200):
            width = int(self.rng.integers(1, 8))
            circuit = self.random_circuit(width, int(self.rng.integers(0, 25)))

            assert inverse(inverse(circuit)) == circuit

    def test_given_mixed_circuit_when_queried_then_macro_and_permutation_flags_reported(self):
        macro = Circuit(3, (Gate.cv(0, 1), Gate.ccx(0, 1, 2)))
        elementary = Circuit(3, (Gate.cv(0, 1), Gate.cx(1, 2)))
        permutation = Circuit(3, (Gate.peres(0, 1, 2), Gate.mct([0], 1)))

        assert not macro.macro_free
        assert elementary.macro_free
        assert not elementary.is_permutation
        assert permutation.is_permutation
        assert macro.count(GateKind.CCX, GateKind.CV) == 2

    def test_given_roles_when_lines_with_role_then_lines_returned_in_order(self):
        circuit = Circuit(5, (), make_roles(5, [0, 1, 2], 3))

        assert circuit.lines_with_role(LineRole.CONTROL) == (0, 1, 2)
        assert circuit.lines_with_role(LineRole.TARGET) == (3,)
        assert circuit.lines_with_role(LineRole.ANCILLA) == (4,)
