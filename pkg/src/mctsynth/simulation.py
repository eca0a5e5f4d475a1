# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Exhaustive simulation and equivalence checking against a multi-controlled Toffoli.

States and unitaries are indexed by basis states with line 0 as the most significant
bit. Macro gates are simulated through their defining semantics, never through their
expansions, so that expansions can be checked against them.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from mctsynth.circuit import Circuit, Gate, GateKind
from mctsynth.config import SimulationConfig
from mctsynth.errors import (
    LineCollisionError,
    NotPermutationError,
    OutOfRangeError,
    WidthLimitExceededError,
    ZeroMatrixError,
)

logger = logging.getLogger(__name__)

X_MATRIX = np.array([[0, 1], [1, 0]], dtype=complex)
V_MATRIX = (1 + 1j) / 2 * np.array([[1, -1j], [-1j, 1]], dtype=complex)


class Verdict(Enum):
    """Outcome of checking a circuit against a multi-controlled Toffoli."""

    EXACT_UNITARY = "exact_unitary"
    MAINLINE_OK_WITH_GARBAGE = "mainline_ok_with_garbage"
    FAIL = "fail"


class EquivalenceReport(BaseModel):
    """Verdict of `check_mct` with the measurements it is based on."""

    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    max_deviation: float
    non_restored_lines: Tuple[int, ...] = ()
    basis_preserving: bool = True

    @model_validator(mode="after")
    def _exact_restores_everything(self) -> "EquivalenceReport":
        if self.verdict is Verdict.EXACT_UNITARY and self.non_restored_lines:
            raise ValueError("an exact match cannot leave lines unrestored")
        return self

    def summary(self) -> str:
        """Return the report as one `key=value` line."""
        non_restored = ",".join(str(line) for line in self.non_restored_lines) or "-"
        return (
            f"verdict={self.verdict.value} max_deviation={self.max_deviation:.3e} "
            f"non_restored={non_restored} basis_preserving={str(self.basis_preserving).lower()}"
        )


@dataclass(frozen=True)
class BasisOutcome:
    """Result of propagating one basis state through a circuit."""

    index: Optional[int]
    is_basis: bool
    amplitude: complex
    deviation: float


def root_of_x(k: int) -> np.ndarray:
    """Return the principal 2^k-th root of the X matrix."""
    phase = np.exp(1j * np.pi / 2**k)
    return np.array([[1 + phase, 1 - phase], [1 - phase, 1 + phase]], dtype=complex) / 2


def target_matrix(gate: Gate) -> np.ndarray:
    """Return the 2x2 matrix a controlled single-target gate applies to its target."""
    if gate.kind is GateKind.CV:
        return V_MATRIX
    if gate.kind is GateKind.CVD:
        return V_MATRIX.conj().T
    if gate.kind is GateKind.CRX:
        return root_of_x(gate.k or 1)
    if gate.kind is GateKind.CRXD:
        return root_of_x(gate.k or 1).conj().T
    return X_MATRIX


def _apply_controlled(
    state: np.ndarray, matrix: np.ndarray, controls: Sequence[int], target: int, width: int
) -> None:
    """Apply `matrix` to `target` where all `controls` are 1, in place.

    `state` has shape (2,) * width + (batch,).
    """
    index: List[object] = [slice(None)] * (width + 1)
    for control in controls:
        index[control] = 1
    region = state[tuple(index)]
    axis = target - sum(1 for control in controls if control < target)
    updated = np.tensordot(matrix, region, axes=([1], [axis]))
    state[tuple(index)] = np.moveaxis(updated, 0, axis)


def _apply_gate(state: np.ndarray, gate: Gate, width: int) -> None:
    if gate.kind in (GateKind.PERES, GateKind.IPERES):
        x1, x2, x3 = gate.lines
        steps = [((x1, x2), x3), ((x1,), x2)]
        if gate.kind is GateKind.IPERES:
            steps.reverse()
        for controls, target in steps:
            _apply_controlled(state, X_MATRIX, controls, target, width)
        return
    _apply_controlled(state, target_matrix(gate), gate.controls, gate.target, width)


def _propagate(circuit: Circuit, columns: np.ndarray) -> np.ndarray:
    """Apply the circuit to each column of a (2^width, batch) array."""
    width = circuit.width
    batch = columns.shape[1]
    state = np.array(columns, dtype=complex).reshape((2,) * width + (batch,))
    for gate in circuit.gates:
        _apply_gate(state, gate, width)
    return state.reshape(2**width, batch)


def unitary(circuit: Circuit, config: Optional[SimulationConfig] = None) -> np.ndarray:
    """Return the dense unitary of `circuit`; column j is the image of basis state j.

    Raises:
        WidthLimitExceededError: if the width is above the dense limit.
    """
    config = config or SimulationConfig()
    if circuit.width > config.dense_width_limit:
        raise WidthLimitExceededError(circuit.width, config.dense_width_limit, "dense")
    return _propagate(circuit, np.eye(2**circuit.width, dtype=complex))


def _check_basis_width(circuit: Circuit, config: SimulationConfig) -> None:
    if circuit.width > config.basis_width_limit:
        raise WidthLimitExceededError(circuit.width, config.basis_width_limit, "basis-state")


def _outcome(column: np.ndarray, tolerance: float) -> BasisOutcome:
    index = int(np.argmax(np.abs(column)))
    amplitude = complex(column[index])
    deviation = abs(1.0 - abs(amplitude))
    is_basis = deviation <= tolerance
    return BasisOutcome(
        index=index if is_basis else None,
        is_basis=is_basis,
        amplitude=amplitude,
        deviation=deviation,
    )


def apply_basis(
    circuit: Circuit, index: int, config: Optional[SimulationConfig] = None
) -> BasisOutcome:
    """Propagate one computational basis state and report whether a basis state comes out.

    Raises:
        WidthLimitExceededError: if the width is above the basis-state limit.
        OutOfRangeError: if `index` is not a basis state of the circuit.
    """
    config = config or SimulationConfig()
    _check_basis_width(circuit, config)
    if not 0 <= index < 2**circuit.width:
        raise OutOfRangeError("index", index, f"must be below 2**{circuit.width}")
    column = np.zeros((2**circuit.width, 1), dtype=complex)
    column[index, 0] = 1
    return _outcome(_propagate(circuit, column)[:, 0], config.tolerance)


def _basis_columns(dimension: int, indices: np.ndarray) -> np.ndarray:
    """Return the basis vectors with the given indices as columns."""
    columns = np.zeros((dimension, indices.size), dtype=complex)
    columns[indices, np.arange(indices.size)] = 1
    return columns


def _block_images(block: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Return (argmax index, amplitude deviation) of every column of `block`."""
    magnitudes = np.abs(block)
    images = np.argmax(magnitudes, axis=0)
    return images, np.abs(1.0 - magnitudes[images, np.arange(block.shape[1])])


def _basis_images(
    circuit: Circuit, config: SimulationConfig, dense: Optional[np.ndarray] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """Return (argmax index, amplitude deviation) for every basis input."""
    dimension = 2**circuit.width
    if dense is not None:
        chunks: Iterable[np.ndarray] = [dense]
    elif circuit.width <= config.dense_width_limit:
        chunks = [unitary(circuit, config)]
    else:
        size = max(1, config.batch_columns // dimension)
        chunks = (
            _propagate(
                circuit, _basis_columns(dimension, np.arange(start, min(start + size, dimension)))
            )
            for start in range(0, dimension, size)
        )
    images, deviations = zip(*(_block_images(block) for block in chunks))
    return np.concatenate(images), np.concatenate(deviations)


def _line_mask(lines: Iterable[int], width: int) -> int:
    return sum(1 << (width - 1 - line) for line in lines)


def _permutation_steps(circuit: Circuit) -> Iterator[Tuple[Sequence[int], int]]:
    """Yield (controls, target) of the controlled NOTs a permutation-only circuit applies.

    Raises:
        NotPermutationError: on reaching a controlled root of X.
    """
    for gate in circuit.gates:
        if not gate.kind.is_permutation:
            raise NotPermutationError(str(gate))
        if gate.kind in (GateKind.PERES, GateKind.IPERES):
            x1, x2, x3 = gate.lines
            steps = [((x1, x2), x3), ((x1,), x2)]
            if gate.kind is GateKind.IPERES:
                steps.reverse()
            yield from steps
        else:
            yield gate.controls, gate.target


def permute_basis(circuit: Circuit, index: int) -> int:
    """Return the image of a basis state under a permutation-only circuit, exactly.

    Raises:
        NotPermutationError: if the circuit holds a controlled root of X.
    """
    width = circuit.width
    for controls, target in _permutation_steps(circuit):
        mask = _line_mask(controls, width)
        if (index & mask) == mask:
            index ^= 1 << (width - 1 - target)
    return index


def permutation_images(circuit: Circuit) -> np.ndarray:
    """Return the exact image of every basis state under a permutation-only circuit.

    All inputs are carried through each gate at once as integer bit masks.

    Raises:
        NotPermutationError: if the circuit holds a controlled root of X.
    """
    width = circuit.width
    images = np.arange(2**width, dtype=np.int64)
    for controls, target in _permutation_steps(circuit):
        mask = _line_mask(controls, width)
        images ^= np.where((images & mask) == mask, 1 << (width - 1 - target), 0)
    return images


def truth_table(circuit: Circuit) -> List[int]:
    """Return the image of every basis state under a permutation-only circuit."""
    return permutation_images(circuit).tolist()


def global_phase_normalize(u: np.ndarray, threshold: float = 1e-6) -> np.ndarray:
    """Scale `u` so its first row-major entry above `threshold` in magnitude is real positive.

    Raises:
        ZeroMatrixError: if no entry exceeds the threshold.
    """
    significant = np.flatnonzero(np.abs(u) > threshold)
    if significant.size == 0:
        raise ZeroMatrixError(threshold)
    reference = u.flat[significant[0]]
    return u * (abs(reference) / reference)


def mct_images(width: int, controls: Sequence[int], target: int) -> np.ndarray:
    """Return the image of every basis state under the Toffoli gate on the given lines."""
    inputs = np.arange(2**width)
    control_mask = _line_mask(controls, width)
    fire = (inputs & control_mask) == control_mask
    return inputs ^ (fire * (1 << (width - 1 - target)))


def _distance_to_permutation(normalized: np.ndarray, images: np.ndarray) -> float:
    """Return the largest entry of `normalized` minus the permutation matrix of `images`.

    `normalized` is overwritten.
    """
    columns = np.arange(normalized.shape[1])
    on_permutation = float(np.max(np.abs(normalized[images, columns] - 1)))
    normalized[images, columns] = 0
    return max(on_permutation, float(np.max(np.abs(normalized))))


def _cross_check(
    circuit: Circuit,
    exact: np.ndarray,
    config: SimulationConfig,
    dense: Optional[np.ndarray],
) -> Tuple[float, bool]:
    """Compare exact permutation images with floating-point simulation.

    Every input is compared when the dense unitary is at hand. Otherwise an evenly spread
    sample of at most `cross_check_inputs` inputs is propagated in a single batch.

    Returns:
        The largest amplitude deviation seen and whether the images agree.
    """
    dimension = 2**circuit.width
    if dense is not None:
        indices = np.arange(dimension)
        block = dense
    else:
        count = min(config.cross_check_inputs, max(1, config.batch_columns // dimension))
        indices = np.unique(np.linspace(0, dimension - 1, num=count).astype(np.int64))
        block = _propagate(circuit, _basis_columns(dimension, indices))
    images, deviations = _block_images(block)
    return float(np.max(deviations)), bool(np.array_equal(images, exact[indices]))


def _check_lines(lines: Sequence[int], width: int) -> None:
    for line in lines:
        if not 0 <= line < width:
            raise OutOfRangeError("line", line, f"must be below the circuit width {width}")
    if len(set(lines)) != len(lines):
        raise LineCollisionError(line for line in lines if list(lines).count(line) > 1)


def _lines_of(mask: int, width: int) -> Tuple[int, ...]:
    return tuple(line for line in range(width) if mask & (1 << (width - 1 - line)))


def check_mct(
    circuit: Circuit,
    controls: Sequence[int],
    target: int,
    extra: Iterable[int] = (),
    config: Optional[SimulationConfig] = None,
) -> EquivalenceReport:
    """Check `circuit` against the Toffoli gate with the given controls and target.

    The verdict is `exact_unitary` when the dense unitary equals the Toffoli operator up
    to global phase (only tried up to the dense width limit). Otherwise it is
    `mainline_ok_with_garbage` when every basis input yields a basis output whose
    controls and target behave as the Toffoli gate and whose other changed lines all lie
    in `extra`, and `fail` in every other case. Lines other than the target that change
    on some input are reported as not restored.

    Basis outputs of permutation-only circuits come from exact bit-level simulation,
    cross-checked against floating-point propagation of every input (dense widths) or of
    a sample of inputs (wider circuits).

    Raises:
        WidthLimitExceededError: if the width is above the basis-state limit.
    """
    config = config or SimulationConfig()
    _check_basis_width(circuit, config)
    width = circuit.width
    extra_lines = tuple(extra)
    _check_lines(tuple(controls) + (target,) + extra_lines, width)
    expected = mct_images(width, controls, target)
    dense: Optional[np.ndarray] = None

    if width <= config.dense_width_limit:
        dense = unitary(circuit, config)
        deviation = _distance_to_permutation(
            global_phase_normalize(dense, config.phase_threshold), expected
        )
        if deviation <= config.tolerance:
            logger.info("Circuit on %d lines matches the Toffoli gate exactly", width)
            return EquivalenceReport(verdict=Verdict.EXACT_UNITARY, max_deviation=deviation)
        logger.debug("Unitary deviates by %.3e, checking basis behavior", deviation)

    consistent = True
    if circuit.is_permutation:
        images = permutation_images(circuit)
        max_deviation, consistent = _cross_check(circuit, images, config, dense)
        tolerance = config.permutation_tolerance
        if not consistent:
            logger.error("Floating point and exact permutation simulation disagree")
    else:
        images, deviations = _basis_images(circuit, config, dense)
        max_deviation = float(np.max(deviations))
        tolerance = config.tolerance
    basis_preserving = bool(max_deviation <= tolerance)
    inputs = np.arange(2**width)
    changed = int(np.bitwise_or.reduce(inputs ^ images))
    target_bit = 1 << (width - 1 - target)
    non_restored = _lines_of(changed & ~target_bit, width)
    main_mask = _line_mask(tuple(controls) + (target,), width)
    main_ok = consistent and bool(np.all((images & main_mask) == (expected & main_mask)))
    garbage_ok = set(non_restored) <= set(extra_lines)

    if basis_preserving and main_ok and garbage_ok:
        verdict = Verdict.MAINLINE_OK_WITH_GARBAGE
    else:
        verdict = Verdict.FAIL
    logger.info(
        "Circuit on %d lines: %s, non-restored lines %s", width, verdict.value, non_restored
    )
    return EquivalenceReport(
        verdict=verdict,
        max_deviation=max_deviation,
        non_restored_lines=non_restored,
        basis_preserving=basis_preserving,
    )
