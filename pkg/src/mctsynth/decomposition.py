# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Networks realizing multi-controlled Toffoli gates.

Constructions, all on lines laid out as controls `0..m-1`, target `m` and extra lines
from `m+1` upwards unless explicit lines are given:

- `expand_peres` / `expand_toffoli3`: four and five gate realizations over
  {CV, CV+, CX} of the Peres and Toffoli gates.
- `lemma71`: the garbage-free gray-code network of 2^(m+1)-3 controlled roots of X and
  CNOTs.
- `lemma72`: the V-shaped Toffoli ladder borrowing m-2 lines of arbitrary value, and its
  variant where every Toffoli becomes a Peres or inverse Peres gate.
- `corollary74`: one extra line and two ladders applied as A, B, A, B.
- `synthesize`: the cheapest of the above for a gate size and a garbage budget.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from mctsynth.circuit import (
    Circuit,
    Gate,
    GateKind,
    concatenate,
    make_roles,
    relabel,
    validate,
)
from mctsynth.config import SynthesisConfig
from mctsynth.cost import Formula, circuit_cost, formula_cost, mct_cost
from mctsynth.errors import (
    DuplicateLineError,
    InfeasibleError,
    LineCollisionError,
    OutOfRangeError,
)

logger = logging.getLogger(__name__)

MIN_LADDER_WIDTH = 5


class Strategy(Enum):
    """Constructions the selector can be asked for by name."""

    AUTO = "auto"
    LEMMA71 = "lemma71"
    LEMMA72 = "lemma72"
    LEMMA72_PERES = "lemma72-peres"
    COR74 = "cor74"
    COR74_PERES = "cor74-peres"


@dataclass(frozen=True)
class SynthesisResult:
    """A network for one Toffoli gate together with its accounting.

    `garbage_reported` follows the published accounting (extra lines the construction
    consumes); whether those lines actually come back restored is measured by
    `mctsynth.simulation.check_mct`.
    """

    circuit: Circuit
    main_lines: Tuple[int, ...]
    extra_lines: FrozenSet[int]
    cost: int
    garbage_reported: int
    strategy: str

    @property
    def controls(self) -> Tuple[int, ...]:
        """Control lines, in order."""
        return self.main_lines[:-1]

    @property
    def target(self) -> int:
        """Target line."""
        return self.main_lines[-1]

    @property
    def width(self) -> int:
        """Number of lines of the network."""
        return self.circuit.width

    @property
    def uses_peres(self) -> bool:
        """Whether the network contains Peres or inverse Peres gates."""
        return self.circuit.count(GateKind.PERES, GateKind.IPERES) > 0

    def expanded(self) -> "SynthesisResult":
        """Return the same result with every macro gate lowered to elementary gates."""
        return replace(self, circuit=expand(self.circuit))


def _ensure_distinct(lines: Sequence[int]) -> None:
    if len(set(lines)) != len(lines):
        duplicates = [line for line in lines if list(lines).count(line) > 1]
        raise LineCollisionError(duplicates)


def _ensure_within(lines: Sequence[int], width: int) -> None:
    for line in lines:
        if line >= width:
            raise OutOfRangeError("line", line, f"must be below the network width {width}")


def _result(
    gates: Sequence[Gate],
    width: int,
    controls: Sequence[int],
    target: int,
    garbage: int,
    strategy: str,
) -> SynthesisResult:
    circuit = Circuit(width, tuple(gates), make_roles(width, controls, target))
    validate(circuit)
    main_lines = tuple(controls) + (target,)
    extra_lines = frozenset(range(width)) - frozenset(main_lines)
    if garbage > len(extra_lines):
        raise OutOfRangeError("garbage", garbage, f"at most {len(extra_lines)} extra lines")
    return SynthesisResult(
        circuit=circuit,
        main_lines=main_lines,
        extra_lines=extra_lines,
        cost=circuit_cost(expand(circuit)),
        garbage_reported=garbage,
        strategy=strategy,
    )


def expand_peres(
    x1: int, x2: int, x3: int, inverted: bool = False, width: Optional[int] = None
) -> Circuit:
    """Return the four-gate realization of a Peres gate or of its inverse.

    The Peres gate is a Toffoli gate `ccx(x1, x2, x3)` followed by `cx(x1, x2)`. The
    inverse is the same four gates reversed and individually inverted.

    Raises:
        DuplicateLineError: if two of the lines coincide.
    """
    _check_gate_lines("peres+" if inverted else "peres", (x1, x2, x3))
    gates = [Gate.cv(x2, x3), Gate.cx(x1, x2), Gate.cvd(x2, x3), Gate.cv(x1, x3)]
    if inverted:
        gates = [gate.inverse() for gate in reversed(gates)]
    return Circuit(width if width is not None else max(x1, x2, x3) + 1, tuple(gates))


def expand_toffoli3(c1: int, c2: int, t: int, width: Optional[int] = None) -> Circuit:
    """Return the five-gate realization of `ccx(c1, c2, t)` over {CV, CV+, CX}.

    Raises:
        DuplicateLineError: if two of the lines coincide.
    """
    _check_gate_lines("ccx", (c1, c2, t))
    gates = _gray_code_network((c1, c2), t, Gate.cv, Gate.cvd)
    return Circuit(width if width is not None else max(c1, c2, t) + 1, tuple(gates))


def _check_gate_lines(name: str, lines: Sequence[int]) -> None:
    seen = set()
    for line in lines:
        if line in seen:
            raise DuplicateLineError(name, line)
        seen.add(line)


def _gray_code_network(
    controls: Sequence[int],
    target: int,
    root: Callable[[int, int], Gate],
    root_dagger: Callable[[int, int], Gate],
) -> List[Gate]:
    """Return the gray-code schedule of controlled roots and CNOTs.

    Walking the reflected gray code over the controls, the line of the highest set bit
    holds the parity of the current subset. The root is applied from that line when the
    subset has odd size, its inverse otherwise; every control is back to its input value
    after the last step.
    """
    gates: List[Gate] = []
    previous = 0
    for step in range(1, 2 ** len(controls)):
        code = step ^ (step >> 1)
        lead = code.bit_length() - 1
        if previous:
            flipped = (code ^ previous).bit_length() - 1
            # a new leading bit is joined by the single bit that was set before
            source = (code ^ (1 << lead)).bit_length() - 1 if flipped == lead else flipped
            gates.append(Gate.cx(controls[source], controls[lead]))
        odd = bin(code).count("1") % 2 == 1
        gates.append((root if odd else root_dagger)(controls[lead], target))
        previous = code
    return gates


def lemma71(
    m: int,
    controls: Optional[Sequence[int]] = None,
    target: Optional[int] = None,
    width: Optional[int] = None,
) -> SynthesisResult:
    """Build the garbage-free network of 2^(m+1)-3 gates for a Toffoli gate with m controls.

    The network holds 2^m-1 controlled 2^(m-1)-th roots of X (or their inverses) on the
    target and 2^m-2 CNOTs among the controls.

    Raises:
        OutOfRangeError: if m < 2 or the lines do not match m.
        LineCollisionError: if lines repeat.
    """
    if m < 2:
        raise OutOfRangeError("m", m, "lemma71 needs m >= 2")
    controls = tuple(range(m)) if controls is None else tuple(controls)
    target = m if target is None else target
    if len(controls) != m:
        raise OutOfRangeError("controls", len(controls), f"expected {m} control lines")
    lines = controls + (target,)
    _ensure_distinct(lines)
    width = max(lines) + 1 if width is None else width
    _ensure_within(lines, width)
    k = m - 1
    gates = _gray_code_network(
        controls,
        target,
        lambda control, tgt: Gate.crx(control, tgt, k),
        lambda control, tgt: Gate.crxd(control, tgt, k),
    )
    return _result(gates, width, controls, target, 0, Strategy.LEMMA71.value)


def _ladder(
    controls: Sequence[int], target: int, ancillas: Sequence[int]
) -> List[Tuple[int, Tuple[int, int, int]]]:
    """Return the Toffoli ladder as (step, lines) pairs.

    With 1-based names c_1..c_m and a_1..a_(m-2): step 1 is ccx(c_m, a_(m-2), t), step j
    for 2 <= j <= m-2 is ccx(c_(m-j+1), a_(m-j-1), a_(m-j)) and step m-1 is
    ccx(c_2, c_1, a_1). A block runs steps 1..m-1 and back down to 2; the ladder is two
    blocks.
    """
    m = len(controls)

    def c(i: int) -> int:
        return controls[i - 1]

    def a(i: int) -> int:
        return ancillas[i - 1]

    steps: Dict[int, Tuple[int, int, int]] = {1: (c(m), a(m - 2), target)}
    for j in range(2, m - 1):
        steps[j] = (c(m - j + 1), a(m - j - 1), a(m - j))
    steps[m - 1] = (c(2), c(1), a(1))
    block = list(range(1, m)) + list(range(m - 2, 1, -1))
    return [(j, steps[j]) for j in block + block]


def _ladder_gates(
    controls: Sequence[int], target: int, ancillas: Sequence[int], peres_variant: bool
) -> List[Gate]:
    if not peres_variant:
        return [Gate.ccx(*lines) for _, lines in _ladder(controls, target, ancillas)]
    # Consecutive occurrences of a step alternate between Peres (CNOT after) and inverse
    # Peres (CNOT before), so the inserted CNOTs meet in pairs.
    occurrences: Dict[int, int] = {}
    gates = []
    for j, lines in _ladder(controls, target, ancillas):
        seen = occurrences.get(j, 0)
        occurrences[j] = seen + 1
        gates.append(Gate.peres(*lines) if seen % 2 == 0 else Gate.iperes(*lines))
    return gates


def lemma72(
    m: int,
    width: Optional[int] = None,
    controls: Optional[Sequence[int]] = None,
    target: Optional[int] = None,
    ancillas: Optional[Sequence[int]] = None,
    peres_variant: bool = False,
) -> SynthesisResult:
    """Build the ladder network for a Toffoli gate with m controls on borrowed lines.

    The Toffoli variant holds exactly 4(m-2) Toffoli gates and restores every borrowed
    line whatever its input value. The Peres variant replaces each Toffoli by a Peres or
    inverse Peres gate on the same lines and costs 16m-32.

    Args:
        m: Number of controls.
        width: Network width n; defaults to 2m-1 or the highest line used.
        controls: Control lines, defaults to 0..m-1.
        target: Target line, defaults to m.
        ancillas: The m-2 borrowed lines, defaults to m+1..2m-2.
        peres_variant: Whether to use Peres gates.

    Raises:
        OutOfRangeError: if n < 5, m < 3, m > ceil(n/2) or the line counts do not match m.
        LineCollisionError: if lines repeat.
    """
    if m < 3:
        raise OutOfRangeError("m", m, "lemma72 needs m >= 3")
    controls = tuple(range(m)) if controls is None else tuple(controls)
    target = m if target is None else target
    ancillas = tuple(range(m + 1, 2 * m - 1)) if ancillas is None else tuple(ancillas)
    if len(controls) != m:
        raise OutOfRangeError("controls", len(controls), f"expected {m} control lines")
    if len(ancillas) != m - 2:
        raise OutOfRangeError("ancillas", len(ancillas), f"expected {m - 2} borrowed lines")
    lines = controls + (target,) + ancillas
    _ensure_distinct(lines)
    width = max(max(lines) + 1, 2 * m - 1) if width is None else width
    if width < MIN_LADDER_WIDTH:
        raise OutOfRangeError("n", width, f"lemma72 needs n >= {MIN_LADDER_WIDTH}")
    if m > (width + 1) // 2:
        raise OutOfRangeError("m", m, f"lemma72 needs m <= ceil(n/2) = {(width + 1) // 2}")
    _ensure_within(lines, width)
    gates = _ladder_gates(controls, target, ancillas, peres_variant)
    strategy = Strategy.LEMMA72_PERES if peres_variant else Strategy.LEMMA72
    return _result(gates, width, controls, target, m - 2, strategy.value)


def _even_split(m: int) -> Tuple[int, int]:
    first = (m + 2) // 2
    return first, m + 1 - first


def _place(
    piece: SynthesisResult,
    controls: Sequence[int],
    target: int,
    idle: Sequence[int],
    width: int,
) -> Circuit:
    """Move a piece built on its own lines onto `controls` and `target` of a wider network.

    The extra lines of the piece are mapped, in order, onto the first of the `idle` lines.
    """
    canonical = piece.main_lines + tuple(sorted(piece.extra_lines))
    lines = tuple(controls) + (target,) + tuple(idle)[: len(piece.extra_lines)]
    return relabel(piece.circuit, dict(zip(canonical, lines, strict=True)), width)


def _alternate(piece_a: Circuit, piece_b: Circuit) -> Tuple[Gate, ...]:
    return concatenate([piece_a, piece_b, piece_a, piece_b]).gates


def corollary74(m: int, peres_variant: bool = False) -> SynthesisResult:
    """Build the one-extra-line network for a Toffoli gate with m controls.

    With b = line m+1, A is a Toffoli from the first m1 controls onto b and B a Toffoli
    from the remaining controls and b onto the target; the network is A, B, A, B with
    both pieces built as ladders borrowing the lines they leave idle. The Toffoli variant
    holds 8(n-5) Toffoli gates for n = m+2 lines, the Peres variant costs 32m-96.

    Raises:
        OutOfRangeError: if m < 5.
    """
    if m < 5:
        raise OutOfRangeError("m", m, "corollary74 needs m >= 5")
    width = m + 2
    controls = tuple(range(m))
    target, extra = m, m + 1
    first, second = _even_split(m)
    piece_a = _place(
        lemma72(first, peres_variant=peres_variant),
        controls[:first],
        extra,
        controls[first:] + (target,),
        width,
    )
    piece_b = _place(
        lemma72(second, peres_variant=peres_variant),
        controls[first:] + (extra,),
        target,
        controls[:first],
        width,
    )
    strategy = Strategy.COR74_PERES if peres_variant else Strategy.COR74
    return _result(_alternate(piece_a, piece_b), width, controls, target, 1, strategy.value)


def _piece_limit(width: int, config: SynthesisConfig) -> int:
    if config.piece_bound == "floor":
        return width // 2
    return (width + 1) // 2


def _piece_plan(k: int, idle: int, width: int, config: SynthesisConfig) -> Tuple[int, str]:
    """Return the cost and method of the cheapest realization of a k-control piece."""
    if k <= 1:
        return mct_cost(k), "mct"
    best = (mct_cost(k), Strategy.LEMMA71.value)
    if 3 <= k <= _piece_limit(width, config) and idle >= k - 2 and width >= MIN_LADDER_WIDTH:
        peres = formula_cost(Formula.LEMMA72_PERES, k)
        if peres < best[0]:
            best = (peres, Strategy.LEMMA72_PERES.value)
    return best


def _piece(method: str, k: int) -> SynthesisResult:
    """Build a k-control piece on its own lines with the planned method."""
    if method == "mct":
        return _base(k + 1)
    if method == Strategy.LEMMA71.value:
        return lemma71(k)
    return lemma72(k, peres_variant=True)


def split(m: int, first: int, config: Optional[SynthesisConfig] = None) -> SynthesisResult:
    """Build the A, B, A, B network with the first `first` controls in piece A.

    Each piece is realized by the cheapest of the garbage-free network and the Peres
    ladder on the lines it leaves idle.

    Raises:
        OutOfRangeError: if the split is not 1 <= first <= m-1.
    """
    config = config or SynthesisConfig()
    if not 1 <= first <= m - 1:
        raise OutOfRangeError("m1", first, f"needs 1 <= m1 <= {m - 1}")
    width = m + 2
    controls = tuple(range(m))
    target, extra = m, m + 1
    a_controls, a_idle = controls[:first], controls[first:] + (target,)
    b_controls, b_idle = controls[first:] + (extra,), controls[:first]
    _, a_method = _piece_plan(len(a_controls), len(a_idle), width, config)
    _, b_method = _piece_plan(len(b_controls), len(b_idle), width, config)
    piece_a = _place(_piece(a_method, len(a_controls)), a_controls, extra, a_idle, width)
    piece_b = _place(_piece(b_method, len(b_controls)), b_controls, target, b_idle, width)
    label = f"split-{first}+{m + 1 - first}"
    return _result(_alternate(piece_a, piece_b), width, controls, target, 1, label)


def _split_cost(m: int, first: int, config: SynthesisConfig) -> int:
    width = m + 2
    second = m + 1 - first
    cost_a, _ = _piece_plan(first, second, width, config)
    cost_b, _ = _piece_plan(second, first, width, config)
    return 2 * cost_a + 2 * cost_b


def _base(size: int) -> SynthesisResult:
    m = size - 1
    if m == 0:
        gates: Tuple[Gate, ...] = (Gate.x(0),)
    elif m == 1:
        gates = (Gate.cx(0, 1),)
    else:
        gates = (Gate.ccx(0, 1, 2),)
    return _result(gates, size, tuple(range(m)), m, 0, "base")


@dataclass(frozen=True)
class _Candidate:
    strategy: str
    cost: int
    garbage: int
    build: Callable[[], SynthesisResult]


def _candidates(m: int, config: SynthesisConfig) -> List[_Candidate]:
    candidates = [
        _Candidate(
            Strategy.LEMMA71.value,
            formula_cost(Formula.LEMMA71, m),
            0,
            lambda: lemma71(m),
        ),
        _Candidate(
            Strategy.LEMMA72_PERES.value,
            formula_cost(Formula.LEMMA72_PERES, m),
            m - 2,
            lambda: lemma72(m, peres_variant=True),
        ),
        _Candidate(
            Strategy.LEMMA72.value,
            5 * formula_cost(Formula.LEMMA72_TOFFOLI_COUNT, m),
            m - 2,
            lambda: lemma72(m),
        ),
    ]
    for first in range(1, m):
        candidates.append(
            _Candidate(
                f"split-{first}+{m + 1 - first}",
                _split_cost(m, first, config),
                1,
                lambda first=first: split(m, first, config),
            )
        )
    return candidates


def _build_named(m: int, strategy: Strategy) -> SynthesisResult:
    if strategy is Strategy.LEMMA71:
        return lemma71(m)
    if strategy in (Strategy.LEMMA72, Strategy.LEMMA72_PERES):
        return lemma72(m, peres_variant=strategy is Strategy.LEMMA72_PERES)
    return corollary74(m, peres_variant=strategy is Strategy.COR74_PERES)


def synthesize(
    size: int,
    garbage_budget: int = 0,
    strategy: Strategy = Strategy.AUTO,
    config: Optional[SynthesisConfig] = None,
) -> SynthesisResult:
    """Return a network for the Toffoli gate on `size` lines.

    With `Strategy.AUTO` the cheapest construction whose reported garbage fits the
    budget is returned: the gates themselves for size <= 3, otherwise the garbage-free
    network, the ladders (size-3 extra lines) or the A, B, A, B split over every choice
    of the first piece (one extra line). Ties go to the earlier candidate.

    Raises:
        OutOfRangeError: if size < 1 or a named strategy does not support the size.
        InfeasibleError: if a named strategy needs more garbage than the budget.
    """
    if size < 1:
        raise OutOfRangeError("size", size, "must be at least 1")
    if garbage_budget < 0:
        raise OutOfRangeError("garbage", garbage_budget, "must not be negative")
    config = config or SynthesisConfig()
    m = size - 1
    if strategy is not Strategy.AUTO:
        result = _build_named(m, strategy)
        if result.garbage_reported > garbage_budget:
            raise InfeasibleError(strategy.value, result.garbage_reported, garbage_budget)
        logger.info("Built %s for size %d with cost %d", result.strategy, size, result.cost)
        return result
    if m <= 2:
        return _base(size)
    best: Optional[_Candidate] = None
    for candidate in _candidates(m, config):
        logger.debug(
            "Size %d candidate %s: cost %d, garbage %d",
            size,
            candidate.strategy,
            candidate.cost,
            candidate.garbage,
        )
        if candidate.garbage > garbage_budget:
            continue
        if best is None or candidate.cost < best.cost:
            best = candidate
    assert best is not None  # the garbage-free network always fits
    result = best.build()
    if result.cost != best.cost:
        raise AssertionError(
            f"{best.strategy} was planned at cost {best.cost} but costs {result.cost}"
        )
    logger.info(
        "Selected %s for size %d, garbage budget %d: cost %d",
        result.strategy,
        size,
        garbage_budget,
        result.cost,
    )
    return result


def expand(circuit: Circuit) -> Circuit:
    """Replace every macro gate by elementary gates.

    Toffoli gates become the five-gate network, Peres and inverse Peres gates their
    four-gate networks and multi-controlled Toffoli gates the garbage-free network.
    """
    gates: List[Gate] = []
    for gate in circuit.gates:
        if gate.kind.is_elementary:
            gates.append(gate)
        elif gate.kind is GateKind.CCX:
            gates.extend(expand_toffoli3(*gate.lines, width=circuit.width).gates)
        elif gate.kind in (GateKind.PERES, GateKind.IPERES):
            inverted = gate.kind is GateKind.IPERES
            gates.extend(expand_peres(*gate.lines, inverted=inverted, width=circuit.width).gates)
        elif len(gate.controls) == 0:
            gates.append(Gate.x(gate.target))
        elif len(gate.controls) == 1:
            gates.append(Gate.cx(gate.controls[0], gate.target))
        else:
            network = lemma71(len(gate.controls), gate.controls, gate.target, circuit.width)
            gates.extend(network.circuit.gates)
    return circuit.with_gates(gates)


def lower_peres(circuit: Circuit) -> Circuit:
    """Write Peres gates as a Toffoli then a CNOT, inverse Peres as a CNOT then a Toffoli."""
    gates: List[Gate] = []
    for gate in circuit.gates:
        if gate.kind not in (GateKind.PERES, GateKind.IPERES):
            gates.append(gate)
            continue
        x1, x2, x3 = gate.lines
        toffoli, cnot = Gate.ccx(x1, x2, x3), Gate.cx(x1, x2)
        gates.extend((toffoli, cnot) if gate.kind is GateKind.PERES else (cnot, toffoli))
    return circuit.with_gates(gates)
