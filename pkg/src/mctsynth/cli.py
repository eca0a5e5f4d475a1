# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Command-line interface.

Subcommands: `synth`, `verify`, `optimize`, `expand` and `cost-table`. Results go to
stdout, logs to stderr. Exit status is 0 on success, 1 on usage, input or library errors
and 2 when `verify` finds the circuit does not realize the gate.
"""

import argparse
import logging
import sys
from typing import List, NoReturn, Optional, Sequence, Tuple

from mctsynth.circuit import Circuit, LineRole
from mctsynth.circuit_file import load_circuit, save_circuit, serialize
from mctsynth.config import (
    LOG_LEVELS,
    SimulationConfig,
    SynthesisConfig,
    is_log_level_valid,
    load_config,
)
from mctsynth.cost import circuit_cost
from mctsynth.decomposition import Strategy, expand, synthesize
from mctsynth.errors import MctSynthError, UsageError
from mctsynth.optimizer import cancel_pairs
from mctsynth.simulation import Verdict, check_mct
from mctsynth.table import cost_table, render_csv, render_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting malformed arguments as `UsageError`."""

    def error(self, message: str) -> NoReturn:
        """Raise instead of exiting so that `main` decides the exit status."""
        raise UsageError(f"{self.prog}: {message}")


def _line_list(value: str) -> List[int]:
    try:
        return [int(token) for token in value.split(",") if token.strip()]
    except ValueError as e:
        msg = f"expected comma-separated line indices: {value}"
        raise argparse.ArgumentTypeError(msg) from e


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="mctsynth",
        description="Synthesize, verify and cost multi-controlled Toffoli networks.",
    )
    parser.add_argument(
        "--log-level",
        default="warning",
        help=f"one of {', '.join(LOG_LEVELS)} (default: warning)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    synth = subparsers.add_parser("synth", help="build a network for one Toffoli gate")
    synth.add_argument("--size", type=int, required=True, help="lines of the gate, m + 1")
    synth.add_argument("--garbage", type=int, default=0, help="extra lines allowed")
    synth.add_argument(
        "--strategy", choices=[s.value for s in Strategy], default=Strategy.AUTO.value
    )
    synth.add_argument("--expand", action="store_true", help="lower macros to elementary gates")
    synth.add_argument("--out", help="circuit file to write; stdout when omitted")
    synth.add_argument("--piece-bound", choices=["floor", "ceil"], default=None)
    synth.set_defaults(handler=_run_synth)

    verify = subparsers.add_parser("verify", help="check a circuit against a Toffoli gate")
    verify.add_argument("file")
    verify.add_argument("--controls", type=_line_list, default=None)
    verify.add_argument("--target", type=int, default=None)
    verify.add_argument("--extra", type=_line_list, default=None)
    verify.add_argument("--tolerance", type=float, default=None)
    verify.add_argument("--dense-width-limit", type=int, default=None)
    verify.set_defaults(handler=_run_verify)

    optimize = subparsers.add_parser("optimize", help="cancel pairs of self-inverse gates")
    optimize.add_argument("file")
    optimize.add_argument("--out", required=True)
    optimize.set_defaults(handler=_run_optimize)

    expand_cmd = subparsers.add_parser("expand", help="lower macros to elementary gates")
    expand_cmd.add_argument("file")
    expand_cmd.add_argument("--out", required=True)
    expand_cmd.set_defaults(handler=_run_expand)

    table = subparsers.add_parser("cost-table", help="print the cost table")
    table.add_argument("--max-size", type=int, required=True)
    table.add_argument("--csv", action="store_true")
    table.add_argument("--piece-bound", choices=["floor", "ceil"], default=None)
    table.set_defaults(handler=_run_cost_table)
    return parser


def _run_synth(args: argparse.Namespace) -> int:
    config = load_config(SynthesisConfig, {"piece_bound": args.piece_bound})
    result = synthesize(args.size, args.garbage, Strategy(args.strategy), config)
    if args.expand:
        result = result.expanded()
    print(
        f"cost={result.cost} garbage={result.garbage_reported} "
        f"lines={result.width} strategy={result.strategy}"
    )
    if args.out:
        save_circuit(result.circuit, args.out)
    else:
        sys.stdout.write(serialize(result.circuit))
    return EXIT_OK


def _roles_or_flags(
    circuit: Circuit, args: argparse.Namespace
) -> Tuple[List[int], int, List[int]]:
    controls, target, extra = args.controls, args.target, args.extra
    if controls is None:
        controls = list(circuit.lines_with_role(LineRole.CONTROL))
    if target is None:
        targets = circuit.lines_with_role(LineRole.TARGET)
        if not targets:
            raise UsageError("verify needs --target when the file declares no roles")
        target = targets[0]
    if extra is None:
        extra = list(circuit.lines_with_role(LineRole.ANCILLA))
    if not controls and circuit.roles is None:
        raise UsageError("verify needs --controls when the file declares no roles")
    return controls, target, extra


def _run_verify(args: argparse.Namespace) -> int:
    config = load_config(
        SimulationConfig,
        {"tolerance": args.tolerance, "dense_width_limit": args.dense_width_limit},
    )
    circuit = load_circuit(args.file)
    controls, target, extra = _roles_or_flags(circuit, args)
    report = check_mct(circuit, controls, target, extra, config)
    print(report.summary())
    if report.verdict is Verdict.FAIL:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def _run_optimize(args: argparse.Namespace) -> int:
    circuit = load_circuit(args.file)
    optimized = cancel_pairs(circuit)
    save_circuit(optimized, args.out)
    print(f"removed={len(circuit) - len(optimized)} gates={len(optimized)}")
    return EXIT_OK


def _run_expand(args: argparse.Namespace) -> int:
    expanded = expand(load_circuit(args.file))
    save_circuit(expanded, args.out)
    print(f"cost={circuit_cost(expanded)} gates={len(expanded)}")
    return EXIT_OK


def _run_cost_table(args: argparse.Namespace) -> int:
    config = load_config(SynthesisConfig, {"piece_bound": args.piece_bound})
    rows = cost_table(args.max_size, config)
    sys.stdout.write(render_csv(rows) if args.csv else render_table(rows))
    return EXIT_OK


def _configure_logging(log_level: str) -> None:
    if not is_log_level_valid(log_level):
        raise UsageError(f"invalid log level '{log_level}', expected one of {LOG_LEVELS}")
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(log_level.upper())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit status."""
    try:
        args = _build_parser().parse_args(argv)
        _configure_logging(args.log_level)
        return args.handler(args)
    except MctSynthError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        logger.debug("I/O failure", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
