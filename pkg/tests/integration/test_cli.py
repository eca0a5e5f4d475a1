# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

import pytest

from mctsynth.circuit import GateKind
from mctsynth.circuit_file import load_circuit
from mctsynth.cli import main
from mctsynth.table import garbage_classes

FAILING_CIRCUIT = ".lines 3\n.roles c c t\ncx 0 2\n.end\n"
PERES_PAIR = ".lines 3\n.roles c c t\nperes 0 1 2\nperes+ 0 1 2\n.end\n"


def summary_fields(line: str) -> dict:
    return dict(field.split("=", 1) for field in line.split())


class TestSynth:
    def test_given_peres_ladder_request_when_synth_with_expand_then_cost_and_garbage_printed(
        self, capsys
    ):
        status = main(
            ["synth", "--size", "6", "--garbage", "3", "--strategy", "lemma72-peres", "--expand"]
        )

        out = capsys.readouterr().out
        fields = summary_fields(out.splitlines()[0])
        assert status == 0
        assert fields["cost"] == "48"
        assert fields["garbage"] == "3"
        assert fields["strategy"] == "lemma72-peres"
        assert ".lines 9" in out
        assert "peres" not in out.split("\n", 1)[1]

    def test_given_one_garbage_line_when_synth_then_cheapest_split_selected(self, capsys):
        status = main(["synth", "--size", "10", "--garbage", "1", "--out", "/dev/null"])

        fields = summary_fields(capsys.readouterr().out.strip())
        assert status == 0
        assert fields["cost"] == "192"
        assert fields["lines"] == "11"

    def test_given_ceil_piece_bound_when_synth_then_looser_split_cost_reported(self, capsys):
        status = main(
            ["synth", "--size", "10", "--garbage", "1", "--piece-bound", "ceil", "--out", "/dev/null"]  # noqa: E501
        )

        fields = summary_fields(capsys.readouterr().out.strip())
        assert status == 0
        assert fields["cost"] == "186"
        assert fields["strategy"] == "split-4+6"

    def test_given_named_strategy_over_budget_when_synth_then_error_exit(self, capsys):
        status = main(["synth", "--size", "6", "--strategy", "lemma72"])

        assert status == 1
        assert capsys.readouterr().err.startswith("error: ")


class TestVerify:
    def test_given_synthesized_file_when_verify_then_exact_unitary(self, tmp_path, capsys):
        path = tmp_path / "toffoli5.txt"
        main(["synth", "--size", "5", "--out", str(path)])
        capsys.readouterr()

        status = main(["verify", str(path)])

        fields = summary_fields(capsys.readouterr().out.strip())
        assert status == 0
        assert fields["verdict"] == "exact_unitary"
        assert fields["non_restored"] == "-"

    def test_given_ladder_file_when_verify_then_passes(self, tmp_path, capsys):
        path = tmp_path / "ladder.txt"
        main(
            ["synth", "--size", "6", "--garbage", "3", "--strategy", "lemma72", "--out", str(path)]
        )
        capsys.readouterr()

        status = main(["verify", str(path)])

        fields = summary_fields(capsys.readouterr().out.strip())
        assert status == 0
        assert fields["verdict"] != "fail"

    def test_given_wrong_circuit_when_verify_then_exit_status_2(self, tmp_path, capsys):
        path = tmp_path / "wrong.txt"
        path.write_text(FAILING_CIRCUIT)

        status = main(["verify", str(path)])

        assert status == 2
        assert summary_fields(capsys.readouterr().out.strip())["verdict"] == "fail"

    def test_given_explicit_lines_when_verify_then_roles_overridden(self, tmp_path, capsys):
        path = tmp_path / "cnot.txt"
        path.write_text(".lines 2\ncx 1 0\n.end\n")

        status = main(["verify", str(path), "--controls", "1", "--target", "0"])

        assert status == 0
        assert "verdict=exact_unitary" in capsys.readouterr().out

    def test_given_file_without_roles_or_flags_when_verify_then_usage_error(
        self, tmp_path, capsys
    ):
        path = tmp_path / "bare.txt"
        path.write_text(".lines 2\ncx 1 0\n.end\n")

        status = main(["verify", str(path)])

        assert status == 1
        assert "--target" in capsys.readouterr().err


class TestOptimizeAndExpand:
    def test_given_peres_pair_when_optimize_then_nothing_left(self, tmp_path, capsys):
        source, out = tmp_path / "pair.txt", tmp_path / "optimized.txt"
        source.write_text(".lines 3\ncx 0 1\nccx 0 1 2\nccx 1 0 2\ncx 0 1\n.end\n")

        status = main(["optimize", str(source), "--out", str(out)])

        assert status == 0
        assert capsys.readouterr().out.strip() == "removed=4 gates=0"
        assert len(load_circuit(out)) == 0

    def test_given_macro_file_when_expand_then_only_elementary_gates_written(
        self, tmp_path, capsys
    ):
        source, out = tmp_path / "peres.txt", tmp_path / "expanded.txt"
        source.write_text(PERES_PAIR)

        status = main(["expand", str(source), "--out", str(out)])

        assert status == 0
        assert capsys.readouterr().out.strip() == "cost=8 gates=8"
        assert load_circuit(out).macro_free
        assert load_circuit(out).count(GateKind.PERES, GateKind.IPERES) == 0


class TestCostTable:
    def test_given_max_size_when_cost_table_csv_then_one_row_per_tabulated_budget(
        self, capsys, max_table_size
    ):
        status = main(["cost-table", "--max-size", str(max_table_size), "--csv"])

        lines = capsys.readouterr().out.splitlines()
        expected_rows = sum(len(garbage_classes(s)) for s in range(1, max_table_size + 1))
        assert status == 0
        assert lines[0] == "size,garbage,cost,strategy"
        assert len(lines) - 1 == expected_rows

    def test_given_max_size_10_when_cost_table_then_published_row_present(self, capsys):
        status = main(["cost-table", "--max-size", "10"])

        out = capsys.readouterr().out
        rows = [line.split() for line in out.splitlines()[1:]]
        assert status == 0
        assert ["10", "7", "112*", "lemma72-peres"] in rows
        assert ["10", "0", "1021", "lemma71"] in rows
        assert out.splitlines()[-1] == "* network uses Peres gates"


class TestErrors:
    def test_given_invalid_log_level_when_main_then_error_exit(self, capsys):
        status = main(["--log-level", "loud", "cost-table", "--max-size", "3"])

        assert status == 1
        assert "invalid log level" in capsys.readouterr().err

    def test_given_missing_file_when_verify_then_error_exit(self, tmp_path, capsys):
        status = main(["verify", str(tmp_path / "absent.txt")])

        assert status == 1
        assert capsys.readouterr().err.startswith("error: ")

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["synth"],
            ["synth", "--size", "five"],
            ["synth", "--size", "4", "--strategy", "fastest"],
            ["verify", "x.txt", "--controls", "a,b"],
        ],
    )
    def test_given_malformed_arguments_when_main_then_usage_error_exit(self, argv, capsys):
        assert main(argv) == 1
        assert "error: " in capsys.readouterr().err

    def test_given_syntax_error_in_file_when_optimize_then_line_reported(self, tmp_path, capsys):
        source = tmp_path / "bad.txt"
        source.write_text(".lines 2\nswap 0 1\n.end\n")

        status = main(["optimize", str(source), "--out", str(tmp_path / "out.txt")])

        assert status == 1
        assert "line 2" in capsys.readouterr().err
