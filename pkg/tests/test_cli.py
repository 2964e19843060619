import json

import pytest

from src.ciu_logic import __version__
from src.ciu_logic.main import build_parser, main
from src.ciu_logic.models import EntailmentVerdict
from src.ciu_logic.services import ConsequenceService
from src.ciu_logic.tools.matrix import build_matrix, export_json, format_tables, materialize, relabel
from src.ciu_logic.tools.parser import parse_sequent

from .test_matrix import FIXTURES


class TestGenCommand:
    """gen 명령 테스트"""

    def test_gen_table(self, capsys):
        exit_code = main(["gen", "2", "--format", "table"])
        out = capsys.readouterr().out
        assert exit_code == 0
        assert out == format_tables(materialize(build_matrix(2)))
        assert out.splitlines()[0].startswith("~")

    def test_gen_json_classical(self, capsys):
        exit_code = main(["gen", "0", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert exit_code == 0
        assert payload == {"n": 0, "values": [[0], [1]], "designated": [1], "neg": [1, 0], "imp": [[1, 1], [0, 1]]}

    def test_gen_json_is_byte_identical(self, capsys):
        main(["gen", "3", "--format", "json"])
        first = capsys.readouterr().out
        main(["gen", "3", "--format", "json"])
        assert capsys.readouterr().out == first

    def test_gen_writes_out_file(self, tmp_path, capsys):
        out_file = tmp_path / "m1.json"
        exit_code = main(["gen", "1", "--format", "json", "--out", str(out_file)])
        assert exit_code == 0
        assert capsys.readouterr().out == ""
        assert out_file.read_text(encoding="utf-8") == export_json(materialize(build_matrix(1)))

    def test_gen_format_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("CIU_OUTPUT_FORMAT", "json")
        assert main(["gen", "0"]) == 0
        assert json.loads(capsys.readouterr().out)["n"] == 0

    def test_gen_resource_limit(self, capsys):
        """gen 40 → exit 3, |A_40| = fib(43) 보고"""
        exit_code = main(["gen", "40"])
        err = capsys.readouterr().err
        assert exit_code == 3
        assert "fib(43)" in err
        assert "433494437" in err


class TestEntailsCommand:
    """entails / taut / truth-table 명령 테스트"""

    def test_countermodel_printed(self, capsys):
        exit_code = main(["entails", "1", "p, ~p |- q"])
        out = capsys.readouterr().out
        assert exit_code == 1
        assert "countermodel:" in out
        assert "  p = (1,1)" in out.splitlines()
        assert "  q = (0,1)" in out.splitlines()

    def test_classical_holds(self, capsys):
        assert main(["entails", "0", "p, ~p |- q"]) == 0
        assert "holds" in capsys.readouterr().out

    def test_both_oracles_agree(self, capsys):
        exit_code = main(["entails", "2", "|- p -> p", "--oracle", "both"])
        out = capsys.readouterr().out
        assert exit_code == 0
        assert "oracles agree" in out
        assert "[matrix]" in out and "[bival]" in out

    def test_bival_oracle(self, capsys):
        assert main(["entails", "3", "p |- ~~p", "--oracle", "bival"]) == 1
        assert "  p = (1,1,0,1)" in capsys.readouterr().out.splitlines()

    def test_disagreement_exit_code(self, mocker, capsys):
        sequent = parse_sequent("p |- q")
        fake = EntailmentVerdict(holds=True, oracle="bival", n=1, sequent=sequent, examined=9)
        mocker.patch.object(ConsequenceService, "entails_bival", return_value=fake)
        exit_code = main(["entails", "1", "p |- q", "--oracle", "both"])
        assert exit_code == 4
        assert "oracles disagree" in capsys.readouterr().out

    def test_parse_error(self, capsys):
        exit_code = main(["entails", "1", "p |- q |- r"])
        err = capsys.readouterr().err
        assert exit_code == 2
        assert "multiple turnstiles" in err
        assert "at byte 7" in err

    def test_max_evals_flag(self, capsys):
        assert main(["entails", "1", "p, ~p |- q", "--max-evals", "5"]) == 3
        assert "exceeds limit 5" in capsys.readouterr().err

    def test_max_evals_environment(self, monkeypatch, capsys):
        """CIU_MAX_EVALS 환경 변수"""
        monkeypatch.setenv("CIU_MAX_EVALS", "5")
        assert main(["entails", "1", "p, ~p |- q"]) == 3
        # 플래그가 환경 변수보다 우선
        assert main(["entails", "1", "p, ~p |- q", "--max-evals", "100"]) == 1

    def test_invalid_limit(self, capsys):
        assert main(["entails", "1", "p |- p", "--max-evals", "0"]) == 2
        assert capsys.readouterr().err.startswith("❌")

    def test_parallel_flag(self, capsys):
        assert main(["entails", "3", "p, ~p, q, ~q, r |- s", "--jobs", "2"]) == 1
        parallel = capsys.readouterr().out
        assert main(["entails", "3", "p, ~p, q, ~q, r |- s"]) == 1
        assert capsys.readouterr().out == parallel

    def test_taut(self, capsys):
        assert main(["taut", "5", "p -> p"]) == 0
        assert main(["taut", "1", "p -> ~~p"]) == 1
        assert main(["taut", "0", "p -> ~~p"]) == 0

    def test_truth_table(self, capsys):
        assert main(["truth-table", "0", "p -> q"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "p=0 q=0 | 1 *",
            "p=0 q=1 | 1 *",
            "p=1 q=0 | 0",
            "p=1 q=1 | 1 *",
        ]


class TestReportCommand:
    """report 명령 테스트"""

    def test_report_rows(self, capsys):
        exit_code = main(["report", "3"])
        lines = capsys.readouterr().out.splitlines()
        assert exit_code == 0
        assert len(lines) == 5
        assert [int(line.split()[1]) for line in lines[1:]] == [2, 3, 5, 8]
        assert lines[1].split()[-2:] == ["holds", "holds"]
        assert lines[2].split()[-2:] == ["fails", "fails"]

    def test_report_classical_only(self, capsys):
        assert main(["report", "0"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 2


class TestIsoCommand:
    """iso 명령 테스트"""

    def _write(self, path, matrix):
        path.write_text(export_json(matrix), encoding="utf-8")
        return str(path)

    def test_permuted_m1(self, tmp_path, capsys):
        m1 = materialize(build_matrix(1))
        a = self._write(tmp_path / "a.json", m1)
        b = self._write(tmp_path / "b.json", relabel(m1, (1, 2, 0)))
        exit_code = main(["iso", a, b])
        out = capsys.readouterr().out.splitlines()
        assert exit_code == 0
        assert out[0] == "isomorphic"
        assert len(out) == 4

    def test_sizes_differ(self, tmp_path, capsys):
        a = self._write(tmp_path / "m0.json", materialize(build_matrix(0)))
        b = self._write(tmp_path / "m1.json", materialize(build_matrix(1)))
        assert main(["iso", a, b]) == 1
        assert capsys.readouterr().out == "not isomorphic\n"

    def test_m2_against_fixture(self, tmp_path, capsys):
        """정의로 만든 M_2 와 손으로 옮긴 표: 항등 사상"""
        a = self._write(tmp_path / "m2.json", materialize(build_matrix(2)))
        assert main(["iso", a, str(FIXTURES / "m2_tables.json")]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[1:] == [f"  {v} -> {v}" for v in ("(0,1,0)", "(0,1,1)", "(1,0,1)", "(1,1,0)", "(1,1,1)")]

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text('{"n": 0, "values": []}', encoding="utf-8")
        assert main(["iso", str(bad), str(bad)]) == 2
        assert main(["iso", str(tmp_path / "missing.json"), str(bad)]) == 2


class TestFibonacciCommands:
    """fib / fib-word 명령 테스트"""

    def test_fib(self, capsys):
        assert main(["fib", "7"]) == 0
        assert capsys.readouterr().out == "13\n"

    def test_fib_resource_limit(self, capsys):
        """큰 인덱스는 계산 전에 exit 3"""
        assert main(["fib", "25000"]) == 3
        assert "Fibonacci index k = 25000 exceeds limit 10000" in capsys.readouterr().err

    def test_fib_limit_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("CIU_MAX_FIB_INDEX", "6")
        assert main(["fib", "7"]) == 3
        assert main(["fib", "6"]) == 0
        assert capsys.readouterr().out == "8\n"

    def test_fib_domain_error(self, capsys):
        assert main(["fib", "0"]) == 2
        assert "must be >= 1" in capsys.readouterr().err

    def test_fib_word(self, capsys):
        assert main(["fib-word", "5"]) == 0
        assert capsys.readouterr().out == "10110\n"

    def test_fib_word_levels(self, capsys):
        assert main(["fib-word", "5", "--levels"]) == 0
        assert capsys.readouterr().out.splitlines() == ["0", "1", "10", "101", "10110"]

    def test_fib_word_guard(self, capsys):
        assert main(["fib-word", "31"]) == 3


class TestGeneralOptions:
    """공통 옵션 테스트"""

    def test_help_lists_subcommands(self):
        help_text = build_parser().format_help()
        for command in ("gen", "entails", "taut", "report", "iso", "fib-word", "equiv-check"):
            assert command in help_text

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_unknown_option(self, capsys):
        assert main(["entails", "1", "p |- p", "--oracle", "magic"]) == 2

    def test_equiv_check(self, capsys):
        exit_code = main(["equiv-check", "2", "--samples", "20", "--seed", "3"])
        out = capsys.readouterr().out
        assert exit_code == 0
        assert "checked 20 sequents at n=2 (seed 3): oracles agree" in out

    @pytest.mark.parametrize("argv", [
        ["entails", "2", "p |- ~~p", "--seed", "1"],
        ["equiv-check", "1", "--samples", "10", "--seed", "8"],
    ])
    def test_deterministic_output(self, argv, capsys):
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first
