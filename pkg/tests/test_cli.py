"""The command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from ppbij.cli import main

GOLDEN_PP = "[[4,4,2],[4,2,1],[2,2]]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMap:
    def test_phi_golden(self, capsys):
        code, out, _ = run(capsys, "map", "phi", "--pp", GOLDEN_PP,
                           "--n", "3", "--m", "4")
        assert code == 0
        assert json.loads(out) == [[0, 1, 0, 1], [1, 0, 0, 1], [0, 2, 0, 0]]

    def test_inv_zero_matrix(self, capsys):
        code, out, _ = run(capsys, "map", "inv", "--matrix",
                           '{"rows":2,"cols":2,"data":[[0,0],[0,0]]}')
        assert code == 0
        assert json.loads(out) == []

    def test_inv_accepts_bare_rows(self, capsys):
        code, out, _ = run(capsys, "map", "inv", "--matrix", "[[1,0],[0,1]]")
        assert code == 0
        assert json.loads(out) == [[2, 1], [2]]

    def test_word_golden(self, capsys):
        code, out, _ = run(capsys, "map", "word", "--w", "132434", "--m", "4")
        assert code == 0
        assert json.loads(out) == [[6, 5, 3, 1], [6, 5, 3], [6, 5, 2], [6, 4]]

    def test_domain_error_exit_1(self, capsys):
        code, _, err = run(capsys, "map", "phi", "--pp", GOLDEN_PP,
                           "--n", "2", "--m", "4")
        assert code == 1
        assert "domain" in err

    def test_malformed_input_exit_2(self, capsys):
        code, _, err = run(capsys, "map", "phi", "--pp", "nope",
                           "--n", "3", "--m", "4")
        assert code == 2
        assert "malformed" in err

    def test_json_roundtrips_schema(self, capsys):
        code, out, _ = run(capsys, "map", "phi", "--pp", GOLDEN_PP,
                           "--n", "3", "--m", "4", "--json")
        data = json.loads(out)
        assert data == {"rows": 3, "cols": 4,
                        "data": [[0, 1, 0, 1], [1, 0, 0, 1], [0, 2, 0, 0]]}


class TestStats:
    def test_golden_table(self, capsys):
        code, out, _ = run(capsys, "stats", "--pp", "[[4,4,2],[4,2,2],[2,2]]",
                           "--json")
        assert code == 0
        data = json.loads(out)
        assert data["volume"] == 22
        assert data["up_hook_volume"] == 20

    def test_corner_volume_golden(self, capsys):
        _, out, _ = run(capsys, "stats", "--pp", GOLDEN_PP, "--json")
        assert json.loads(out)["corner_volume"] == 15

    def test_empty_all_zero(self, capsys):
        code, out, _ = run(capsys, "stats", "--pp", "[]", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["volume"] == 0 and data["shape"] == []

    def test_text_output_deterministic(self, capsys):
        _, out1, _ = run(capsys, "stats", "--pp", GOLDEN_PP)
        _, out2, _ = run(capsys, "stats", "--pp", GOLDEN_PP)
        assert out1 == out2
        assert out1.splitlines()[1] == "volume 21"


class TestEnumerate:
    def test_box_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "box", "2", "2", "2")
        assert code == 0 and out.strip() == "20"

    def test_box_gf(self, capsys):
        code, out, _ = run(capsys, "enumerate", "box", "1", "1", "1",
                           "--gf", "q", "--stat", "volume")
        assert code == 0 and out.strip() == "1 + q"

    def test_strict_tableaux(self, capsys):
        code, out, _ = run(capsys, "enumerate", "st", "--shape", "2,1",
                           "--n", "3")
        assert code == 0 and out.strip() == "2"

    def test_listing_sorted_stable(self, capsys):
        _, out1, _ = run(capsys, "enumerate", "box", "1", "2", "1", "--list")
        _, out2, _ = run(capsys, "enumerate", "box", "1", "2", "1", "--list")
        assert out1 == out2
        assert [json.loads(line) for line in out1.splitlines()] == \
            [[], [[1]], [[1], [1]]]

    def test_caps_enforced(self, capsys):
        code, _, err = run(capsys, "enumerate", "box", "6", "2", "2")
        assert code == 2
        assert "cap" in err

    def test_caps_escape_hatch(self, capsys):
        code, out, _ = run(capsys, "enumerate", "box", "6", "1", "1",
                           "--unsafe-no-caps")
        assert code == 0 and out.strip() == "7"


class TestDalpha:
    def test_boxed(self, capsys):
        code, out, _ = run(capsys, "dalpha", "--alpha", "1,1",
                           "--k", "2", "--n", "2", "--m", "2")
        assert code == 0 and out.strip() == "4"

    def test_unbounded(self, capsys):
        code, out, _ = run(capsys, "dalpha", "--alpha", "2,0,0",
                           "--n", "3", "--m", "3")
        assert code == 0 and out.strip() == "6"

    def test_alpha_length_checked(self, capsys):
        code, _, err = run(capsys, "dalpha", "--alpha", "1",
                           "--n", "2", "--m", "2")
        assert code == 2


class TestGreene:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "greene", "--w", "132434", "--m", "4",
                           "--json")
        assert code == 0
        data = json.loads(out)
        assert data["shape"] == [4, 3, 3, 2]
        assert data["L"] == [4, 3, 3, 2]

    def test_word_cap(self, capsys):
        code, _, err = run(capsys, "greene", "--w", "1" * 11, "--m", "2")
        assert code == 2


class TestVerify:
    def test_single_check_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "macmahon_box",
                           "--k", "2", "--n", "2", "--m", "2")
        assert code == 0
        assert out.startswith("pass macmahon_box")

    def test_unknown_name_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "nope")
        assert code == 2

    def test_missing_params_reported(self, capsys):
        code, _, err = run(capsys, "verify", "macmahon_box", "--k", "2")
        assert code == 2
        assert "needs" in err

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "gl", "--n", "2", "--m", "2",
                           "--N", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["check"] == "gl" and data["pass"] is True


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert main([]) == 2

    def test_both_input_sources_rejected(self, capsys):
        code, _, err = run(capsys, "stats", "--pp", "[]", "--input", "x.json")
        assert code == 2

    def test_stdin_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(GOLDEN_PP))
        code, out, _ = run(capsys, "stats", "--json")
        assert code == 0
        assert json.loads(out)["volume"] == 21
