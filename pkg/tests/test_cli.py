import json
from pathlib import Path

from eqlx.cli import main

DATA = Path(__file__).parent / "data"

EXAMPLE1 = "~ not p -> p.\n"
RULE2 = "not (bird & ~flies) -> ~(bird & ~flies).\n"


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage failures
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def check_golden(out, name):
    envelope = json.loads(out)
    assert list(envelope) == ["command", "result", "witness", "engine_agreement"]
    expected = json.loads((DATA / name).read_text())
    assert envelope == expected


class TestSolve:
    def test_example_one_text(self, tmp_path, capsys):
        path = write(tmp_path, "ex1.x5", EXAMPLE1)
        code, out, _ = run(capsys, "solve", path)
        assert code == 0
        assert out == "{}\n{p}\n"

    def test_example_one_json_golden(self, tmp_path, capsys):
        path = write(tmp_path, "ex1.x5", EXAMPLE1)
        code, out, _ = run(capsys, "solve", path, "--json")
        assert code == 0
        check_golden(out, "solve_example1.json")

    def test_single_engine(self, tmp_path, capsys):
        path = write(tmp_path, "ex1.x5", EXAMPLE1)
        for via in ("reduct", "x5", "ferraris"):
            code, out, _ = run(capsys, "solve", path, "--via", via)
            assert (code, out) == (0, "{}\n{p}\n")

    def test_no_models_is_semantic_negative(self, tmp_path, capsys):
        path = write(tmp_path, "none.x5", "bot.\n")
        code, out, err = run(capsys, "solve", path)
        assert code == 1
        assert out == ""
        assert "no models" in err

    def test_theory_file_uses_equilibrium_engines(self, tmp_path, capsys):
        path = write(tmp_path, "theory.x5", "p -> (q -> p).\n")
        code, out, _ = run(capsys, "solve", path, "--json")
        envelope = json.loads(out)
        assert envelope["result"]["kind"] == "equilibrium_models"
        assert envelope["result"]["engines"] == ["x5", "ferraris"]
        assert envelope["engine_agreement"] is True

    def test_via_reduct_rejected_for_theories(self, tmp_path, capsys):
        path = write(tmp_path, "theory.x5", "p -> (q -> p).\n")
        code, _, err = run(capsys, "solve", path, "--via", "reduct")
        assert code == 2
        assert "requires a program" in err

    def test_formula_per_line_file(self, tmp_path, capsys):
        path = write(tmp_path, "lines.txt", "% one per line\n~ not p -> p\n")
        code, out, _ = run(capsys, "solve", path)
        assert (code, out) == (0, "{}\n{p}\n")

    def test_parallel_matches_sequential(self, tmp_path, capsys):
        path = write(tmp_path, "r2.x5", RULE2)
        _, seq, _ = run(capsys, "solve", path)
        _, par, _ = run(capsys, "solve", path, "--parallel", "4")
        assert seq == par == "{flies}\n{~bird}\n"

    def test_signature_guard_exit_code(self, tmp_path, capsys):
        path = write(tmp_path, "ex1.x5", EXAMPLE1)
        code, _, err = run(capsys, "solve", path, "--max-atoms", "0")
        assert code == 3
        assert "guard" in err

    def test_parse_error_exit_code(self, tmp_path, capsys):
        path = write(tmp_path, "bad.x5", "p -> @.\n")
        code, _, err = run(capsys, "solve", path)
        assert code == 2
        assert "lexical error" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "/nonexistent/x.x5")
        assert code == 2


class TestEval:
    def test_json_golden(self, capsys):
        code, out, _ = run(capsys, "eval", "not not p -> p",
                           "--model", "{p}", "--json")
        assert code == 0
        check_golden(out, "eval_double_negation.json")

    def test_split_worlds(self, capsys):
        code, out, _ = run(capsys, "eval", "not not p -> p",
                           "--model", "{p}", "--here", "{}")
        assert code == 0
        assert out == "value: 1\nsat: false\nfals: false\n"

    def test_n5_mode(self, capsys):
        code, out, _ = run(capsys, "eval", "not p", "--model", "{p}",
                           "--here", "{}", "--mode", "n5")
        assert out.splitlines()[0] == "value: -1"

    def test_classical_mode(self, capsys):
        code, out, _ = run(capsys, "eval", "~p", "--model", "{p}",
                           "--here", "{}", "--mode", "classical")
        assert (code, out) == (0, "sat: true\n")

    def test_here_must_be_inside_model(self, capsys):
        code, _, err = run(capsys, "eval", "p", "--model", "{}", "--here", "{p}")
        assert code == 2

    def test_inconsistent_model_rejected(self, capsys):
        code, _, err = run(capsys, "eval", "p", "--model", "{p, ~p}")
        assert code == 2
        assert "inconsistent interpretation" in err


class TestReduct:
    def test_nested_reduct_is_simplified(self, tmp_path, capsys):
        path = write(tmp_path, "ex1.x5", EXAMPLE1)
        code, out, _ = run(capsys, "reduct", "--wrt", "{}", path)
        # the raw reduct body ~top folds to bot before printing
        assert (code, out) == (0, "bot -> p.\n")
        code, out, _ = run(capsys, "reduct", "--wrt", "{p}", path)
        assert (code, out) == (0, "p.\n")

    def test_ferraris_reduct(self, tmp_path, capsys):
        path = write(tmp_path, "r2.x5", RULE2)
        code, out, _ = run(capsys, "reduct", "--wrt", "{~bird}", path, "--ferraris")
        assert code == 0
        assert out.splitlines()[0] == "+ ~bird"

    def test_nested_reduct_needs_program(self, tmp_path, capsys):
        path = write(tmp_path, "theory.x5", "p -> (q -> p).\n")
        code, _, err = run(capsys, "reduct", "--wrt", "{}", path)
        assert code == 2


class TestValidAndEquiv:
    def test_valid_json_golden(self, capsys):
        code, out, _ = run(capsys, "valid", "~p -> not p", "--json")
        assert code == 0
        check_golden(out, "valid_coherence.json")

    def test_valid_text(self, capsys):
        code, out, _ = run(capsys, "valid", "~p -> not p")
        assert (code, out) == (0, "valid\n")

    def test_not_valid_witness(self, capsys):
        code, out, _ = run(capsys, "valid", "not not p -> p")
        assert code == 1
        assert out == "not valid\nwitness: p=1 : 1\n"

    def test_equiv_subst_golden(self, capsys):
        code, out, _ = run(capsys, "equiv", "subst", "p & not p", "bot", "--json")
        assert code == 1
        check_golden(out, "equiv_subst_contradiction.json")

    def test_equiv_subst_text(self, capsys):
        code, out, _ = run(capsys, "equiv", "subst", "p & not p", "bot")
        assert code == 1
        assert out == "not substitution-equivalent\nwitness: p=0 : 0 vs -2\n"

    def test_equiv_weak_positive(self, capsys):
        code, out, _ = run(capsys, "equiv", "weak", "p & not p", "bot")
        assert (code, out) == (0, "weakly equivalent\n")


class TestContext:
    def test_tautology_versus_double_negation(self, capsys):
        code, out, _ = run(capsys, "context", "p -> p", "not not p -> p")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "witness: p=1"
        assert lines[1] == "satisfies: left"
        assert lines[2] == "context:"
        assert lines[3] == "p -> p."
        assert lines[4] == "equilibrium models with left: {}"
        assert lines[5] == "equilibrium models with right: {}, {p}"

    def test_equivalent_formulas_refused(self, capsys):
        code, _, err = run(capsys, "context", "p", "p")
        assert code == 1
        assert "weakly equivalent" in err


class TestTransformCommands:
    def test_nnf(self, capsys):
        code, out, _ = run(capsys, "nnf", "~(p & not p)")
        assert (code, out) == (0, "~p | not not p\n")

    def test_nnf_n5_mode(self, capsys):
        code, out, _ = run(capsys, "nnf", "~ not p -> p", "--mode", "n5")
        assert (code, out) == (0, "p -> p\n")

    def test_nnf_rule_trace_on_stderr(self, capsys):
        code, out, err = run(capsys, "nnf", "~(p & not p)", "--rule-trace")
        assert code == 0
        assert "xneg_and" in err
        assert "xneg_and" not in out

    def test_regular(self, tmp_path, capsys):
        path = write(tmp_path, "r2.x5", RULE2)
        code, out, _ = run(capsys, "regular", path)
        assert code == 0
        assert out == ("not bird -> ~bird | flies.\n"
                       "not ~flies -> ~bird | flies.\n")

    def test_regular_rule_trace(self, tmp_path, capsys):
        path = write(tmp_path, "r2.x5", RULE2)
        code, out, err = run(capsys, "regular", path, "--rule-trace")
        assert code == 0
        assert "dneg_and @ rule 0" in err
        assert "body_or_split @ rule 0" in err

    def test_export(self, tmp_path, capsys):
        path = write(tmp_path, "r2.x5", RULE2)
        code, out, _ = run(capsys, "export", path)
        assert code == 0
        assert out == ("-bird ; flies :- not bird.\n"
                       "-bird ; flies :- not -flies.\n")


class TestTables:
    def test_x5_json_tables(self, capsys):
        code, out, _ = run(capsys, "tables", "--json")
        tables = json.loads(out)["result"]["tables"]
        assert tables["->"][3] == [-2, -1, 0, 2, 2]
        assert tables["~"] == [2, 1, 0, -1, -2]
        assert tables["not"] == [2, 2, 2, -2, -2]

    def test_n5_json_tables(self, capsys):
        code, out, _ = run(capsys, "tables", "--mode", "n5", "--json")
        tables = json.loads(out)["result"]["tables"]
        assert tables["->"][3] == [-1, -1, 0, 2, 2]
        assert tables["not"] == [2, 2, 2, -1, -2]

    def test_text_is_aligned(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        assert "    & |  -2  -1   0   1   2" in out
