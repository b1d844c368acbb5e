import json
from pathlib import Path

import pytest

from factorlang import acceptance
from factorlang.automata import LanguageSpec, as_word
from factorlang.cli import main
from factorlang.oracle import check_predicate, factorizations

LANGUAGES = Path(__file__).resolve().parent.parent / "languages"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def write_spec(tmp_path, doc, name="l.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


def assert_witness_valid(report, spec):
    w = report["witness"]
    if w is None:
        return
    word = tuple(w["tokens"])
    assert factorizations(word, spec)
    assert not check_predicate(report["predicate"])(word, spec)


class TestAnalyze:
    def test_su_example(self, capsys):
        code, report = run_json(capsys, "analyze", LANGUAGES / "su_example.json", "su", "8")
        assert code == 0
        assert report["results"]["su_gap_exists"] is True
        assert report["slice"]["agree"]
        slice_words = report["slice"]["oracle"]
        assert "ab" in slice_words and "aab" not in slice_words
        assert report["witness"]["factorizations"] == ["(a)(ab)", "(aab)"]

    def test_unary_example(self, capsys):
        code, report = run_json(capsys, "analyze", LANGUAGES / "a3a4.json", "ufp", "--max-len", "17")
        assert code == 0
        lengths = [len(w) for w in report["slice"]["oracle"] if w != "ε"]
        assert lengths == [3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 17]

    def test_prefix_code(self, capsys):
        code, report = run_json(capsys, "analyze", LANGUAGES / "prefix_code.json", "uf", "8")
        assert code == 0
        assert report["results"]["is_code"] is True
        assert report["witness"] is None

    @pytest.mark.parametrize("predicate", ["uf", "su", "ufp", "ufs"])
    @pytest.mark.parametrize("name", ["su_example", "a3a4", "bell", "prefix_code"])
    def test_witnesses_revalidate(self, capsys, name, predicate):
        path = LANGUAGES / f"{name}.json"
        code, report = run_json(capsys, "analyze", path, predicate, "--max-len", "7")
        assert code == 0
        assert report["agree"]
        assert_witness_valid(report, LanguageSpec.load(path))

    def test_regex_uf_witness(self, capsys):
        path = LANGUAGES / "prop3_n3.json"
        code, report = run_json(capsys, "analyze", path, "uf", "--max-len", "6")
        assert code == 0
        assert report["witness"]["length"] == 14
        assert report["witness"]["within_bound"]
        assert_witness_valid(report, LanguageSpec.load(path))

    def test_regex_ufs_is_oracle_only(self, capsys):
        code, report = run_json(capsys, "analyze", LANGUAGES / "prop3_n3.json", "ufs", "6")
        assert code == 0
        assert "construction" not in report["slice"]

    def test_deterministic_json(self, capsys):
        args = ("analyze", LANGUAGES / "su_example.json", "su", "6", "--json")
        first = run(capsys, *args)[1]
        second = run(capsys, *args)[1]
        assert first == second
        assert json.loads(first)["predicate"] == "su"

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "analyze", LANGUAGES / "su_example.json", "su", "6")
        assert code == 0
        assert "(a)(ab)" in out and "construction = oracle" in out

    def test_timing_flag(self, capsys):
        code, report = run_json(capsys, "analyze", LANGUAGES / "a3a4.json", "uf", "--timing")
        assert code == 0 and "total" in report["timing"]

    def test_cfg_dump(self, capsys, tmp_path):
        out = tmp_path / "g.txt"
        code, _, _ = run(capsys, "analyze", LANGUAGES / "su_example.json", "su", "--cfg-out", out)
        assert code == 0
        assert out.read_text().startswith("S -> ")

    def test_slice_cap(self, capsys):
        code, _, err = run(capsys, "analyze", LANGUAGES / "su_example.json", "uf",
                           "--max-len", "30", "--cap", "10")
        assert code == 3 and "--cap" in err


class TestExitCodes:
    def test_epsilon(self, capsys, tmp_path):
        path = write_spec(tmp_path, {"alphabet": ["a"], "kind": "regex", "pattern": "a*"})
        code, _, err = run(capsys, "analyze", path, "uf")
        assert code == 4 and "uf(L) = ∅" in err

    @pytest.mark.parametrize(
        "doc",
        [
            {"alphabet": ["a"], "kind": "regex", "pattern": "a|"},
            {"alphabet": ["a"], "kind": "finite", "words": [["b"]]},
            {"kind": "finite"},
        ],
    )
    def test_malformed(self, capsys, tmp_path, doc):
        code, _, err = run(capsys, "analyze", write_spec(tmp_path, doc), "uf")
        assert code == 3 and "malformed" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "analyze", tmp_path / "none.json", "uf")[0] == 3

    def test_ufp_needs_finite(self, capsys):
        assert run(capsys, "analyze", LANGUAGES / "prop3_n3.json", "ufp")[0] == 3

    def test_disagreement_exits_2(self, capsys, monkeypatch):
        from factorlang import cli

        monkeypatch.setattr(cli, "uf_dfa", lambda dfa: cli.star_nfa(dfa))
        code, _, _ = run(capsys, "analyze", LANGUAGES / "su_example.json", "uf", "5")
        assert code == 2


class TestFamily:
    def test_long_witness_lengths(self, capsys):
        code, out, _ = run(capsys, "family", "prop3", "2..5")
        assert code == 0
        assert "witness lengths: 8, 14, 22, 32" in out

    def test_finite_lengths(self, capsys):
        code, manifests = run_json(capsys, "family", "prop5", "2..6")
        assert code == 0
        lengths = [
            c["actual"] for m in manifests for c in m["claims"]
            if c["description"] == "shortest ambiguous length"
        ]
        assert lengths == [3, 6, 10, 15, 21]
        assert manifests[0]["language"]["kind"] == "finite"

    def test_unparametrized(self, capsys):
        code, manifests = run_json(capsys, "family", "bell")
        assert code == 0 and manifests[0]["name"] == "bell"

    def test_unknown(self, capsys):
        assert run(capsys, "family", "nope")[0] == 3

    @pytest.mark.parametrize("rng", ["x", "5..2"])
    def test_bad_range(self, capsys, rng):
        assert run(capsys, "family", "prop3", rng)[0] == 3

    def test_missing_range(self, capsys):
        assert run(capsys, "family", "prop5")[0] == 3


class TestExportDot:
    @pytest.mark.parametrize(
        "construction",
        ["dfa", "star", "double", "uf", "matrix-uf", "ufs", "ufs-witness", "su-machine", "ufp-machine"],
    )
    def test_writes_dot(self, capsys, tmp_path, construction):
        out = tmp_path / "m.dot"
        code, _, _ = run(capsys, "export-dot", LANGUAGES / "su_example.json", construction, out)
        assert code == 0
        text = out.read_text()
        assert text.startswith("digraph") and text.rstrip().endswith("}")

    def test_double_labels(self, capsys):
        code, out, _ = run(capsys, "export-dot", LANGUAGES / "su_example.json", "double", "-")
        assert code == 0 and '"[0,0]"' in out

    def test_ufs_labels(self, capsys):
        code, out, _ = run(capsys, "export-dot", LANGUAGES / "a3a4.json", "ufs", "-")
        assert code == 0 and "‖" in out

    def test_write_failure(self, capsys, tmp_path):
        out = tmp_path / "missing" / "m.dot"
        code, _, err = run(capsys, "export-dot", LANGUAGES / "su_example.json", "dfa", out)
        assert code == 5 and "cannot write" in err

    def test_finite_only_construction(self, capsys):
        code, _, _ = run(capsys, "export-dot", LANGUAGES / "prop3_n3.json", "ufs", "-")
        assert code == 3


class TestAccept:
    @pytest.fixture
    def quick(self, monkeypatch):
        monkeypatch.setattr(acceptance, "CRITERIA", [acceptance.criterion_4, acceptance.criterion_10])

    def test_table(self, capsys, quick):
        code, out, _ = run(capsys, "accept")
        assert code == 0
        assert "[PASS]  4." in out and "2/2 criteria passed" in out

    def test_json(self, capsys, quick):
        code, rows = run_json(capsys, "accept")
        assert code == 0 and [r["criterion"] for r in rows] == [4, 10]

    def test_failure_exit(self, capsys, monkeypatch):
        def broken():
            return acceptance.CriterionResult(99, "broken", False)

        monkeypatch.setattr(acceptance, "CRITERIA", [broken])
        assert run(capsys, "accept")[0] == 2


def test_word_tokens_survive_json(tmp_path):
    spec = LanguageSpec.finite([as_word("a1 b", ("a1", "b"))], ("a1", "b"))
    path = tmp_path / "t.json"
    spec.dump(path)
    assert LanguageSpec.load(path).words == (("a1", "b"),)
