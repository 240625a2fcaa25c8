import json
import shutil

import pytest

from lecycle.cli import main
from lecycle.corpus import entry_files, load_entry, parse_entry, write_expectations
from lecycle.errors import AdmissibilityError, InconsistentCriteria, InputError, ParseError

from conftest import CORPUS


def write(tmp_path, name, text):
    path = tmp_path / f"{name}.germ"
    path.write_text(text)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


CUSP2 = "variables = x, y\nf = x^2 + y^3\n"


def test_parse_entry_fields():
    e = parse_entry("name = a\nvariables = t, x, y\nf = x^2+y^3\nseeds = 1,2,3,4\n"
                    "samples = 1,0,0; 1/2,0,0\ny_ideal = t\nexpect.mu0 = 2\nexpect.lambdas = 0, 2\n")
    assert e.name == "a" and e.seeds == [1, 2, 3, 4]
    assert len(e.samples) == 2 and str(e.samples[1][0]) == "1/2"
    assert e.expectations == {"mu0": 2, "lambdas": [0, 2]}
    assert [str(p) for p in e.y_polys] == ["t"]


@pytest.mark.parametrize("text", [
    "variables = x, y\n",
    "variables = x, y\nf = x^2\nbogus = 1\n",
    "variables = x, y\nf = x^2\nf = y^2\n",
    "variables = t, x, y\nf = x^2+y^3\nsamples = 0, 1, 0\n",
    "variables = x, y\nf = x^2\nframe = weird\n",
    "variables = x, y\nf = x^2 + 1\n",
    "no equals sign\n",
])
def test_parse_entry_rejects(text):
    with pytest.raises(InputError):
        parse_entry(text)


def test_parse_entry_bad_polynomial():
    with pytest.raises(ParseError):
        parse_entry("variables = x, y\nf = x^^2\n")


def test_shipped_corpus_shape(corpus_entries):
    names = [e.name for e in corpus_entries]
    assert len(names) >= 12 and len(set(names)) == len(names)
    assert all(e.expectations for e in corpus_entries)


def test_write_expectations_roundtrip(tmp_path):
    path = write(tmp_path, "e", CUSP2 + "expect.mu0 = 7\n")
    write_expectations(path, {"mu0": 2, "lambdas": [2]})
    e = load_entry(path)
    assert e.expectations == {"mu0": 2, "lambdas": 2}
    write_expectations(path, {"mu0": 2, "lambdas": [2]})
    assert path.read_text().count("expect.mu0") == 1


def test_cmd_milnor(tmp_path, capsys):
    path = write(tmp_path, "cusp", CUSP2)
    code, out = run(capsys, "milnor", path)
    assert code == 0 and json.loads(out) == {"milnor": 2}


def test_cmd_milnor_non_isolated(tmp_path, capsys):
    path = write(tmp_path, "cross", "variables = x, y\nf = x^2*y^2\n")
    code, out = run(capsys, "milnor", path)
    assert code == 2 and "non-isolated" in json.loads(out)["error"]


def test_cmd_milnor_parse_error(tmp_path, capsys):
    path = write(tmp_path, "bad", "variables = x, y\nf = x^2 + * y\n")
    code, out = run(capsys, "milnor", path)
    assert code == 1 and "position" in json.loads(out)["error"]


def test_cmd_milnor_slice(tmp_path, capsys):
    path = write(tmp_path, "cubic", "variables = t, x, y\nf = x^3+y^3+t*x*y\n")
    code, out = run(capsys, "milnor", path, "--slice", "--point", "1,0,0")
    assert code == 0 and json.loads(out)["slice_milnor"] == 1


def test_cmd_le_numbers(capsys):
    code, out = run(capsys, "le-numbers", CORPUS / "cubic_node.germ")
    data = json.loads(out)
    assert code == 0 and data["lambdas"] == [6, 1] and data["frames_tried"] == ["identity"]
    code, out = run(capsys, "le-numbers", CORPUS / "cusp_line.germ", "--point", "1,0,0")
    assert json.loads(out)["lambdas"] == [0, 2]


def test_cmd_le_numbers_identity_then_random(tmp_path, capsys):
    path = write(tmp_path, "cross", "variables = x, y\nf = x^2*y^2\nseeds = 1, 2, 3, 4\n")
    code, out = run(capsys, "le-numbers", path)
    data = json.loads(out)
    assert code == 0 and data["frames_tried"] == ["identity", 1] and data["lambdas"] == [3, 2]


def test_cmd_le_numbers_no_frame(tmp_path, capsys, monkeypatch):
    import lecycle.cli as cli

    def refuse(*args, **kwargs):
        raise AdmissibilityError("no admissible frame after 8 tries")

    monkeypatch.setattr(cli, "choose_admissible_tower", refuse)
    code, out = run(capsys, "le-numbers", write(tmp_path, "cusp", CUSP2))
    assert code == 3 and json.loads(out)["kind"] == "AdmissibilityError"


def test_cmd_check_inconsistent(capsys, monkeypatch):
    import lecycle.report as report

    def broken(*args, **kwargs):
        raise InconsistentCriteria("criteria disagree")

    monkeypatch.setattr(report, "evaluate_criteria", broken)
    code, _ = run(capsys, "check", CORPUS / "cusp_line.germ")
    assert code == 4


def test_cmd_check_examples(capsys, tmp_path):
    code, out = run(capsys, "check", CORPUS / "cusp_line.germ")
    crit = json.loads(out)["criteria"]
    assert code == 0 and all(crit[k] for k in ("c1", "c2", "c4", "c5", "consistent"))
    code, out = run(capsys, "check", CORPUS / "cubic_node.germ")
    crit = json.loads(out)["criteria"]
    assert code == 0 and not any(crit[k] for k in ("c1", "c2", "c4", "c5")) and crit["consistent"]


def test_cmd_check_mismatch(capsys, tmp_path):
    path = tmp_path / "cusp_line.germ"
    shutil.copy(CORPUS / "cusp_line.germ", path)
    path.write_text(path.read_text().replace("expect.mu0 = 2", "expect.mu0 = 3"))
    code, out = run(capsys, "check", path)
    assert code == 5
    assert json.loads(out)["mismatches"] == {"mu0": {"expected": 3, "observed": 2}}


def test_cmd_corpus_empty(tmp_path, capsys):
    code, out = run(capsys, "corpus", tmp_path)
    assert code == 0 and json.loads(out)["message"] == "0 entries"


def test_cmd_corpus_one_failing(tmp_path, capsys):
    for name in ("cusp_line", "a1_point"):
        shutil.copy(CORPUS / f"{name}.germ", tmp_path)
    bad = tmp_path / "a1_point.germ"
    bad.write_text(bad.read_text().replace("expect.mu0 = 1", "expect.mu0 = 5"))
    out_dir = tmp_path / "out"
    code, out = run(capsys, "corpus", tmp_path, "--jobs", "2", "--output", out_dir)
    summary = json.loads(out)
    assert code == 1 and summary["failed"] == ["a1_point"] and summary["passed"] == 1
    assert (out_dir / "summary.json").exists() and (out_dir / "cusp_line.payload.json").exists()
    assert not list(out_dir.glob("*.tmp"))


def test_cmd_oracle(tmp_path, capsys):
    path = write(tmp_path, "cusp", CUSP2 + "seeds = 1, 2, 3, 4, 5, 6, 7, 8\n")
    code, out = run(capsys, "oracle", path, "--write")
    assert code == 0 and json.loads(out)["cusp"]["mu0"] == 2
    assert load_entry(path).expectations["lambdas"] == 2
    code, _ = run(capsys, "check", path)
    assert code == 0


def test_seed_env_default(monkeypatch):
    monkeypatch.setenv("LECYCLE_SEED", "40")
    e = parse_entry(CUSP2)
    assert e.seeds == list(range(40, 48))


def test_entry_files_sorted():
    files = entry_files(CORPUS)
    assert files == sorted(files)
