import json

import pytest

from kekulec import builtin, dumps_document
from kekulec.cli import main


@pytest.fixture()
def graph_file(tmp_path):
    def write(name, text=None):
        path = tmp_path / f"{name}.json"
        if text is None:
            text = dumps_document(builtin(name).document())
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_states_phenantrene(graph_file, capsys):
    path = graph_file("phenantrene")
    code, out, _ = run(capsys, "states", path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "5 Kekulé states"
    assert lines[-1] == "5 perfect matchings"
    assert len(lines) == 7


def test_cell_golden_output(graph_file, capsys):
    path = graph_file("ethene3")
    code, out, _ = run(capsys, "cell", path)
    assert code == 0
    assert out.splitlines() == ["ports: {p0,p1,p2}", "{}", "{p0,p1}", "{p1,p2}"]


def test_output_is_byte_identical(graph_file, capsys):
    path = graph_file("splitter-indene")
    _, first, _ = run(capsys, "cell", path)
    _, second, _ = run(capsys, "cell", path)
    assert first == second


def test_cell_json_format(graph_file, capsys):
    path = graph_file("ethene3")
    code, out, _ = run(capsys, "cell", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["members"] == [[], ["p0", "p1"], ["p1", "p2"]]


def test_semikekule_output(graph_file, capsys):
    path = graph_file("phenantrene")
    code, out, _ = run(capsys, "semikekule", path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r = 3"
    assert lines[-1] == "semi-Kekulé states per parity-correct assignment: 8"


def test_semikekule_with_assignment(graph_file, capsys):
    path = graph_file("ethene3")
    code, out, _ = run(capsys, "semikekule", path, "--assignment", "p0,p2")
    assert code == 0
    assert "assignment {p0,p2}: 1 states" in out


def test_channels_report(graph_file, capsys):
    path = graph_file("ethene3")
    code, out, _ = run(capsys, "channels", path)
    assert code == 0
    assert out.splitlines() == ["at {}:", "{p0,p1}: open", "{p0,p2}: closed",
                                "{p1,p2}: open"]


def test_omni_delta3(graph_file, capsys):
    path = graph_file("delta3")
    code, out, _ = run(capsys, "omni", path)
    assert code == 0
    assert out.splitlines()[0] == "omniconjugated: true"


def test_omni_witness(graph_file, capsys):
    path = graph_file("ethene3")
    code, out, _ = run(capsys, "omni", path)
    assert code == 0
    assert "witness: {p0,p2}" in out


def test_classify_ethene(graph_file, capsys):
    path = graph_file("ethene3")
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    assert "class: k1-star" in out
    assert "translation: {p1}" in out


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "cell", "missing.json")
    assert code == 2
    assert "file error" in err


def test_parse_error_is_domain_error(graph_file, capsys):
    path = graph_file("bad", text='{"edges": [["a", "a"]]}')
    code, _, err = run(capsys, "cell", path)
    assert code == 1
    assert "self-loop" in err


def test_unknown_key_warning_on_stderr(graph_file, capsys):
    path = graph_file("warned", text='{"edges": [["a", "b"]], "color": 1}')
    code, out, err = run(capsys, "cell", path)
    assert code == 0
    assert "unknown key 'color'" in err
    assert "color" not in out


def test_lint_flag(graph_file, capsys):
    path = graph_file("delta5")
    code, _, err = run(capsys, "cell", path, "--lint")
    assert code == 0
    assert "degree 5 > 4" in err


def test_transform_merge(graph_file, capsys, tmp_path):
    path = graph_file("a5")
    code, out, err = run(capsys, "transform", path, "--merge", "a3")
    assert code == 0
    doc = json.loads(out)
    assert doc["edges"] == [["a1", "a2"], ["a2", "a5"]]
    assert "operation: merge a3" in err


def test_transform_split_round_trip(graph_file, capsys):
    path = graph_file("b")
    code, out, _ = run(capsys, "transform", path, "--split", "a3:a2/a4,a5")
    assert code == 0
    assert json.loads(out)["edges"]


def test_transform_translate(graph_file, capsys):
    path = graph_file("house5")
    code, out, _ = run(capsys, "transform", path, "--translate", "n1",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["operation"] == "translate {n1}"


def test_transform_glue(graph_file, capsys):
    left = graph_file("delta3")
    right = graph_file("a2", text='{"edges": [["qa", "qb"]]}')
    code, out, _ = run(capsys, "transform", left, "--glue", f"{right}:p1,qa")
    assert code == 0
    assert "qb" in out


def test_transform_requires_one_flag(graph_file, capsys):
    path = graph_file("a5")
    code, _, err = run(capsys, "transform", path)
    assert code == 2
    assert "usage error" in err


def test_builtin_list(capsys):
    code, out, _ = run(capsys, "builtin", "--list")
    assert code == 0
    assert "ycell-pyracylene" in out.splitlines()


def test_builtin_emits_document(capsys):
    code, out, _ = run(capsys, "builtin", "ethene3")
    assert code == 0
    doc = json.loads(out)
    assert doc["channels"] == {"A": ["p0", "p1"], "T": ["p0", "p2"]}


def test_builtin_unknown_name(capsys):
    code, _, err = run(capsys, "builtin", "nosuch")
    assert code == 1
    assert "unknown builtin" in err


def test_simulate_script_clean_run(graph_file, capsys, tmp_path):
    path = graph_file("ycell-tree")
    script = tmp_path / "walk.txt"
    script.write_text("state\nopen\nsocket AB\nsignal T\nreach\nquit\n")
    code, out, _ = run(capsys, "simulate", path, "--script", str(script))
    assert code == 0
    assert "socket AB: fired A" in out
    assert "4 reachable states" in out


def test_simulate_script_refusal_exits_nonzero(graph_file, capsys, tmp_path):
    path = graph_file("ethene3")
    script = tmp_path / "walk.txt"
    script.write_text("signal T\n")
    code, out, _ = run(capsys, "simulate", path, "--script", str(script))
    assert code == 1
    assert "signal T: refused" in out


def test_simulate_script_unknown_command(graph_file, capsys, tmp_path):
    path = graph_file("ethene3")
    script = tmp_path / "walk.txt"
    script.write_text("explode\n")
    code, _, err = run(capsys, "simulate", path, "--script", str(script))
    assert code == 2
    assert "unknown command" in err


def test_simulate_trace_dump_replays(graph_file, capsys, tmp_path):
    path = graph_file("ethene3")
    dump = tmp_path / "trace.txt"
    script = tmp_path / "walk.txt"
    script.write_text(f"signal A\nsignal T\ntrace dump {dump}\nquit\n")
    code, out, _ = run(capsys, "simulate", path, "--script", str(script))
    assert code == 0
    assert dump.read_text().splitlines() == ["signal A", "signal T"]
    code, out, _ = run(capsys, "simulate", path, "--script", str(dump))
    assert code == 0


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "omni-families")
    assert code == 0
    assert out.startswith("PASS omni-families:")


def test_verify_respects_max_edges(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "openness-path-equivalence",
                       "--max-edges", "6")
    assert code == 0
    assert "PASS openness-path-equivalence" in out


def test_simulate_interactive_over_pipe(graph_file):
    import subprocess
    import sys
    path = graph_file("ethene3")
    proc = subprocess.run(
        [sys.executable, "-m", "kekulec", "simulate", path],
        input="state\nsignal A\nbogus\nsignal T\nquit\n",
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert "signal A: fired -> {p0,p1}" in proc.stdout
    assert "unknown command: bogus" in proc.stdout
    assert "signal T: fired -> {p1,p2}" in proc.stdout


def test_simulate_interactive_eof_exits_cleanly(graph_file):
    import subprocess
    import sys
    path = graph_file("ycell-tree")
    proc = subprocess.run(
        [sys.executable, "-m", "kekulec", "simulate", path],
        input="", capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0


def test_channels_at_non_member_is_domain_error(graph_file, capsys):
    path = graph_file("ethene3")
    code, _, err = run(capsys, "channels", path, "--at", "p0,p2")
    assert code == 1
    assert "not in the Kekulé cell" in err


def test_classify_four_port_template_realizes_input(graph_file, capsys):
    path = graph_file("lemma2-k3")
    code, out, _ = run(capsys, "classify", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == "k3"
    assert payload["kekule"] is True
    assert payload["template"]["edges"]
