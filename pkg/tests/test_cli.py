import csv
import io
import json
import math
import subprocess
import sys

import pytest

from spinorlaw.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def table(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def test_mult(capsys):
    code, out, _ = run_cli(capsys, "mult", "--n", "1", "--N", "4", "--s", "1")
    assert code == 0
    (row,) = table(out)
    assert row["multiplicity_exact"] == "3"
    assert float(row["multiplicity_asymptotic"]) == 4.0


def test_measure(capsys):
    code, out, _ = run_cli(capsys, "measure", "--n", "1", "--N", "2", "--y", "2")
    assert code == 0
    rows = table(out)
    assert [(r["probability_num"], r["probability_den"]) for r in rows] == [("21", "25"), ("4", "25")]
    assert "# normalization: 1" in out.splitlines()
    assert out.splitlines()[-1].startswith("# config: ")


def test_plancherel(capsys):
    code, out, _ = run_cli(capsys, "plancherel", "--n", "2", "--N", "2")
    assert code == 0
    rows = table(out)
    assert [(r["probability_num"], r["probability_den"]) for r in rows] == [("5", "8"), ("5", "16"), ("1", "16")]


def test_limit(capsys):
    code, out, _ = run_cli(capsys, "limit", "--n", "1", "--theta", "1", "--s-max", "3")
    assert code == 0
    values = [float(r["p_limit"]) for r in table(out)]
    e = math.exp(-1)
    assert values == pytest.approx([e, e, e / 2, e / 6], rel=1e-14)


def test_char(capsys):
    code, out, _ = run_cli(capsys, "char", "--n", "2", "--y", "2,3")
    assert code == 0
    (row,) = table(out)
    assert (row["value_num"], row["value_den"]) == ("25", "3")
    code, out, _ = run_cli(capsys, "char", "--n", "1", "--lambda", "2", "--y", "2")
    assert (table(out)[0]["value_num"], table(out)[0]["value_den"]) == ("21", "4")
    code, out, _ = run_cli(capsys, "char", "--n", "2", "--N", "2", "--s", "0,1", "--y", "1,1")
    assert table(out)[0]["value_num"] == "5"


def test_converge(capsys):
    code, out, _ = run_cli(capsys, "converge", "--n", "1", "--theta", "1", "--N-list", "256,128", "--s", "0")
    assert code == 0
    rows = table(out)
    assert [r["N"] for r in rows] == ["128", "256"]
    assert float(rows[1]["rel_err"]) < float(rows[0]["rel_err"])


def test_sample(capsys):
    code, out, _ = run_cli(capsys, "sample", "--n", "1", "--N", "2", "--y", "2", "--seed", "1", "--count", "1000")
    assert code == 0
    rows = table(out)
    assert sum(int(r["count"]) for r in rows) == 1000
    assert any(l.startswith("# total_variation: ") for l in out.splitlines())


def test_json_format(capsys):
    code, out, _ = run_cli(capsys, "measure", "--n", "1", "--N", "2", "--y", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["probability_num"] == 21 and rows[1]["s_1"] == 1


@pytest.mark.parametrize("argv, code", [
    (["mult", "--n", "2", "--N", "4", "--s", "2,1"], 2),
    (["limit", "--n", "1", "--theta", "1", "--mode", "exact"], 2),
    (["limit", "--n", "2", "--theta", "1"], 2),
    (["measure", "--n", "1", "--N", "2", "--y", "-2"], 2),
    (["char", "--n", "2", "--lambda", "2,0", "--y", "2,2"], 3),
    (["measure", "--n", "1", "--N", "100", "--y", "2"], 4),
    (["converge", "--n", "1", "--theta", "1", "--N-list", "2000000"], 4),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("error:")


def test_force_overrides_guard(capsys):
    assert main(["measure", "--n", "1", "--N", "66", "--y", "3", "--force"]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err
    assert "# normalization: 1" in captured.out


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["mult", "--n", "x"])
    assert exc.value.code == 2


def test_byte_identical_reruns(tmp_path):
    path = tmp_path / "run.csv"
    outputs = []
    for _ in range(2):
        subprocess.run([sys.executable, "-m", "spinorlaw", "sample", "--n", "2", "--N", "6", "--y", "3,2",
                        "--seed", "42", "--count", "5000", "--out", str(path)], check=True)
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
