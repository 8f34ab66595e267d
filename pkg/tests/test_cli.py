import json
import subprocess
import sys

import pytest

from symchar.cli import main, table_from_obj, table_to_obj
from symchar.partitions import partitions_of
from symchar.tables import character_table

CSV_N2 = ',2,"1,1"\n2,1,1\n"1,1",-1,1\n'

JSON_N2 = (
    '{"n": 2, "order": ["2", "1,1"], "values": [\n'
    ' ["1", "1"],\n'
    ' ["-1", "1"]\n'
    "]}\n"
)

PRETTY_N2 = "      2  1,1\n  2   1    1\n1,1  -1    1\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_value(capsys):
    code, out, err = run(capsys, "value", "--alpha", "2,1", "--beta", "1,1,1")
    assert (code, out, err) == (0, "2\n", "")
    code, out, _ = run(capsys, "value", "--alpha", "5,4,3", "--beta", "6,4,1,1")
    assert code == 0
    assert out == str(character_table(12).value((5, 4, 3), (6, 4, 1, 1))) + "\n"


def test_value_empty_partitions(capsys):
    code, out, _ = run(capsys, "value", "--alpha", "", "--beta", "")
    assert (code, out) == (0, "1\n")


def test_value_weight_mismatch_is_semantic_error(capsys):
    code, out, err = run(capsys, "value", "--alpha", "2,1", "--beta", "2,2")
    assert code == 3
    assert out == ""
    assert "weights differ" in err


def test_value_parse_errors(capsys):
    code, _, err = run(capsys, "value", "--alpha", "1,2", "--beta", "3")
    assert code == 2
    assert "did you mean '2,1'" in err
    code, _, err = run(capsys, "value", "--alpha", "a,b", "--beta", "3")
    assert code == 2


def test_table_pretty(capsys):
    code, out, _ = run(capsys, "table", "--n", "2")
    assert code == 0
    assert out == PRETTY_N2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--format", "csv")
    assert code == 0
    assert out == CSV_N2


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--format", "json")
    assert code == 0
    assert out == JSON_N2
    obj = json.loads(out)
    assert table_from_obj(obj) == character_table(2)


def test_table_rejects_negative_n(capsys):
    code, _, err = run(capsys, "table", "--n", "-1")
    assert code == 2
    assert "nonnegative" in err


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "t3.csv"
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == ",3,\"2,1\",\"1,1,1\""
    assert lines[1] == "3,1,1,1"


def test_table_out_write_failure(tmp_path, capsys):
    target = tmp_path / "missing" / "t.csv"
    code, _, err = run(capsys, "table", "--n", "2", "--out", str(target))
    assert code == 4
    assert "cannot write" in err


def test_table_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "cache"
    code, first, _ = run(capsys, "--cache", str(cache), "table", "--n", "4", "--format", "json")
    assert code == 0
    entry = cache / "table-v1-n4.json"
    assert entry.exists()
    # cached JSON parses back to the same table the command printed
    assert table_from_obj(json.loads(entry.read_text())) == character_table(4)
    code, second, _ = run(capsys, "--cache", str(cache), "table", "--n", "4", "--format", "json")
    assert code == 0
    assert second == first


def test_table_cache_recovers_from_garbage(tmp_path, capsys):
    cache = tmp_path / "cache"
    cache.mkdir()
    entry = cache / "table-v1-n3.json"
    entry.write_text("not json at all")
    code, out, _ = run(capsys, "--cache", str(cache), "table", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "3,1,1,1"
    # the bad entry was replaced with a readable one
    assert table_from_obj(json.loads(entry.read_text())) == character_table(3)


def test_verify_all_checks(capsys):
    code, out, err = run(capsys, "verify", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2 + 6 * 3
    for line in lines:
        obj = json.loads(line)
        assert obj["pass"] is True
        assert "check" in obj and "params" in obj


def test_verify_subset_and_seed(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--checks", "adjoint", "--seed", "11")
    assert code == 0
    (line,) = out.strip().splitlines()
    obj = json.loads(line)
    assert obj["check"] == "adjoint"
    assert obj["seed"] == 11


def test_verify_rejects_bad_input(capsys):
    code, _, err = run(capsys, "verify", "--n", "0")
    assert code == 2
    code, _, err = run(capsys, "verify", "--n", "3", "--checks", "mn,nope")
    assert code == 2
    assert "nope" in err


def test_bench_reports_agreement(capsys):
    code, out, _ = run(capsys, "bench", "--n", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 5
    assert obj["agree"] is True
    assert obj["recursion"]["entries"] == sum(
        len(partitions_of(k)) ** 2 for k in range(6)
    )
    assert obj["recursion"]["exact_divisions"] > 0
    assert obj["mn"]["evaluations"] > 0


def test_bench_single_engine(capsys):
    code, out, _ = run(capsys, "bench", "--n", "4", "--engine", "recursion")
    assert code == 0
    obj = json.loads(out)
    assert "mn" not in obj and "agree" not in obj


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "value", "--alpha", "2,1")[0] == 2  # missing --beta
    assert run(capsys)[0] == 2  # missing subcommand
    assert run(capsys, "nonsense")[0] == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "symchar" in out


def test_table_object_round_trip():
    table = character_table(5)
    assert table_from_obj(table_to_obj(table)) == table


def test_table_from_obj_rejects_malformed():
    obj = table_to_obj(character_table(3))
    wrong_order = dict(obj, order=list(reversed(obj["order"])))
    with pytest.raises(ValueError, match="class order"):
        table_from_obj(wrong_order)
    ragged = dict(obj, values=[row[:-1] for row in obj["values"]])
    with pytest.raises(ValueError, match="ragged"):
        table_from_obj(ragged)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symchar", "value", "--alpha", "3,1", "--beta", "2,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"
