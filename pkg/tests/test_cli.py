from pathlib import Path

import pytest
from click.testing import CliRunner

from ringcodes.cli import main

U36 = "021242402043131423014123232100132334"
V36 = "100004000410431304002224330013242110"

SMALL_TABLE = """\
[code]
field = 2
group = 6
n = 6
k = 1
d = 6
flags = R
u = 111111
v = 110000
"""


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_verify_table_small_pass(runner, tmp_path):
    path = tmp_path / "t.codes"
    path.write_text(SMALL_TABLE)
    res = invoke(runner, "verify-table", str(path))
    assert res.exit_code == 0
    assert "status=PASS" in res.output
    assert "1/1 rows passed" in res.output


def test_verify_table_detects_wrong_distance(runner, tmp_path):
    path = tmp_path / "t.codes"
    path.write_text(SMALL_TABLE.replace("d = 6", "d = 7"))
    res = invoke(runner, "verify-table", str(path))
    assert res.exit_code == 1
    assert "status=FAIL" in res.output
    assert "distance" in res.output


def test_verify_table_detects_corrupt_check_element(runner, tmp_path):
    path = tmp_path / "t.codes"
    path.write_text(SMALL_TABLE.replace("v = 110000", "v = 010000"))
    res = invoke(runner, "verify-table", str(path))
    assert res.exit_code == 1
    assert "check element invalid" in res.output


def test_verify_table_bad_file_is_io_error(runner, tmp_path):
    path = tmp_path / "t.codes"
    path.write_text("[code]\nfield = 4\n")
    res = invoke(runner, "verify-table", str(path))
    assert res.exit_code == 2


def test_verify_table_report_artifacts(runner, tmp_path):
    path = tmp_path / "t.codes"
    path.write_text(SMALL_TABLE)
    out = tmp_path / "out"
    res = invoke(runner, "verify-table", str(path), "--out", str(out))
    assert res.exit_code == 0
    tsv = out / "report.tsv"
    png = out / "report.png"
    assert tsv.exists() and png.exists()
    lines = tsv.read_text().splitlines()
    assert lines[0].startswith("field\tgroup\tn")
    assert "\tPASS\t" in lines[1]
    assert png.stat().st_size > 1000


def test_verify_table_tier_filter(runner, tmp_path):
    path = tmp_path / "t.codes"
    path.write_text(SMALL_TABLE + "\n" + SMALL_TABLE.replace(
        "flags = R", "flags = R\ntier = extended"))
    res = invoke(runner, "verify-table", str(path), "--tier", "normal")
    assert "1 skipped" in res.output
    res = invoke(runner, "verify-table", str(path), "--tier", "all")
    assert "2/2 rows passed" in res.output


def test_build_and_record_round_trip(runner, tmp_path):
    res = invoke(runner, "build", "--field", "5", "--group", "6x6",
                 "--u", U36, "--v", V36, "--emit-record")
    assert res.exit_code == 0
    assert "[36,28,6]" in res.output
    assert "checkable: True" in res.output
    # the emitted record block must verify
    block = res.output[res.output.index("[code]"):]
    path = tmp_path / "emitted.codes"
    path.write_text(block)
    res2 = invoke(runner, "verify-table", str(path))
    assert res2.exit_code == 0


def test_classify_command(runner):
    res = invoke(runner, "classify", "--field", "5", "--group", "6x6",
                 "--u", U36, "--v", V36)
    assert res.exit_code == 0
    assert "checkable = True" in res.output
    assert "reversible = True" in res.output
    assert "lcd = True" in res.output


def test_mindist_command(runner):
    res = invoke(runner, "mindist", "--field", "2", "--group", "6",
                 "--u", "111111")
    assert res.exit_code == 0
    assert "d = 6" in res.output
    assert "witness = 111111" in res.output


def test_mindist_budget_failure(runner):
    res = runner.invoke(main, ["mindist", "--field", "5", "--group", "6x6",
                               "--u", U36, "--method", "dependence",
                               "--budget", "10"])
    assert res.exit_code == 1


def test_dual_command(runner):
    res = invoke(runner, "dual", "--field", "2", "--group", "6",
                 "--u", "111111", "--v", "110000")
    assert res.exit_code == 0
    assert "dual is [6,5]" in res.output
    assert "dual generator element: 100001" in res.output


def test_shorten_command(runner):
    res = invoke(runner, "shorten", "--field", "5", "--group", "6x6",
                 "--u", U36, "--positions", "1")
    assert res.exit_code == 0
    assert "[35,27,6]" in res.output


def test_find_check_command(runner):
    res = invoke(runner, "find-check", "--field", "2", "--group", "6",
                 "--u", "111111")
    assert res.exit_code == 0
    v = res.output.strip()
    assert len(v) == 6 and set(v) <= set("01")


def test_find_check_non_checkable_ring(runner):
    res = runner.invoke(main, ["find-check", "--field", "2", "--group", "2x2",
                               "--u", "1111"])
    assert res.exit_code == 1
    assert "not code-checkable" in res.output


def test_mds_command(runner):
    res = invoke(runner, "mds", "--field", "3", "--group", "7")
    assert res.exit_code == 0
    assert "[7,1,7]" in res.output
    assert "[7,6,2]" in res.output
    assert "both codes are checkable" in res.output


def test_bad_input_is_click_error(runner):
    res = runner.invoke(main, ["build", "--field", "2", "--group", "6",
                               "--u", "11112"])  # 2 not in GF(2)
    assert res.exit_code != 0
