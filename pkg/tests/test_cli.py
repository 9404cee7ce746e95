import json

import pytest

from contraction_semigroups import formulas as fm
from contraction_semigroups.cli import main
from contraction_semigroups.verify import parse_report


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--family", "odci")
    assert code == 0
    assert out.splitlines() == [
        "dom: | im:",
        "dom: 1 | im: 1",
        "dom: 2 | im: 1",
        "dom: 2 | im: 2",
        "dom: 1 2 | im: 1 2",
    ]
    code, filtered, _ = run(capsys, "enumerate", "--n", "4", "--family", "orci", "--method", "filtered")
    code, direct, _ = run(capsys, "enumerate", "--n", "4", "--family", "orci")
    assert filtered == direct


def test_enumerate_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "9", "--family", "ci")
    assert code == 1 and "guard" in err


def test_count_formats(capsys):
    code, out, _ = run(capsys, "count", "--n", "5", "--family", "oci", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert int(doc["total"]) == fm.order_oci(5)
    code, out, _ = run(capsys, "count", "--n", "3", "--family", "orci", "--by", "height-fix",
                       "--p", "2", "--m", "1", "--format", "csv")
    assert out.splitlines() == ["p,m,count", "2,1,4"]
    code, out, _ = run(capsys, "count", "--n", "4", "--family", "odci")
    assert code == 0 and out.strip()


def test_count_image_and_profile(capsys):
    assert run(capsys, "count", "--n", "6", "--family", "oci", "--image", "3,5,6")[1] == "10\n"
    code, out, _ = run(capsys, "count", "--n", "6", "--family", "odci", "--profile", "1:3:5:2")
    assert int(out) == fm.odci_profile_count(6, 1, 3, 5, 2)
    code, _, err = run(capsys, "count", "--n", "6", "--family", "odci", "--image", "1,2")
    assert code == 2


def test_formula(capsys):
    assert run(capsys, "formula", "oci-height", "--n", "3", "--p", "2")[1] == "7\n"
    assert run(capsys, "formula", "orci-height-fix-printed", "--n", "3", "--p", "2", "--m", "1")[1] == "1\n"
    assert run(capsys, "formula", "order-odci", "--n", "200")[1] == f"{fm.fibonacci(401)}\n"
    code, out, _ = run(capsys, "formula", "order-oci", "--n", "50", "--all-methods")
    assert len({line.split("\t")[1] for line in out.splitlines()}) == 1
    assert run(capsys, "formula", "oci-height", "--n", "3")[0] == 2
    assert run(capsys, "formula", "nope", "--n", "3")[0] == 2
    assert run(capsys, "formula", "oci-height", "--n", "3", "--p", "9")[0] == 2


def test_bad_arguments(capsys):
    assert run(capsys, "count", "--n", "0", "--family", "oci")[0] == 2
    assert run(capsys, "count", "--n", "3", "--family", "xyz")[0] == 2
    assert run(capsys)[0] == 2


def test_verify(capsys, tmp_path):
    path = tmp_path / "report.tsv"
    code, out, _ = run(capsys, "verify", "--max-n-filtered", "3", "--max-n-direct", "4",
                       "--samples", "50", "--out", str(path))
    assert code == 0
    assert "fail=0" in out and "documented mismatch orci-height-fix-printed" in out
    report = parse_report(path.read_text())
    assert report.ok
    assert run(capsys, "verify", "--max-n-filtered", "9", "--max-n-direct", "8")[0] == 2


def test_sequence(capsys):
    code, out, _ = run(capsys, "sequence", "A094864", "--n", "5")
    assert code == 0
    assert out.splitlines()[1].split("\t")[2:] == ["1", "1", "pass"]
    assert run(capsys, "sequence", "A999999")[0] == 2


def test_odci_height_fix_row(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--family", "odci", "--by", "height-fix",
                       "--p", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["2,0,1", "2,1,1", "2,2,3"]
