import subprocess
import sys

import pytest

from vtcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_check(capsys):
    code, out, err = run(capsys, "table", "--max-n", "8", "--check")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n \\ a | 0 1 2 3 4 5 6 7 8"
    assert lines[-1] == "8 | 30 28 28 29 28 28 29 28 28"
    assert "check=PASS" in err


def test_table_porcelain(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "3", "--porcelain")
    assert code == 0
    assert out.splitlines()[:3] == ["n=1 a=0 size=1", "n=1 a=1 size=1", "n=2 a=0 size=2"]


def test_enum_and_file_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "enum", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["# VT n=5 a=0 size=6", "00000", "00111", "01010", "10001", "11011", "11100"]
    path = tmp_path / "code.txt"
    run(capsys, "enum", "--n", "6", "--a", "1", "--out", str(path))
    code, out, _ = run(capsys, "perfect", "--file", str(path), "--porcelain")
    assert code == 0
    assert out.strip() == "n=6 size=9 correcting=true covered=32 of=32 overlaps=0 perfect=true"


def test_encode_decode(capsys):
    assert run(capsys, "encode", "--word", "1111")[1].strip() == "11110001"
    assert run(capsys, "encode", "--word", "1", "--porcelain")[1].strip() == "k=1 n=4 c=3 word=1001"
    code, out, _ = run(capsys, "decode", "--word", "0010", "--n", "5", "--a", "0")
    assert (code, out.strip()) == (0, "01010")
    code, out, _ = run(capsys, "decode", "--word", "01", "--n", "5", "--porcelain")
    assert code == 1
    assert out.strip() == "ok=false word=- failure=checksum-invalid-length"


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--n", "6", "--porcelain")
    assert code == 0
    assert out.startswith("n=6 A=10 optimal=true nodes=")


def test_perfect_explicit_words(capsys):
    code, out, _ = run(capsys, "perfect", "--word", "000", "--word", "111", "--porcelain")
    assert out.strip() == "n=3 size=2 correcting=true covered=2 of=4 overlaps=0 perfect=false"


def test_shiftreg_grid(capsys):
    code, out, _ = run(capsys, "shiftreg", "--max-n", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n | PCR CCR PSR CSR | match"
    assert lines[10] == "10 | 108 52 94 94 | ok"
    code, out, _ = run(capsys, "shiftreg", "--max-n", "2", "--porcelain")
    assert out.splitlines()[0] == "kind=PCR n=1 cycles=2 formula=2 match=true"


def test_necklace(capsys):
    code, out, _ = run(capsys, "necklace", "--m", "6")
    assert code == 0
    assert out.strip() == "m=6 rotation=14 primitive_complement=5 Z=14 VT1=5 match=true"


def test_descend_and_dist(capsys):
    code, out, _ = run(capsys, "descend", "--word", "0010", "--e", "1")
    assert out.splitlines() == ["word=0010 e=1 size=3 runs=3", "000", "001", "010"]
    code, out, _ = run(capsys, "dist", "--word", "0011", "--word", "0101", "--porcelain")
    assert out.strip() == "dd=1"


def test_simulate(capsys, tmp_path):
    log = tmp_path / "log.tsv"
    code, out, _ = run(capsys, "simulate", "--k", "8", "--blocks", "50", "--seed", "5", "--log", str(log))
    assert code == 0
    assert out.strip() == "blocks=50 deleted=50 recovered=50 failed=0 multi=0"
    assert len(log.read_text().splitlines()) == 50


@pytest.mark.parametrize("argv", [
    ["table", "--max-n", "0"],
    ["table", "--max-n", "20", "--check"],
    ["decode", "--word", "0120", "--n", "5"],
    ["descend", "--word", "01", "--e", "3"],
    ["dist", "--word", "01"],
    ["search", "--n", "11"],
    ["perfect"],
    ["simulate", "--p", "2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


@pytest.mark.parametrize("suite", ["vt", "words", "shiftreg"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite)
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.endswith(": PASS") for line in lines)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vtcodes", "necklace", "--m", "4", "--porcelain"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("m=4 rotation=6 ")
