"""CLI output pinned byte-for-byte; regenerate only after reviewing a diff."""
from pathlib import Path

import pytest

from gendold import cli

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "analyze_m2_4-2.json": ["analyze", "--m", "2", "--parts", "4,2", "--json"],
    "analyze_m4_1-1-1.txt": ["analyze", "--m", "4", "--parts", "1,1,1"],
    "sw_m3_1-2.txt": ["sw", "--m", "3", "--parts", "1,2"],
    "table_m1-6_n6.csv": ["table", "--m-range", "1..6", "--n-max", "6"],
    "clifford_r4.txt": ["clifford", "--r", "4", "--dump"],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    assert cli.main(CASES[name]) == 0
    assert capsys.readouterr().out == (GOLDEN / name).read_text()
