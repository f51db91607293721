import json
from pathlib import Path

import pytest

from grundylab.exceptions import GrundyLabError, RuleTableError, TriangleError
from grundylab.fractal import from_column_sums
from grundylab.models import SubadditiveTriangle
from grundylab.schemas import OutputFormat, RuleKind
from grundylab.utils import (
    read_rule_table,
    read_sequence,
    read_triangle,
    render_rows,
    render_sequence,
    render_triangle,
    write_text,
)


def test_read_rule_table(tmp_path: Path) -> None:
    path = tmp_path / "rule.txt"
    path.write_text("# f(n) for n = 0, 1, ...\n0\n0\n1\n", encoding="utf-8")
    rule = read_rule_table(path)
    assert rule.kind == RuleKind.TABLE
    assert rule.table == (0, 0, 1)
    assert rule.horizon == 2


def test_read_rule_table_errors(tmp_path: Path) -> None:
    path = tmp_path / "rule.txt"

    path.write_text("0\nx\n", encoding="utf-8")
    with pytest.raises(RuleTableError) as e:
        read_rule_table(path)
    assert e.value.witness == 2

    path.write_text("# header\n0\n2\n", encoding="utf-8")
    with pytest.raises(RuleTableError) as e:
        read_rule_table(path)
    assert e.value.witness == 3
    assert "f(1) = 2" in e.value.message

    path.write_text("# nothing\n", encoding="utf-8")
    with pytest.raises(RuleTableError):
        read_rule_table(path)

    with pytest.raises(GrundyLabError):
        read_rule_table(tmp_path / "missing.txt")


def test_read_rejects_undecodable_and_non_ascii_files(tmp_path: Path) -> None:
    path = tmp_path / "rule.txt"
    path.write_bytes(b"0\n\xff\n")
    with pytest.raises(GrundyLabError) as e:
        read_rule_table(path)
    assert e.value.witness == 2
    with pytest.raises(GrundyLabError):
        read_sequence(path)

    # Arabic-Indic one
    path.write_text("0\n\u0661\n", encoding="utf-8")
    with pytest.raises(RuleTableError) as e:
        read_rule_table(path)
    assert e.value.witness == 2


def test_read_sequence(tmp_path: Path) -> None:
    path = tmp_path / "seq"
    path.write_text("[0, 1, 0, 2]", encoding="utf-8")
    assert read_sequence(path) == [0, 1, 0, 2]

    path.write_text("0\n1\n# skip\n0\n", encoding="utf-8")
    assert read_sequence(path) == [0, 1, 0]

    path.write_text("[0, -1]", encoding="utf-8")
    with pytest.raises(GrundyLabError):
        read_sequence(path)

    path.write_text('[0, "a"]', encoding="utf-8")
    with pytest.raises(GrundyLabError):
        read_sequence(path)


def test_read_triangle(tmp_path: Path) -> None:
    path = tmp_path / "triangle.json"
    triangle = from_column_sums([2, 4])
    write_text(path, triangle.model_dump_json())
    assert read_triangle(path) == triangle

    path.write_text('{"dim": 2, "rows": [[1]]}', encoding="utf-8")
    with pytest.raises(TriangleError):
        read_triangle(path)


def test_write_text_creates_directories(tmp_path: Path) -> None:
    path = tmp_path / "nested" / "out.txt"
    write_text(path, "42")
    assert path.read_text(encoding="utf-8") == "42\n"


def test_render_rows_csv() -> None:
    assert render_rows(("n", "g"), [(0, 0), (1, 0)], OutputFormat.CSV) == "n,g\n0,0\n1,0"
    assert render_sequence([0, 1], OutputFormat.CSV, "h") == "n,h\n0,0\n1,1"


def test_render_rows_table() -> None:
    text = render_rows(("check", "status"), [("f2", "pass"), ("f3", None)], OutputFormat.TABLE, title="fractal")
    assert "fractal" in text
    assert "check" in text
    assert "pass" in text
    assert "None" not in text


def test_render_triangle() -> None:
    triangle = from_column_sums([2, 4])
    assert render_triangle(triangle, OutputFormat.CSV) == "i,1,2\n0,2,3\n1,,1"
    document = json.loads(render_triangle(triangle, OutputFormat.JSON))
    assert SubadditiveTriangle.model_validate(document) == triangle
