import numpy as np
import pytest

from griesmer.codefile import FormatError, dumps, loads, read_code, write_code
from griesmer.constructions import corpus, hexacode

HEX = dumps(hexacode())


def test_round_trip_preserves_everything(tmp_path):
    for code in corpus():
        back = loads(dumps(code))
        assert np.array_equal(back.gen, code.gen)
        assert back.field == code.field
    path = tmp_path / "hexacode.gcode"
    write_code(hexacode(), path)
    back = read_code(path)
    assert back.name == "hexacode"
    assert back.weight_distribution == {0: 1, 4: 45, 6: 18}


def test_layout():
    lines = HEX.splitlines()
    assert lines[:3] == ["GCODE 1", "field p=2 f=2 mod=1,1,1", "code k=3 n=6"]
    assert len(lines) == 6


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("GCODE 2\n", 1),
    (HEX.replace("field p=2", "field  p=2"), 2),
    (HEX.replace("mod=1,1,1", "mod=0,0,1"), 2),
    (HEX.replace("code k=3", "code k=4"), 7),
    (HEX.replace("1 1 1 1 0 0", "1 1 1 1 0"), 4),
    (HEX.replace("1 1 1 1 0 0", "1 1 1 1 0 4"), 4),
    (HEX.replace("1 1 1 1 0 0", "1 1 1 1 0  0"), 4),
    (HEX.replace("1 1 1 1 0 0", "1 1 1 1 0 0 "), 4),
    (HEX + "\n", 7),
    ("GCODE 1\nfield p=2 f=1 mod=0,1\n", 3),
])
def test_format_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as err:
        loads(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_dependent_rows_are_a_format_error():
    text = "GCODE 1\nfield p=2 f=1 mod=0,1\ncode k=2 n=2\n1 1\n1 1\n"
    with pytest.raises(FormatError):
        loads(text)
