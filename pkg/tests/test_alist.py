import pytest

from cayleycodes.alist import dumps_alist, loads_alist


def test_round_trip():
    rows = [[0, 3, 5], [1, 2], [0, 1, 2, 6]]
    text = dumps_alist(rows, 7)
    n, m, back = loads_alist(text)
    assert (n, m) == (7, 3)
    assert back == [sorted(r) for r in rows]


def test_deterministic():
    rows = [[5, 3, 0], [2, 1]]
    assert dumps_alist(rows, 6) == dumps_alist([[0, 3, 5], [1, 2]], 6)


def test_header_shape():
    text = dumps_alist([[0, 1], [1, 2]], 4)
    lines = text.splitlines()
    assert lines[0] == "4 2"
    assert lines[1] == "2 2"       # max column degree, max row degree
    assert lines[2] == "1 2 1 0"   # column degrees
    assert lines[3] == "2 2"       # row degrees
    # per-column row indices, 1-based, zero padded
    assert lines[4] == "1 0"
    assert lines[5] == "1 2"
    assert lines[6] == "2 0"
    assert lines[7] == "0 0"
    # per-row column indices
    assert lines[8] == "1 2"
    assert lines[9] == "2 3"


def test_damage_detected():
    text = dumps_alist([[0, 3, 5], [1, 2]], 7)
    lines = text.splitlines()
    # inconsistent perspectives: move a row entry without the column view
    bad = lines[:]
    row_line = 4 + 7  # first row-perspective line
    bad[row_line] = bad[row_line].replace("4", "5", 1)
    with pytest.raises(ValueError):
        loads_alist("\n".join(bad))
    with pytest.raises(ValueError):
        loads_alist("1 1\n")


def test_column_out_of_range():
    with pytest.raises(ValueError):
        dumps_alist([[9]], 7)
