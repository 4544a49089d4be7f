import random

import numpy as np
import pytest

from cayleycodes.gf2 import (Gf2Matrix, int_rank, int_span_equal, nullspace,
                             pack_int, rref, unpack_int)


def test_pack_round_trip():
    v = (1 << 200) | (1 << 63) | 1
    assert unpack_int(pack_int(250, v)) == v
    m = Gf2Matrix.from_ints(250, [v, 0, 3])
    assert m.to_ints() == [v, 0, 3]
    assert m.row_support(0) == [0, 63, 200]


def test_rank_identity_and_repeats():
    eye = Gf2Matrix.from_ints(5, [1 << i for i in range(5)])
    assert eye.rank() == 5
    rep = Gf2Matrix.from_ints(5, [0b10101, 0b10101])
    assert rep.rank() == 1


def test_rank_known_construction():
    # 50 seeded independent rows plus 50 sums of pairs: rank stays 50
    rng = random.Random(42)
    basis = [(1 << i) | (rng.getrandbits(50) << 50) for i in range(50)]
    sums = [basis[rng.randrange(50)] ^ basis[rng.randrange(50)] for _ in range(50)]
    m = Gf2Matrix.from_ints(100, basis + sums)
    assert m.rank() == 50


def test_rank_input_unmodified():
    rows = [0b110, 0b011, 0b101]
    m = Gf2Matrix.from_ints(3, rows)
    before = m.to_ints()
    assert m.rank() == 2
    assert m.to_ints() == before


def test_echelon_membership():
    m = Gf2Matrix.from_ints(6, [0b000111, 0b011100, 0b110001])
    ech = m.echelon()
    assert ech.contains_int(0b000111 ^ 0b011100)
    assert ech.contains_int(0)
    assert not ech.contains_int(0b000001)


def test_reduce_batch_matches_single():
    rng = random.Random(1)
    rows = [rng.getrandbits(120) for _ in range(40)]
    m = Gf2Matrix.from_ints(120, rows)
    ech = m.echelon()
    probes = [rng.getrandbits(120) for _ in range(10)] + rows[:5]
    batch = np.stack([pack_int(120, p) for p in probes])
    red = ech.reduce_batch(batch)
    for i, p in enumerate(probes):
        assert unpack_int(red[i]) == unpack_int(ech.reduce(pack_int(120, p)))


def test_nullspace():
    rng = random.Random(5)
    rows = [rng.getrandbits(60) for _ in range(35)]
    m = Gf2Matrix.from_ints(60, rows)
    ns = nullspace(m)
    assert ns.nrows == 60 - m.rank()
    # every basis vector is orthogonal to every row
    for x in ns.to_ints():
        for r in rows:
            assert (x & r).bit_count() % 2 == 0
    # basis is independent
    assert ns.rank() == ns.nrows


def test_rref_pivots():
    m = Gf2Matrix.from_ints(4, [0b0011, 0b0110, 0b1100])
    reduced, pivots = rref(m)
    assert len(pivots) == 3
    # each pivot column has exactly one 1 across the reduced rows
    for i, c in enumerate(pivots):
        col = [(unpack_int(reduced[j]) >> c) & 1 for j in range(3)]
        assert sum(col) == 1 and col[i] == 1


def test_int_rank_and_span():
    assert int_rank([0b11, 0b01, 0b10]) == 2
    assert int_span_equal([0b11, 0b01], [0b10, 0b01])
    assert not int_span_equal([0b11], [0b10, 0b01])


def test_from_supports_bounds():
    with pytest.raises(ValueError):
        Gf2Matrix.from_supports(4, [[4]])
    with pytest.raises(ValueError):
        Gf2Matrix.from_ints(4, [0b10000])
