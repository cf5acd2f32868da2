import pytest

from cubeband import core


def test_weight_examples():
    assert core.weight(core.parse_vertex("000", 3)) == 0
    assert core.weight(core.parse_vertex("111", 3)) == 3
    assert core.weight(core.parse_vertex("101", 3)) == 2


def test_neighbors_examples():
    assert core.neighbors(core.parse_vertex("00", 2), 2) == [
        core.parse_vertex("10", 2),
        core.parse_vertex("01", 2),
    ]
    assert sorted(core.neighbors(core.parse_vertex("111", 3), 3)) == sorted(
        core.parse_vertex(s, 3) for s in ("011", "101", "110")
    )
    assert core.neighbors(0, 1) == [1]


def test_neighbors_out_of_range():
    with pytest.raises(core.DimensionError):
        core.neighbors(4, 2)
    with pytest.raises(core.DimensionError):
        core.neighbors(0, 0)
    with pytest.raises(core.DimensionError):
        core.neighbors(0, core.ENUM_DIM_MAX + 1)


def test_edge_counts():
    assert list(core.edges(1)) == [(0, 1)]
    assert len(list(core.edges(2))) == 4
    assert len(list(core.edges(3))) == 12


@pytest.mark.parametrize("n", range(1, 13))
def test_edges_exhaustive(n):
    seen = set()
    prev = None
    for u, v in core.edges(n):
        assert u < v
        assert core.weight(u ^ v) == 1
        assert (u, v) not in seen
        seen.add((u, v))
        if prev is not None:
            assert prev[0] <= u
        prev = (u, v)
    assert len(seen) == n * (1 << (n - 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_neighbors_involution(n):
    for v in range(1 << n):
        for u in core.neighbors(v, n):
            assert v in core.neighbors(u, n)


@pytest.mark.parametrize("n", range(1, 11))
def test_parse_format_roundtrip(n):
    for v in range(1 << n):
        assert core.parse_vertex(core.format_vertex(v, n), n) == v


def test_parse_vertex_encoding():
    # leftmost character is c_1, stored at the least significant bit
    assert core.parse_vertex("01", 2) == 2
    assert core.format_vertex(core.parse_vertex("110", 3), 3) == "110"


def test_parse_vertex_errors():
    with pytest.raises(core.VertexFormatError):
        core.parse_vertex("01x", 3)
    with pytest.raises(core.VertexFormatError):
        core.parse_vertex("01", 3)
    with pytest.raises(core.VertexFormatError):
        core.parse_vertex("0101", 3)
