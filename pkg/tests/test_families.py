import pytest

from nearly_independent.core.families import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    family,
    family_names,
    k4_minus_edge,
    path,
    star,
)
from nearly_independent.source.errors import InvalidFamilyParams


def test_sizes():
    assert (path(5).n, path(5).m) == (5, 4)
    assert (cycle(6).n, cycle(6).m) == (6, 6)
    assert (complete(5).n, complete(5).m) == (5, 10)
    assert (complete_bipartite(2, 3).n, complete_bipartite(2, 3).m) == (5, 6)
    assert (star(7).n, star(7).m) == (7, 6)
    assert (k4_minus_edge().n, k4_minus_edge().m) == (4, 5)
    assert (empty(5).n, empty(5).m) == (5, 0)


def test_labelling_conventions():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(4).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert star(4).edges() == [(0, 1), (0, 2), (0, 3)]
    assert complete_bipartite(2, 2).edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert not k4_minus_edge().adjacent(2, 3)


@pytest.mark.parametrize(
    "build",
    [
        lambda: path(0),
        lambda: cycle(2),
        lambda: complete(0),
        lambda: complete_bipartite(0, 3),
        lambda: star(1),
        lambda: empty(-1),
    ],
)
def test_invalid_parameters(build):
    with pytest.raises(InvalidFamilyParams):
        build()


def test_family_lookup():
    assert family("star", 5) == star(5)
    assert family("bipartite", 2, 4) == complete_bipartite(2, 4)
    assert family("k4-minus-edge") == k4_minus_edge()
    assert "empty" in family_names()
    with pytest.raises(InvalidFamilyParams):
        family("petersen", 10)
    with pytest.raises(InvalidFamilyParams):
        family("cycle")
