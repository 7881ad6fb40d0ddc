import random

import pytest

from scatlib.unionfind import IntervalUnionFind


def test_starts_as_singletons():
    uf = IntervalUnionFind(4)
    assert uf.intervals() == [(1, 1), (2, 2), (3, 3), (4, 4)]


def test_merges_neighbours_only():
    uf = IntervalUnionFind(5)
    assert uf.union(2, 3) == (2, 3)
    assert uf.union(3, 4) == (2, 4)
    assert uf.find(4) == (2, 4)
    with pytest.raises(ValueError):
        uf.union(1, 5)
    assert uf.union(2, 4) == (2, 4)


def test_find_out_of_range():
    uf = IntervalUnionFind(3)
    with pytest.raises(IndexError):
        uf.find(0)
    with pytest.raises(IndexError):
        uf.find(4)


def test_random_merges_match_naive():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 40)
        uf = IntervalUnionFind(n)
        cuts = set(range(1, n))  # cut c separates c and c+1
        for _ in range(rng.randint(0, n)):
            if not cuts:
                break
            c = rng.choice(sorted(cuts))
            cuts.discard(c)
            uf.union(c, c + 1)
        bounds = [0] + sorted(cuts) + [n]
        expected = [(bounds[i] + 1, bounds[i + 1]) for i in range(len(bounds) - 1)]
        assert uf.intervals() == expected
