from __future__ import absolute_import, unicode_literals

import pytest

from krcrystal.cartan import A2EVEN, A2ODD, B1, C1, D1, D2, AffineType
from krcrystal.graph import CrystalGraph
from krcrystal.kr_crystal import KRCrystalGraph
from krcrystal.tests import global_data

_MIN_RANK = {D1: 4, B1: 3, A2ODD: 2, C1: 2, A2EVEN: 2, D2: 2}


def generate_types(families=(D1, B1, A2ODD), max_rank=None):
    """Generate the affine types of the given families up to a rank.

    :param families: Family constants.
    :type families: tuple
    :param max_rank: Largest rank; 5 with --complete, 4 otherwise.
    :type max_rank: int
    :return: Affine types, smallest rank first.
    :rtype: [krcrystal.cartan.AffineType]
    """
    if max_rank is None:
        max_rank = 5 if global_data.get('complete') else 4
    return [
        AffineType(family, n)
        for family in families
        for n in range(_MIN_RANK[family], max_rank + 1)
    ]


def generate_build_grid(max_s=None):
    """Generate (t, r, s) for the sign diagram families at small size.

    :param max_s: Largest s; 3 with --complete, 2 otherwise.
    :type max_s: int
    :return: Triples with non-spin r.
    :rtype: [tuple]
    """
    if max_s is None:
        max_s = 3 if global_data.get('complete') else 2
    grid = []
    for t in (AffineType(D1, 4), AffineType(B1, 3), AffineType(A2ODD, 3)):
        bound = {D1: t.rank - 2, B1: t.rank - 1, A2ODD: t.rank}[t.family]
        for r in range(1, bound + 1):
            for s in range(1, max_s + 1):
                grid.append((t, r, s))
    return grid


def _swap_targets(edges, color):
    chosen = [edge for edge in edges if edge[1] == color]
    (a, _, x), (b, _, y) = chosen[0], chosen[1]
    kept = [edge for edge in edges if edge not in (chosen[0], chosen[1])]
    return kept + [(a, color, y), (b, color, x)]


def generate_corrupted(g):
    """Return a copy of g whose first two 0-edges exchange their targets.

    :param g: Crystal graph with at least two 0-edges.
    :type g: krcrystal.graph.CrystalGraph
    :rtype: krcrystal.graph.CrystalGraph
    """
    return CrystalGraph(g.words, g.weights, _swap_targets(g.edges, 0), g.affine_type, g.r, g.s)


def generate_rewired(g, color):
    """Return a KR crystal graph like g whose first two color edges exchange targets."""
    return KRCrystalGraph(
        g.words, g.weights, _swap_targets(g.edges, color), g.affine_type, g.r, g.s,
        g.sigma_table, g.crystal, g.diagrams,
    )


def assert_raises(*exc):
    """Assert that the given exception is raised.

    :param exc: Expected exception(s).
    :type: exc
    """
    return pytest.raises(exc)
