"""Highest-weight anchored isomorphisms between crystal graphs."""

__all__ = [
    "IsoReport",
    "restricted_isomorphism",
    "check_prop61",
    "verify_prop61",
    "automorphism_count",
    "colored_isomorphism",
    "networkx_automorphism_count",
]

import logging
from collections import deque
from typing import Dict, Iterable, List, NamedTuple, Optional

from networkx.algorithms.isomorphism import MultiDiGraphMatcher, categorical_multiedge_match

from .exceptions import AmbiguousMatchingError
from .graph import CrystalGraph

logger = logging.getLogger(__name__)

VertexMap = Dict[int, int]


class IsoReport(NamedTuple):
    passed: bool
    witness: Optional[int]
    reason: str


def _labels(g: CrystalGraph, vid: int, colors: List[int]) -> tuple:
    return tuple(g.phi(c, vid) for c in colors)


def restricted_isomorphism(
    g1: CrystalGraph, g2: CrystalGraph, colors: Iterable[int]
) -> Optional[VertexMap]:
    """Return the color-respecting bijection g1 -> g2 over the given colors.

    Highest weight vertices are matched by their labels, then the map is
    propagated along f-strings, lowest color first, and every edge of the
    given colors is checked.

    :param g1: Source graph.
    :type g1: krcrystal.graph.CrystalGraph
    :param g2: Target graph.
    :type g2: krcrystal.graph.CrystalGraph
    :param colors: Colors to respect.
    :type colors: [int]
    :return: Vertex map, or None if the graphs are not isomorphic over colors.
    :rtype: dict | None
    :raise krcrystal.exceptions.AmbiguousMatchingError: If two highest weight
        vertices of g1 share their labels.
    """
    chosen = sorted(set(colors))
    if len(g1) != len(g2):
        return None
    top1: Dict[tuple, int] = {}
    for vid in g1.highest_weight_vertices(chosen):
        key = _labels(g1, vid, chosen)
        if key in top1:
            raise AmbiguousMatchingError(f"label {key} repeats among highest weights")
        top1[key] = vid
    top2 = {_labels(g2, vid, chosen): vid for vid in g2.highest_weight_vertices(chosen)}
    if set(top1) != set(top2) or len(g2.highest_weight_vertices(chosen)) != len(top2):
        return None

    mapping: VertexMap = {top1[key]: top2[key] for key in sorted(top1)}
    queue = deque(sorted(mapping))
    while queue:
        vid = queue.popleft()
        for color in chosen:
            nxt = g1.f(color, vid)
            if nxt is None:
                continue
            image = g2.f(color, mapping[vid])
            if image is None:
                return None
            if nxt in mapping:
                if mapping[nxt] != image:
                    return None
                continue
            mapping[nxt] = image
            queue.append(nxt)
    if len(mapping) != len(g1) or len(set(mapping.values())) != len(g2):
        return None
    for vid in range(len(g1)):
        for color in chosen:
            target = g1.f(color, vid)
            image = g2.f(color, mapping[vid])
            if (target is None) != (image is None):
                return None
            if target is not None and mapping[target] != image:
                return None
    return mapping


def automorphism_count(g: CrystalGraph, colors: Iterable[int] = None) -> int:
    """Count color-preserving automorphisms of a connected graph.

    An automorphism is fixed by the image of vertex 0; each candidate with the
    same string lengths is propagated along every color in both directions.
    """
    chosen = sorted(set(g.colors if colors is None else colors))
    if not len(g):
        return 1

    def profile(vid: int) -> tuple:
        return tuple((g.epsilon(c, vid), g.phi(c, vid)) for c in chosen)

    anchor = profile(0)
    count = 0
    for candidate in range(len(g)):
        if g.weight(candidate) != g.weight(0) or profile(candidate) != anchor:
            continue
        mapping = {0: candidate}
        queue = deque([0])
        ok = True
        while queue and ok:
            vid = queue.popleft()
            for color in chosen:
                for step in (g.f, g.e):
                    nxt = step(color, vid)
                    image = step(color, mapping[vid])
                    if (nxt is None) != (image is None):
                        ok = False
                        break
                    if nxt is None:
                        continue
                    if nxt in mapping:
                        if mapping[nxt] != image:
                            ok = False
                            break
                    else:
                        mapping[nxt] = image
                        queue.append(nxt)
                if not ok:
                    break
        if ok and len(mapping) == len(g) and len(set(mapping.values())) == len(g):
            count += 1
    return count


def check_prop61(g: CrystalGraph, reference: CrystalGraph = None) -> IsoReport:
    """Check that the {1..n} and {0,2..n} isomorphisms onto a copy coincide.

    The copy is the reference graph (a fresh build of the same crystal by
    default) with its vertices in reverse order. The graph must also have no
    nontrivial color-preserving automorphism.

    :param g: Graph under test.
    :type g: krcrystal.graph.CrystalGraph
    :param reference: Graph to relabel; defaults to a fresh build of g's crystal.
    :type reference: krcrystal.graph.CrystalGraph
    :return: Report with a witness vertex on failure.
    :rtype: krcrystal.iso_check.IsoReport
    """
    if reference is None:
        from .kr_crystal import build

        reference = build(g.affine_type, g.r, g.s, max_vertices=max(len(g), 1))
    n = g.affine_type.rank
    copy = reference.relabeled(list(range(len(reference) - 1, -1, -1)))
    psi0 = restricted_isomorphism(g, copy, range(1, n + 1))
    if psi0 is None:
        return IsoReport(False, None, "no {1..n} isomorphism onto the copy")
    psi1 = restricted_isomorphism(g, copy, [0] + list(range(2, n + 1)))
    if psi1 is None:
        return IsoReport(False, None, "no {0,2..n} isomorphism onto the copy")
    for vid in range(len(g)):
        if psi0[vid] != psi1[vid]:
            return IsoReport(False, vid, "the two restricted isomorphisms differ")
    automorphisms = automorphism_count(g, range(n + 1))
    if automorphisms != 1:
        return IsoReport(False, None, f"{automorphisms} color-preserving automorphisms")
    logger.debug("rigidity holds for %r", g)
    return IsoReport(True, None, "ok")


def verify_prop61(g: CrystalGraph, reference: CrystalGraph = None) -> bool:
    return check_prop61(g, reference).passed


def _matcher(g1: CrystalGraph, g2: CrystalGraph) -> MultiDiGraphMatcher:
    return MultiDiGraphMatcher(
        g1.to_networkx(),
        g2.to_networkx(),
        edge_match=categorical_multiedge_match("color", None),
    )


def colored_isomorphism(g1: CrystalGraph, g2: CrystalGraph) -> Optional[VertexMap]:
    """Return a color-preserving isomorphism found by VF2, or None."""
    matcher = _matcher(g1, g2)
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def networkx_automorphism_count(g: CrystalGraph) -> int:
    """Count color-preserving automorphisms with VF2 (small graphs only)."""
    return sum(1 for _ in _matcher(g, g).isomorphisms_iter())
