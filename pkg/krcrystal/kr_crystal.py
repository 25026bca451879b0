"""Kirillov-Reshetikhin crystals B^{r,s} of types D_n^(1), B_n^(1), A_{2n-1}^(2).

The classical part is the disjoint union of the components B(L) over the
branching decomposition. The 0-arrows come from the involution sigma, which
raises to X_{n-1} highest weight, swaps the sign diagram and lowers back:
f_0 = sigma f_1 sigma.
"""

__all__ = [
    "KRCrystalGraph",
    "build",
    "check_build_domain",
    "sigma",
    "apply_affine",
    "apply_affine_f",
    "eps_phi",
    "affine_weight",
    "decompose",
    "decompose_weights",
    "twist_labels",
    "sigma_twisted_decomposition",
    "inner_shape",
    "classical_pairings",
]

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from .cartan import (
    A2ODD,
    B1,
    D1,
    AffineType,
    Partition,
    Weight,
    dual_kac_labels,
    pairing,
)
from .exceptions import (
    CrystalUsageError,
    LevelError,
    NodeIndexError,
    OperatorStringError,
    SpinNodeError,
    VertexLimitError,
)
from .graph import CrystalGraph
from .kn_tableaux import (
    DEFAULT_MAX_VERTICES,
    ClassicalCrystal,
    generate_component,
    highest_weight_word,
    raise_to_highest_weight,
)
from .pm_diagram import DiagramIndex, outer_shapes, phi, s_map
from .typings import Edge, Labels, TensorWord
from .utils import check_colors, check_positive_int

logger = logging.getLogger(__name__)


class KRCrystalGraph(CrystalGraph):
    """Crystal graph of B^{r,s} carrying its classical engine and sigma table.

    :param sigma_table: sigma as a list, vertex id -> vertex id.
    :type sigma_table: [int]
    :param crystal: Classical crystal the words live in.
    :type crystal: krcrystal.kn_tableaux.ClassicalCrystal
    :param index: Inverse of phi shared by the construction.
    :type index: krcrystal.pm_diagram.DiagramIndex
    """

    def __init__(
        self,
        words: Sequence[TensorWord],
        weights: Sequence[Weight],
        edges: Iterable[Edge],
        affine_type: AffineType,
        r: int,
        s: int,
        sigma_table: Sequence[int],
        crystal: ClassicalCrystal,
        index: DiagramIndex,
    ) -> None:
        super().__init__(words, weights, edges, affine_type, r, s)
        self._sigma = tuple(sigma_table)
        self._crystal = crystal
        self._diagrams = index

    @property
    def crystal(self) -> ClassicalCrystal:
        return self._crystal

    @property
    def diagrams(self) -> DiagramIndex:
        return self._diagrams

    @property
    def sigma_table(self) -> Tuple[int, ...]:
        return self._sigma


def check_build_domain(t: AffineType, r: int, s: int) -> None:
    """Raise unless B^{r,s} of type t has a sign diagram model.

    :raise krcrystal.exceptions.SpinNodeError: If r is beyond the model.
    :raise krcrystal.exceptions.CrystalUsageError: For families without a model.
    """
    check_positive_int(s, "s")
    if t.family not in (D1, B1, A2ODD):
        raise CrystalUsageError(f"no sign diagram model for {t}")
    if not 1 <= r <= t.rank:
        raise NodeIndexError(f"node {r} outside 1..{t.rank}")
    bound = {D1: t.rank - 2, B1: t.rank - 1, A2ODD: t.rank}[t.family]
    if r > bound:
        raise SpinNodeError(f"B^{{{r},{s}}} of {t} needs r <= {bound}")


def _sigma_word(
    t: AffineType,
    r: int,
    s: int,
    crystal: ClassicalCrystal,
    index: DiagramIndex,
    word: TensorWord,
) -> TensorWord:
    top, string = raise_to_highest_weight(crystal, word, range(2, t.rank + 1))
    image = phi(t, s_map(t, r, s, index.lookup(top)), crystal)
    result = crystal.apply_string(image, string)
    if result is None:
        raise OperatorStringError(f"sigma of {word} annihilated while lowering {image}")
    return result


def build(t: AffineType, r: int, s: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> KRCrystalGraph:
    """Build the full I-colored crystal graph of B^{r,s}.

    Vertex ids follow the decomposition order of the outer shapes, then the
    breadth-first discovery order inside each component.

    :param t: Affine type D_n^(1), B_n^(1) or A_{2n-1}^(2).
    :type t: krcrystal.cartan.AffineType
    :param r: Node, r <= n-2 (D), r <= n-1 (B), r <= n (A_{2n-1}^(2)).
    :type r: int
    :param s: Positive integer.
    :type s: int
    :param max_vertices: Resource cap on the total vertex count.
    :type max_vertices: int
    :return: Crystal graph with edges of every color 0..n.
    :rtype: krcrystal.kr_crystal.KRCrystalGraph
    :raise krcrystal.exceptions.SpinNodeError: If r is outside the model.
    :raise krcrystal.exceptions.VertexLimitError: If the cap is exceeded.
    """
    check_build_domain(t, r, s)
    crystal = ClassicalCrystal(t.kind, t.rank)
    index = DiagramIndex(t, s, crystal)
    words: List[TensorWord] = []
    edges: List[Edge] = []
    for shape in outer_shapes(t, r, s):
        index.add_shape(shape)
        remaining = max_vertices - len(words)
        if remaining <= 0:
            raise VertexLimitError(f"B^{{{r},{s}}} of {t} exceeds {max_vertices} vertices")
        component = generate_component(
            crystal, highest_weight_word(shape), max_vertices=remaining, affine_type=t
        )
        offset = len(words)
        words.extend(component.words)
        edges.extend((src + offset, color, dst + offset) for src, color, dst in component.edges)
        logger.debug("%s B^{%d,%d}: component %s has %d vertices", t, r, s, tuple(shape), len(component))

    position = {word: vid for vid, word in enumerate(words)}
    table = [position[_sigma_word(t, r, s, crystal, index, word)] for word in words]
    f1 = {src: dst for src, color, dst in edges if color == 1}
    for vid in range(len(words)):
        lowered = f1.get(table[vid])
        if lowered is not None:
            edges.append((vid, 0, table[lowered]))
    return KRCrystalGraph(
        words=words,
        weights=[crystal.weight(w) for w in words],
        edges=edges,
        affine_type=t,
        r=r,
        s=s,
        sigma_table=table,
        crystal=crystal,
        index=index,
    )


def sigma(g: KRCrystalGraph, b: int) -> int:
    """Return sigma(b) for a vertex id."""
    return g.sigma_table[b]


def apply_affine(g: KRCrystalGraph, i: int, b: int) -> Optional[int]:
    """Return e_i(b); for i = 0 this is sigma e_1 sigma (b).

    :param g: Crystal graph.
    :type g: krcrystal.kr_crystal.KRCrystalGraph
    :param i: Color in I.
    :type i: int
    :param b: Vertex id.
    :type b: int
    :return: Vertex id or None.
    :rtype: int | None
    """
    check_colors([i], g.affine_type.rank)
    if i:
        return g.e(i, b)
    raised = g.e(1, sigma(g, b))
    return None if raised is None else sigma(g, raised)


def apply_affine_f(g: KRCrystalGraph, i: int, b: int) -> Optional[int]:
    check_colors([i], g.affine_type.rank)
    if i:
        return g.f(i, b)
    lowered = g.f(1, sigma(g, b))
    return None if lowered is None else sigma(g, lowered)


def eps_phi(g: CrystalGraph, i: int, b: int) -> Tuple[int, int]:
    """Return (epsilon_i(b), phi_i(b)) by walking the i-string."""
    check_colors([i], g.affine_type.rank)
    return g.epsilon(i, b), g.phi(i, b)


def affine_weight(g: CrystalGraph, b: int) -> Tuple[int, ...]:
    """Return (m_0, ..., m_n) with m_i = phi_i(b) - epsilon_i(b).

    :raise krcrystal.exceptions.LevelError: If sum a_i^vee m_i is not zero.
    """
    t = g.affine_type
    labels = tuple(g.phi(i, b) - g.epsilon(i, b) for i in t.index_set)
    level = sum(a * m for a, m in zip(dual_kac_labels(t), labels))
    if level:
        raise LevelError(f"vertex {b} {g.word(b)} has level {level}")
    return labels


def decompose(g: CrystalGraph, colors: Iterable[int]) -> List[Labels]:
    """Return the highest weights of the color-restricted components.

    Each weight is given by its labels ((i, phi_i), ...) over the sorted colors.
    """
    chosen = sorted(check_colors(colors, g.affine_type.rank))
    found = [
        tuple((i, g.phi(i, vid)) for i in chosen)
        for vid in g.highest_weight_vertices(chosen)
    ]
    return sorted(found)


def decompose_weights(g: CrystalGraph) -> List[Weight]:
    """Return the classical highest weights in vertex order."""
    top = g.highest_weight_vertices(g.affine_type.classical_index_set)
    return [g.weight(vid) for vid in top]


def twist_labels(labels: Iterable[Labels]) -> List[Labels]:
    """Exchange colors 0 and 1 in every label tuple."""
    swap = {0: 1, 1: 0}
    return sorted(
        tuple(sorted((swap.get(i, i), m) for i, m in entry)) for entry in labels
    )


def sigma_twisted_decomposition(g: CrystalGraph) -> Tuple[List[Labels], List[Labels]]:
    """Return the {0,2..n} decomposition and the twisted {1..n} decomposition."""
    n = g.affine_type.rank
    zero_side = decompose(g, [0] + list(range(2, n + 1)))
    one_side = twist_labels(decompose(g, range(1, n + 1)))
    return zero_side, one_side


def inner_shape(g: KRCrystalGraph, b: int) -> Partition:
    """Return the inner shape of the diagram of b's X_{n-1} component."""
    n = g.affine_type.rank
    top, _ = raise_to_highest_weight(g.crystal, g.word(b), range(2, n + 1))
    return g.diagrams.lookup(top).inner


def classical_pairings(g: CrystalGraph, b: int) -> Tuple[int, ...]:
    """Return <h_i, wt(b)> for i in I_0."""
    t = g.affine_type
    return tuple(pairing(t, i, g.weight(b)) for i in t.classical_index_set)
