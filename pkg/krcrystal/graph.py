"""Colored crystal graphs stored as per-color partial matchings."""

__all__ = ["CrystalGraph"]

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .cartan import AffineType, Weight
from .exceptions import ColorError, GraphStructureError
from .typings import Edge, TensorWord

logger = logging.getLogger(__name__)


class CrystalGraph:
    """Immutable colored digraph whose vertices are tensor words.

    Vertex ids are the positions in ``words``. Each color class must be a
    partial matching: at most one outgoing and one incoming edge per vertex.

    :param words: Vertex words in id order.
    :type words: [tuple]
    :param weights: Classical weight of each vertex.
    :type weights: [krcrystal.cartan.Weight]
    :param edges: Triples (src, color, dst) meaning f_color(src) = dst.
    :type edges: [tuple]
    :param affine_type: Affine type, if the graph belongs to one.
    :type affine_type: krcrystal.cartan.AffineType | None
    :param r: Node r of B^{r,s}, if any.
    :type r: int | None
    :param s: Level s of B^{r,s}, if any.
    :type s: int | None
    :raise krcrystal.exceptions.GraphStructureError: If a color class is not
        a partial matching or an edge points outside the vertex set.
    """

    def __init__(
        self,
        words: Sequence[TensorWord],
        weights: Sequence[Weight],
        edges: Iterable[Edge],
        affine_type: Optional[AffineType] = None,
        r: Optional[int] = None,
        s: Optional[int] = None,
    ) -> None:
        self._words: Tuple[TensorWord, ...] = tuple(tuple(w) for w in words)
        self._weights: Tuple[Weight, ...] = tuple(Weight(w) for w in weights)
        if len(self._words) != len(self._weights):
            raise GraphStructureError("words and weights differ in length")
        self._index: Dict[TensorWord, int] = {}
        for vid, word in enumerate(self._words):
            if word in self._index:
                raise GraphStructureError(f"duplicate vertex {word}")
            self._index[word] = vid
        self._affine_type = affine_type
        self._r = r
        self._s = s
        self._succ: Dict[int, Dict[int, int]] = {}
        self._pred: Dict[int, Dict[int, int]] = {}
        size = len(self._words)
        for src, color, dst in sorted(set(edges), key=lambda e: (e[1], e[0], e[2])):
            if not (0 <= src < size and 0 <= dst < size):
                raise GraphStructureError(f"edge {(src, color, dst)} leaves the vertex set")
            succ = self._succ.setdefault(color, {})
            pred = self._pred.setdefault(color, {})
            if src in succ or dst in pred:
                raise GraphStructureError(
                    f"color {color} is not a partial matching at {(src, dst)}"
                )
            succ[src] = dst
            pred[dst] = src

    def __repr__(self) -> str:
        head = str(self._affine_type) if self._affine_type else "classical"
        if self._r is not None:
            head += f" r={self._r} s={self._s}"
        return f"<CrystalGraph {head} vertices={len(self._words)}>"

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: object) -> bool:
        return word in self._index

    @property
    def affine_type(self) -> Optional[AffineType]:
        return self._affine_type

    @property
    def r(self) -> Optional[int]:
        return self._r

    @property
    def s(self) -> Optional[int]:
        return self._s

    @property
    def words(self) -> Tuple[TensorWord, ...]:
        return self._words

    @property
    def weights(self) -> Tuple[Weight, ...]:
        return self._weights

    @property
    def colors(self) -> Tuple[int, ...]:
        """Return the colors that carry at least one edge."""
        return tuple(sorted(c for c, succ in self._succ.items() if succ))

    @property
    def edges(self) -> List[Edge]:
        """Return all edges ordered by (src, color, dst)."""
        return sorted(
            (src, color, dst)
            for color, succ in self._succ.items()
            for src, dst in succ.items()
        )

    def word(self, vid: int) -> TensorWord:
        return self._words[vid]

    def weight(self, vid: int) -> Weight:
        return self._weights[vid]

    def index(self, word: Sequence[int]) -> int:
        """Return the id of a word.

        :raise KeyError: If the word is not a vertex.
        """
        return self._index[tuple(word)]

    def f(self, color: int, vid: int) -> Optional[int]:
        return self._succ.get(color, {}).get(vid)

    def e(self, color: int, vid: int) -> Optional[int]:
        return self._pred.get(color, {}).get(vid)

    def epsilon(self, color: int, vid: int) -> int:
        """Return the length of the color string above a vertex."""
        count = 0
        current = self.e(color, vid)
        while current is not None:
            count += 1
            if count > len(self._words):
                raise GraphStructureError(f"color {color} has a cycle through {vid}")
            current = self.e(color, current)
        return count

    def phi(self, color: int, vid: int) -> int:
        count = 0
        current = self.f(color, vid)
        while current is not None:
            count += 1
            if count > len(self._words):
                raise GraphStructureError(f"color {color} has a cycle through {vid}")
            current = self.f(color, current)
        return count

    def highest_weight_vertices(self, colors: Iterable[int]) -> List[int]:
        """Return ids annihilated by e_i for every i in colors, ascending."""
        chosen = tuple(colors)
        return [
            vid
            for vid in range(len(self._words))
            if all(self.e(c, vid) is None for c in chosen)
        ]

    def components(self, colors: Iterable[int]) -> List[List[int]]:
        """Return the connected components under the given colors.

        Components are ordered by smallest id and list their ids ascending.
        """
        chosen = set(colors)
        g = nx.Graph()
        g.add_nodes_from(range(len(self._words)))
        for color in chosen:
            g.add_edges_from(self._succ.get(color, {}).items())
        parts = [sorted(part) for part in nx.connected_components(g)]
        return sorted(parts, key=lambda part: part[0])

    def is_connected(self, colors: Iterable[int] = None) -> bool:
        if colors is None:
            colors = self._succ
        return len(self.components(colors)) <= 1

    def relabeled(self, order: Sequence[int]) -> "CrystalGraph":
        """Return a copy whose vertex k is the old vertex order[k].

        :param order: Permutation of the vertex ids.
        :type order: [int]
        :return: Relabeled copy.
        :rtype: krcrystal.graph.CrystalGraph
        """
        if sorted(order) != list(range(len(self._words))):
            raise GraphStructureError("relabeling is not a permutation")
        new_id = {old: new for new, old in enumerate(order)}
        return CrystalGraph(
            words=[self._words[old] for old in order],
            weights=[self._weights[old] for old in order],
            edges=[(new_id[src], color, new_id[dst]) for src, color, dst in self.edges],
            affine_type=self._affine_type,
            r=self._r,
            s=self._s,
        )

    def with_edges(self, edges: Iterable[Edge]) -> "CrystalGraph":
        """Return a copy with the same vertices and a new edge set."""
        return CrystalGraph(
            self._words, self._weights, edges, self._affine_type, self._r, self._s
        )

    def check_color(self, color: int) -> None:
        rank = len(self._weights[0]) if self._weights else 0
        if not 0 <= color <= rank:
            raise ColorError(f"color {color} outside 0..{rank}")

    def to_networkx(self) -> nx.MultiDiGraph:
        """Return a networkx multigraph with the edge color stored as attribute."""
        g = nx.MultiDiGraph()
        for vid, word in enumerate(self._words):
            g.add_node(vid, word=word)
        for src, color, dst in self.edges:
            g.add_edge(src, dst, key=color, color=color)
        return g
