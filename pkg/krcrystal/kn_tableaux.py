"""Classical crystals of types D_n, B_n and C_n on tensor words.

A letter is an integer: ``i`` stands for i, ``-i`` for its bar and ``0`` for
the middle letter of B_n. A word is the tuple of its tensor factors, the
leftmost factor first.
"""

__all__ = [
    "ANTI_KASHIWARA",
    "KASHIWARA",
    "DEFAULT_MAX_VERTICES",
    "ClassicalCrystal",
    "alphabet",
    "letter_text",
    "parse_letter",
    "letter_weight",
    "word_weight",
    "vector_arrows",
    "vector_crystal_graph",
    "generate_component",
    "highest_weight_elements",
    "highest_weight_word",
    "raise_to_highest_weight",
]

import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cartan import A2EVEN, A2ODD, B1, C1, D1, D2, AffineType, Partition, Weight
from .exceptions import ColorError, GraphFormatError, VertexLimitError
from .graph import CrystalGraph
from .typings import TensorWord
from .utils import check_colors

logger = logging.getLogger(__name__)

ANTI_KASHIWARA = "anti-kashiwara"
KASHIWARA = "kashiwara"

DEFAULT_MAX_VERTICES = 20000

# (src letter, color, dst letter) for f_0 inside B^{1,1}
_ZERO_ARROWS = {
    D1: ((-1, 0, 2), (-2, 0, 1)),
    B1: ((-1, 0, 2), (-2, 0, 1)),
    A2ODD: ((-1, 0, 2), (-2, 0, 1)),
    C1: ((-1, 0, 1),),
    A2EVEN: (),
    D2: (),
}


def alphabet(kind: str, n: int) -> Tuple[int, ...]:
    """Return the letters in chain order 1 < 2 < ... < n (< 0) < -n < ... < -1."""
    middle = (0,) if kind == "B" else ()
    return tuple(range(1, n + 1)) + middle + tuple(range(-n, 0))


def letter_text(letter: int) -> str:
    return str(letter)


def parse_letter(text: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise GraphFormatError(f"bad letter {text!r}")


def letter_weight(n: int, letter: int) -> Weight:
    if letter == 0:
        return Weight.zero(n)
    if letter > 0:
        return Weight.unit(n, letter)
    return Weight.unit(n, -letter, -1)


def word_weight(n: int, word: Sequence[int]) -> Weight:
    total = [0] * n
    for letter in word:
        if letter > 0:
            total[letter - 1] += 1
        elif letter < 0:
            total[-letter - 1] -= 1
    return Weight(total)


def _classical_arrows(kind: str, n: int) -> List[Tuple[int, int, int]]:
    arrows = []
    for i in range(1, n):
        arrows.append((i, i, i + 1))
        arrows.append((-(i + 1), i, -i))
    if kind == "D":
        arrows.append((n - 1, n, -n))
        arrows.append((n, n, -(n - 1)))
    elif kind == "B":
        arrows.append((n, n, 0))
        arrows.append((0, n, -n))
    else:
        arrows.append((n, n, -n))
    return arrows


class ClassicalCrystal:
    """Tensor powers of the vector crystal B(varpi_1).

    :param kind: Classical kind ``D``, ``B`` or ``C``.
    :type kind: str
    :param n: Rank.
    :type n: int
    :param convention: Tensor product rule, :data:`ANTI_KASHIWARA` (default) or
        :data:`KASHIWARA`.
    :type convention: str
    """

    __slots__ = ["_kind", "_n", "_convention", "_f", "_e", "_eps", "_phi", "_cache"]

    def __init__(self, kind: str, n: int, convention: str = ANTI_KASHIWARA) -> None:
        if convention not in (ANTI_KASHIWARA, KASHIWARA):
            raise ValueError(f"unknown tensor convention {convention!r}")
        self._kind = kind
        self._n = n
        self._convention = convention
        self._f: Dict[Tuple[int, int], int] = {}
        self._e: Dict[Tuple[int, int], int] = {}
        for src, color, dst in _classical_arrows(kind, n):
            self._f[(color, src)] = dst
            self._e[(color, dst)] = src
        self._eps: Dict[Tuple[int, int], int] = {}
        self._phi: Dict[Tuple[int, int], int] = {}
        for letter in alphabet(kind, n):
            for color in range(1, n + 1):
                self._eps[(color, letter)] = self._walk(self._e, color, letter)
                self._phi[(color, letter)] = self._walk(self._f, color, letter)
        self._cache: Dict[Tuple[int, TensorWord], Tuple[Tuple[int, ...], Tuple[int, ...]]] = {}

    @staticmethod
    def _walk(arrows: Dict[Tuple[int, int], int], color: int, letter: int) -> int:
        count = 0
        while (color, letter) in arrows:
            letter = arrows[(color, letter)]
            count += 1
        return count

    def __repr__(self) -> str:
        return f"<ClassicalCrystal {self._kind}{self._n} {self._convention}>"

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def rank(self) -> int:
        return self._n

    @property
    def index_set(self) -> Tuple[int, ...]:
        return tuple(range(1, self._n + 1))

    @property
    def letters(self) -> Tuple[int, ...]:
        return alphabet(self._kind, self._n)

    def _check_color(self, color: int) -> None:
        if isinstance(color, bool) or not isinstance(color, int) or not 1 <= color <= self._n:
            raise ColorError(f"color {color!r} outside 1..{self._n}")

    def signature(self, color: int, word: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Return the positions of the unbracketed minus and plus signs.

        Minus positions are listed in scan order, plus positions nearest the
        scan end first. Under the anti-Kashiwara rule the scan runs from the
        last factor to the first.
        """
        self._check_color(color)
        key = (color, tuple(word))
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if self._convention == ANTI_KASHIWARA:
            positions = range(len(word) - 1, -1, -1)
        else:
            positions = range(len(word))
        minus: List[int] = []
        pending: List[int] = []
        for pos in positions:
            letter = word[pos]
            for _ in range(self._eps[(color, letter)]):
                if pending:
                    pending.pop()
                else:
                    minus.append(pos)
            pending.extend([pos] * self._phi[(color, letter)])
        result = (tuple(minus), tuple(pending))
        self._cache[key] = result
        return result

    def epsilon(self, color: int, word: Sequence[int]) -> int:
        return len(self.signature(color, word)[0])

    def phi(self, color: int, word: Sequence[int]) -> int:
        return len(self.signature(color, word)[1])

    def apply_e(self, color: int, word: Sequence[int]) -> Optional[TensorWord]:
        """Return e_color(word), or None when it vanishes.

        :param color: Color in 1..n.
        :type color: int
        :param word: Tensor word.
        :type word: tuple
        :return: Raised word or None.
        :rtype: tuple | None
        :raise krcrystal.exceptions.ColorError: If color is out of range.
        """
        minus, _ = self.signature(color, word)
        if not minus:
            return None
        pos = minus[-1]
        new = list(word)
        new[pos] = self._e[(color, word[pos])]
        return tuple(new)

    def apply_f(self, color: int, word: Sequence[int]) -> Optional[TensorWord]:
        """Return f_color(word), or None when it vanishes."""
        _, plus = self.signature(color, word)
        if not plus:
            return None
        pos = plus[0]
        new = list(word)
        new[pos] = self._f[(color, word[pos])]
        return tuple(new)

    def apply_string(self, word: Sequence[int], string: Sequence[int], lower: bool = True) -> Optional[TensorWord]:
        """Apply f (or e) along a string, rightmost index first."""
        current: Optional[TensorWord] = tuple(word)
        for color in reversed(tuple(string)):
            if current is None:
                return None
            current = self.apply_f(color, current) if lower else self.apply_e(color, current)
        return current

    def weight(self, word: Sequence[int]) -> Weight:
        return word_weight(self._n, word)


def vector_arrows(t: AffineType) -> List[Tuple[int, int, int]]:
    """Return the arrows of the B^{1,1} chain, 0-arrows included.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :return: Triples (letter, color, f_color(letter)).
    :rtype: [tuple]
    """
    arrows = _classical_arrows(t.kind, t.rank) + list(_ZERO_ARROWS[t.family])
    return sorted(arrows, key=lambda a: (a[1], alphabet(t.kind, t.rank).index(a[0])))


def vector_crystal_graph(t: AffineType) -> CrystalGraph:
    """Return the reference graph of B^{1,1} over the letters, chain order."""
    letters = alphabet(t.kind, t.rank)
    position = {letter: k for k, letter in enumerate(letters)}
    edges = [(position[a], color, position[b]) for a, color, b in vector_arrows(t)]
    return CrystalGraph(
        words=[(letter,) for letter in letters],
        weights=[letter_weight(t.rank, letter) for letter in letters],
        edges=edges,
        affine_type=t,
        r=1,
        s=1,
    )


def generate_component(
    crystal: ClassicalCrystal,
    seed: Sequence[int],
    colors: Iterable[int] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    affine_type: AffineType = None,
) -> CrystalGraph:
    """Return the connected component of seed under the given colors.

    Vertices are numbered in breadth-first discovery order; neighbours are
    visited by ascending color, f before e.

    :param crystal: Classical crystal.
    :type crystal: krcrystal.kn_tableaux.ClassicalCrystal
    :param seed: Starting word.
    :type seed: tuple
    :param colors: Colors to close under (default: all of 1..n).
    :type colors: [int]
    :param max_vertices: Resource cap.
    :type max_vertices: int
    :param affine_type: Type recorded on the graph.
    :type affine_type: krcrystal.cartan.AffineType
    :return: Component graph.
    :rtype: krcrystal.graph.CrystalGraph
    :raise krcrystal.exceptions.VertexLimitError: If the cap is exceeded.
    """
    chosen = sorted(crystal.index_set if colors is None else check_colors(colors, crystal.rank))
    if 0 in chosen:
        raise ColorError("color 0 is not a classical color")
    start = tuple(seed)
    order: List[TensorWord] = [start]
    index = {start: 0}
    edges = []
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for color in chosen:
            for image in (crystal.apply_f(color, word), crystal.apply_e(color, word)):
                if image is None or image in index:
                    continue
                if len(order) >= max_vertices:
                    raise VertexLimitError(
                        f"component of {start} exceeds {max_vertices} vertices"
                    )
                index[image] = len(order)
                order.append(image)
                queue.append(image)
            image = crystal.apply_f(color, word)
            if image is not None:
                edges.append((index[word], color, index[image]))
    logger.debug("component of %s: %d vertices", start, len(order))
    return CrystalGraph(
        words=order,
        weights=[crystal.weight(w) for w in order],
        edges=edges,
        affine_type=affine_type,
    )


def highest_weight_elements(g: CrystalGraph, colors: Iterable[int]) -> List[TensorWord]:
    """Return the words killed by every e_i, i in colors, in id order."""
    return [g.word(vid) for vid in g.highest_weight_vertices(colors)]


def highest_weight_word(shape: Sequence[int]) -> TensorWord:
    """Return the highest weight word of B(shape) inside a tensor power.

    Columns are read tallest first, each as h, h-1, ..., 1.
    """
    word: List[int] = []
    for height in Partition(shape).column_heights():
        word.extend(range(height, 0, -1))
    return tuple(word)


def raise_to_highest_weight(
    crystal: ClassicalCrystal, word: Sequence[int], colors: Iterable[int]
) -> Tuple[TensorWord, Tuple[int, ...]]:
    """Raise a word until every e_i (i in colors) vanishes.

    Colors are tried in ascending order, repeatedly, each applied as long as
    possible.

    :return: The highest weight word and the applied colors in order.
    :rtype: (tuple, tuple)
    """
    chosen = sorted(set(colors))
    current = tuple(word)
    applied: List[int] = []
    moved = True
    while moved:
        moved = False
        for color in chosen:
            raised = crystal.apply_e(color, current)
            while raised is not None:
                current = raised
                applied.append(color)
                moved = True
                raised = crystal.apply_e(color, current)
    return current, tuple(applied)
