"""Sign diagrams and the maps built on them.

A diagram of outer shape L is a chain inner <= middle <= outer of partitions
such that outer/middle and middle/inner are horizontal strips. Cells of
middle/inner carry a ``+`` and cells of outer/middle carry a ``-``. Read by
columns, every column is one of

* ``E``  no sign (heights h, h, h),
* ``+``  a plus on top (h-1, h, h),
* ``-``  a minus on top (h-1, h-1, h),
* ``+-`` a plus under a minus (h-2, h-1, h),

and inside a block of equal outer height the columns appear in that order.
"""

__all__ = [
    "EMPTY",
    "PLUS",
    "MINUS",
    "PLUS_MINUS",
    "Column",
    "PMDiagram",
    "PMPair",
    "PairAssignment",
    "DiagramIndex",
    "PairIndex",
    "outer_shapes",
    "enumerate_diagrams",
    "diagrams_with_outer",
    "minus_string",
    "phi_string",
    "phi",
    "phi_inverse",
    "s_map",
    "upsilon",
    "pair_signs",
    "e1_on_pair",
    "supports_pair_model",
]

import itertools
import logging
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .branching import decompose_diagrammatic
from .cartan import AffineType, Partition, weight_to_partition
from .exceptions import (
    DiagramError,
    DiagramLookupError,
    OperatorStringError,
    PairMoveError,
)
from .kn_tableaux import ClassicalCrystal, highest_weight_word, raise_to_highest_weight
from .typings import TensorWord

logger = logging.getLogger(__name__)

EMPTY = "E"
PLUS = "+"
MINUS = "-"
PLUS_MINUS = "+-"

_TYPE_ORDER = {EMPTY: 0, PLUS: 1, MINUS: 2, PLUS_MINUS: 3}

# column type -> (outer - inner, outer - middle)
_OFFSETS = {EMPTY: (0, 0), PLUS: (1, 0), MINUS: (1, 1), PLUS_MINUS: (2, 1)}


class Column(NamedTuple):
    kind: str
    height: int

    @property
    def inner(self) -> int:
        return self.height - _OFFSETS[self.kind][0]

    @property
    def middle(self) -> int:
        return self.height - _OFFSETS[self.kind][1]


class PMDiagram:
    """Sign diagram stored as the partition triple (inner, middle, outer).

    :param inner: Unsigned part.
    :type inner: [int]
    :param middle: Unsigned part plus the ``+`` cells.
    :type middle: [int]
    :param outer: Whole shape.
    :type outer: [int]
    :param width: Number of columns, zero-height columns included.
    :type width: int
    :raise krcrystal.exceptions.DiagramError: If the strips are not horizontal
        or the outer shape is wider than ``width``.
    """

    __slots__ = ["_inner", "_middle", "_outer", "_width"]

    def __init__(
        self,
        inner: Sequence[int],
        middle: Sequence[int],
        outer: Sequence[int],
        width: int,
    ) -> None:
        self._inner = Partition(inner)
        self._middle = Partition(middle)
        self._outer = Partition(outer)
        self._width = width
        if self._outer and self._outer[0] > width:
            raise DiagramError(f"outer shape {self._outer!r} is wider than {width}")
        _check_strip(self._outer, self._middle)
        _check_strip(self._middle, self._inner)

    @classmethod
    def from_columns(cls, columns: Sequence[Tuple[str, int]], width: int = None) -> "PMDiagram":
        """Build the diagram with the given multiset of columns.

        :param columns: Pairs (type, outer height), in any order.
        :type columns: [(str, int)]
        :param width: Total width; defaults to the number of columns.
        :type width: int
        :rtype: krcrystal.pm_diagram.PMDiagram
        """
        cols = [Column(kind, height) for kind, height in columns]
        for col in cols:
            if col.kind not in _OFFSETS:
                raise DiagramError(f"unknown column type {col.kind!r}")
            if col.inner < 0:
                raise DiagramError(f"column {col.kind} cannot have height {col.height}")
        if width is None:
            width = len(cols)
        if len(cols) != width:
            raise DiagramError(f"{len(cols)} columns given for width {width}")
        return cls(
            inner=Partition.from_columns(c.inner for c in cols),
            middle=Partition.from_columns(c.middle for c in cols),
            outer=Partition.from_columns(c.height for c in cols),
            width=width,
        )

    def __repr__(self) -> str:
        return (
            f"<PMDiagram inner={tuple(self._inner)} middle={tuple(self._middle)} "
            f"outer={tuple(self._outer)} width={self._width}>"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PMDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> Tuple[Partition, Partition, Partition, int]:
        return self._inner, self._middle, self._outer, self._width

    @property
    def inner(self) -> Partition:
        return self._inner

    @property
    def middle(self) -> Partition:
        return self._middle

    @property
    def outer(self) -> Partition:
        return self._outer

    @property
    def width(self) -> int:
        return self._width

    def columns(self) -> Tuple[Column, ...]:
        """Return the columns left to right."""
        inner = self._inner.column_heights(self._width)
        middle = self._middle.column_heights(self._width)
        outer = self._outer.column_heights(self._width)
        result = []
        for a, b, h in zip(inner, middle, outer):
            offsets = (h - a, h - b)
            for kind, expected in _OFFSETS.items():
                if offsets == expected:
                    result.append(Column(kind, h))
                    break
            else:
                raise DiagramError(f"column {(a, b, h)} is not a sign column")
        return tuple(result)

    def plus_positions(self) -> Tuple[int, ...]:
        """Return the 1-based columns holding a ``+``."""
        return tuple(k for k, col in enumerate(self.columns(), 1) if PLUS in col.kind)

    def minus_positions(self) -> Tuple[int, ...]:
        return tuple(k for k, col in enumerate(self.columns(), 1) if MINUS in col.kind)

    def render(self) -> str:
        """Render in French convention: bottom row last, ``.`` for unsigned cells."""
        lines = []
        inner = self._inner
        middle = self._middle
        for row in range(len(self._outer), 0, -1):
            cells = []
            for col in range(1, self._outer[row - 1] + 1):
                if len(inner) >= row and inner[row - 1] >= col:
                    cells.append(".")
                elif len(middle) >= row and middle[row - 1] >= col:
                    cells.append("+")
                else:
                    cells.append("-")
            lines.append("".join(cells))
        return "\n".join(lines)


def _check_strip(big: Partition, small: Partition) -> None:
    if len(small) > len(big):
        raise DiagramError(f"{small!r} is not contained in {big!r}")
    for i, row in enumerate(big):
        below = small[i] if i < len(small) else 0
        nxt = big[i + 1] if i + 1 < len(big) else 0
        if not nxt <= below <= row:
            raise DiagramError(f"{big!r}/{small!r} is not a horizontal strip")


def _strips_below(shape: Partition) -> Iterator[Partition]:
    ranges = []
    for i, row in enumerate(shape):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        ranges.append(range(row, nxt - 1, -1))
    for rows in itertools.product(*ranges):
        yield Partition(rows)


class PMPair:
    """Pair (P, p) with inner(P) = outer(p), p taken at rank n - 1."""

    __slots__ = ["_big", "_small"]

    def __init__(self, big: PMDiagram, small: PMDiagram) -> None:
        if big.inner != small.outer or big.width != small.width:
            raise DiagramError(f"{small!r} does not fit inside {big!r}")
        self._big = big
        self._small = small

    def __repr__(self) -> str:
        return f"<PMPair P={self._big!r} p={self._small!r}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PMPair):
            return NotImplemented
        return (self._big, self._small) == (other._big, other._small)

    def __hash__(self) -> int:
        return hash((self._big, self._small))

    @property
    def big(self) -> PMDiagram:
        return self._big

    @property
    def small(self) -> PMDiagram:
        return self._small


class PairAssignment(NamedTuple):
    """Outcome of :func:`pair_signs`; positions are 1-based columns."""

    plus_pairs: Tuple[Tuple[int, int], ...]
    minus_pairs: Tuple[Tuple[int, int], ...]
    inner_pairs: Tuple[Tuple[int, int], ...]
    unpaired_small_plus: Tuple[int, ...]
    unpaired_big_minus: Tuple[int, ...]


def outer_shapes(t: AffineType, r: int, s: int) -> List[Partition]:
    """Return the outer shapes of B^{r,s}, i.e. the summands of its decomposition."""
    return [Partition(int(x) for x in w) for w in decompose_diagrammatic(t, r, s)]


def diagrams_with_outer(kind: str, n: int, outer: Sequence[int], width: int) -> List[PMDiagram]:
    """Return every diagram of the given outer shape for X_{n-1} of kind D, B or C.

    For kind C the inner shape has fewer than n rows.
    """
    shape = Partition(outer)
    found = []
    for middle in _strips_below(shape):
        for inner in _strips_below(middle):
            if kind == "C" and len(inner) >= n:
                continue
            found.append(PMDiagram(inner, middle, shape, width))
    return found


def enumerate_diagrams(t: AffineType, r: int, s: int, outer: Sequence[int] = None) -> List[PMDiagram]:
    """Return the diagrams indexing the X_{n-1} highest weights of B^{r,s}.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param r: Node.
    :type r: int
    :param s: Width.
    :type s: int
    :param outer: Restrict to one outer shape.
    :type outer: [int] | None
    :rtype: [krcrystal.pm_diagram.PMDiagram]
    """
    shapes = outer_shapes(t, r, s) if outer is None else [Partition(outer)]
    result = []
    for shape in shapes:
        result.extend(diagrams_with_outer(t.kind, t.rank, shape, s))
    return result


def minus_string(kind: str, n: int, height: int) -> List[int]:
    """Return the lowering string contributed by a ``-`` at the given height."""
    if kind == "D":
        return list(range(1, n + 1)) + list(range(n - 2, height - 1, -1))
    if kind == "B":
        return list(range(1, n)) + [n, n] + list(range(n - 1, height - 1, -1))
    return list(range(1, n + 1)) + list(range(n - 1, height - 1, -1))


def phi_string(kind: str, n: int, diagram: PMDiagram) -> List[int]:
    """Return the string a with phi(P) = f_{a_1} ... f_{a_l} u_outer.

    Columns without a ``+`` contribute 1..h (h the unsigned height) scanning
    right to left; then columns with a ``-`` contribute :func:`minus_string`
    scanning left to right.
    """
    columns = diagram.columns()
    string: List[int] = []
    for col in reversed(columns):
        if PLUS not in col.kind and col.inner >= 1:
            string.extend(range(1, col.inner + 1))
    for col in columns:
        if MINUS in col.kind:
            string.extend(minus_string(kind, n, col.height))
    return string


def _crystal(t: AffineType, crystal: Optional[ClassicalCrystal]) -> ClassicalCrystal:
    return crystal if crystal is not None else ClassicalCrystal(t.kind, t.rank)


def phi(t: AffineType, diagram: PMDiagram, crystal: ClassicalCrystal = None) -> TensorWord:
    """Return the X_{n-1} highest weight word encoded by a diagram.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param diagram: Sign diagram.
    :type diagram: krcrystal.pm_diagram.PMDiagram
    :param crystal: Classical crystal of t, created if omitted.
    :type crystal: krcrystal.kn_tableaux.ClassicalCrystal
    :return: Word in B(outer).
    :rtype: tuple
    :raise krcrystal.exceptions.OperatorStringError: If the string annihilates.
    """
    engine = _crystal(t, crystal)
    seed = highest_weight_word(diagram.outer)
    word = engine.apply_string(seed, phi_string(t.kind, t.rank, diagram))
    if word is None:
        raise OperatorStringError(f"phi string of {diagram!r} annihilates {seed}")
    return word


class DiagramIndex:
    """Memoized inverse of :func:`phi`, filled one outer shape at a time."""

    __slots__ = ["_type", "_crystal", "_width", "_by_word", "_shapes"]

    def __init__(self, t: AffineType, width: int, crystal: ClassicalCrystal = None) -> None:
        self._type = t
        self._crystal = _crystal(t, crystal)
        self._width = width
        self._by_word: Dict[TensorWord, PMDiagram] = {}
        self._shapes = set()

    def __repr__(self) -> str:
        return f"<DiagramIndex {self._type} width={self._width} size={len(self._by_word)}>"

    def __len__(self) -> int:
        return len(self._by_word)

    def add_shape(self, outer: Sequence[int]) -> None:
        shape = Partition(outer)
        if shape in self._shapes:
            return
        self._shapes.add(shape)
        for diagram in diagrams_with_outer(self._type.kind, self._type.rank, shape, self._width):
            word = phi(self._type, diagram, self._crystal)
            if word in self._by_word:
                raise DiagramLookupError(
                    f"{diagram!r} and {self._by_word[word]!r} both map to {word}"
                )
            self._by_word[word] = diagram
        logger.debug("diagram index %s: shape %s added", self._type, tuple(shape))

    def lookup(self, word: Sequence[int]) -> PMDiagram:
        """Return the diagram mapping to an X_{n-1} highest weight word.

        :raise krcrystal.exceptions.DiagramLookupError: If no diagram matches.
        """
        key = tuple(word)
        if key not in self._by_word:
            top, _ = raise_to_highest_weight(self._crystal, key, self._crystal.index_set)
            self.add_shape(weight_to_partition(self._crystal.weight(top)))
        try:
            return self._by_word[key]
        except KeyError:
            raise DiagramLookupError(f"no diagram maps to {key}")


def phi_inverse(
    t: AffineType, word: Sequence[int], width: int = None, index: DiagramIndex = None
) -> PMDiagram:
    """Return the unique diagram P with phi(P) = word.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param word: X_{n-1} highest weight word.
    :type word: tuple
    :param width: Diagram width s; defaults to the first row of the outer shape.
    :type width: int
    :param index: Shared memo table.
    :type index: krcrystal.pm_diagram.DiagramIndex
    :rtype: krcrystal.pm_diagram.PMDiagram
    :raise krcrystal.exceptions.DiagramLookupError: On a miss or a collision.
    """
    if index is None:
        crystal = ClassicalCrystal(t.kind, t.rank)
        if width is None:
            top, _ = raise_to_highest_weight(crystal, word, crystal.index_set)
            shape = weight_to_partition(crystal.weight(top))
            width = shape[0] if shape else 0
        index = DiagramIndex(t, width, crystal)
    return index.lookup(word)


def s_map(t: AffineType, r: int, s: int, diagram: PMDiagram) -> PMDiagram:
    """Apply the involution that interchanges the roles of nodes 0 and 1.

    Columns are grouped by unsigned height i. For i of the parity of r - 1
    the numbers of ``+`` and ``-`` columns are swapped; for i of the parity
    of r with i < r, p columns of type ``+-`` become c_i - p of them.

    :raise krcrystal.exceptions.DiagramError: If the diagram does not belong
        to B^{r,s}.
    """
    if diagram.width != s:
        raise DiagramError(f"{diagram!r} has width {diagram.width}, expected {s}")
    groups: Dict[int, List[str]] = {}
    for col in diagram.columns():
        if col.height > r or (col.height - r) % 2:
            raise DiagramError(f"column of height {col.height} in a diagram of B^{{{r},{s}}}")
        groups.setdefault(col.inner, []).append(col.kind)
    new_columns: List[Tuple[str, int]] = []
    for i, kinds in groups.items():
        total = len(kinds)
        if (r - i) % 2:
            plus, minus = kinds.count(PLUS), kinds.count(MINUS)
            if plus + minus != total:
                raise DiagramError(f"unsigned height {i} needs a + or a - in every column")
            new_columns += [(PLUS, i + 1)] * minus + [(MINUS, i + 1)] * plus
        elif i == r:
            new_columns += [(EMPTY, i)] * total
        else:
            pairs = kinds.count(PLUS_MINUS)
            if pairs + kinds.count(EMPTY) != total:
                raise DiagramError(f"unsigned height {i} allows only E and +- columns")
            new_columns += [(PLUS_MINUS, i + 2)] * (total - pairs) + [(EMPTY, i)] * pairs
    return PMDiagram.from_columns(new_columns, s)


def supports_pair_model(t: AffineType, r: int) -> bool:
    """Return True when the rank n - 1 diagrams of the pair model are defined."""
    if t.kind == "D":
        return r <= t.rank - 3
    if t.kind == "B":
        return r <= t.rank - 2
    return r <= t.rank - 1


def upsilon(
    t: AffineType, big: PMDiagram, small: PMDiagram, crystal: ClassicalCrystal = None
) -> TensorWord:
    """Return the X_{n-2} highest weight word of the pair (P, p).

    The rank n - 1 string of p, each index shifted by one, is applied to phi(P).

    :raise krcrystal.exceptions.OperatorStringError: If the string annihilates.
    """
    engine = _crystal(t, crystal)
    pair = PMPair(big, small)
    start = phi(t, pair.big, engine)
    string = [a + 1 for a in phi_string(t.kind, t.rank - 1, pair.small)]
    word = engine.apply_string(start, string)
    if word is None:
        raise OperatorStringError(f"shifted string of {small!r} annihilates {start}")
    return word


class PairIndex:
    """Memoized inverse of :func:`upsilon` over all pairs of B^{r,s}."""

    __slots__ = ["_type", "_by_word"]

    def __init__(self, t: AffineType, r: int, s: int, crystal: ClassicalCrystal = None) -> None:
        engine = _crystal(t, crystal)
        self._type = t
        self._by_word: Dict[TensorWord, PMPair] = {}
        for big in enumerate_diagrams(t, r, s):
            for small in diagrams_with_outer(t.kind, t.rank - 1, big.inner, s):
                word = upsilon(t, big, small, engine)
                if word in self._by_word:
                    raise DiagramLookupError(f"two pairs map to {word}")
                self._by_word[word] = PMPair(big, small)
        logger.debug("pair index %s r=%d s=%d: %d pairs", t, r, s, len(self._by_word))

    def __repr__(self) -> str:
        return f"<PairIndex {self._type} size={len(self._by_word)}>"

    def __len__(self) -> int:
        return len(self._by_word)

    def __contains__(self, word: object) -> bool:
        return word in self._by_word

    def lookup(self, word: Sequence[int]) -> PMPair:
        try:
            return self._by_word[tuple(word)]
        except KeyError:
            raise DiagramLookupError(f"no pair maps to {tuple(word)}")


def pair_signs(pair: PMPair) -> PairAssignment:
    """Pair the signs of (P, p) in three left-to-right scans.

    1. each ``+`` of p takes the leftmost free ``+`` of P weakly to its left;
    2. each ``-`` of p takes the rightmost free ``-`` of P weakly to its left;
    3. each ``+`` of p still free takes the leftmost free ``-`` of p.
    """
    big_plus = list(pair.big.plus_positions())
    big_minus = list(pair.big.minus_positions())
    small_plus = list(pair.small.plus_positions())
    small_minus = list(pair.small.minus_positions())

    plus_pairs = []
    free_small_plus = []
    for k in small_plus:
        options = [j for j in big_plus if j <= k]
        if options:
            j = min(options)
            big_plus.remove(j)
            plus_pairs.append((k, j))
        else:
            free_small_plus.append(k)

    minus_pairs = []
    free_small_minus = []
    for k in small_minus:
        options = [j for j in big_minus if j <= k]
        if options:
            j = max(options)
            big_minus.remove(j)
            minus_pairs.append((k, j))
        else:
            free_small_minus.append(k)

    inner_pairs = []
    still_free = []
    for k in free_small_plus:
        if free_small_minus:
            j = free_small_minus.pop(0)
            inner_pairs.append((k, j))
        else:
            still_free.append(k)

    return PairAssignment(
        plus_pairs=tuple(plus_pairs),
        minus_pairs=tuple(minus_pairs),
        inner_pairs=tuple(inner_pairs),
        unpaired_small_plus=tuple(still_free),
        unpaired_big_minus=tuple(big_minus),
    )


def e1_on_pair(pair: PMPair) -> Optional[PMPair]:
    """Return the pair describing e_1 on upsilon(pair), or None if e_1 vanishes.

    The rightmost unpaired ``+`` of p moves into P; failing that the leftmost
    unpaired ``-`` of P moves into p.
    """
    assignment = pair_signs(pair)
    big = list(pair.big.columns())
    small = list(pair.small.columns())
    width = pair.big.width
    if assignment.unpaired_small_plus:
        j = assignment.unpaired_small_plus[-1] - 1
        moved_small = {PLUS: EMPTY, PLUS_MINUS: MINUS}
        moved_big = {EMPTY: PLUS, MINUS: PLUS_MINUS}
        if small[j].kind not in moved_small or big[j].kind not in moved_big:
            raise PairMoveError(f"cannot move + of column {j + 1} in {pair!r}")
        small[j] = Column(moved_small[small[j].kind], small[j].height - 1)
        big[j] = Column(moved_big[big[j].kind], big[j].height)
    elif assignment.unpaired_big_minus:
        j = assignment.unpaired_big_minus[0] - 1
        moved_big = {MINUS: EMPTY, PLUS_MINUS: PLUS}
        moved_small = {EMPTY: MINUS, PLUS: PLUS_MINUS}
        if small[j].kind not in moved_small or big[j].kind not in moved_big:
            raise PairMoveError(f"cannot move - of column {j + 1} in {pair!r}")
        big[j] = Column(moved_big[big[j].kind], big[j].height)
        small[j] = Column(moved_small[small[j].kind], small[j].height + 1)
    else:
        return None
    return PMPair(PMDiagram.from_columns(big, width), PMDiagram.from_columns(small, width))
