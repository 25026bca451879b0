"""Dynkin data for the nonexceptional affine families other than A_n^(1).

Weights are written in the orthonormal basis eps_1..eps_n, renormalized so
that (eps_i, eps_j) = delta_ij. Node 0 is represented only by the classical
projection of alpha_0; delta never appears.
"""

__all__ = [
    "D1",
    "B1",
    "A2ODD",
    "C1",
    "A2EVEN",
    "D2",
    "FAMILIES",
    "AffineType",
    "ClassicalType",
    "Weight",
    "Partition",
    "QExponents",
    "parse_type",
    "fundamental_weight",
    "simple_root",
    "pairing",
    "inner",
    "affine_cartan_matrix",
    "q_exponents",
    "t_table",
    "kappa",
    "dual_kac_labels",
    "spin_nodes",
    "is_spin_node",
    "partition_to_weight",
    "weight_to_partition",
    "dynkin_labels",
    "weyl_dimension",
    "reflect",
]

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Tuple, Union

from .exceptions import (
    AffineTypeParseError,
    AffineTypeRankError,
    NodeIndexError,
    PartitionError,
    SpinWeightError,
    WeightPairingError,
)

Rational = Union[int, Fraction]

D1 = "D1"
B1 = "B1"
A2ODD = "A2odd"
C1 = "C1"
A2EVEN = "A2even"
D2 = "D2"

FAMILIES = (D1, B1, A2ODD, C1, A2EVEN, D2)

# family -> (classical kind, shape removed by the branching rule, minimum rank)
_FAMILY_DATA = {
    D1: ("D", "vertical", 4),
    B1: ("B", "vertical", 3),
    A2ODD: ("C", "vertical", 2),
    C1: ("C", "horizontal", 2),
    A2EVEN: ("C", "box", 2),
    D2: ("B", "box", 2),
}

_TYPE_LABEL = re.compile(r"^\s*([ABCD])(\d+)~([12])\s*$")


class Weight(tuple):
    """Weight in eps-coordinates with exact rational entries."""

    def __new__(cls, coords: Iterable[Rational]) -> "Weight":
        return super().__new__(cls, tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls([0] * n)

    @classmethod
    def unit(cls, n: int, i: int, value: Rational = 1) -> "Weight":
        """Return value * eps_i (1-based index)."""
        coords = [Fraction(0)] * n
        coords[i - 1] = Fraction(value)
        return cls(coords)

    def __repr__(self) -> str:
        return f"Weight({', '.join(str(c) for c in self)})"

    def __str__(self) -> str:
        return f"({', '.join(str(c) for c in self)})"

    def __add__(self, other: Iterable[Rational]) -> "Weight":  # type: ignore[override]
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other: Iterable[Rational]) -> "Weight":
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self)

    def scale(self, factor: Rational) -> "Weight":
        return Weight(a * factor for a in self)

    @property
    def is_spin(self) -> bool:
        return any(c.denominator != 1 for c in self)

    @property
    def size(self) -> Fraction:
        return sum(self, Fraction(0))


class Partition(tuple):
    """Partition stored by its positive rows (French drawing convention)."""

    def __new__(cls, rows: Iterable[int] = ()) -> "Partition":
        cleaned = tuple(int(r) for r in rows if r)
        if any(r < 0 for r in cleaned):
            raise PartitionError(f"negative row in {cleaned}")
        if any(cleaned[i] < cleaned[i + 1] for i in range(len(cleaned) - 1)):
            raise PartitionError(f"rows {cleaned} are not weakly decreasing")
        return super().__new__(cls, cleaned)

    @classmethod
    def from_columns(cls, heights: Iterable[int]) -> "Partition":
        """Build a partition from column heights in any order."""
        cols = sorted((h for h in heights if h), reverse=True)
        if not cols:
            return cls()
        return cls(sum(1 for h in cols if h > row) for row in range(cols[0]))

    def __repr__(self) -> str:
        return f"Partition({', '.join(str(r) for r in self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for r in self if r > col) for col in range(self[0]))

    def column_heights(self, width: int = None) -> Tuple[int, ...]:
        """Return column heights left to right, padded with zeros to width."""
        heights = tuple(self.conjugate())
        if width is None:
            return heights
        if len(heights) > width:
            raise PartitionError(f"{self!r} is wider than {width}")
        return heights + (0,) * (width - len(heights))

    def column_counts(self) -> Dict[int, int]:
        """Return {height: number of columns of that height}."""
        counts: Dict[int, int] = {}
        for h in self.column_heights():
            counts[h] = counts.get(h, 0) + 1
        return counts

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))


class QExponents(NamedTuple):
    """Exponents of q_i (i in I) and of q_s, in q^{1/2} units."""

    nodes: Tuple[int, ...]
    s: int


@dataclass(frozen=True)
class ClassicalType:
    """Finite type D_n, B_n or C_n with the eps-realization above."""

    kind: str
    rank: int

    def __post_init__(self) -> None:
        if self.kind not in ("B", "C", "D"):
            raise AffineTypeParseError(f"unknown classical kind {self.kind!r}")
        if self.rank < (2 if self.kind == "D" else 1):
            raise AffineTypeRankError(f"rank {self.rank} too small for {self.kind}")

    def __str__(self) -> str:
        return f"{self.kind}{self.rank}"

    def simple_root(self, i: int) -> Weight:
        n = self.rank
        if not 1 <= i <= n:
            raise NodeIndexError(f"node {i} outside 1..{n}")
        if i < n:
            return Weight.unit(n, i) - Weight.unit(n, i + 1)
        if self.kind == "D":
            return Weight.unit(n, n - 1) + Weight.unit(n, n)
        if self.kind == "B":
            return Weight.unit(n, n)
        return Weight.unit(n, n, 2)

    def fundamental_weight(self, i: int) -> Weight:
        n = self.rank
        if i == 0:
            raise NodeIndexError("varpi_0 is the zero weight by convention")
        if not 1 <= i <= n:
            raise NodeIndexError(f"node {i} outside 1..{n}")
        half = Fraction(1, 2)
        if self.kind == "D" and i >= n - 1:
            coords = [half] * n
            if i == n - 1:
                coords[-1] = -half
            return Weight(coords)
        if self.kind == "B" and i == n:
            return Weight([half] * n)
        return Weight([1] * i + [0] * (n - i))

    def pairing(self, j: int, w: Iterable[Rational]) -> int:
        return _pairing(self.simple_root(j), w)

    def positive_roots(self) -> List[Weight]:
        n = self.rank
        roots = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(Weight.unit(n, i) - Weight.unit(n, j))
                roots.append(Weight.unit(n, i) + Weight.unit(n, j))
            if self.kind == "B":
                roots.append(Weight.unit(n, i))
            elif self.kind == "C":
                roots.append(Weight.unit(n, i, 2))
        return roots

    def rho(self) -> Weight:
        n = self.rank
        if self.kind == "D":
            return Weight(n - i for i in range(1, n + 1))
        if self.kind == "B":
            return Weight(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1))
        return Weight(n + 1 - i for i in range(1, n + 1))

    def weyl_dimension(self, w: Iterable[Rational]) -> int:
        """Return dim V(w) by the Weyl dimension formula."""
        shifted = Weight(w) + self.rho()
        rho = self.rho()
        value = Fraction(1)
        for root in self.positive_roots():
            value *= inner(shifted, root) / inner(rho, root)
        if value.denominator != 1:
            raise WeightPairingError(f"non-integral dimension {value} for {w}")
        return int(value)

    def reflect(self, i: int, w: Iterable[Rational]) -> Weight:
        """Apply the simple reflection s_i."""
        weight = Weight(w)
        return weight - self.simple_root(i).scale(self.pairing(i, weight))

    def alpha_coordinates(self, w: Iterable[Rational]) -> Tuple[Fraction, ...]:
        """Return x with w = sum x_i alpha_i."""
        weight = Weight(w)
        n = self.rank
        partial = []
        total = Fraction(0)
        for value in weight:
            total += value
            partial.append(total)
        if self.kind == "D":
            x = list(partial[: n - 2])
            x.append((partial[n - 2] - weight[n - 1]) / 2)
            x.append((partial[n - 2] + weight[n - 1]) / 2)
        else:
            x = list(partial[: n - 1])
            divisor = 1 if self.kind == "B" else 2
            x.append(partial[n - 1] / divisor)
        return tuple(x)


@dataclass(frozen=True)
class AffineType:
    """Affine type of one of the six supported families.

    :param family: One of ``D1``, ``B1``, ``A2odd``, ``C1``, ``A2even``, ``D2``.
    :type family: str
    :param rank: Rank n of the classical subalgebra g_0.
    :type rank: int
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_DATA:
            raise AffineTypeParseError(f"unknown family {self.family!r}")
        minimum = _FAMILY_DATA[self.family][2]
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise AffineTypeRankError(f"rank must be an integer, got {self.rank!r}")
        if self.rank < minimum:
            raise AffineTypeRankError(
                f"{self.family} needs rank >= {minimum}, got {self.rank}"
            )

    def __str__(self) -> str:
        return self.label

    @property
    def label(self) -> str:
        """Return the text label such as ``D4~1`` or ``A5~2``."""
        n = self.rank
        if self.family == D1:
            return f"D{n}~1"
        if self.family == B1:
            return f"B{n}~1"
        if self.family == C1:
            return f"C{n}~1"
        if self.family == A2ODD:
            return f"A{2 * n - 1}~2"
        if self.family == A2EVEN:
            return f"A{2 * n}~2"
        return f"D{n + 1}~2"

    @property
    def kind(self) -> str:
        return _FAMILY_DATA[self.family][0]

    @property
    def nu(self) -> str:
        return _FAMILY_DATA[self.family][1]

    @property
    def classical(self) -> ClassicalType:
        return ClassicalType(self.kind, self.rank)

    @property
    def index_set(self) -> Tuple[int, ...]:
        return tuple(range(self.rank + 1))

    @property
    def classical_index_set(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))


def parse_type(text: str) -> AffineType:
    """Parse labels such as ``D4~1``, ``B3~1``, ``A5~2``, ``C3~1``, ``A4~2``, ``D5~2``.

    :param text: Type label.
    :type text: str
    :return: Affine type.
    :rtype: krcrystal.cartan.AffineType
    :raise krcrystal.exceptions.AffineTypeParseError: If the label is unknown.
    """
    match = _TYPE_LABEL.match(text)
    if match is None:
        raise AffineTypeParseError(f"cannot parse affine type {text!r}")
    letter, index, twist = match.group(1), int(match.group(2)), match.group(3)
    if twist == "1":
        family = {"D": D1, "B": B1, "C": C1}.get(letter)
        if family is None:
            raise AffineTypeParseError(f"unsupported affine type {text!r}")
        return AffineType(family, index)
    if letter == "A":
        if index % 2:
            return AffineType(A2ODD, (index + 1) // 2)
        return AffineType(A2EVEN, index // 2)
    if letter == "D":
        return AffineType(D2, index - 1)
    raise AffineTypeParseError(f"unsupported affine type {text!r}")


def inner(u: Iterable[Rational], v: Iterable[Rational]) -> Fraction:
    """Return the renormalized inner product with (eps_i, eps_j) = delta_ij."""
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def _pairing(root: Weight, w: Iterable[Rational]) -> int:
    value = 2 * inner(root, w) / inner(root, root)
    if value.denominator != 1:
        raise WeightPairingError(f"<h, {Weight(w)}> = {value} is not integral")
    return int(value)


def fundamental_weight(t: AffineType, i: int) -> Weight:
    """Return the fundamental weight varpi_i of the classical subalgebra.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param i: Node, 1 <= i <= n.
    :type i: int
    :return: Weight in eps-coordinates.
    :rtype: krcrystal.cartan.Weight
    :raise krcrystal.exceptions.NodeIndexError: If i is 0 or out of range.
    """
    return t.classical.fundamental_weight(i)


def simple_root(t: AffineType, i: int) -> Weight:
    """Return alpha_i, or the classical projection of alpha_0 when i = 0.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param i: Node in I.
    :type i: int
    :return: Weight in eps-coordinates.
    :rtype: krcrystal.cartan.Weight
    """
    n = t.rank
    if i == 0:
        if t.nu == "vertical":
            return Weight.unit(n, 1, -1) - Weight.unit(n, 2)
        if t.nu == "horizontal":
            return Weight.unit(n, 1, -2)
        return Weight.unit(n, 1, -1)
    return t.classical.simple_root(i)


def pairing(t: AffineType, j: int, w: Iterable[Rational]) -> int:
    """Return <h_j, w> = 2 (alpha_j, w) / (alpha_j, alpha_j).

    Node 0 is accepted and uses the classical projection of alpha_0.

    :raise krcrystal.exceptions.WeightPairingError: If the value is not integral.
    """
    return _pairing(simple_root(t, j), w)


def affine_cartan_matrix(t: AffineType) -> Tuple[Tuple[int, ...], ...]:
    """Return the matrix a_ij = <h_i, alpha_j> over I x I."""
    roots = [simple_root(t, j) for j in t.index_set]
    return tuple(
        tuple(_pairing(roots[i], roots[j]) for j in t.index_set) for i in t.index_set
    )


def q_exponents(t: AffineType) -> QExponents:
    """Return the exponents of q_i = q^{(alpha_i, alpha_i)/2} and of q_s.

    Exponents are given in q^{1/2} units, so q itself is 2.
    """
    nodes = tuple(int(inner(simple_root(t, i), simple_root(t, i))) for i in t.index_set)
    return QExponents(nodes=nodes, s=min(nodes))


def kappa(t: AffineType) -> Fraction:
    """Return kappa with (eps_i, eps_j) = kappa delta_ij in the affine normalization."""
    if t.family == C1:
        return Fraction(1, 2)
    if t.family == D2:
        return Fraction(2)
    return Fraction(1)


def t_table(t: AffineType) -> Tuple[Dict[int, int], Dict[int, int]]:
    """Return the maps a -> t_a and a -> t_a^vee over I_0."""
    n = t.rank
    tees = {a: 1 for a in range(1, n + 1)}
    duals = {a: 1 for a in range(1, n + 1)}
    if t.family == B1:
        tees[n] = 2
    elif t.family == C1:
        tees = {a: 2 for a in range(1, n + 1)}
        tees[n] = 1
    elif t.family == A2ODD:
        duals[n] = 2
    elif t.family == D2:
        duals = {a: 2 for a in range(1, n + 1)}
        duals[n] = 1
    return tees, duals


def dual_kac_labels(t: AffineType) -> Tuple[int, ...]:
    """Return the dual Kac labels a_i^vee, i in I, defining the level."""
    n = t.rank
    if t.family == D1:
        return (1, 1) + (2,) * (n - 3) + (1, 1)
    if t.family == B1:
        return (1, 1) + (2,) * (n - 2) + (1,)
    if t.family == A2ODD:
        return (1, 1) + (2,) * (n - 1)
    if t.family == C1:
        return (1,) * (n + 1)
    if t.family == A2EVEN:
        return (1,) + (2,) * n
    return (1,) + (2,) * (n - 1) + (1,)


def spin_nodes(t: AffineType) -> FrozenSet[int]:
    """Return the nodes r for which W_s^(r) is classically irreducible."""
    n = t.rank
    if t.family == D1:
        return frozenset({n - 1, n})
    if t.family in (C1, D2):
        return frozenset({n})
    return frozenset()


def is_spin_node(t: AffineType, r: int) -> bool:
    return r in spin_nodes(t)


def partition_to_weight(p: Iterable[int], n: int) -> Weight:
    """Return the weight sum c_i varpi_i of a partition with c_i columns of height i.

    :param p: Partition rows.
    :type p: [int]
    :param n: Rank.
    :type n: int
    :rtype: krcrystal.cartan.Weight
    :raise krcrystal.exceptions.SpinWeightError: If the partition has more than n rows.
    """
    rows = Partition(p)
    if len(rows) > n:
        raise SpinWeightError(f"{rows!r} has more than {n} rows")
    return Weight(list(rows) + [0] * (n - len(rows)))


def weight_to_partition(w: Iterable[Rational]) -> Partition:
    """Return the partition of a dominant non-spin weight.

    :raise krcrystal.exceptions.SpinWeightError: For spin or non-dominant weights.
    """
    weight = Weight(w)
    if weight.is_spin:
        raise SpinWeightError(f"{weight} is a spin weight")
    rows = [int(c) for c in weight]
    if any(r < 0 for r in rows) or any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise SpinWeightError(f"{weight} has no partition form")
    return Partition(rows)


def dynkin_labels(t: AffineType, w: Iterable[Rational]) -> Tuple[int, ...]:
    """Return (<h_1, w>, ..., <h_n, w>)."""
    weight = Weight(w)
    return tuple(pairing(t, j, weight) for j in t.classical_index_set)


def weyl_dimension(t: AffineType, w: Iterable[Rational]) -> int:
    return t.classical.weyl_dimension(w)


def reflect(t: AffineType, i: int, w: Iterable[Rational]) -> Weight:
    return t.classical.reflect(i, w)
