"""Classical decompositions of W_s^(r), obtained two independent ways."""

__all__ = [
    "CVector",
    "c_constraints",
    "enumerate_c",
    "lambda_of_c",
    "decompose_diagrammatic",
    "decompose_by_c",
    "decompose_sigma_indexing",
    "decomposition_order",
    "branching_multiplicity",
    "weight_label",
]

import itertools
import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Set, Tuple

from .cartan import (
    B1,
    AffineType,
    Weight,
    dynkin_labels,
    fundamental_weight,
    is_spin_node,
)
from .exceptions import CVectorError, NodeIndexError, SpinNodeError
from .utils import check_positive_int

logger = logging.getLogger(__name__)

CVector = Tuple[int, ...]


class CConstraints(NamedTuple):
    """Length, upper bound and implied c_0 of the c-vectors of a family."""

    length: int
    bound: int
    c0: Fraction


def _check(t: AffineType, r: int, s: int) -> None:
    if not 1 <= r <= t.rank:
        raise NodeIndexError(f"node {r} outside 1..{t.rank}")
    check_positive_int(s, "s")


def _is_b_spin(t: AffineType, r: int) -> bool:
    return t.family == B1 and r == t.rank


def c_constraints(t: AffineType, r: int, s: int) -> CConstraints:
    """Return the constraints on c for (t, r, s).

    :raise krcrystal.exceptions.SpinNodeError: If r is a spin node of t.
    """
    _check(t, r, s)
    if is_spin_node(t, r):
        raise SpinNodeError(f"{t} node {r} is classically irreducible")
    if _is_b_spin(t, r):
        return CConstraints(r // 2, s // 2, Fraction(s, 2))
    if t.nu == "vertical":
        return CConstraints(r // 2, s, Fraction(s))
    if t.nu == "horizontal":
        return CConstraints(r, s // 2, Fraction(s, 2))
    return CConstraints(r, s, Fraction(s))


def enumerate_c(t: AffineType, r: int, s: int) -> List[CVector]:
    """Return every valid c, i.e. bound >= c_1 >= ... >= c_length >= 0.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param r: Non-spin node.
    :type r: int
    :param s: Positive integer.
    :type s: int
    :return: c-vectors in lexicographic order.
    :rtype: [tuple]
    """
    bounds = c_constraints(t, r, s)
    vectors = []
    for combo in itertools.combinations_with_replacement(range(bounds.bound + 1), bounds.length):
        vectors.append(tuple(sorted(combo, reverse=True)))
    return sorted(vectors)


def _validate_c(t: AffineType, r: int, s: int, c: Sequence[int]) -> CConstraints:
    bounds = c_constraints(t, r, s)
    values = tuple(c)
    if len(values) != bounds.length:
        raise CVectorError(f"c must have length {bounds.length}, got {values}")
    if any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise CVectorError(f"c entries must be integers, got {values}")
    if any(v < 0 or v > bounds.bound for v in values):
        raise CVectorError(f"c entries must lie in 0..{bounds.bound}, got {values}")
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise CVectorError(f"c must be weakly decreasing, got {values}")
    return bounds


def _varpi(t: AffineType, i: int) -> Weight:
    if i <= 0:
        return Weight.zero(t.rank)
    return fundamental_weight(t, i)


def lambda_of_c(t: AffineType, r: int, s: int, c: Sequence[int]) -> Weight:
    """Return the dominant weight lambda(c) generating one classical summand.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param r: Non-spin node.
    :type r: int
    :param s: Positive integer.
    :type s: int
    :param c: Sequence satisfying :func:`c_constraints`.
    :type c: [int]
    :return: Weight in eps-coordinates.
    :rtype: krcrystal.cartan.Weight
    :raise krcrystal.exceptions.CVectorError: If c is malformed.
    """
    bounds = _validate_c(t, r, s, c)
    full = (bounds.c0,) + tuple(Fraction(v) for v in c) + (Fraction(0),)
    result = Weight.zero(t.rank)
    for j in range(bounds.length + 1):
        step = full[j] - full[j + 1]
        if _is_b_spin(t, r):
            coefficient, node = step * (2 if j == 0 else 1), r - 2 * j
        elif t.nu == "vertical":
            coefficient, node = step, r - 2 * j
        elif t.nu == "horizontal":
            coefficient, node = 2 * step, r - j
        else:
            coefficient, node = step, r - j
        if coefficient:
            result = result + _varpi(t, node).scale(coefficient)
    return result


def decomposition_order(weights: Iterable[Weight]) -> List[Weight]:
    """Sort weights by size descending, then lexicographically descending."""
    return sorted(weights, key=lambda w: (-w.size, tuple(-x for x in w)))


def _removals(t: AffineType, rows: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    results = []
    for i in range(len(rows)):
        new = list(rows)
        if t.nu == "vertical":
            if i + 1 >= len(rows) or rows[i] != rows[i + 1] or rows[i] == 0:
                continue
            new[i] -= 1
            new[i + 1] -= 1
        elif t.nu == "horizontal":
            if rows[i] < 2:
                continue
            new[i] -= 2
        else:
            if rows[i] < 1:
                continue
            new[i] -= 1
        if all(new[k] >= new[k + 1] for k in range(len(new) - 1)):
            results.append(tuple(new))
    return results


def decompose_diagrammatic(t: AffineType, r: int, s: int) -> List[Weight]:
    """Return the weights reachable from the r x s rectangle by removing nu-pieces.

    For B_n^(1) at r = n the rectangle is n x (s/2) and s must be even.

    :raise krcrystal.exceptions.SpinNodeError: For spin nodes, or for
        B_n^(1), r = n with odd s.
    """
    _check(t, r, s)
    if is_spin_node(t, r):
        raise SpinNodeError(f"{t} node {r} is classically irreducible")
    if _is_b_spin(t, r):
        if s % 2:
            raise SpinNodeError(f"{t} node {r} needs even s for the diagram rule")
        start = (s // 2,) * t.rank
    else:
        start = (s,) * r + (0,) * (t.rank - r)
    seen: Set[Tuple[int, ...]] = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for rows in frontier:
            for smaller in _removals(t, rows):
                if smaller not in seen:
                    seen.add(smaller)
                    nxt.append(smaller)
        frontier = nxt
    logger.debug("%s r=%d s=%d: %d shapes by removal", t, r, s, len(seen))
    return decomposition_order(Weight(rows) for rows in seen)


def decompose_by_c(t: AffineType, r: int, s: int) -> List[Weight]:
    """Return {lambda(c)} over every valid c; {s varpi_r} on spin nodes."""
    _check(t, r, s)
    if is_spin_node(t, r):
        return [fundamental_weight(t, r).scale(s)]
    return decomposition_order(lambda_of_c(t, r, s, c) for c in enumerate_c(t, r, s))


def decompose_sigma_indexing(t: AffineType, r: int, s: int) -> List[Weight]:
    """Return {varpi_{r-2m_1} + ... + varpi_{r-2m_s} : 0 <= m_1 <= ... <= m_s <= r//2}.

    Defined for the vertical-domino families at non-spin fundamental weights.
    """
    _check(t, r, s)
    if t.nu != "vertical" or is_spin_node(t, r) or fundamental_weight(t, r).is_spin:
        raise SpinNodeError(f"indexing undefined for {t} node {r}")
    found = set()
    for ms in itertools.combinations_with_replacement(range(r // 2 + 1), s):
        total = Weight.zero(t.rank)
        for m in ms:
            total = total + _varpi(t, r - 2 * m)
        found.add(total)
    return decomposition_order(found)


def branching_multiplicity(t: AffineType, r: int, s: int, lam: Sequence) -> int:
    """Return the 0/1 multiplicity of V(lam) in W_s^(r)."""
    return int(Weight(lam) in set(decompose_by_c(t, r, s)))


def weight_label(t: AffineType, w: Sequence) -> str:
    """Render a dominant weight as a varpi-sum such as ``2*w2 + w1``."""
    labels = dynkin_labels(t, w)
    pieces = []
    for node in range(len(labels), 0, -1):
        m = labels[node - 1]
        if m:
            pieces.append(f"w{node}" if m == 1 else f"{m}*w{node}")
    return " + ".join(pieces) or "0"
