"""Fermionic multiplicities N from configurations and vacancy numbers, set against M."""

__all__ = [
    "Configuration",
    "FermionicRow",
    "enumerate_configs",
    "vacancy",
    "multiplicity_N",
    "multiplicity_M",
    "candidate_weights",
    "fermionic_table",
]

import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .cartan import (
    A2EVEN,
    AffineType,
    ClassicalType,
    Weight,
    fundamental_weight,
    inner,
    kappa,
    t_table,
)
from .exceptions import NodeIndexError, VacancyError
from .utils import check_positive_int

logger = logging.getLogger(__name__)


class Configuration:
    """Finite family of multiplicities m_j^(a) > 0.

    :param entries: Mapping (a, j) -> m_j^(a). Zero entries are dropped.
    :type entries: dict
    """

    __slots__ = ["_entries"]

    def __init__(self, entries: Dict[Tuple[int, int], int] = None) -> None:
        self._entries = tuple(
            sorted((key, value) for key, value in (entries or {}).items() if value)
        )

    def __repr__(self) -> str:
        body = ", ".join(f"m{j}({a})={m}" for (a, j), m in self._entries)
        return f"<Configuration {body or 'empty'}>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, a: int, j: int) -> int:
        for key, value in self._entries:
            if key == (a, j):
                return value
        return 0

    def items(self) -> Tuple[Tuple[Tuple[int, int], int], ...]:
        return self._entries

    def total(self, a: int) -> int:
        """Return sum_j j m_j^(a)."""
        return sum(j * m for (b, j), m in self._entries if b == a)


class FermionicRow(NamedTuple):
    weight: Weight
    n: int
    m: int


def _root_type(t: AffineType) -> ClassicalType:
    # A_{2n}^(2) removes single boxes, so eps_1 must lie in the root lattice.
    if t.family == A2EVEN:
        return ClassicalType("B", t.rank)
    return t.classical


def _check_node(t: AffineType, r: int) -> None:
    if not 1 <= r <= t.rank:
        raise NodeIndexError(f"node {r} outside 1..{t.rank}")


def _root_coefficients(t: AffineType, w: Weight) -> Optional[Tuple[int, ...]]:
    coords = _root_type(t).alpha_coordinates(w)
    if any(x.denominator != 1 or x < 0 for x in coords):
        return None
    return tuple(int(x) for x in coords)


def _partitions(total: int, largest: int = None) -> Iterator[Dict[int, int]]:
    """Yield the partitions of total as {part: multiplicity}, largest part first."""
    if largest is None:
        largest = total
    if total == 0:
        yield {}
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            counts = dict(rest)
            counts[part] = counts.get(part, 0) + 1
            yield counts


def enumerate_configs(t: AffineType, r: int, s: int, lam: Sequence) -> List[Configuration]:
    """Return every configuration with sum_{a,j} j m_j^(a) alpha_a = s varpi_r - lam.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param r: Node in I_0.
    :type r: int
    :param s: Positive integer.
    :type s: int
    :param lam: Dominant weight.
    :type lam: krcrystal.cartan.Weight
    :return: Configurations in a fixed order; empty if the difference is not a
        non-negative integral combination of simple roots.
    :rtype: [krcrystal.fermionic.Configuration]
    """
    _check_node(t, r)
    check_positive_int(s, "s")
    diff = fundamental_weight(t, r).scale(s) - Weight(lam)
    beta = _root_coefficients(t, diff)
    if beta is None:
        return []
    per_node = [list(_partitions(b)) for b in beta]
    configs = []
    for choice in itertools.product(*per_node):
        entries = {}
        for a, counts in enumerate(choice, start=1):
            for j, m in counts.items():
                entries[(a, j)] = m
        configs.append(Configuration(entries))
    return configs


def vacancy(t: AffineType, r: int, s: int, config: Configuration, a: int, j: int) -> int:
    """Return the vacancy number p_j^(a) of a configuration.

    The inner product is kappa times the eps-product, which restores the
    normalization (delta, lambda) = <c, lambda> of the fermionic formula.

    :raise krcrystal.exceptions.VacancyError: If the value is not integral.
    """
    tees, duals = t_table(t)
    roots = _root_type(t)
    factor = kappa(t)
    alpha_a = roots.simple_root(a)
    total = Fraction(0)
    for (b, k), m in config.items():
        product = factor * inner(alpha_a, roots.simple_root(b))
        if product:
            total += product * min(tees[b] * j, tees[a] * k) * m
    value = (min(j, s) if a == r else 0) - total / duals[a]
    if value.denominator != 1:
        raise VacancyError(f"p_{j}^({a}) = {value} for {config!r}")
    return int(value)


def _binomial(p: int, m: int, signed: bool) -> Fraction:
    if not signed and p < 0:
        return Fraction(0)
    result = Fraction(1)
    for k in range(1, m + 1):
        result *= Fraction(p + k, k)
    return result


def _multiplicity(t: AffineType, r: int, s: int, lam: Sequence, signed: bool) -> int:
    total = Fraction(0)
    for config in enumerate_configs(t, r, s, lam):
        term = Fraction(1)
        for (a, j), m in config.items():
            term *= _binomial(vacancy(t, r, s, config, a, j), m, signed)
            if not term:
                break
        total += term
    if total.denominator != 1:
        raise VacancyError(f"non-integral multiplicity {total} for {Weight(lam)}")
    return int(total)


def multiplicity_N(t: AffineType, r: int, s: int, lam: Sequence) -> int:  # noqa: N802
    """Return the fermionic multiplicity N_s^(r)(lam) with signed binomials."""
    return _multiplicity(t, r, s, lam, signed=True)


def multiplicity_M(t: AffineType, r: int, s: int, lam: Sequence) -> int:  # noqa: N802
    """Return M_s^(r)(lam), where a binomial with negative vacancy counts as 0."""
    return _multiplicity(t, r, s, lam, signed=False)


def candidate_weights(t: AffineType, r: int, s: int) -> List[Weight]:
    """Return the dominant weights s varpi_r - sum beta_a alpha_a, beta_a >= 0.

    Sorted in descending lexicographic order of eps-coordinates.
    """
    _check_node(t, r)
    check_positive_int(s, "s")
    roots = _root_type(t)
    top = fundamental_weight(t, r).scale(s)
    bounds = [int(x) for x in roots.alpha_coordinates(top)]
    found = set()
    for beta in itertools.product(*(range(b + 1) for b in bounds)):
        lam = top
        for a, coefficient in enumerate(beta, start=1):
            if coefficient:
                lam = lam - roots.simple_root(a).scale(coefficient)
        if all(t.classical.pairing(i, lam) >= 0 for i in t.classical_index_set):
            found.add(lam)
    return sorted(found, reverse=True)


def fermionic_table(
    t: AffineType, r: int, s: int, nonzero_only: bool = False
) -> List[FermionicRow]:
    """Return the rows (lam, N, M) over all dominant candidates.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param r: Node.
    :type r: int
    :param s: Positive integer.
    :type s: int
    :param nonzero_only: Drop rows with N = M = 0.
    :type nonzero_only: bool
    :return: Rows in the order of :func:`candidate_weights`.
    :rtype: [krcrystal.fermionic.FermionicRow]
    """
    rows = []
    for lam in candidate_weights(t, r, s):
        row = FermionicRow(lam, multiplicity_N(t, r, s, lam), multiplicity_M(t, r, s, lam))
        if nonzero_only and not (row.n or row.m):
            continue
        rows.append(row)
    logger.debug("fermionic table %s r=%d s=%d: %d rows", t, r, s, len(rows))
    return rows
