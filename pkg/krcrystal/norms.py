"""Closed-form prepolarization values and the pseudobase criterion.

Norms are exact :class:`~krcrystal.qlaurent.LaurentPoly` values. The vectors
u(c) themselves are never built; only their stated norms are evaluated and
tested for membership in 1 + q_s A and q_s q_j^{-2(1 + <h_j, lambda(c)>)} A.
"""

__all__ = [
    "NormInput",
    "NormCheck",
    "NormReport",
    "norm_domain",
    "norm_u",
    "norm_eu",
    "stated_pairing",
    "norm_f",
    "eu_assembly",
    "check_criterion",
    "recursion_check",
    "criterion_sweep",
]

import logging
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .branching import enumerate_c, lambda_of_c
from .cartan import (
    A2EVEN,
    A2ODD,
    B1,
    C1,
    D1,
    D2,
    FAMILIES,
    AffineType,
    Weight,
    pairing,
    q_exponents,
)
from .exceptions import CVectorError, NodeIndexError, SpinNodeError
from .qlaurent import (
    LaurentPoly,
    in_one_plus_qsA,
    in_shifted_lattice,
    q_binomial,
    q_integer,
    signed_q_integer,
)

logger = logging.getLogger(__name__)

_HALF = Fraction(1, 2)

_MIN_RANK = {D1: 4, B1: 3, A2ODD: 2, C1: 2, A2EVEN: 2, D2: 2}


class NormInput(NamedTuple):
    """One (t, r, s, c) point, optionally with a node j in I_0."""

    t: AffineType
    r: int
    s: int
    c: Tuple[int, ...]
    j: Optional[int] = None

    @property
    def lam(self) -> Weight:
        return lambda_of_c(self.t, self.r, self.s, self.c)

    @property
    def style(self) -> str:
        """Return ``vertical``, ``spin``, ``horizontal`` or ``box``."""
        if self.t.family == B1 and self.r == self.t.rank:
            return "spin"
        return self.t.nu

    def c_at(self, m: int) -> Fraction:
        """Return c_m with c_0 and the trailing zero filled in."""
        if m == 0:
            if self.style in ("spin", "horizontal"):
                return Fraction(self.s, 2)
            return Fraction(self.s)
        if m > len(self.c):
            return Fraction(0)
        return Fraction(self.c[m - 1])

    @property
    def p(self) -> Optional[int]:
        """Return p = (r - j)/2 + 1, or None when r - j is odd or negative."""
        if self.j is None or self.r < self.j or (self.r - self.j) % 2:
            return None
        return (self.r - self.j) // 2 + 1

    @property
    def beta(self) -> int:
        """Return beta_j = -<h_j, lambda(c)> for the horizontal and box families."""
        j = self.j
        if self.style == "horizontal":
            return int(2 * (self.c_at(self.r + 1 - j) - self.c_at(self.r - j)))
        return int(self.c_at(self.r + 1 - j) - self.c_at(self.r - j))


class NormCheck(NamedTuple):
    family: str
    r: int
    s: int
    c: Tuple[int, ...]
    j: Optional[int]
    check: str
    passed: bool
    value: str


class NormReport(NamedTuple):
    checks: List[NormCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def violations(self) -> List[NormCheck]:
        return [check for check in self.checks if not check.passed]


def norm_domain(t: AffineType) -> Tuple[int, ...]:
    """Return the nodes r for which closed forms are stated."""
    n = t.rank
    bound = {D1: n - 2, B1: n, A2ODD: n, C1: n - 1, A2EVEN: n, D2: n - 1}[t.family]
    return tuple(range(1, bound + 1))


def _check_input(data: NormInput, need_j: bool) -> None:
    if data.r not in norm_domain(data.t):
        raise SpinNodeError(f"no closed form for {data.t} node {data.r}")
    if need_j:
        if data.j is None or not 1 <= data.j <= data.t.rank:
            raise NodeIndexError(f"node j={data.j} outside 1..{data.t.rank}")
    lambda_of_c(data.t, data.r, data.s, data.c)


def _q(power: Fraction) -> LaurentPoly:
    """Return q^power with power a half-integer."""
    doubled = Fraction(power) * 2
    if doubled.denominator != 1:
        raise CVectorError(f"exponent {power} is not a half-integer")
    return LaurentPoly.monomial(int(doubled))


def _binom(top: Fraction, bottom: Fraction, k: Fraction = Fraction(1)) -> LaurentPoly:
    top, bottom = int(top), int(bottom)
    if bottom < 0 or top < 0 or bottom > top:
        return LaurentPoly.zero()
    return q_binomial(top, bottom, k)


def _q_int(m: Fraction, k: Fraction = Fraction(1)) -> LaurentPoly:
    return signed_q_integer(int(m), k)


def _base(data: NormInput) -> Fraction:
    """Return k with q_0 = q^k for the subscript-0 binomials."""
    if data.style == "horizontal":
        return Fraction(2)
    if data.style == "box":
        return _HALF
    return Fraction(1)


def _u_factor(data: NormInput, m: int) -> LaurentPoly:
    """Return the factor ||u_m||^2 / ||u_{m-1}||^2."""
    s = data.s
    c = data.c_at(m)
    k = _base(data)
    if data.style == "vertical":
        return _q(c * (2 * s - c)) * _binom(2 * s, c)
    if data.style == "spin":
        return _q(c * (s - c)) * _binom(s, c)
    if data.style == "horizontal":
        return _q(k * c * (s - c)) * _binom(s, c, k)
    return _q(k * c * (2 * s - c)) * _binom(2 * s, c, k)


def norm_u(data: NormInput) -> LaurentPoly:
    """Return (u(c), u(c)).

    :param data: Input without j.
    :type data: krcrystal.norms.NormInput
    :return: Exact value.
    :rtype: krcrystal.qlaurent.LaurentPoly
    :raise krcrystal.exceptions.CVectorError: If c is malformed.
    """
    _check_input(data, need_j=False)
    result = LaurentPoly.one()
    for m in range(1, len(data.c) + 1):
        result = result * _u_factor(data, m)
    return result


def norm_f(data: NormInput) -> LaurentPoly:
    """Return ||f_j u(c)||^2 for the horizontal and box families, 1 <= j <= r."""
    s, r, j = data.s, data.r, data.j
    k = _base(data)
    top = r - j + 1
    if data.style == "horizontal":
        result = LaurentPoly.one()
        for m in range(1, r + 1):
            c = data.c_at(m)
            if m == top:
                result = result * _q(k * c * (s - 1 - c)) * _binom(s - 1, c, k)
            else:
                result = result * _q(k * c * (s - c)) * _binom(s, c, k)
        low = 2 * data.c_at(r - j)
        return result * _q(low - 1) * _q_int(low)

    first = LaurentPoly.one()
    second = LaurentPoly.one()
    for m in range(1, r + 1):
        c = data.c_at(m)
        d1 = 1 if m == top else 0
        d2 = 1 if m == r - j else 0
        first = first * _q(k * c * (2 * s - 2 * d1 - c)) * _binom(2 * s - 2 * d1, c, k)
        second = (
            second
            * _q(k * (c + d1 - d2) * (2 * s - d1 + d2 - c))
            * _binom(2 * s - 2 * d1, c - d1 - d2, k)
        )
    low = data.c_at(r - j)
    first = first * _q(low - 1) * _q_int(low)
    square = _q_int(2 * s - low + 1, k)
    return first + second * square * square


def eu_assembly(data: NormInput) -> LaurentPoly:
    """Return q^{2 beta} ||f_j u||^2 + q^{beta - 1} [beta] ||u||^2."""
    beta = data.beta
    return _q(2 * beta) * norm_f(data) + _q(beta - 1) * signed_q_integer(beta) * norm_u(
        data._replace(j=None)
    )


def norm_eu(data: NormInput) -> LaurentPoly:
    """Return (e_j u(c), e_j u(c)).

    :param data: Input with j in I_0.
    :type data: krcrystal.norms.NormInput
    :return: Exact value; zero where the closed form vanishes.
    :rtype: krcrystal.qlaurent.LaurentPoly
    """
    _check_input(data, need_j=True)
    s, r, j = data.s, data.r, data.j
    if data.style in ("vertical", "spin"):
        p = data.p
        if p is None:
            return LaurentPoly.zero()
        result = LaurentPoly.one()
        width = 2 * s if data.style == "vertical" else s
        for m in range(1, len(data.c) + 1):
            c = data.c_at(m)
            delta = 1 if m == p else 0
            result = result * _q((c - delta) * (width - c)) * _binom(width - delta, c - delta)
        if data.style == "spin" and p == 1:
            return result * _q(_HALF * (s - 1)) * q_integer(s, _HALF)
        low = data.c_at(p - 1)
        return result * _q(width - low - 1) * _q_int(width - low)
    if j > r:
        return LaurentPoly.zero()
    if data.style == "horizontal":
        k = _base(data)
        low = 2 * data.c_at(r - j)
        result = _q(2 * s - low - 1) * _q_int(2 * s - low)
        for m in range(1, r + 1):
            c = data.c_at(m)
            delta = 1 if m == r - j + 1 else 0
            result = result * _q(k * (c - delta) * (s - c)) * _binom(s - delta, c - delta, k)
        return result
    return eu_assembly(data)


def stated_pairing(data: NormInput) -> int:
    """Return <h_j, lambda(c)> as the closed forms state it."""
    r, j = data.r, data.j
    if data.style in ("vertical", "spin"):
        p = data.p
        if p is None:
            return 0
        if data.style == "spin" and p == 1:
            return int(data.s - 2 * data.c_at(1))
        return int(data.c_at(p - 1) - data.c_at(p))
    if j > r:
        return 0
    return -data.beta


def _threshold(data: NormInput, value: int) -> int:
    exponents = q_exponents(data.t)
    return exponents.s - 2 * exponents.nodes[data.j] * (1 + value)


def _entry(data: NormInput, check: str, passed: bool, value: object) -> NormCheck:
    return NormCheck(data.t.label, data.r, data.s, tuple(data.c), data.j, check, passed, str(value))


def check_criterion(t: AffineType, r: int, s: int) -> NormReport:
    """Test the pseudobase memberships for every valid c and every j in I_0.

    :param t: Affine type.
    :type t: krcrystal.cartan.AffineType
    :param r: Node in :func:`norm_domain`.
    :type r: int
    :param s: Positive integer.
    :type s: int
    :return: One entry per (c, j, check).
    :rtype: krcrystal.norms.NormReport
    """
    checks = []
    for c in enumerate_c(t, r, s):
        base = NormInput(t, r, s, c)
        u = norm_u(base)
        checks.append(_entry(base, "u", in_one_plus_qsA(u), u))
        lam = base.lam
        for j in t.classical_index_set:
            data = base._replace(j=j)
            stated = stated_pairing(data)
            actual = pairing(t, j, lam)
            checks.append(_entry(data, "pairing", stated == actual, f"{stated} vs {actual}"))
            eu = norm_eu(data)
            checks.append(_entry(data, "eu", in_shifted_lattice(eu, _threshold(data, stated)), eu))
    report = NormReport(checks)
    if not report.passed:
        logger.warning("%s r=%d s=%d: %d norm violations", t, r, s, len(report.violations))
    return report


def _in_base(poly: LaurentPoly, k: Fraction) -> LaurentPoly:
    """Return poly with q replaced by q^k."""
    terms = {}
    for exp, coef in poly.items():
        scaled = exp * k
        if scaled.denominator != 1:
            raise CVectorError(f"exponent {exp}/2 does not rescale by {k}")
        terms[int(scaled)] = coef
    return LaurentPoly(terms)


def _step(data: NormInput, m: int) -> LaurentPoly:
    """Return the recursion step q_0^{c_m(w - c_m)} [w, c_m]_0 with w the row width."""
    width = data.s if data.style in ("spin", "horizontal") else 2 * data.s
    c = int(data.c_at(m))
    return _in_base(LaurentPoly.monomial(2 * c * (width - c)) * _binom(width, c), _base(data))


def recursion_check(t: AffineType, r: int, s: int) -> NormReport:
    """Compare the closed forms with their recursive descriptions.

    * ``u-recursion``: ||u_0||^2 = 1 multiplied by the steps
      ||u_m||^2 = q_0^{c_m(w - c_m)} [w, c_m]_0 ||u_{m-1}||^2 equals
      :func:`norm_u`. The steps are evaluated in q and then rescaled to q_0;
    * ``eu-assembly`` (horizontal and box families, 1 <= j <= r):
      :func:`norm_eu` equals q^{2 beta}||f_j u||^2 + q^{beta - 1}[beta]||u||^2
      with ||u||^2 taken from the telescoped steps;
    * ``beta-zero`` (horizontal family): where beta = 0 the closed form
      reduces to ||f_j u||^2 alone.
    """
    checks = []
    for c in enumerate_c(t, r, s):
        base = NormInput(t, r, s, c)
        telescoped = LaurentPoly.one()
        for m in range(1, len(c) + 1):
            telescoped = telescoped * _step(base, m)
        checks.append(_entry(base, "u-recursion", telescoped == norm_u(base), telescoped))
        if base.style not in ("horizontal", "box"):
            continue
        for j in range(1, r + 1):
            data = base._replace(j=j)
            beta = data.beta
            closed = norm_eu(data)
            assembled = _q(2 * beta) * norm_f(data)
            assembled = assembled + _q(beta - 1) * signed_q_integer(beta) * telescoped
            checks.append(_entry(data, "eu-assembly", assembled == closed, assembled))
            if beta == 0 and base.style == "horizontal":
                checks.append(_entry(data, "beta-zero", closed == norm_f(data), closed))
    report = NormReport(checks)
    if not report.passed:
        logger.warning("%s r=%d s=%d: %d recursion mismatches", t, r, s, len(report.violations))
    return report


def criterion_sweep(
    max_rank: int = 4, max_s: int = 4, families: Iterable[str] = FAMILIES
) -> List[Tuple[AffineType, int, int]]:
    """Return the (t, r, s) grid of the norm sweep, in a fixed order."""
    grid = []
    for family in families:
        for n in range(_MIN_RANK[family], max_rank + 1):
            t = AffineType(family, n)
            for r in norm_domain(t):
                for s in range(1, max_s + 1):
                    grid.append((t, r, s))
    return grid
