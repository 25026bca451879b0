"""Exact Laurent polynomials in q^{1/2} and the q-integers built from them.

Exponents are stored as integers in units of q_s = q^{1/2}, so the stored
exponent ``e`` stands for q^{e/2}. Coefficients are Python integers.
"""

__all__ = [
    "LaurentPoly",
    "q_integer",
    "signed_q_integer",
    "q_factorial",
    "q_binomial",
    "in_shifted_lattice",
    "in_one_plus_qsA",
]

import re
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from .exceptions import (
    QBinomialRangeError,
    QDivisionError,
    QExponentError,
    QParseError,
)

Exponent = Union[int, Fraction]

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*(?P<star>\*)?\s*"
    r"(?P<q>q(?:\^(?:\((?P<num>-?\d+)(?P<half>/2)?\)|(?P<pos>\d+)))?)?\s*"
)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in q^{1/2}.

    :param terms: Mapping from exponent (q^{1/2} units) to coefficient.
        Zero coefficients are dropped.
    :type terms: dict
    """

    __slots__ = ["_terms", "_hash"]

    def __init__(self, terms: Mapping[int, int] = None) -> None:
        cleaned: Dict[int, int] = {}
        for exp, coef in (terms or {}).items():
            if coef:
                cleaned[int(exp)] = int(coef)
        self._terms = cleaned
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        """Return ``coefficient * q^{exponent/2}``.

        :param exponent: Exponent in q^{1/2} units.
        :type exponent: int
        :param coefficient: Coefficient.
        :type coefficient: int
        :return: Monomial.
        :rtype: krcrystal.qlaurent.LaurentPoly
        """
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __repr__(self) -> str:
        return f"<LaurentPoly {self}>"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp in sorted(self._terms, reverse=True):
            coef = self._terms[exp]
            body = _render_term(abs(coef), exp)
            if not pieces:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coef > 0 else '-'} {body}")
        return " ".join(pieces)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text form produced by ``str()``.

        :param text: Text such as ``"q^2 + 1"`` or ``"q^(3/2) - q^(-1/2)"``.
        :type text: str
        :return: Parsed polynomial.
        :rtype: krcrystal.qlaurent.LaurentPoly
        :raise krcrystal.exceptions.QParseError: If the text is malformed.
        """
        source = text.strip()
        if not source:
            raise QParseError("empty polynomial text")
        terms: Dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(source):
            match = _TERM.match(source, pos)
            if match is None or match.end() == pos:
                raise QParseError(f"cannot parse {text!r} at offset {pos}")
            sign, coef, star, q_part = match.group("sign", "coef", "star", "q")
            if coef is None and q_part is None:
                raise QParseError(f"empty term in {text!r} at offset {pos}")
            if sign is None and not first:
                raise QParseError(f"missing operator in {text!r} at offset {pos}")
            if star and (coef is None or q_part is None):
                raise QParseError(f"dangling '*' in {text!r}")
            value = int(coef) if coef is not None else 1
            if sign == "-":
                value = -value
            if q_part is None:
                exp = 0
            elif match.group("pos") is not None:
                exp = 2 * int(match.group("pos"))
            elif match.group("num") is not None:
                num = int(match.group("num"))
                exp = num if match.group("half") else 2 * num
            else:
                exp = 2
            terms[exp] = terms.get(exp, 0) + value
            pos = match.end()
            first = False
        return cls(terms)

    @property
    def terms(self) -> Dict[int, int]:
        """Return a copy of the exponent to coefficient map.

        :return: Terms in q^{1/2} units.
        :rtype: dict
        """
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exponent(self) -> int:
        """Return the lowest exponent (q^{1/2} units).

        :raise ValueError: For the zero polynomial.
        """
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    @property
    def constant_term(self) -> int:
        return self._terms.get(0, 0)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by q^{exponent/2}."""
        return LaurentPoly({e + exponent: c for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for exp, coef in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coef
        return LaurentPoly(terms)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.one()
        for _ in range(power):
            result = result * self
        return result

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        """Return the quotient of an exact division.

        :param other: Divisor.
        :type other: krcrystal.qlaurent.LaurentPoly
        :return: Quotient.
        :rtype: krcrystal.qlaurent.LaurentPoly
        :raise krcrystal.exceptions.QDivisionError: If a remainder appears.
        """
        if other.is_zero:
            raise QDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        low_num, low_den = self.min_exponent, other.min_exponent
        remainder = self.shift(-low_num).terms
        divisor = other.shift(-low_den).terms
        lead_exp = max(divisor)
        lead_coef = divisor[lead_exp]
        quotient: Dict[int, int] = {}
        while remainder:
            top = max(remainder)
            if top < lead_exp:
                break
            coef, rest = divmod(remainder[top], lead_coef)
            if rest:
                break
            step = top - lead_exp
            quotient[step] = coef
            for exp, value in divisor.items():
                key = exp + step
                remainder[key] = remainder.get(key, 0) - coef * value
                if not remainder[key]:
                    del remainder[key]
        if remainder:
            raise QDivisionError(f"{self} is not divisible by {other}")
        return LaurentPoly(quotient).shift(low_num - low_den)


def _render_term(coef: int, exp: int) -> str:
    if exp == 0:
        return str(coef)
    if exp == 2:
        power = "q"
    elif exp % 2 == 0 and exp > 0:
        power = f"q^{exp // 2}"
    elif exp % 2 == 0:
        power = f"q^({exp // 2})"
    else:
        power = f"q^({exp}/2)"
    return power if coef == 1 else f"{coef}*{power}"


def _half_units(k: Exponent) -> int:
    doubled = Fraction(k) * 2
    if doubled.denominator != 1 or doubled <= 0:
        raise QExponentError(f"base exponent must be a positive half-integer, got {k}")
    return int(doubled)


def q_integer(m: int, k: Exponent = 1) -> LaurentPoly:
    """Return the q-integer [m] with q_i = q^k.

    :param m: Non-negative integer.
    :type m: int
    :param k: Base exponent, a positive half-integer.
    :type k: int | fractions.Fraction
    :return: Sum of q^{k(m-1-2t)} for 0 <= t < m.
    :rtype: krcrystal.qlaurent.LaurentPoly
    :raise krcrystal.exceptions.QExponentError: If k is not positive.
    :raise krcrystal.exceptions.QBinomialRangeError: If m is negative.
    """
    unit = _half_units(k)
    if m < 0:
        raise QBinomialRangeError(f"q-integer needs m >= 0, got {m}")
    return LaurentPoly({unit * (m - 1 - 2 * t): 1 for t in range(m)})


def signed_q_integer(m: int, k: Exponent = 1) -> LaurentPoly:
    """Return [m] extended to negative m by [-m] = -[m]."""
    if m < 0:
        return -q_integer(-m, k)
    return q_integer(m, k)


def q_factorial(m: int, k: Exponent = 1) -> LaurentPoly:
    """Return [m]! = [1][2]...[m]."""
    if m < 0:
        raise QBinomialRangeError(f"q-factorial needs m >= 0, got {m}")
    result = LaurentPoly.one()
    for value in range(1, m + 1):
        result = result * q_integer(value, k)
    return result


def q_binomial(l: int, m: int, k: Exponent = 1) -> LaurentPoly:  # noqa: E741
    """Return the q-binomial coefficient [l]! / ([m]! [l-m]!).

    :param l: Upper index.
    :type l: int
    :param m: Lower index, 0 <= m <= l.
    :type m: int
    :param k: Base exponent.
    :type k: int | fractions.Fraction
    :return: Exact quotient.
    :rtype: krcrystal.qlaurent.LaurentPoly
    :raise krcrystal.exceptions.QBinomialRangeError: If m > l or m < 0.
    """
    if m < 0 or l < 0 or m > l:
        raise QBinomialRangeError(f"q-binomial needs 0 <= m <= l, got l={l}, m={m}")
    denominator = q_factorial(m, k) * q_factorial(l - m, k)
    return q_factorial(l, k).exact_divide(denominator)


def in_shifted_lattice(p: LaurentPoly, a: int) -> bool:
    """Return True if p lies in q_s^a A, A the polynomials without pole at 0.

    :param p: Polynomial.
    :type p: krcrystal.qlaurent.LaurentPoly
    :param a: Shift in q^{1/2} units.
    :type a: int
    :rtype: bool
    """
    return p.is_zero or p.min_exponent >= a


def in_one_plus_qsA(p: LaurentPoly) -> bool:
    """Return True if p lies in 1 + q_s A."""
    return not p.is_zero and p.min_exponent >= 0 and p.constant_term == 1
