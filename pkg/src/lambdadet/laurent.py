"""Exact sparse arithmetic in the ring Q[l][t, 1/t].

Values are polynomials in the weight variable l (written "l" in text form)
and Laurent polynomials in the perturbation variable t, with exact rational
coefficients.  Negative l-exponents never occur; negative t-exponents are
allowed and matter for the t -> 0 limit step.

Representation: a dict from a packed exponent key to a nonzero coefficient.
The pair (l_exp, t_exp) packs into the single integer

    key = l_exp * STRIDE + t_exp

so keys of a product add like exponent vectors and the inner loops of
multiplication run on ints rather than tuples.  Coefficients are plain
ints whenever the value is integral and fractions.Fraction otherwise,
which keeps the all-integer condensation runs fast.  |t_exp| is bounded
by STRIDE // 4 at construction; the bound is astronomically beyond what
any supported computation produces.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DivisionByZero, InexactDivision, PoleAtZero

STRIDE = 1 << 24
_HALF = STRIDE >> 1
_T_LIMIT = STRIDE >> 2

Rational = int | Fraction


def _pack(l_exp: int, t_exp: int) -> int:
    if l_exp < 0:
        raise ValueError("negative l-exponent %d" % l_exp)
    if not -_T_LIMIT < t_exp < _T_LIMIT:
        raise ValueError("t-exponent %d out of range" % t_exp)
    return l_exp * STRIDE + t_exp


def _unpack(key: int) -> tuple[int, int]:
    t_exp = ((key + _HALF) % STRIDE) - _HALF
    return (key - t_exp) // STRIDE, t_exp


def _as_coeff(value: Rational) -> Rational:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError("coefficient must be int or Fraction, got %r" % (value,))


class LaurentPoly:
    """Immutable sparse polynomial in Q[l][t, 1/t]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[Rational, int, int]] = ()):
        data: dict[int, Rational] = {}
        for coeff, l_exp, t_exp in terms:
            coeff = _as_coeff(coeff)
            key = _pack(l_exp, t_exp)
            acc = data.get(key, 0) + coeff
            if acc:
                data[key] = acc
            else:
                data.pop(key, None)
        self._terms = data
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, data: dict[int, Rational]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._terms = data
        poly._hash = None
        return poly

    @classmethod
    def const(cls, value: Rational) -> "LaurentPoly":
        value = _as_coeff(value)
        return cls._wrap({0: value} if value else {})

    @classmethod
    def monomial(cls, coeff: Rational, l_exp: int = 0, t_exp: int = 0) -> "LaurentPoly":
        coeff = _as_coeff(coeff)
        return cls._wrap({_pack(l_exp, t_exp): coeff} if coeff else {})

    # -- inspection ------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, int, Rational]]:
        """Yield (l_exp, t_exp, coeff) sorted by (t_exp, l_exp)."""
        decoded = [(_unpack(key), coeff) for key, coeff in self._terms.items()]
        decoded.sort(key=lambda item: (item[0][1], item[0][0]))
        for (l_exp, t_exp), coeff in decoded:
            yield l_exp, t_exp, coeff

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_t_exp(self) -> int:
        """Smallest t-exponent present, 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return min(_unpack(key)[1] for key in self._terms)

    def max_t_exp(self) -> int:
        if not self._terms:
            return 0
        return max(_unpack(key)[1] for key in self._terms)

    def l_degree(self) -> int:
        if not self._terms:
            return 0
        return max(_unpack(key)[0] for key in self._terms)

    def as_monomial(self) -> tuple[Rational, int, int] | None:
        """Return (coeff, l_exp, t_exp) if this is a single term, else None."""
        if len(self._terms) != 1:
            return None
        ((key, coeff),) = self._terms.items()
        l_exp, t_exp = _unpack(key)
        return coeff, l_exp, t_exp

    def coefficient(self, l_exp: int, t_exp: int) -> Rational:
        return self._terms.get(_pack(l_exp, t_exp), 0)

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        big, small = self._terms, rhs._terms
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for key, coeff in small.items():
            acc = out.get(key, 0) + coeff
            if acc:
                out[key] = acc
            else:
                del out[key]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._terms, rhs._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Rational] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                key = ka + kb
                out[key] = get(key, 0) + ca * cb
        return LaurentPoly._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative int")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- division --------------------------------------------------------

    def exact_div(self, other) -> "LaurentPoly":
        """Exact quotient self / other; InexactDivision if it does not divide.

        The divisor's minimal t-power is factored out first, then the
        quotient is built t-slice by t-slice: at each step the lowest
        remaining t-slice of the remainder is divided (exactly, as a
        univariate polynomial in l) by the divisor's lowest slice.  The
        remainder reaching zero is the proof of exactness.
        """
        rhs = self._coerce(other)
        if rhs is None or not isinstance(rhs, LaurentPoly):
            raise TypeError("cannot divide by %r" % (other,))
        if not rhs._terms:
            raise DivisionByZero("division by zero polynomial")
        if not self._terms:
            return ZERO
        num_shift = self.min_t_exp()
        den_shift = rhs.min_t_exp()
        den = {key - den_shift: coeff for key, coeff in rhs._terms.items()}
        low = _slice_at(den, 0)
        remainder = {key - num_shift: coeff for key, coeff in self._terms.items()}
        quotient: dict[int, Rational] = {}
        while remainder:
            t_min = min(_unpack(key)[1] for key in remainder)
            if t_min < 0:
                raise InexactDivision("remainder drops below divisor's t-range")
            q_slice = _div_l_poly(_slice_at(remainder, t_min), low)
            for l_exp, coeff in enumerate(q_slice):
                if not coeff:
                    continue
                qkey = l_exp * STRIDE + t_min
                quotient[qkey] = coeff
                for dkey, dcoeff in den.items():
                    key = dkey + qkey
                    acc = remainder.get(key, 0) - coeff * dcoeff
                    if acc:
                        remainder[key] = acc
                    else:
                        remainder.pop(key, None)
        shift = num_shift - den_shift
        if shift:
            quotient = {key + shift: coeff for key, coeff in quotient.items()}
        return LaurentPoly._wrap(quotient)

    def __truediv__(self, other) -> "LaurentPoly":
        return self.exact_div(other)

    # -- evaluation and limits -------------------------------------------

    def eval_at(self, l_value: Rational, t_value: Rational = 1) -> Rational:
        """Exact value at (l, t).  PoleAtZero if t=0 meets a negative t-exponent."""
        l_value = _as_coeff(l_value)
        t_value = _as_coeff(t_value)
        if t_value == 0 and self.min_t_exp() < 0:
            raise PoleAtZero("negative t-exponent evaluated at t=0")
        total: Rational = 0
        l_pows: dict[int, Rational] = {}
        t_pows: dict[int, Rational] = {}
        for key, coeff in self._terms.items():
            l_exp, t_exp = _unpack(key)
            lp = l_pows.get(l_exp)
            if lp is None:
                lp = l_pows[l_exp] = l_value**l_exp
            tp = t_pows.get(t_exp)
            if tp is None:
                if t_exp >= 0:
                    tp = t_value**t_exp
                else:
                    tp = Fraction(1) / Fraction(t_value) ** (-t_exp)
                t_pows[t_exp] = tp
            total = total + coeff * lp * tp
        return _as_coeff(Fraction(total)) if isinstance(total, Fraction) else total

    def limit_t0(self) -> "LaurentPoly":
        """Limit t -> 0: keep t^0 terms, drop positive ones, flag poles."""
        out: dict[int, Rational] = {}
        for key, coeff in self._terms.items():
            l_exp, t_exp = _unpack(key)
            if t_exp < 0:
                raise PoleAtZero(
                    "term with t-exponent %d has no t->0 limit" % t_exp
                )
            if t_exp == 0:
                out[key] = coeff
        return LaurentPoly._wrap(out)

    # -- text form -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. '1 + 1*l^1 + 3/2*l^2*t^3'."""
        if not self._terms:
            return "0"
        parts = []
        for l_exp, t_exp, coeff in self.terms():
            factors = [str(coeff)]
            if l_exp:
                factors.append("l^%d" % l_exp)
            if t_exp:
                factors.append("t^%d" % t_exp)
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return "LaurentPoly(%r)" % self.to_text()

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the to_text grammar back into a polynomial."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        if text == "0":
            return ZERO
        terms = []
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError("malformed polynomial text %r" % text)
            terms.append(_parse_term(chunk))
        return cls(terms)


_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)((?:\*[lt]\^-?\d+)*)$")
_FACTOR_RE = re.compile(r"\*([lt])\^(-?\d+)")


def _parse_term(chunk: str) -> tuple[Rational, int, int]:
    match = _TERM_RE.match(chunk.replace(" ", ""))
    if match is None:
        raise ValueError("malformed term %r" % chunk)
    coeff = Fraction(match.group(1))
    l_exp = t_exp = 0
    for var, exp in _FACTOR_RE.findall(match.group(2)):
        if var == "l":
            l_exp += int(exp)
        else:
            t_exp += int(exp)
    if l_exp < 0:
        raise ValueError("negative l-exponent in %r" % chunk)
    return coeff, l_exp, t_exp


def _slice_at(data: dict[int, Rational], t_exp: int) -> list[Rational]:
    """Dense l-coefficient list of the given t-slice."""
    coeffs: dict[int, Rational] = {}
    for key, coeff in data.items():
        l_exp, t = _unpack(key)
        if t == t_exp:
            coeffs[l_exp] = coeff
    degree = max(coeffs)
    out: list[Rational] = [0] * (degree + 1)
    for l_exp, coeff in coeffs.items():
        out[l_exp] = coeff
    return out


def _div_l_poly(num: list[Rational], den: list[Rational]) -> list[Rational]:
    """Exact univariate division of dense l-coefficient lists."""
    deg_d = len(den) - 1
    deg_n = len(num) - 1
    if deg_n < deg_d:
        raise InexactDivision("slice degree too small for divisor")
    lead = den[deg_d]
    rem = list(num)
    quot = [0] * (deg_n - deg_d + 1)
    for d in range(deg_n, deg_d - 1, -1):
        top = rem[d]
        if not top:
            continue
        if isinstance(top, int) and isinstance(lead, int) and top % lead == 0:
            factor: Rational = top // lead
        else:
            factor = _as_coeff(Fraction(top) / Fraction(lead))
        quot[d - deg_d] = factor
        for i in range(deg_d + 1):
            rem[d - deg_d + i] -= factor * den[i]
    if any(rem):
        raise InexactDivision("nonzero remainder in l-slice division")
    return quot


ZERO = LaurentPoly._wrap({})
ONE = LaurentPoly._wrap({0: 1})
LAM = LaurentPoly._wrap({STRIDE: 1})
T_VAR = LaurentPoly._wrap({1: 1})
ONE_PLUS_LAM = LaurentPoly._wrap({0: 1, STRIDE: 1})


def parse_rational(text: str) -> Rational:
    """Parse '3', '-2', or '3/2' into an exact rational."""
    return _as_coeff(Fraction(str(text).strip()))


def coerce_entry(value) -> LaurentPoly:
    """Turn an int, Fraction, text form, or polynomial into a LaurentPoly."""
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.const(value)
    if isinstance(value, str):
        return LaurentPoly.parse(value)
    raise TypeError("cannot interpret %r as a polynomial entry" % (value,))
