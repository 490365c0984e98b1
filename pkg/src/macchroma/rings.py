"""Exact coefficient rings.

Three rings cover every computation in the package:

* ``LaurentQT`` -- bivariate Laurent polynomials in q and t over
  arbitrary-precision rationals (``fractions.Fraction``).
* ``RatFunQT``  -- formal quotients of two ``LaurentQT`` values, compared by
  cross-multiplication.  No GCD reduction is attempted.
* ``AlphaPoly`` -- univariate polynomials in the deformation parameter
  (printed ``a``) over rationals.

All values are immutable after construction and safe to share across
threads.  Canonical printing orders terms by ascending q-exponent, then
ascending t-exponent, so string output is deterministic.
"""

from __future__ import annotations

import re
from fractions import Fraction

# Exponents are bounded machine integers; desk-scale degrees never get near
# this, but the bound is asserted so silent wraparound can never occur if the
# code is ever ported to fixed-width arithmetic.
_EXP_BOUND = 1 << 31

_RAT_RE = re.compile(r"^-?\d+(?:/\d+)?$")
_VAR_RE = re.compile(r"^([a-zA-Z])(?:\^(-?\d+))?$")


class InexactDivision(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class NonInvertible(ArithmeticError):
    """Raised when inverting a Laurent polynomial that is not a monomial."""


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _format_terms(items) -> str:
    """Join (variable-part, coefficient) pairs into the canonical text form.

    ``items`` is an ordered list of ``(varpart, coeff)`` where ``varpart`` is
    e.g. ``"q*t^2"`` or ``""`` for a constant term.
    """
    if not items:
        return "0"
    pieces = []
    for varpart, coeff in items:
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if not varpart:
            body = str(mag)
        elif mag == 1:
            body = varpart
        else:
            body = f"{mag}*{varpart}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


def _parse_term(token: str, varnames: tuple[str, ...]):
    """Parse one ``c*x^a*y^b`` token into (coefficient, exponent dict)."""
    coeff = Fraction(1)
    exps: dict[str, int] = {}
    saw_var = False
    saw_coeff = False
    for piece in token.split("*"):
        if _RAT_RE.match(piece):
            if saw_coeff or saw_var:
                raise ValueError(f"malformed term {token!r}")
            coeff = Fraction(piece)
            saw_coeff = True
            continue
        m = _VAR_RE.match(piece)
        if not m or m.group(1) not in varnames:
            raise ValueError(f"malformed term {token!r}")
        name, exp = m.group(1), int(m.group(2)) if m.group(2) else 1
        if name in exps:
            raise ValueError(f"repeated variable in term {token!r}")
        exps[name] = exp
        saw_var = True
    return coeff, exps


def _parse_expr(text: str, varnames: tuple[str, ...]):
    """Parse a canonical polynomial string into (coefficient, exponents) pairs."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return []
    tokens = s.split(" ")
    out = []
    sign = 1
    if tokens[0].startswith("-"):
        sign = -1
        tokens[0] = tokens[0][1:]
    expect_term = True
    for tok in tokens:
        if expect_term:
            coeff, exps = _parse_term(tok, varnames)
            out.append((sign * coeff, exps))
            expect_term = False
        else:
            if tok == "+":
                sign = 1
            elif tok == "-":
                sign = -1
            else:
                raise ValueError(f"expected '+' or '-', got {tok!r}")
            expect_term = True
    if expect_term:
        raise ValueError(f"dangling operator in {text!r}")
    return out


class LaurentQT:
    """Bivariate Laurent polynomial in q and t with rational coefficients.

    Terms are stored sparsely as ``{(q_exp, t_exp): Fraction}`` with no zero
    coefficients.  Instances are immutable; all operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        tidy: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (qa, tb), c in terms.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                assert abs(qa) < _EXP_BOUND and abs(tb) < _EXP_BOUND, "exponent overflow"
                tidy[(qa, tb)] = c
        object.__setattr__(self, "_terms", tidy)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentQT is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentQT":
        return cls()

    @classmethod
    def one(cls) -> "LaurentQT":
        return cls({(0, 0): Fraction(1)})

    @classmethod
    def from_int(cls, n) -> "LaurentQT":
        return cls({(0, 0): Fraction(n)})

    @classmethod
    def term(cls, coeff, q_exp: int = 0, t_exp: int = 0) -> "LaurentQT":
        return cls({(q_exp, t_exp): _as_fraction(coeff)})

    @classmethod
    def parse(cls, text: str) -> "LaurentQT":
        terms: dict[tuple[int, int], Fraction] = {}
        for coeff, exps in _parse_expr(text, ("q", "t")):
            key = (exps.get("q", 0), exps.get("t", 0))
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(terms)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self):
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): Fraction(1)}

    def coefficient(self, q_exp: int, t_exp: int) -> Fraction:
        return self._terms.get((q_exp, t_exp), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def has_negative_exponents(self) -> bool:
        return any(qa < 0 or tb < 0 for qa, tb in self._terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (every exponent zero)."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {(0, 0)}:
            raise ValueError("not a constant polynomial")
        return self._terms[(0, 0)]

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentQT) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentQT") -> "LaurentQT":
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, Fraction(0)) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return LaurentQT(acc)

    def __neg__(self) -> "LaurentQT":
        return LaurentQT({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "LaurentQT") -> "LaurentQT":
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, Fraction(0)) - c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return LaurentQT(acc)

    def __mul__(self, other: "LaurentQT") -> "LaurentQT":
        acc: dict[tuple[int, int], Fraction] = {}
        for (qa, tb), c in self._terms.items():
            for (qc, td), d in other._terms.items():
                key = (qa + qc, tb + td)
                s = acc.get(key, Fraction(0)) + c * d
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return LaurentQT(acc)

    def scale(self, scalar) -> "LaurentQT":
        scalar = _as_fraction(scalar)
        if scalar == 0:
            return LaurentQT()
        return LaurentQT({key: c * scalar for key, c in self._terms.items()})

    def __pow__(self, k: int) -> "LaurentQT":
        if k < 0:
            if len(self._terms) != 1:
                raise NonInvertible("non-invertible element")
            ((qa, tb), c), = self._terms.items()
            base = LaurentQT({(-qa, -tb): 1 / c})
            return base ** (-k)
        result = LaurentQT.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitutions -----------------------------------------------------

    def substitute_q(self, sign: int, t_exp: int) -> "LaurentQT":
        """Replace q by ``sign * t**t_exp`` (sign must be +1 or -1)."""
        if sign not in (1, -1):
            raise ValueError("substitution image must have coefficient +1 or -1")
        acc: dict[tuple[int, int], Fraction] = {}
        for (qa, tb), c in self._terms.items():
            key = (0, tb + qa * t_exp)
            val = c if (sign == 1 or qa % 2 == 0) else -c
            s = acc.get(key, Fraction(0)) + val
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return LaurentQT(acc)

    def substitute_t(self, sign: int, q_exp: int) -> "LaurentQT":
        """Replace t by ``sign * q**q_exp`` (sign must be +1 or -1)."""
        if sign not in (1, -1):
            raise ValueError("substitution image must have coefficient +1 or -1")
        acc: dict[tuple[int, int], Fraction] = {}
        for (qa, tb), c in self._terms.items():
            key = (qa + tb * q_exp, 0)
            val = c if (sign == 1 or tb % 2 == 0) else -c
            s = acc.get(key, Fraction(0)) + val
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return LaurentQT(acc)

    # -- division ----------------------------------------------------------

    def _valuations(self) -> tuple[int, int]:
        return (min(qa for qa, _ in self._terms), min(tb for _, tb in self._terms))

    def exact_div(self, divisor: "LaurentQT") -> "LaurentQT":
        """Exact quotient self / divisor; raises InexactDivision otherwise.

        Both operands may be Laurent; valuations are stripped first, then
        ordinary multivariate division runs under lexicographic term order.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentQT()
        va_q, va_t = self._valuations()
        vd_q, vd_t = divisor._valuations()
        rem = {(qa - va_q, tb - va_t): c for (qa, tb), c in self._terms.items()}
        den = {(qa - vd_q, tb - vd_t): c for (qa, tb), c in divisor._terms.items()}
        lead_d = max(den)
        lead_dc = den[lead_d]
        quot: dict[tuple[int, int], Fraction] = {}
        while rem:
            lead_r = max(rem)
            dq, dt = lead_r[0] - lead_d[0], lead_r[1] - lead_d[1]
            if dq < 0 or dt < 0:
                raise InexactDivision("remainder nonzero")
            factor = rem[lead_r] / lead_dc
            quot[(dq, dt)] = factor
            for (qa, tb), c in den.items():
                key = (qa + dq, tb + dt)
                s = rem.get(key, Fraction(0)) - factor * c
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        shift_q, shift_t = va_q - vd_q, va_t - vd_t
        return LaurentQT({(qa + shift_q, tb + shift_t): c for (qa, tb), c in quot.items()})

    # -- predicates --------------------------------------------------------

    def is_palindromic_in_t(self) -> bool:
        """Whether the dense t-coefficient sequence reads the same reversed.

        Requires a pure t-polynomial (q-exponent zero everywhere); interior
        zero coefficients count in the sequence.
        """
        if any(qa != 0 for qa, _ in self._terms):
            raise ValueError("mixed q,t input")
        if not self._terms:
            return True
        lo = min(tb for _, tb in self._terms)
        hi = max(tb for _, tb in self._terms)
        seq = [self._terms.get((0, tb), Fraction(0)) for tb in range(lo, hi + 1)]
        return seq == seq[::-1]

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        items = []
        for (qa, tb) in sorted(self._terms):
            parts = []
            if qa:
                parts.append("q" if qa == 1 else f"q^{qa}")
            if tb:
                parts.append("t" if tb == 1 else f"t^{tb}")
            items.append(("*".join(parts), self._terms[(qa, tb)]))
        return _format_terms(items)

    def __repr__(self) -> str:
        return f"LaurentQT({self})"


def lp_arith(a: LaurentQT, b: LaurentQT, op: str) -> LaurentQT:
    """Dispatch form of the basic ring operations (add, sub, mul)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


class AlphaPoly:
    """Univariate polynomial over the rationals in the parameter ``a``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        tidy: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                if e < 0:
                    raise ValueError("negative exponent in AlphaPoly")
                assert e < _EXP_BOUND, "exponent overflow"
                tidy[e] = c
        object.__setattr__(self, "_coeffs", tidy)

    def __setattr__(self, name, value):
        raise AttributeError("AlphaPoly is immutable")

    @classmethod
    def zero(cls) -> "AlphaPoly":
        return cls()

    @classmethod
    def one(cls) -> "AlphaPoly":
        return cls({0: Fraction(1)})

    @classmethod
    def from_int(cls, n) -> "AlphaPoly":
        return cls({0: Fraction(n)})

    @classmethod
    def term(cls, coeff, exp: int = 0) -> "AlphaPoly":
        return cls({exp: _as_fraction(coeff)})

    @classmethod
    def parse(cls, text: str) -> "AlphaPoly":
        coeffs: dict[int, Fraction] = {}
        for coeff, exps in _parse_expr(text, ("a",)):
            e = exps.get("a", 0)
            coeffs[e] = coeffs.get(e, Fraction(0)) + coeff
        return cls(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, AlphaPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "AlphaPoly") -> "AlphaPoly":
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = acc.get(e, Fraction(0)) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return AlphaPoly(acc)

    def __neg__(self) -> "AlphaPoly":
        return AlphaPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "AlphaPoly") -> "AlphaPoly":
        return self + (-other)

    def __mul__(self, other: "AlphaPoly") -> "AlphaPoly":
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = acc.get(e, Fraction(0)) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return AlphaPoly(acc)

    def scale(self, scalar) -> "AlphaPoly":
        scalar = _as_fraction(scalar)
        if scalar == 0:
            return AlphaPoly()
        return AlphaPoly({e: c * scalar for e, c in self._coeffs.items()})

    def __pow__(self, k: int) -> "AlphaPoly":
        if k < 0:
            raise ValueError("negative power of AlphaPoly")
        result = AlphaPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, value: Fraction) -> Fraction:
        """Evaluate at a rational value of the parameter."""
        value = _as_fraction(value)
        return sum((c * value**e for e, c in self._coeffs.items()), Fraction(0))

    def __str__(self) -> str:
        items = []
        for e in sorted(self._coeffs):
            varpart = "" if e == 0 else ("a" if e == 1 else f"a^{e}")
            items.append((varpart, self._coeffs[e]))
        return _format_terms(items)

    def __repr__(self) -> str:
        return f"AlphaPoly({self})"


def ap_arith(a: AlphaPoly, b: AlphaPoly, op: str) -> AlphaPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


class RatFunQT:
    """Formal quotient of two LaurentQT values.

    Equality is decided by cross-multiplication; no GCD reduction is done, so
    numerators and denominators grow.  Used only where a genuine division is
    unavoidable (plethysm checks), always transiently.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQT, den: LaurentQT = None):
        if den is None:
            den = LaurentQT.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = LaurentQT.one()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunQT is immutable")

    @classmethod
    def zero(cls) -> "RatFunQT":
        return cls(LaurentQT.zero())

    @classmethod
    def one(cls) -> "RatFunQT":
        return cls(LaurentQT.one())

    @classmethod
    def from_int(cls, n) -> "RatFunQT":
        return cls(LaurentQT.from_int(n))

    @classmethod
    def from_laurent(cls, p: LaurentQT) -> "RatFunQT":
        return cls(p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunQT):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunQT is unhashable (equality is by cross-multiplication)")

    def __add__(self, other: "RatFunQT") -> "RatFunQT":
        return RatFunQT(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunQT":
        return RatFunQT(-self.num, self.den)

    def __sub__(self, other: "RatFunQT") -> "RatFunQT":
        return self + (-other)

    def __mul__(self, other: "RatFunQT") -> "RatFunQT":
        return RatFunQT(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunQT") -> "RatFunQT":
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunQT(self.num * other.den, self.den * other.num)

    def scale(self, scalar) -> "RatFunQT":
        return RatFunQT(self.num.scale(scalar), self.den)

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunQT({self})"
