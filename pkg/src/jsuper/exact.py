"""Exact scalar arithmetic: rationals, univariate polynomials, and rational
functions in one formal variable ``t``.

Scalars are plain :class:`fractions.Fraction` values (arbitrary precision,
always in lowest terms with positive denominator).  Polynomials are immutable
coefficient tuples over Fraction; rational functions are coprime
numerator/denominator pairs with a monic denominator.  Laurent behaviour
(``t**-k``) is obtained through the quotient type: there is no separate
Laurent polynomial representation.

Everything here is pure and immutable, so values can be shared freely
between workers.
"""

from __future__ import annotations

from fractions import Fraction
import re

Scalar = Fraction

QQ0 = Fraction(0)
QQ1 = Fraction(1)


class ExactError(ValueError):
    """Raised on domain errors: division by the zero polynomial, poles."""


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction."""
    return Fraction(text.strip())


def fmt_scalar(x: Fraction) -> str:
    return str(x)


class Poly:
    """Univariate polynomial over Fraction, indexed by degree.

    Invariant: ``coeffs`` carries no trailing zero, so the leading
    coefficient is nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "Poly":
        return Poly([Fraction(c)])

    @staticmethod
    def t(power: int = 1) -> "Poly":
        return Poly([QQ0] * power + [QQ1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [QQ0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact Euclidean division over the rationals."""
        if other.is_zero():
            raise ExactError("division by zero polynomial")
        q = [QQ0] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        dlead = other.coeffs[-1]
        dd = other.degree
        while len(rem) - 1 >= dd and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
        return Poly(q), Poly(rem)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs])

    def eval(self, x):
        """Horner evaluation; works for Fraction and RatFun arguments alike."""
        acc = QQ0 if isinstance(x, Fraction) else RatFun.const(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({fmt_poly(self)!r})"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([Fraction(x)])
    raise TypeError(f"cannot coerce {x!r} to Poly")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (degrees here are tiny)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFun:
    """Rational function num/den in canonical form.

    Invariants: den is monic and nonzero, gcd(num, den) = 1.  Equal inputs
    up to a common polynomial factor normalize to identical objects.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise ExactError("division by zero polynomial")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        lead = den.coeffs[-1]
        if lead != 1:
            num = Poly([c / lead for c in num.coeffs])
            den = den.monic()
        self.num, self.den = num, den

    @staticmethod
    def const(c) -> "RatFun":
        return RatFun(Poly.const(c))

    @staticmethod
    def t(power: int = 1) -> "RatFun":
        """t**power for any integer power, negative powers included."""
        if power >= 0:
            return RatFun(Poly.t(power))
        return RatFun(Poly.const(1), Poly.t(-power))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _as_ratfun(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFun":
        r = RatFun.__new__(RatFun)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFun":
        return self + (-_as_ratfun(other))

    def __rsub__(self, other) -> "RatFun":
        return _as_ratfun(other) + (-self)

    def __mul__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other.is_zero():
            raise ExactError("division by zero polynomial")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return _as_ratfun(other) / self

    def eval_at(self, x: Fraction) -> Fraction:
        d = self.den.eval(x)
        if not d:
            raise ExactError(f"pole at t={x}")
        return self.num.eval(x) / d

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __repr__(self) -> str:
        return f"RatFun({fmt_ratfun(self)!r})"


def _as_ratfun(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFun.const(x)
    if isinstance(x, Poly):
        return RatFun(x)
    raise TypeError(f"cannot coerce {x!r} to RatFun")


def ratfun_normalize(num: Poly, den: Poly) -> RatFun:
    """Canonical quotient of two polynomials (coprime, monic denominator)."""
    return RatFun(num, den)


def eval_at_zero(f: RatFun) -> Fraction:
    """The value f(0); raises if the reduced denominator vanishes at 0."""
    d = f.den.eval(QQ0)
    if not d:
        raise ExactError("pole at t=0")
    return f.num.eval(QQ0) / d


# --- parsing / formatting ---------------------------------------------------
#
# Grammar:  term   := coeff | [coeff "*"] VAR ["^" int]
#           expr   := ["+"|"-"] term (("+"|"-") term)*
#           ratfun := expr | "(" expr ")" "/" "(" expr ")"
# Negative exponents are accepted and produce the corresponding quotient.

_TERM_RE = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?: (?P<coeff>\d+(?:/\d+)?) \s* (?:\*\s*(?P<var1>[a-zA-Z]\w*)\s*(?:\^\s*(?P<exp1>-?\d+))?)?
          | (?P<var2>[a-zA-Z]\w*) \s* (?:\^\s*(?P<exp2>-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def _parse_expr(text: str, var: str) -> RatFun:
    text = text.strip()
    if not text:
        raise ExactError("empty expression")
    pos = 0
    total = RatFun.const(0)
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ExactError(f"cannot parse {text!r} at position {pos}")
        if not first and m.group("sign") == "":
            raise ExactError(f"missing operator in {text!r} at position {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else QQ1
        name = m.group("var1") or m.group("var2")
        if name is not None and name != var:
            raise ExactError(f"unknown symbol {name!r} (expected {var!r})")
        exp = 0
        if name is not None:
            raw = m.group("exp1") or m.group("exp2")
            exp = int(raw) if raw is not None else 1
        total = total + RatFun.t(exp) * (sign * coeff)
        pos = m.end()
        first = False
    return total


def parse_ratfun(text: str, var: str = "t") -> RatFun:
    """Parse an expression or a quotient ``(expr)/(expr)``."""
    s = text.strip()
    m = re.fullmatch(r"\(\s*(?P<num>[^()]*)\)\s*/\s*\(\s*(?P<den>[^()]*)\)", s)
    if m:
        num = _parse_expr(m.group("num"), var)
        den = _parse_expr(m.group("den"), var)
        if den.is_zero():
            raise ExactError("division by zero polynomial")
        return num / den
    return _parse_expr(s, var)


def parse_poly(text: str, var: str = "t") -> Poly:
    """Parse an expression which must be polynomial (no denominator)."""
    r = parse_ratfun(text, var)
    if r.den.degree != 0:
        raise ExactError(f"{text!r} is not a polynomial")
    return r.num


def fmt_poly(p: Poly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        if d == 0:
            body = str(abs(c))
        else:
            v = var if d == 1 else f"{var}^{d}"
            body = v if abs(c) == 1 else f"{abs(c)}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)


def fmt_ratfun(f: RatFun, var: str = "t") -> str:
    if f.den.degree == 0:
        return fmt_poly(f.num, var)
    return f"({fmt_poly(f.num, var)})/({fmt_poly(f.den, var)})"
