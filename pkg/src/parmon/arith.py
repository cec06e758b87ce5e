"""Exact arithmetic in Q(n), the field of rational functions in one variable.

Polynomials are tuples of ``Fraction`` coefficients in ascending degree with
no trailing zeros (the zero polynomial is the empty tuple).  A
``RationalFunction`` keeps numerator and denominator coprime with a monic
denominator, so two equal functions always have identical representations.
"""
from __future__ import annotations

import ast
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, PoleError

Poly = tuple  # tuple[Fraction, ...], ascending degree

ZERO_POLY: Poly = ()
ONE_POLY: Poly = (Fraction(1),)
X_POLY: Poly = (Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# polynomial helpers


def poly(coeffs: Iterable) -> Poly:
    """Build a trimmed polynomial from ascending coefficients."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _trim(c: list) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Poly, c) -> Poly:
    if c == 0:
        return ZERO_POLY
    return tuple(x * c for x in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO_POLY
    if len(a) == 1:
        return poly_scale(b, a[0])
    if len(b) == 1:
        return poly_scale(a, b[0])
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return ZERO_POLY, a
    rem = list(a)
    lead = b[-1]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] / lead
        q[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] -= c * y
    return _trim(q), _trim(rem[: len(b) - 1])


def poly_monic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_eval(a: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_degree(a: Poly) -> int:
    return len(a) - 1


def poly_to_str(a: Poly, var: str = "n") -> str:
    """Sparse descending form, e.g. ``2*n^3 - n + 1/2``."""
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# rational functions


Scalar = Union[int, Fraction, "RationalFunction"]


class RationalFunction:
    """An element of Q(n) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly = ZERO_POLY, den: Poly = ONE_POLY):
        # callers are trusted to pass a canonical pair; use rf_normalize otherwise
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "RationalFunction":
        c = Fraction(c)
        return cls((c,) if c else ZERO_POLY, ONE_POLY)

    @classmethod
    def var(cls) -> "RationalFunction":
        return cls(X_POLY, ONE_POLY)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0] if self.num else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                return self
            other = RationalFunction.const(other)
        return _add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(poly_neg(self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, (RationalFunction, int, Fraction)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return RationalFunction.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                return RationalFunction()
            return RationalFunction(poly_scale(self.num, Fraction(other)), self.den)
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        lead = self.num[-1]
        return RationalFunction(
            tuple(c / lead for c in self.den), tuple(c / lead for c in self.num)
        )

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                raise DivisionByZero("division by zero")
            return RationalFunction(poly_scale(self.num, 1 / Fraction(other)), self.den)
        return _mul(self, other.inverse())

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return RationalFunction.const(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = RationalFunction.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation / display -----------------------------------------------

    def __call__(self, x) -> Fraction:
        return rf_eval(self, x)

    def __str__(self) -> str:
        return rf_to_str(self)

    def __repr__(self) -> str:
        return f"RationalFunction({rf_to_str(self)!r})"

    def to_json(self) -> dict:
        return {"num": [_frac_str(c) for c in self.num], "den": [_frac_str(c) for c in self.den]}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalFunction":
        return rf_normalize(poly(Fraction(c) for c in obj["num"]), poly(Fraction(c) for c in obj["den"]))


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if not a.num:
        return b
    if not b.num:
        return a
    if a.den == b.den:
        num = poly_add(a.num, b.num)
        if not num:
            return RationalFunction()
        if len(a.den) == 1:
            return RationalFunction(num, a.den)
        return rf_normalize(num, a.den)
    if len(a.den) == 1:
        return RationalFunction(poly_add(poly_mul(a.num, b.den), b.num), b.den)
    if len(b.den) == 1:
        return RationalFunction(poly_add(a.num, poly_mul(b.num, a.den)), a.den)
    g = poly_gcd(a.den, b.den)
    ad = poly_divmod(a.den, g)[0]
    bd = poly_divmod(b.den, g)[0]
    num = poly_add(poly_mul(a.num, bd), poly_mul(b.num, ad))
    return rf_normalize(num, poly_mul(a.den, bd))


def _mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if not a.num or not b.num:
        return RationalFunction()
    an, ad, bn, bd = a.num, a.den, b.num, b.den
    if len(bd) > 1 and len(an) > 1:
        g = poly_gcd(an, bd)
        if len(g) > 1:
            an, bd = poly_divmod(an, g)[0], poly_divmod(bd, g)[0]
    if len(ad) > 1 and len(bn) > 1:
        g = poly_gcd(bn, ad)
        if len(g) > 1:
            bn, ad = poly_divmod(bn, g)[0], poly_divmod(ad, g)[0]
    num = poly_mul(an, bn)
    den = poly_mul(ad, bd)
    lead = den[-1]
    if lead != 1:
        num = poly_scale(num, 1 / lead)
        den = tuple(c / lead for c in den)
    return RationalFunction(num, den)


def rf_normalize(raw_num: Sequence, raw_den: Sequence) -> RationalFunction:
    """Reduce ``raw_num / raw_den`` to canonical form."""
    num = poly(raw_num)
    den = poly(raw_den)
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return RationalFunction()
    g = poly_gcd(num, den)
    if len(g) > 1:
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = poly_scale(num, 1 / lead)
        den = tuple(c / lead for c in den)
    return RationalFunction(num, den)


def rf_arith(a, b, op: str) -> RationalFunction:
    a = RationalFunction.coerce(a)
    b = RationalFunction.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_eval(f, x) -> Fraction:
    """Exact value of ``f`` at the rational point ``x``."""
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    x = Fraction(x)
    d = poly_eval(f.den, x)
    if d == 0:
        raise PoleError(f"{f} has a pole at n = {x}")
    return poly_eval(f.num, x) / d


N = RationalFunction.var()


# ---------------------------------------------------------------------------
# text forms


def _integer_scaled(f: RationalFunction) -> tuple[Poly, Poly]:
    """Numerator and denominator rescaled to coprime integer coefficients."""
    coeffs = list(f.num) + list(f.den)
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs if c]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    scale = Fraction(lcm, g or 1)
    return poly_scale(f.num, scale), poly_scale(f.den, scale)


def rf_to_str(f: RationalFunction, var: str = "n") -> str:
    if not f.num:
        return "0"
    num, den = _integer_scaled(f)
    if den == ONE_POLY:
        return poly_to_str(num, var)
    ns = poly_to_str(num, var)
    if sum(1 for c in num if c) > 1:
        ns = f"({ns})"
    ds = poly_to_str(den, var)
    if sum(1 for c in den if c) > 1 or not (len(den) == 1 or (den[-1] == 1 and len(den) == 2)):
        ds = f"({ds})"
    return f"{ns}/{ds}"


_ALLOWED = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name,
    ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd, ast.Load,
)


def parse_rf(text: str, var: str = "n") -> RationalFunction:
    """Parse an arithmetic expression in ``n`` such as ``-1/(2*n^2*(n-1))``.

    Juxtaposition is not supported; ``^`` and ``**`` both mean power.
    """
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported syntax in {text!r}")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if not isinstance(node.value, int):
                raise ValueError(f"only integer literals allowed in {text!r}")
            return RationalFunction.const(node.value)
        if isinstance(node, ast.Name):
            if node.id != var:
                raise ValueError(f"unknown symbol {node.id!r}")
            return RationalFunction.var()
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        left, right = ev(node.left), ev(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
        if not right.is_constant() or right.constant_value().denominator != 1:
            raise ValueError("exponent must be an integer")
        return left ** int(right.constant_value())

    return ev(tree)


def denominator_roots_within(f: RationalFunction, allowed: Iterable[int]) -> bool:
    """True when every root of den(f) lies in ``allowed`` (over Q-bar)."""
    den = f.den
    for r in allowed:
        lin = (Fraction(-r), Fraction(1))
        while len(den) > 1:
            q, rem = poly_divmod(den, lin)
            if rem:
                break
            den = q
    return len(den) == 1
