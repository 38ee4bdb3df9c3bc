# quiverhopf/core/scalar.py
import logging
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, inf, isqrt
from typing import Tuple, Union

from sympy import QQ, Poly, Rational, Symbol, cyclotomic_poly, primefactors, sympify
from sympy.ntheory import primitive_root
from sympy.ntheory.modular import crt
from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.euclidtools import dup_invert
from sympy.polys.fields import field
from sympy.polys.matrices import DomainMatrix

from quiverhopf.exceptions import PreconditionError, ScalarModeError

# Configure logger
logger = logging.getLogger(__name__)

RATIONAL = "rational"
CYCLOTOMIC = "cyclotomic"
RATIONAL_FUNCTION = "rational_function"

# q = v**2, so q^(1/2) = v is available in this field
RATIONAL_FUNCTIONS, _V = field("v", QQ)
V_SYMBOL = RATIONAL_FUNCTIONS.symbols[0]

_ZETA = Symbol("zeta")
_ZETA_PATTERN = re.compile(r"zeta_(\d+)")


@lru_cache(maxsize=None)
def _cyclotomic_modulus(n: int) -> Tuple:
    """Coefficients of the n-th cyclotomic polynomial over QQ, highest degree first."""
    poly = Poly(cyclotomic_poly(n, _ZETA), _ZETA)
    return tuple(QQ(int(c)) for c in poly.all_coeffs())


def _reduce(coeffs, n: int) -> Tuple:
    return tuple(dup_rem(dup_strip(list(coeffs)), list(_cyclotomic_modulus(n)), QQ))


def _lift(coeffs: Tuple, n: int, m: int) -> Tuple:
    """Rewrite a polynomial in zeta_n as a polynomial in zeta_m (n divides m)."""
    if n == m:
        return coeffs
    step = m // n
    degree = len(coeffs) - 1
    lifted = [QQ(0)] * (degree * step + 1)
    for position, c in enumerate(coeffs):
        lifted[(degree - position) * step] = c
    lifted.reverse()
    return _reduce(lifted, m)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _exponent_vector(coeffs: Tuple, size: int) -> list:
    """Coefficients indexed by exponent, padded to size."""
    return list(coeffs[::-1]) + [QQ(0)] * (size - len(coeffs))


def _power_map(coeffs: Tuple, n: int, a: int) -> Tuple:
    """Image of a polynomial in zeta_n under zeta_n -> zeta_n**a."""
    image = [QQ(0)] * n
    degree = len(coeffs) - 1
    for position, c in enumerate(coeffs):
        image[(degree - position) * a % n] += c
    image.reverse()
    return _reduce(image, n)


def _halve(coeffs: Tuple, n: int) -> Tuple:
    """Rewrites a polynomial in zeta_n, n = 2m with m odd, as a polynomial in zeta_m."""
    m = n // 2
    shift = (m + 1) // 2
    image = [QQ(0)] * m
    degree = len(coeffs) - 1
    for position, c in enumerate(coeffs):
        k = degree - position
        # zeta_n = -zeta_m**((m + 1)/2)
        image[k * shift % m] += c if k % 2 == 0 else -c
    image.reverse()
    return _reduce(image, m)


@lru_cache(maxsize=None)
def _galois_exponent(n: int, p: int) -> int:
    """a with zeta_n -> zeta_n**a generating Gal(QQ(zeta_n)/QQ(zeta_(n/p))), p exactly dividing n."""
    a, _ = crt([n // p, p], [1, primitive_root(p)])
    return int(a)


@lru_cache(maxsize=None)
def _subfield_basis(n: int, p: int) -> Tuple:
    """Powers of zeta_(n/p) written as exponent vectors in zeta_n."""
    size = len(_cyclotomic_modulus(n)) - 1
    width = len(_cyclotomic_modulus(n // p)) - 1
    return tuple(tuple(_exponent_vector(_reduce([QQ(1)] + [QQ(0)] * (j * p), n), size))
                 for j in range(width))


def _descend(coeffs: Tuple, n: int, p: int):
    """The same number as a polynomial in zeta_(n/p), or None when it is not in that subfield."""
    m = n // p
    degree = len(coeffs) - 1
    if m % p == 0:
        # Phi_n(x) = Phi_m(x**p): residues of exponents mod p never mix
        if any(c and (degree - position) % p for position, c in enumerate(coeffs)):
            return None
        return tuple(dup_strip(list(coeffs[::-1][::p])[::-1]))
    if p == 2 or m <= 2:
        return None
    if _power_map(coeffs, n, _galois_exponent(n, p)) != coeffs:
        return None
    basis = _subfield_basis(n, p)
    width, size = len(basis), len(basis[0])
    target = _exponent_vector(coeffs, size)
    rows = [[column[e] for column in basis] + [target[e]] for e in range(size)]
    reduced, pivots = DomainMatrix(rows, (size, width + 1), QQ).rref()
    if width in pivots:
        return None
    entries = reduced.to_Matrix()
    solution = [QQ.from_sympy(entries[j, width]) for j in range(width)]
    return tuple(dup_strip(solution[::-1]))


_prime_factors = lru_cache(maxsize=None)(primefactors)


def _canonical(coeffs: Tuple, n: int) -> Tuple[Tuple, int]:
    """Moves a cyclotomic number down to the smallest QQ(zeta_c) containing it."""
    while len(coeffs) > 1:
        if n % 4 == 2:
            coeffs, n = _halve(coeffs, n), n // 2
            continue
        for p in _prime_factors(n):
            smaller = _descend(coeffs, n, p)
            if smaller is not None:
                coeffs, n = smaller, n // p
                break
        else:
            break
    return coeffs, n


def _format_rational(value) -> str:
    p, q = int(value.numerator), int(value.denominator)
    return f"{p}" if q == 1 else f"{p}/{q}"


class Scalar:
    """
    Exact coefficient in one of three fields: QQ, a cyclotomic field QQ(zeta_N)
    or the rational function field QQ(v) with q = v**2.

    Values that happen to be rational are always stored in rational mode and
    cyclotomic values at the smallest order whose field contains them, so
    comparing scalars built along different routes is a canonical-form comparison.
    """

    __slots__ = ("mode", "order", "_value")

    def __init__(self, mode: str, value, order: int = 1):
        self.mode = mode
        self.order = order
        self._value = value

    # ------------------------------------------------------------------ construction

    @classmethod
    def _make(cls, mode: str, value, order: int = 1) -> "Scalar":
        if mode == CYCLOTOMIC:
            value, order = _canonical(tuple(value), order)
            if len(value) <= 1:
                return cls(RATIONAL, value[0] if value else QQ(0))
            return cls(CYCLOTOMIC, value, order)
        if mode == RATIONAL_FUNCTION:
            if value.numer.is_ground and value.denom.is_ground:
                return cls(RATIONAL, value.numer.LC / value.denom.LC)
            return cls(RATIONAL_FUNCTION, value)
        return cls(RATIONAL, value)

    @classmethod
    def rational(cls, numerator: int, denominator: int = 1) -> "Scalar":
        if denominator == 0:
            raise ZeroDivisionError("rational scalar with zero denominator")
        return cls(RATIONAL, QQ(numerator, denominator))

    @classmethod
    def zero(cls) -> "Scalar":
        return cls(RATIONAL, QQ(0))

    @classmethod
    def one(cls) -> "Scalar":
        return cls(RATIONAL, QQ(1))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Scalar":
        """The root of unity zeta_n**k, stored at the smallest possible order."""
        if n <= 0:
            raise ValueError(f"root of unity order must be positive, got {n}")
        k %= n
        common = gcd(k, n)
        n, k = n // common, k // common
        if n == 1:
            return cls.one()
        if n == 2:
            return cls.rational(-1)
        coeffs = [QQ(1)] + [QQ(0)] * k
        return cls._make(CYCLOTOMIC, _reduce(coeffs, n), n)

    @classmethod
    def v(cls) -> "Scalar":
        return cls(RATIONAL_FUNCTION, _V)

    @classmethod
    def q(cls) -> "Scalar":
        """The generic parameter q = v**2."""
        return cls(RATIONAL_FUNCTION, _V ** 2)

    @classmethod
    def coerce(cls, value: Union["Scalar", int, Fraction, str]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return cls(RATIONAL, QQ(value))
        if isinstance(value, Fraction):
            return cls.rational(value.numerator, value.denominator)
        if isinstance(value, Rational):
            return cls.rational(int(value.p), int(value.q))
        if isinstance(value, str):
            return cls.from_string(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @classmethod
    def from_string(cls, text: str) -> "Scalar":
        """Parses the serialized forms "a/b", "poly(zeta_N)" and "num(v)/den(v)"."""
        text = text.strip()
        orders = {int(n) for n in _ZETA_PATTERN.findall(text)}
        try:
            if orders:
                if len(orders) > 1:
                    raise ValueError(f"mixed cyclotomic orders in {text!r}")
                n = orders.pop()
                symbol = Symbol(f"zeta_{n}")
                expr = sympify(text, locals={f"zeta_{n}": symbol})
                poly = Poly(expr, symbol, domain=QQ)
                coeffs = [QQ.from_sympy(c) for c in poly.all_coeffs()]
                return cls._make(CYCLOTOMIC, _reduce(coeffs, n), n)
            expr = sympify(text, locals={"v": V_SYMBOL, "q": V_SYMBOL ** 2})
            if expr.free_symbols:
                return cls._make(RATIONAL_FUNCTION, RATIONAL_FUNCTIONS.from_expr(expr))
            value = Rational(expr)
            return cls.rational(int(value.p), int(value.q))
        except (TypeError, ValueError, SyntaxError) as e:
            logger.error(f"Error parsing scalar {text!r}: {str(e)}")
            raise ValueError(f"invalid scalar literal {text!r}") from e

    # ------------------------------------------------------------------ coercion

    @staticmethod
    def _common(a: "Scalar", b: "Scalar"):
        """Brings two scalars to a common field; returns (mode, order, value_a, value_b)."""
        if a.mode == b.mode == RATIONAL:
            return RATIONAL, 1, a._value, b._value
        if RATIONAL_FUNCTION in (a.mode, b.mode):
            if CYCLOTOMIC in (a.mode, b.mode):
                raise ScalarModeError("cyclotomic and rational-function scalars cannot be mixed")
            return RATIONAL_FUNCTION, 1, a._as_function(), b._as_function()
        order = _lcm(a.order, b.order)
        return CYCLOTOMIC, order, a._as_cyclotomic(order), b._as_cyclotomic(order)

    def _as_function(self):
        if self.mode == RATIONAL_FUNCTION:
            return self._value
        return RATIONAL_FUNCTIONS.ground_new(self._value)

    def _as_cyclotomic(self, order: int) -> Tuple:
        if self.mode == RATIONAL:
            return (self._value,) if self._value else ()
        return _lift(self._value, self.order, order)

    # ------------------------------------------------------------------ arithmetic

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        mode, order, a, b = Scalar._common(self, other)
        if mode == CYCLOTOMIC:
            return Scalar._make(mode, tuple(dup_add(list(a), list(b), QQ)), order)
        return Scalar._make(mode, a + b, order)

    __radd__ = __add__

    def __neg__(self):
        if self.mode == CYCLOTOMIC:
            return Scalar(CYCLOTOMIC, tuple(dup_neg(list(self._value), QQ)), self.order)
        return Scalar(self.mode, -self._value, self.order)

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        mode, order, a, b = Scalar._common(self, other)
        if mode == CYCLOTOMIC:
            return Scalar._make(mode, tuple(dup_sub(list(a), list(b), QQ)), order)
        return Scalar._make(mode, a - b, order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        mode, order, a, b = Scalar._common(self, other)
        if mode == CYCLOTOMIC:
            return Scalar._make(mode, _reduce(dup_mul(list(a), list(b), QQ), order), order)
        return Scalar._make(mode, a * b, order)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        if self.mode == RATIONAL:
            return Scalar(RATIONAL, QQ(1) / self._value)
        if self.mode == CYCLOTOMIC:
            inv = dup_invert(list(self._value), list(_cyclotomic_modulus(self.order)), QQ)
            return Scalar._make(CYCLOTOMIC, tuple(inv), self.order)
        return Scalar._make(RATIONAL_FUNCTION, RATIONAL_FUNCTIONS.one / self._value)

    def __truediv__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Scalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------ predicates

    def is_zero(self) -> bool:
        return not self._value

    def is_one(self) -> bool:
        return self.mode == RATIONAL and self._value == QQ(1)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        try:
            mode, _, a, b = Scalar._common(self, other)
        except ScalarModeError:
            return False
        if mode == RATIONAL_FUNCTION:
            return not (a - b)
        return a == b

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self.mode == RATIONAL:
            return hash((RATIONAL, int(self._value.numerator), int(self._value.denominator)))
        if self.mode == RATIONAL_FUNCTION:
            return hash(self._value)
        return hash((CYCLOTOMIC, self.order, self._value))

    def is_rational(self) -> bool:
        return self.mode == RATIONAL

    def as_fraction(self) -> Fraction:
        if self.mode != RATIONAL:
            raise PreconditionError(f"{self} is not rational")
        return Fraction(int(self._value.numerator), int(self._value.denominator))

    # ------------------------------------------------------------------ roots of unity

    def multiplicative_order(self):
        """Order of the scalar as a root of unity, or math.inf when it is none."""
        if self.mode == RATIONAL:
            if self._value == QQ(1):
                return 1
            if self._value == QQ(-1):
                return 2
            return inf
        if self.mode == RATIONAL_FUNCTION:
            return inf
        # roots of unity in QQ(zeta_N) have order dividing lcm(N, 2)
        bound = _lcm(self.order, 2)
        power = self
        for k in range(1, bound + 1):
            if power.is_one():
                return k
            power = power * self
        return inf

    def sqrt(self) -> "Scalar":
        """Exact square root for rational squares, roots of unity and monomials in v."""
        if self.mode == RATIONAL:
            value = self.as_fraction()
            if value == 0:
                return Scalar.zero()
            unit = Scalar.one() if value > 0 else Scalar.zeta(4)
            p, q = abs(value.numerator), value.denominator
            rp, rq = isqrt(p), isqrt(q)
            if rp * rp == p and rq * rq == q:
                return unit * Scalar.rational(rp, rq)
            raise PreconditionError(f"{self} has no rational square root")
        if self.mode == CYCLOTOMIC:
            order = _lcm(self.order, 2)
            for e in range(order):
                if self == Scalar.zeta(order, e):
                    return Scalar.zeta(2 * order, e)
            raise PreconditionError(f"{self} is not a root of unity")
        numer, denom = self._value.numer, self._value.denom
        if len(numer.terms()) == 1 and len(denom.terms()) == 1:
            (a,), c = numer.terms()[0]
            (b,), d = denom.terms()[0]
            if (a - b) % 2 == 0:
                coefficient = Scalar(RATIONAL, c / d)
                if coefficient.as_fraction() > 0:
                    return coefficient.sqrt() * Scalar.v() ** ((a - b) // 2)
        raise PreconditionError(f"{self} has no square root in QQ(v)")

    # ------------------------------------------------------------------ serialization

    def to_string(self) -> str:
        if self.mode == RATIONAL:
            return _format_rational(self._value)
        if self.mode == RATIONAL_FUNCTION:
            numer = str(self._value.numer.as_expr())
            if self._value.denom == RATIONAL_FUNCTIONS.ring.one:
                return numer
            return f"({numer})/({self._value.denom.as_expr()})"
        symbol = f"zeta_{self.order}"
        degree = len(self._value) - 1
        parts = []
        for position, c in enumerate(self._value):
            if not c:
                continue
            k = degree - position
            monomial = "" if k == 0 else (symbol if k == 1 else f"{symbol}**{k}")
            negative = c < 0
            magnitude = -c if negative else c
            if not monomial:
                body = _format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{_format_rational(magnitude)}*{monomial}"
            parts.append((negative, body))
        text = ("-" if parts[0][0] else "") + parts[0][1]
        for negative, body in parts[1:]:
            text += (" - " if negative else " + ") + body
        return text

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Scalar({self.to_string()!r})"


ZERO = Scalar.zero()
ONE = Scalar.one()
