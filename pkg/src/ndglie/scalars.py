"""Exact arithmetic in the field tower K = Q(i, sqrt2, sqrt3).

Elements are stored as two real quadruples over the Q-basis
(1, sqrt2, sqrt3, sqrt6): a real part and an imaginary part.  The public
coordinate order is the interleaved one used by the text literal format::

    1, i, sqrt2, i*sqrt2, sqrt3, i*sqrt3, sqrt6, i*sqrt6

Plain ``Fraction`` and ``int`` values mix freely with ``FieldElement``; most of
the package works over Q and only the Nijenhuis normal forms need the tower.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Tuple, Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "FieldElement"]

_ZERO4 = (Fraction(0),) * 4
MAX_SIGN_ROUNDS = 64


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


def _real_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (
        a * e + 2 * b * f + 3 * c * g + 6 * d * h,
        a * f + b * e + 3 * (c * h + d * g),
        a * g + c * e + 2 * (b * h + d * f),
        a * h + d * e + b * g + c * f,
    )


def _add4(x, y):
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])


def _sub4(x, y):
    return (x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3])


class FieldElement:
    __slots__ = ("re", "im")

    def __init__(self, re=_ZERO4, im=_ZERO4):
        self.re = tuple(Fraction(v) for v in re)
        self.im = tuple(Fraction(v) for v in im)
        if len(self.re) != 4 or len(self.im) != 4:
            raise ValueError("real and imaginary parts need four coordinates")

    @classmethod
    def from_coords(cls, coords: Iterable[Rational]) -> "FieldElement":
        c = [Fraction(v) for v in coords]
        if len(c) != 8:
            raise ValueError("a field element has exactly 8 coordinates")
        return cls(c[0::2], c[1::2])

    @classmethod
    def coerce(cls, x: Scalar) -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, (int, Fraction)):
            return cls((Fraction(x), 0, 0, 0))
        raise TypeError(f"cannot coerce {type(x).__name__} into K")

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        out = []
        for r, i in zip(self.re, self.im):
            out.extend((r, i))
        return tuple(out)

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.re) and not any(self.im)

    def is_real(self) -> bool:
        return not any(self.im)

    def is_rational(self) -> bool:
        return self.is_real() and not any(self.re[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # parts ------------------------------------------------------------
    def real(self) -> "FieldElement":
        return FieldElement(self.re, _ZERO4)

    def imag(self) -> "FieldElement":
        return FieldElement(self.im, _ZERO4)

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.re, tuple(-v for v in self.im))

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElement(_add4(self.re, o.re), _add4(self.im, o.im))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(tuple(-v for v in self.re), tuple(-v for v in self.im))

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElement(_sub4(self.re, o.re), _sub4(self.im, o.im))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(
                tuple(v * other for v in self.re), tuple(v * other for v in self.im)
            )
        if not isinstance(other, FieldElement):
            return NotImplemented
        rr = _real_mul(self.re, other.re)
        ii = _real_mul(self.im, other.im)
        ri = _real_mul(self.re, other.im)
        ir = _real_mul(self.im, other.re)
        return FieldElement(_sub4(rr, ii), _add4(ri, ir))

    __rmul__ = __mul__

    def invert(self) -> "FieldElement":
        return invert(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in K")
            return self * (1 / Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * invert(self)

    def __pow__(self, n: int):
        if n < 0:
            return invert(self) ** (-n)
        out = FieldElement.coerce(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.re[0] == other
        if isinstance(other, FieldElement):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.re[0])
        return hash((self.re, self.im))

    def __repr__(self):
        return f"FieldElement({format_literal(self)!r})"

    def __str__(self):
        names = ("", "i", "√2", "i√2", "√3", "i√3", "√6", "i√6")
        parts = []
        for c, n in zip(self.coords, names):
            if c == 0:
                continue
            if n == "":
                parts.append(str(c))
            elif c == 1:
                parts.append(n)
            elif c == -1:
                parts.append("-" + n)
            else:
                parts.append(f"({c}){n}")
        return " + ".join(parts) if parts else "0"


I = FieldElement((0, 0, 0, 0), (1, 0, 0, 0))
SQRT2 = FieldElement((0, 1, 0, 0))
SQRT3 = FieldElement((0, 0, 1, 0))
SQRT6 = FieldElement((0, 0, 0, 1))


def _mult_matrix(x: FieldElement):
    """8x8 rational matrix of y -> x*y in the public coordinate order."""
    cols = []
    for j in range(8):
        e = [0] * 8
        e[j] = 1
        cols.append((x * FieldElement.from_coords(e)).coords)
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def invert(x: Scalar) -> Scalar:
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise ZeroDivisionError("division by zero in K")
        return 1 / Fraction(x)
    if x.is_zero():
        raise ZeroDivisionError("division by zero in K")
    if x.is_rational():
        return FieldElement((1 / x.re[0], 0, 0, 0))
    # Gauss-Jordan on [M | e1]; M is invertible because K is a field.
    m = _mult_matrix(x)
    aug = [row + [Fraction(int(i == 0))] for i, row in enumerate(m)]
    n = 8
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return FieldElement.from_coords(row[n] for row in aug)


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def neg(x: Scalar) -> Scalar:
    return -x


def is_real(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction)) or x.is_real()


def is_zero(x: Scalar) -> bool:
    return x == 0


def simplify(x: Scalar) -> Scalar:
    """Collapse rational field elements (and ints) to ``Fraction``."""
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, FieldElement) and x.is_rational():
        return x.re[0]
    return x


def real_part(x: Scalar) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return x
    return simplify(x.real())


def imag_part(x: Scalar) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return Fraction(0)
    return simplify(x.imag())


def conjugate(x: Scalar) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return x
    return x.conjugate()


def bit_size(x: Scalar) -> int:
    """Total bit length of numerators and denominators; used for pivoting."""
    if isinstance(x, int):
        return x.bit_length()
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    return sum(c.numerator.bit_length() + c.denominator.bit_length() for c in x.coords)


def _sqrt_enclosure(n: int, bits: int) -> Tuple[Fraction, Fraction]:
    lo = isqrt(n << (2 * bits))
    den = 1 << bits
    return Fraction(lo, den), Fraction(lo + 1, den)


def sign(x: Scalar) -> int:
    """Exact sign of a real element of K."""
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    if not x.is_real():
        raise DomainError("sign is only defined for real elements")
    if x.is_zero():
        return 0
    a, b, c, d = x.re
    if not (b or c or d):
        return (a > 0) - (a < 0)
    for k in range(MAX_SIGN_ROUNDS):
        bits = 32 << k
        lo, hi = a, a
        for coeff, n in ((b, 2), (c, 3), (d, 6)):
            if coeff == 0:
                continue
            s_lo, s_hi = _sqrt_enclosure(n, bits)
            if coeff > 0:
                lo, hi = lo + coeff * s_lo, hi + coeff * s_hi
            else:
                lo, hi = lo + coeff * s_hi, hi + coeff * s_lo
        if lo > 0:
            return 1
        if hi < 0:
            return -1
    raise ArithmeticError("sign undecided after the refinement cap")


# cos(k*pi/12) for k = 0..6
_COS_QUADRANT = (
    FieldElement((1, 0, 0, 0)),
    FieldElement((0, Fraction(1, 4), 0, Fraction(1, 4))),
    FieldElement((0, 0, Fraction(1, 2), 0)),
    FieldElement((0, Fraction(1, 2), 0, 0)),
    FieldElement((Fraction(1, 2), 0, 0, 0)),
    FieldElement((0, Fraction(-1, 4), 0, Fraction(1, 4))),
    FieldElement(),
)


def _cos12(k: int) -> FieldElement:
    k %= 24
    if k <= 6:
        return _COS_QUADRANT[k]
    if k <= 12:
        return -_COS_QUADRANT[12 - k]
    if k <= 18:
        return -_COS_QUADRANT[k - 12]
    return _COS_QUADRANT[24 - k]


def from_angle(k: int) -> Tuple[Scalar, Scalar]:
    """(cos, sin) of the angle k*pi/12, exactly."""
    return simplify(_cos12(k)), simplify(_cos12(6 - k))


def exp_i(k: int) -> FieldElement:
    """e^{i k pi/12} as an element of K."""
    c, s = from_angle(k)
    return FieldElement.coerce(c) + I * s


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_literal(x: Scalar) -> str:
    fe = FieldElement.coerce(x)
    return " ".join(_format_rational(c) for c in fe.coords)


def parse_literal(text: str) -> Scalar:
    """Parse eight whitespace-separated rationals; rational values come back as Fraction."""
    tokens = text.split()
    if len(tokens) != 8:
        raise ValueError(f"scalar literal needs 8 rationals, got {len(tokens)}")
    return simplify(FieldElement.from_coords(Fraction(t) for t in tokens))
