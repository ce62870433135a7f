"""Gaussian rational scalars: complex numbers a + b*i with exact rational parts.

Every constant appearing in the operator realizations (1/2, 3/2, i, powers
of i, ...) lies in Q(i), so working over this field turns every algebraic
identity into an exact zero test.
"""

from __future__ import annotations

from gmpy2 import mpq

QZERO = mpq(0)
QONE = mpq(1)


class GaussianRational:
    """Exact complex scalar with rational real and imaginary parts.

    gmpy2.mpq keeps each part in lowest terms with positive denominator,
    so structural equality of (re, im) is equality of canonical forms.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        out = object.__new__(cls)
        out.re = re
        out.im = im
        return out

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        c, d = other.re, other.im
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        a, b = self.re, self.im
        return GaussianRational._raw((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return _coerce(other).__truediv__(self)

    def __pow__(self, k: int):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, mpq)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, mpq)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def i_power(k: int) -> GaussianRational:
    """i**k for any integer k."""
    return (ONE, I, -ONE, -I)[k % 4]


def parse_rational(text: str) -> mpq:
    """Parse an exact rational from CLI syntax like '3/5' or '-2'."""
    try:
        return mpq(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational: {text!r}") from exc
