"""
Exact scalars and small dense matrices.

Scalars come in four kinds, always kept in their simplest form:

* ``int`` / ``Fraction`` -- rationals,
* ``QReal``   -- a + b*sqrt(p) with b != 0 and p > 1 square-free,
* ``QComplex`` -- x + i*y with x, y real scalars and y != 0.

Every operation normalizes its result (a QReal with zero radical part
comes back as a rational, a QComplex with zero imaginary part comes back
as a real), so mixed arithmetic between kinds just works through the
usual operators.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import isqrt

__all__ = [
    "Fraction", "QReal", "QComplex", "Mat", "ArithmeticDomainError",
    "rat", "norm", "div", "conj", "re", "im", "qreal_sign", "is_rational",
    "is_integer", "sqrt_p", "parse_rat", "format_rat",
]


class ArithmeticDomainError(ValueError):
    """Division by zero, singular matrices, or mixing incompatible radicands."""


def rat(x):
    """Return x as an int when it is an integral rational."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def norm(x):
    if type(x) is int:
        return x
    if type(x) is Fraction:
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, QReal):
        return rat(x.a) if x.b == 0 else x
    if isinstance(x, QComplex):
        return norm(x.re) if x.im == 0 else x
    if isinstance(x, bool):
        return int(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def is_rational(x) -> bool:
    return type(x) is int or type(x) is Fraction


def is_integer(x) -> bool:
    return type(x) is int or (type(x) is Fraction and x.denominator == 1)


def div(x, y):
    """Exact quotient; never produces a float."""
    if y == 0:
        raise ArithmeticDomainError("division by zero")
    if is_rational(x) and is_rational(y):
        return rat(Fraction(x) / y)
    return norm(x / y)


def conj(x):
    return x.conjugate() if isinstance(x, QComplex) else x


def re(x):
    return x.re if isinstance(x, QComplex) else x


def im(x):
    return x.im if isinstance(x, QComplex) else 0


@lru_cache(maxsize=None)
def _squarefree(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % (q * q) == 0:
            return False
        q += 1
    return True


def parse_rat(s):
    if isinstance(s, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        return rat(Fraction(s.strip()))
    raise ValueError(f"cannot read rational from {s!r}")


def format_rat(x) -> str:
    x = rat(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- QReal --

class QReal:
    """a + b*sqrt(p) in the real quadratic field Q(sqrt p)."""

    __slots__ = ("a", "b", "p")

    def __init__(self, a=0, b=0, p: int = 1):
        a, b = rat(Fraction(a)), rat(Fraction(b))
        if p == 1:
            if b != 0:
                raise ArithmeticDomainError("p = 1 is the degenerate case; the radical part must be 0")
        elif not _squarefree(p):
            raise ArithmeticDomainError(f"radicand {p} is not square-free")
        self.a, self.b, self.p = a, b, p

    @classmethod
    def _raw(cls, a, b, p):
        x = object.__new__(cls)
        x.a, x.b, x.p = a, b, p
        return x

    @staticmethod
    def _make(a, b, p):
        a = rat(a)
        if b == 0:
            return a
        return QReal._raw(a, rat(b), p)

    def _split(self, other):
        if isinstance(other, QReal):
            if other.p != self.p and other.b != 0 and self.b != 0:
                raise ArithmeticDomainError(f"cannot mix sqrt({self.p}) and sqrt({other.p})")
            return other.a, other.b
        if type(other) is int or type(other) is Fraction:
            return other, 0
        return None

    def __add__(self, other):
        s = self._split(other)
        if s is None:
            return NotImplemented
        return QReal._make(self.a + s[0], self.b + s[1], self.p)

    __radd__ = __add__

    def __sub__(self, other):
        s = self._split(other)
        if s is None:
            return NotImplemented
        return QReal._make(self.a - s[0], self.b - s[1], self.p)

    def __rsub__(self, other):
        s = self._split(other)
        if s is None:
            return NotImplemented
        return QReal._make(s[0] - self.a, s[1] - self.b, self.p)

    def __neg__(self):
        return QReal._raw(-self.a, -self.b, self.p)

    def __pos__(self):
        return self

    def __mul__(self, other):
        s = self._split(other)
        if s is None:
            return NotImplemented
        c, e = s
        if e == 0:
            return QReal._make(self.a * c, self.b * c, self.p)
        return QReal._make(self.a * c + self.b * e * self.p, self.a * e + self.b * c, self.p)

    __rmul__ = __mul__

    def twist(self):
        """Galois conjugate a - b*sqrt(p)."""
        return QReal._raw(self.a, -self.b, self.p)

    def field_norm(self):
        return rat(self.a * self.a - self.b * self.b * self.p)

    def inverse(self):
        n = self.field_norm()
        return QReal._make(Fraction(self.a) / n, Fraction(-self.b) / n, self.p)

    def __truediv__(self, other):
        if other == 0:
            raise ArithmeticDomainError("division by zero")
        if isinstance(other, QReal):
            return self * other.inverse()
        if type(other) is int or type(other) is Fraction:
            return QReal._make(Fraction(self.a) / other, Fraction(self.b) / other, self.p)
        return NotImplemented

    def __rtruediv__(self, other):
        if type(other) is int or type(other) is Fraction:
            return self.inverse() * other
        return NotImplemented

    def conjugate(self):
        return self

    def __eq__(self, other):
        if isinstance(other, QReal):
            return self.a == other.a and self.b == other.b and (self.p == other.p or self.b == 0)
        if type(other) is int or type(other) is Fraction:
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.p))

    def sign(self) -> int:
        return qreal_sign(self)

    def __lt__(self, other):
        return qreal_sign(self - other) < 0

    def __le__(self, other):
        return qreal_sign(self - other) <= 0

    def __gt__(self, other):
        return qreal_sign(self - other) > 0

    def __ge__(self, other):
        return qreal_sign(self - other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.p ** 0.5

    def to_decimal(self, digits: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            a = Decimal(Fraction(self.a).numerator) / Decimal(Fraction(self.a).denominator)
            b = Decimal(Fraction(self.b).numerator) / Decimal(Fraction(self.b).denominator)
            return +(a + b * Decimal(self.p).sqrt())

    def __repr__(self):
        return f"QReal({format_rat(self.a)}, {format_rat(self.b)}, p={self.p})"

    def __str__(self):
        return f"{format_rat(self.a)}{'+' if self.b >= 0 else '-'}{format_rat(abs(self.b))}*sqrt({self.p})"


def sqrt_p(p: int):
    """sqrt(p) as an exact scalar; for p = 1 this is just 1."""
    return 1 if p == 1 else QReal(0, 1, p)


def qreal_sign(x) -> int:
    """Exact sign of a real scalar."""
    if not isinstance(x, QReal):
        if isinstance(x, QComplex):
            raise TypeError("sign of a non-real scalar")
        return (x > 0) - (x < 0)
    sa = (x.a > 0) - (x.a < 0)
    sb = (x.b > 0) - (x.b < 0)
    if sa == 0 or sa == sb:
        return sb if sa == 0 else sa
    if sb == 0:
        return sa
    # opposite signs: the dominant term wins
    lhs, rhs = x.a * x.a, x.b * x.b * x.p
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


# ------------------------------------------------------------- QComplex --

_REAL_TYPES = (int, Fraction, QReal)


class QComplex:
    """x + i*y with x, y real scalars (rationals or QReal)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        for part in (re, im):
            if not isinstance(part, _REAL_TYPES) or isinstance(part, bool):
                raise TypeError(f"complex parts must be real scalars, got {part!r}")
        self.re, self.im = norm(re), norm(im)

    @staticmethod
    def _make(x, y):
        y = norm(y)
        if y == 0:
            return norm(x)
        z = object.__new__(QComplex)
        z.re, z.im = norm(x), y
        return z

    @staticmethod
    def _parts(other):
        if isinstance(other, QComplex):
            return other.re, other.im
        if isinstance(other, _REAL_TYPES):
            return other, 0
        return None

    def __add__(self, other):
        s = self._parts(other)
        if s is None:
            return NotImplemented
        return QComplex._make(self.re + s[0], self.im + s[1])

    __radd__ = __add__

    def __sub__(self, other):
        s = self._parts(other)
        if s is None:
            return NotImplemented
        return QComplex._make(self.re - s[0], self.im - s[1])

    def __rsub__(self, other):
        s = self._parts(other)
        if s is None:
            return NotImplemented
        return QComplex._make(s[0] - self.re, s[1] - self.im)

    def __neg__(self):
        return QComplex._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        s = self._parts(other)
        if s is None:
            return NotImplemented
        c, e = s
        if e == 0:
            return QComplex._make(self.re * c, self.im * c)
        return QComplex._make(self.re * c - self.im * e, self.re * e + self.im * c)

    __rmul__ = __mul__

    def conjugate(self):
        return QComplex._make(self.re, -self.im)

    def abs2(self):
        return norm(self.re * self.re + self.im * self.im)

    def __truediv__(self, other):
        s = self._parts(other)
        if s is None:
            return NotImplemented
        if s[1] == 0:
            return QComplex._make(div(self.re, s[0]), div(self.im, s[0]))
        n = norm(s[0] * s[0] + s[1] * s[1])
        return self * QComplex._make(div(s[0], n), div(-s[1], n))

    def __rtruediv__(self, other):
        if not isinstance(other, _REAL_TYPES):
            return NotImplemented
        n = self.abs2()
        return QComplex._make(div(other * self.re, n), div(-other * self.im, n))

    def __eq__(self, other):
        s = self._parts(other)
        if s is None:
            return NotImplemented
        return self.re == s[0] and self.im == s[1]

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"QComplex({self.re!r}, {self.im!r})"


# ------------------------------------------------------------------ Mat --

class Mat:
    """Immutable dense matrix of exact scalars, 2x2 or 4x4 (or 2x4/4x2)."""

    __slots__ = ("rows", "n", "m")

    def __init__(self, rows):
        rows = tuple(tuple(norm(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix must be rectangular and nonempty")
        if len(rows) not in (2, 4) or len(rows[0]) not in (2, 4):
            raise ValueError(f"unsupported shape {len(rows)}x{len(rows[0])}")
        self.rows, self.n, self.m = rows, len(rows), len(rows[0])

    @classmethod
    def _raw(cls, rows):
        M = object.__new__(cls)
        M.rows, M.n, M.m = rows, len(rows), len(rows[0])
        return M

    @classmethod
    def identity(cls, n: int = 4):
        return cls._raw(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int | None = None):
        return cls._raw(tuple((0,) * (m or n) for _ in range(n)))

    @classmethod
    def diag(cls, *entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_blocks(cls, A, B, C, D):
        top = [ra + rb for ra, rb in zip(A.rows, B.rows)]
        bot = [rc + rd for rc, rd in zip(C.rows, D.rows)]
        return cls._raw(tuple(top + bot))

    @classmethod
    def from_columns(cls, cols):
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def blocks(self):
        """(A, B, C, D) for a 4x4 matrix ((A, B), (C, D))."""
        r = self.rows
        A = Mat._raw((r[0][:2], r[1][:2]))
        B = Mat._raw((r[0][2:], r[1][2:]))
        C = Mat._raw((r[2][:2], r[3][:2]))
        D = Mat._raw((r[2][2:], r[3][2:]))
        return A, B, C, D

    @property
    def shape(self):
        return self.n, self.m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    @property
    def T(self):
        return Mat._raw(tuple(zip(*self.rows)))

    def map(self, f):
        return Mat(tuple(tuple(f(x) for x in r) for r in self.rows))

    def conj(self):
        return self.map(conj)

    def real(self):
        return self.map(re)

    def imag(self):
        return self.map(im)

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._same_shape(other)
        return Mat._raw(tuple(tuple(norm(x + y) for x, y in zip(r, s))
                              for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._same_shape(other)
        return Mat._raw(tuple(tuple(norm(x - y) for x, y in zip(r, s))
                              for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return Mat._raw(tuple(tuple(-x for x in r) for r in self.rows))

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.m != other.n:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = tuple(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    s = 0
                    for x, y in zip(r, c):
                        if x != 0 and y != 0:
                            s = s + x * y
                    row.append(norm(s))
                out.append(tuple(row))
            return Mat._raw(tuple(out))
        if isinstance(other, (int, Fraction, QReal, QComplex)):
            return Mat._raw(tuple(tuple(norm(x * other) for x in r) for r in self.rows))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QReal, QComplex)):
            return self * other
        return NotImplemented

    def scaled_div(self, c):
        """Entrywise exact division by the scalar c."""
        return Mat._raw(tuple(tuple(div(x, c) for x in r) for r in self.rows))

    def apply(self, v):
        """Matrix times a column vector given as a sequence."""
        if len(v) != self.m:
            raise ValueError("vector length mismatch")
        out = []
        for r in self.rows:
            s = 0
            for x, y in zip(r, v):
                if x != 0 and y != 0:
                    s = s + x * y
            out.append(norm(s))
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Mat({self.tolist()!r})"

    def is_integral(self) -> bool:
        return all(type(x) is int for r in self.rows for x in r)

    def is_real(self) -> bool:
        return all(not isinstance(x, QComplex) for r in self.rows for x in r)

    def mod(self, N: int):
        if not self.is_integral():
            raise ValueError("reduction mod N needs an integral matrix")
        return Mat._raw(tuple(tuple(x % N for x in r) for r in self.rows))

    def det(self):
        if self.n != self.m:
            raise ValueError("determinant of a non-square matrix")
        return _det(self.rows)

    def inv(self):
        """Exact inverse by Gauss-Jordan elimination over the scalar field."""
        if self.n != self.m:
            raise ValueError("inverse of a non-square matrix")
        n = self.n
        if n == 2:
            (a, b), (c, e) = self.rows
            dt = norm(a * e - b * c)
            if dt == 0:
                raise ArithmeticDomainError("singular matrix")
            return Mat._raw(((div(e, dt), div(-b, dt)), (div(-c, dt), div(a, dt))))
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        for k in range(n):
            piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
            if piv is None:
                raise ArithmeticDomainError("singular matrix")
            aug[k], aug[piv] = aug[piv], aug[k]
            pk = aug[k][k]
            aug[k] = [div(x, pk) for x in aug[k]]
            for i in range(n):
                if i != k and aug[i][k] != 0:
                    f = aug[i][k]
                    aug[i] = [norm(x - f * y) for x, y in zip(aug[i], aug[k])]
        return Mat._raw(tuple(tuple(r[n:]) for r in aug))


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return norm(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return norm(total)


def isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
