"""Dense univariate polynomials in ``q`` with exact integer coefficients.

A polynomial is stored as a tuple of Python ints indexed by exponent,
``coeffs[e]`` being the coefficient of ``q**e``.  Trailing zeros are always
stripped, so the zero polynomial is the empty tuple.  Values are immutable
and hashable, which lets them sit in memo tables.
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import NonzeroRemainder

# Below this many coefficient pairs schoolbook convolution beats packing.
_KRONECKER_CUTOFF = 2000


def _strip(seq: Sequence[int]) -> tuple[int, ...]:
    n = len(seq)
    while n and not seq[n - 1]:
        n -= 1
    return tuple(seq[:n])


class QPoly:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip([int(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "QPoly":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "QPoly":
        return _ONE

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        if not coeff:
            return _ZERO
        return cls._raw((0,) * exponent + (int(coeff),))

    @classmethod
    def geometric(cls, length: int) -> "QPoly":
        """``1 + q + ... + q**(length-1)``; zero when ``length <= 0``."""
        if length <= 0:
            return _ZERO
        return cls._raw((1,) * length)

    @classmethod
    def one_minus_q_power(cls, e: int) -> "QPoly":
        """``1 - q**e`` for ``e >= 0`` (zero when ``e == 0``)."""
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        if e == 0:
            return _ZERO
        return cls._raw((1,) + (0,) * (e - 1) + (-1,))

    @classmethod
    def from_terms(cls, terms: dict[int, int] | Iterable[tuple[int, int]]) -> "QPoly":
        """Build from ``{exponent: coeff}`` pairs; repeated exponents add up."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return _ZERO
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return cls(out)

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, e: int) -> int:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def degree(self) -> int:
        """Greatest exponent; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Least exponent with a nonzero coefficient; ``-1`` for zero."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "QPoly":
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            if not other:
                return _ZERO
            return QPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly._raw(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = _ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, alpha: int) -> "QPoly":
        """Multiply by ``q**alpha`` (``alpha >= 0``)."""
        if alpha < 0:
            raise ValueError(f"negative shift {alpha}")
        if not self.coeffs or not alpha:
            return self
        return QPoly._raw((0,) * alpha + self.coeffs)

    def unshift(self, alpha: int) -> "QPoly":
        """Divide by ``q**alpha``; the low coefficients must vanish."""
        if alpha < 0:
            raise ValueError(f"negative shift {alpha}")
        if any(self.coeffs[:alpha]):
            raise NonzeroRemainder(f"not divisible by q^{alpha}")
        return QPoly._raw(self.coeffs[alpha:])

    def times_bracket(self, m: int) -> "QPoly":
        """Multiply by ``[m]_q = 1 + q + ... + q**(m-1)`` in linear time."""
        if m <= 0:
            return _ZERO
        a = self.coeffs
        if not a:
            return self
        out = []
        run = 0
        for e in range(len(a) + m - 1):
            if e < len(a):
                run += a[e]
            if e >= m:
                run -= a[e - m]
            out.append(run)
        return QPoly._raw(_strip(out))

    def exact_div(self, d: "QPoly") -> "QPoly":
        return exact_div(self, d)

    def scale_div(self, c: int) -> "QPoly":
        """Divide every coefficient by the integer ``c`` exactly."""
        if c == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for x in self.coeffs:
            qt, r = divmod(x, c)
            if r:
                raise NonzeroRemainder(f"coefficient {x} not divisible by {c}")
            out.append(qt)
        return QPoly._raw(tuple(out))

    # -- formatting ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


_ZERO = QPoly._raw(())
_ONE = QPoly._raw((1,))


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if len(a) * len(b) <= _KRONECKER_CUTOFF or min(len(a), len(b)) < 8:
        return _schoolbook(a, b)
    return _kronecker_signed(a, b)


def _schoolbook(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return _strip(out)


def _split_signs(a):
    pos = [c if c > 0 else 0 for c in a]
    neg = [-c if c < 0 else 0 for c in a]
    return pos, neg


def _kronecker_signed(a, b):
    ap, an = _split_signs(a)
    bp, bn = _split_signs(b)
    size = len(a) + len(b) - 1
    out = [0] * size
    for x, y, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if not any(x) or not any(y):
            continue
        prod = _kronecker_unsigned(x, y)
        for i, c in enumerate(prod):
            out[i] += sign * c
    return _strip(out)


def _kronecker_unsigned(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Multiply nonnegative coefficient lists by packing them into big ints."""
    bound = max(a) * max(b) * min(len(a), len(b))
    nbytes = (bound.bit_length() + 8) // 8
    pa = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in a), "little")
    pb = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in b), "little")
    size = len(a) + len(b) - 1
    raw = (pa * pb).to_bytes(size * nbytes, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") for i in range(size)]


# -- module-level operations --------------------------------------------------


def add(p: QPoly, r: QPoly) -> QPoly:
    return p + r


def mul(p: QPoly, r: QPoly) -> QPoly:
    return p * r


def shift(p: QPoly, alpha: int) -> QPoly:
    return p.shift(alpha)


def eval_at_one(p: QPoly) -> int:
    """Sum of coefficients, i.e. the value of ``p`` as ``q -> 1``."""
    return p.eval_at_one()


def exact_div(p: QPoly, d: QPoly) -> QPoly:
    """Polynomial long division that insists on a zero remainder.

    Works from the top degree down and only touches the nonzero terms of
    ``d``, so dividing by sparse factors such as ``1 - q**e`` is linear.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return _ZERO
    dd = d.degree
    lead = d.coeffs[dd]
    if p.degree < dd:
        raise NonzeroRemainder(f"degree {p.degree} < divisor degree {dd}")
    terms = [(e, c) for e, c in enumerate(d.coeffs[:dd]) if c]
    rem = list(p.coeffs)
    quot = [0] * (p.degree - dd + 1)
    for i in range(p.degree - dd, -1, -1):
        top = rem[i + dd]
        if not top:
            continue
        qc, r = divmod(top, lead)
        if r:
            raise NonzeroRemainder(f"leading coefficient {top} not divisible by {lead}")
        quot[i] = qc
        rem[i + dd] = 0
        for e, c in terms:
            rem[i + e] -= qc * c
    if any(rem[:dd]):
        raise NonzeroRemainder("nonzero remainder")
    return QPoly(quot)


def exact_div_all(p: QPoly, divisors: Iterable[QPoly]) -> QPoly:
    """Divide by each factor in turn; equivalent to dividing by the product."""
    for d in divisors:
        p = exact_div(p, d)
    return p


def one_minus_q_power(e: int) -> QPoly:
    return QPoly.one_minus_q_power(e)


# -- text and JSON ------------------------------------------------------------


def format_poly(p: QPoly, var: str = "q") -> str:
    """Ascending-exponent text form, e.g. ``1 + q + 2q^2 + q^3 + q^4``."""
    if not p:
        return "0"
    parts = []
    for e, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def to_json_list(p: QPoly) -> list[str]:
    """Coefficients as decimal strings so big values survive any JSON reader."""
    return [str(c) for c in p.coeffs]


def from_json_list(items: Sequence) -> QPoly:
    return QPoly(int(x) for x in items)


def dumps(p: QPoly) -> str:
    return json.dumps(to_json_list(p))


def loads(text: str) -> QPoly:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of coefficient strings")
    return from_json_list(data)
