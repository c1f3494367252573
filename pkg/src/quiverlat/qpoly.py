"""Exact arithmetic in Z[q, q^-1] and its fraction field.

``QPoly`` is a Laurent polynomial with arbitrary-precision integer
coefficients, ``QRat`` a reduced quotient of two of them.  Nothing here
touches floating point.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class QPoly:
    """Laurent polynomial ``sum(coeffs[i] * q**(low + i))``.

    Zero coefficients at either end are trimmed on construction, so two
    equal polynomials always have identical ``(low, coeffs)``.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0) -> None:
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        self.coeffs: tuple[int, ...] = tuple(cs[start:end])
        self.low: int = low + start if self.coeffs else 0

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> QPoly:
        return cls((coeff,), exp)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> QPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    def to_dict(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_polynomial(self) -> bool:
        return self.low >= 0 or self.is_zero()

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return QPoly(self.coeffs, self.low + k)

    def subs_q_power(self, k: int) -> QPoly:
        """Substitute ``q -> q**k`` for a positive integer ``k``."""
        return QPoly.from_dict({e * k: c for e, c in self.to_dict().items()})

    def __call__(self, value):
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.low >= 0:
            return acc * value**self.low
        return acc / value ** (-self.low)

    def at_one(self) -> int:
        return sum(self.coeffs)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return QPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs], self.low)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power of a QPoly")
        result = QPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, divisor: QPoly) -> tuple[QPoly, QPoly]:
        """Long division over Z treating both sides as polynomials.

        The divisor must have leading coefficient +-1 or divide every step
        exactly; otherwise ``ValueError`` is raised.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero QPoly")
        num = list(self.coeffs)
        den = divisor.coeffs
        lead = den[-1]
        if len(num) < len(den):
            return QPoly(), self
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = num[k + len(den) - 1]
            if top % lead:
                raise ValueError("inexact integer division in QPoly long division")
            c = top // lead
            quot[k] = c
            if c:
                for j, d in enumerate(den):
                    num[k + j] -= c * d
        rem = QPoly(num[: len(den) - 1], self.low)
        return QPoly(quot, self.low - divisor.low), rem

    def exact_div(self, divisor: QPoly) -> QPoly:
        q, r = self.divmod_exact(divisor)
        if not r.is_zero():
            raise ArithmeticError("nonzero remainder in exact QPoly division")
        return q

    def div_q_minus_one(self) -> QPoly:
        """Synthetic division by ``(q - 1)``; the value at 1 must vanish."""
        if self.at_one() != 0:
            raise ArithmeticError("polynomial does not vanish at q=1")
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc += c
            out.append(acc)
        # out holds the quotient coefficients from the top down, plus a
        # trailing zero remainder.
        out.pop()
        return QPoly(list(reversed(out)), self.low)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r}, low={self.low})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.to_dict().items()):
            if e == 0:
                mono = f"{c}"
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    return NotImplemented


ONE = QPoly((1,))
ZERO = QPoly()


# ---------------------------------------------------------------------------
# gcd over Z[q]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        top = a[-1]
        a = [c * lead for c in a]
        for j, d in enumerate(b):
            a[shift + j] -= top * d
        while a and a[-1] == 0:
            a.pop()
    return a


def _primitive(cs: list[int]) -> list[int]:
    g = 0
    for c in cs:
        g = gcd(g, c)
    if g == 0:
        return cs
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Primitive gcd of two polynomials in Z[q] with positive leading term.

    Both inputs must be honest polynomials (``low >= 0``).  Uses the
    primitive pseudo-remainder sequence.
    """
    if a.is_zero():
        return _normalize_sign(QPoly(_primitive(list(b.coeffs)), b.low))
    if b.is_zero():
        return _normalize_sign(QPoly(_primitive(list(a.coeffs)), a.low))
    low = min(a.low, b.low)
    x = _primitive(list(a.coeffs))
    y = _primitive(list(b.coeffs))
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _pseudo_rem(x, y)
        x, y = y, (_primitive(r) if r else [])
    g = _primitive(x)
    return QPoly(g, low)


def _normalize_sign(p: QPoly) -> QPoly:
    return -p if p.leading() < 0 else p


class QRat:
    """Reduced quotient ``num / den`` of Laurent polynomials.

    Canonical form: ``den`` is a polynomial with nonzero constant term and
    positive leading coefficient, every power of ``q`` lives in ``num``, and
    ``gcd(num, den) == 1`` up to units.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly | int, den: QPoly | int = 1, *, _reduced: bool = False):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num: QPoly = num
        self.den: QPoly = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def __add__(self, other):
        other = _qrat(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _qrat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = _qrat(other)
        if other is NotImplemented:
            return other
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _qrat(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero QRat")
        return QRat(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        other = _qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"QRat({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _qrat(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, (int, QPoly)):
        return QRat(x)
    return NotImplemented


def _reduce(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if num.is_zero():
        return ZERO, ONE
    # move all monomial factors of q into the numerator
    shift = num.low - den.low
    n = QPoly(num.coeffs, 0)
    d = QPoly(den.coeffs, 0)
    g = poly_gcd(n, d)
    if g.high > 0:
        n = _divide_by(n, g)
        d = _divide_by(d, g)
    cn, cd = n.content(), d.content()
    c = gcd(cn, cd)
    if c > 1:
        n = QPoly([x // c for x in n.coeffs], n.low)
        d = QPoly([x // c for x in d.coeffs], d.low)
    if d.leading() < 0:
        n, d = -n, -d
    return n.shift(shift), d


def _divide_by(p: QPoly, g: QPoly) -> QPoly:
    # g is primitive, so by Gauss's lemma the quotient has integer coefficients
    return p.exact_div(g)


# ---------------------------------------------------------------------------
# q-Pochhammer and Gaussian multinomials in the base q^2


@lru_cache(maxsize=None)
def poch_q2(d: int) -> QPoly:
    """``(q^2; q^2)_d = prod_{i=1..d} (1 - q^{2i})``."""
    if d < 0:
        raise ValueError("Pochhammer index must be nonnegative")
    result = ONE
    for i in range(1, d + 1):
        result = result * QPoly.from_dict({0: 1, 2 * i: -1})
    return result


@lru_cache(maxsize=None)
def _gauss_sorted(l: int, parts: tuple[int, ...]) -> QPoly:
    den = ONE
    for d in parts:
        den = den * poch_q2(d)
    q, r = poch_q2(l).divmod_exact(den)
    if not r.is_zero():
        raise ArithmeticError(f"Gaussian multinomial {l}; {parts} left a remainder")
    return q


def gauss_multinomial(l: int, d: Sequence[int]) -> QPoly:
    """``(q^2;q^2)_l / prod_i (q^2;q^2)_{d_i}`` for a composition ``d`` of ``l``."""
    if any(x < 0 for x in d):
        raise ValueError("composition parts must be nonnegative")
    if sum(d) != l:
        raise ValueError(f"composition {tuple(d)} does not sum to {l}")
    parts = tuple(sorted(x for x in d if x))
    return _gauss_sorted(l, parts)


def q2_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial ``[n choose k]`` in base ``q^2``."""
    return gauss_multinomial(n, (k, n - k))
