"""Exact arithmetic in the rational function field Q(q).

Every coefficient in this package is an element of Q(q), the field of
univariate rational functions in a formal variable q with rational
coefficients.  No floating point is used anywhere.

A value is kept in a canonical form, so equality of values is structural
equality of their representations:

* the fraction num/den is fully reduced (polynomial gcd 1),
* num and den are primitive integer polynomials with positive leading
  coefficient, and a single rational content factor is split off,
* zero is (0, 0, 1).

The classical presentation "reduced fraction with monic denominator over Q"
is exposed through :meth:`QRat.monic_pair`; the two normal forms are in
bijection, so structural equality is unaffected by the internal layout.

The module also provides the balanced q-integers

    [n]_d = (q^(d*n) - q^(-d*n)) / (q^d - q^(-d))

together with q-factorials and q-binomials, which are Laurent polynomials
in q (a property the tests pin down).

>>> q_integer(2, 1).render()
'q + q^-1'
>>> (qpow(3) * qpow(-1)).render()
'q^2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm

from .errors import DivisionByZero

__all__ = [
    "QRat",
    "ZERO",
    "ONE",
    "Q",
    "from_int",
    "from_fraction",
    "qpow",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "parse",
]


# ---------------------------------------------------------------------------
# integer polynomials as tuples of coefficients, lowest degree first


def _pnorm(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _pnorm(out)


def _pneg(a: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in a)


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if a == (1,):
        return b
    if b == (1,):
        return a
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _pnorm(out)


def _pscale(a: tuple[int, ...], k: int) -> tuple[int, ...]:
    if k == 0:
        return ()
    if k == 1:
        return a
    return tuple(x * k for x in a)


def _pcontent(a: tuple[int, ...]) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def _pprim(a: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Return (primitive positive-leading part, signed content)."""
    if not a:
        return (), 0
    g = _pcontent(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a, 1
    return tuple(x // g for x in a), g


def _pdiv_exact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # exact division, used only when divisibility is known
    if not a:
        return ()
    if b == (1,):
        return a
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, db - 1, -1):
        if rem[i]:
            c, r = divmod(rem[i], lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _pnorm(out)


def _prem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # pseudo-remainder of a by b (lc(b)^k * a mod b, exact over Z)
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    rem = list(a)
    for i in range(da, db - 1, -1):
        head = rem[i]
        if head:
            for j in range(len(rem)):
                rem[j] *= lb
            for j in range(db + 1):
                rem[i - db + j] -= head * b[j]
        # rem[i] is now zero
    del rem[db:]
    return _pnorm(rem)


def _pgcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Gcd of integer polynomials, primitive with positive leading coeff."""
    if not a:
        return _pprim(b)[0]
    if not b:
        return _pprim(a)[0]
    a = _pprim(a)[0]
    b = _pprim(b)[0]
    # monomial fast path: only the common q-power divides
    if len(a) - a.index(next(x for x in a if x)) == 1 or a == (1,):
        pass
    while b:
        if len(a) < len(b):
            a, b = b, a
        r = _prem(a, b)
        a, b = b, _pprim(r)[0]
    return a


def _low(a: tuple[int, ...]) -> int:
    # order of vanishing at q = 0
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _is_monomial(a: tuple[int, ...]) -> bool:
    return bool(a) and all(x == 0 for x in a[:-1])


# ---------------------------------------------------------------------------


class QRat:
    """An element of Q(q) in canonical form.

    Internally a value is ``content * num / den`` where content is a
    Fraction and num, den are coprime primitive integer polynomials with
    positive leading coefficients.  Instances are immutable; all arithmetic
    returns new canonical instances, so ``==`` is structural.
    """

    __slots__ = ("c", "num", "den", "_hash")

    c: Fraction
    num: tuple[int, ...]
    den: tuple[int, ...]

    def __init__(self, c: Fraction, num: tuple[int, ...], den: tuple[int, ...]):
        # trusted constructor: arguments must already be canonical
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("QRat is immutable")

    # -- construction ------------------------------------------------------

    @staticmethod
    def make(c: Fraction, num: tuple[int, ...], den: tuple[int, ...]) -> "QRat":
        """Build a canonical value from an arbitrary num/den presentation."""
        if not den:
            raise DivisionByZero("zero denominator in Q(q)")
        if not num or c == 0:
            return ZERO
        # strip common q-powers cheaply before running the gcd
        ln, ld = _low(num), _low(den)
        k = min(ln, ld)
        if k:
            num = num[k:]
            den = den[k:]
        num, cn = _pprim(num)
        den, cd = _pprim(den)
        g = _pgcd(num, den)
        if g != (1,):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        c = c * Fraction(cn, cd)
        if c == 0:
            return ZERO
        return QRat(c, num, den)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.c == 1 and self.num == (1,) and self.den == (1,)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QRat") -> "QRat":
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        ca, cb = self.c, other.c
        l = lcm(ca.denominator, cb.denominator)
        ia = ca.numerator * (l // ca.denominator)
        ib = cb.numerator * (l // cb.denominator)
        if self.den == other.den:
            num = _padd(_pscale(self.num, ia), _pscale(other.num, ib))
            return QRat.make(Fraction(1, l), num, self.den)
        g = _pgcd(self.den, other.den)
        db = _pdiv_exact(other.den, g)
        da = _pdiv_exact(self.den, g)
        num = _padd(
            _pscale(_pmul(self.num, db), ia),
            _pscale(_pmul(other.num, da), ib),
        )
        return QRat.make(Fraction(1, l), num, _pmul(self.den, db))

    def __neg__(self) -> "QRat":
        if not self.num:
            return self
        return QRat(-self.c, self.num, self.den)

    def __sub__(self, other: "QRat") -> "QRat":
        return self + (-other)

    def __mul__(self, other: "QRat") -> "QRat":
        if not isinstance(other, QRat):
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        g1 = _pgcd(self.num, other.den)
        g2 = _pgcd(other.num, self.den)
        num = _pmul(_pdiv_exact(self.num, g1), _pdiv_exact(other.num, g2))
        den = _pmul(_pdiv_exact(self.den, g2), _pdiv_exact(other.den, g1))
        return QRat(self.c * other.c, num, den)

    def inverse(self) -> "QRat":
        if not self.num:
            raise DivisionByZero("inverse of zero in Q(q)")
        num, den = self.den, self.num
        c = 1 / self.c
        if den[-1] < 0:  # keep denominators positive-leading
            den = _pneg(den)
            num = _pneg(num)
        return QRat(c, num, den)

    def __truediv__(self, other: "QRat") -> "QRat":
        if not isinstance(other, QRat):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> "QRat":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QRat)
            and self.c == other.c
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.c, self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    # -- views -------------------------------------------------------------

    def monic_pair(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """The reduced fraction with monic denominator over Q.

        Returns (numerator, denominator) as tuples of Fractions, lowest
        degree first.  This is the textbook canonical form; it determines
        and is determined by the internal representation.
        """
        if not self.num:
            return (), (Fraction(1),)
        lc = self.den[-1]
        num = tuple(self.c * x * lc for x in self.num)
        den = tuple(Fraction(x, lc) for x in self.den)
        return num, den

    def evaluate(self, value: Fraction) -> Fraction:
        """Spot-check evaluation at a rational point (den must not vanish)."""
        num = sum((self.c * co) * value**i for i, co in enumerate(self.num))
        den = sum(Fraction(co) * value**i for i, co in enumerate(self.den))
        if den == 0:
            raise DivisionByZero("denominator vanishes at evaluation point")
        return num / den

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Human readable string such as ``3*q^2 - 1/2*q^-1``.

        Laurent polynomials are written as signed sums of q-powers in
        decreasing exponent order; a genuine denominator falls back to the
        form ``(num)/(den)``.  :func:`parse` accepts both shapes.
        """
        if not self.num:
            return "0"
        if _is_monomial(self.den):
            shift = len(self.den) - 1
            terms = []
            for e in range(len(self.num) - 1, -1, -1):
                co = self.c * self.num[e]
                if co:
                    terms.append((e - shift, co))
            return _render_laurent(terms)
        num, den = self.monic_pair()
        ns = _render_laurent([(e, c) for e in range(len(num) - 1, -1, -1) if (c := num[e])])
        ds = _render_laurent([(e, c) for e in range(len(den) - 1, -1, -1) if (c := den[e])])
        return f"({ns})/({ds})"

    def __repr__(self) -> str:
        return f"QRat({self.render()})"


def _render_laurent(terms: list[tuple[int, Fraction]]) -> str:
    parts: list[str] = []
    for e, co in terms:
        sign = "-" if co < 0 else "+"
        mag = -co if co < 0 else co
        if e == 0:
            body = str(mag)
        else:
            qp = "q" if e == 1 else f"q^{e}"
            body = qp if mag == 1 else f"{mag}*{qp}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


# ---------------------------------------------------------------------------

ZERO = QRat(Fraction(0), (), (1,))
ONE = QRat(Fraction(1), (1,), (1,))
Q = QRat(Fraction(1), (0, 1), (1,))


def from_int(n: int) -> QRat:
    if n == 0:
        return ZERO
    return QRat(Fraction(n), (1,), (1,))


def from_fraction(x: Fraction) -> QRat:
    if x == 0:
        return ZERO
    return QRat(Fraction(x), (1,), (1,))


def qpow(k: int) -> QRat:
    """The monomial q^k, k may be negative."""
    if k >= 0:
        return QRat(Fraction(1), (0,) * k + (1,), (1,))
    return QRat(Fraction(1), (1,), (0,) * (-k) + (1,))


def q_integer(n: int, d: int = 1) -> QRat:
    """Balanced q-integer [n] in base q^d, a Laurent polynomial.

    [n] = q^(d(n-1)) + q^(d(n-3)) + ... + q^(-d(n-1)); [0] = 0, [1] = 1.
    """
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    if d < 1:
        raise ValueError("q_integer needs d >= 1")
    if n == 0:
        return ZERO
    num = [0] * (2 * d * (n - 1) + 1)
    for k in range(n):
        num[2 * d * k] = 1
    return QRat.make(Fraction(1), tuple(num), (0,) * (d * (n - 1)) + (1,))


def q_factorial(n: int, d: int = 1) -> QRat:
    """[n]! = [1][2]...[n] in base q^d."""
    out = ONE
    for k in range(2, n + 1):
        out = out * q_integer(k, d)
    return out


def q_binomial(m: int, k: int, d: int = 1) -> QRat:
    """Balanced q-binomial [m choose k] in base q^d (a Laurent polynomial)."""
    if not 0 <= k <= m:
        raise ValueError("q_binomial needs 0 <= k <= m")
    return q_factorial(m, d) / (q_factorial(k, d) * q_factorial(m - k, d))


# ---------------------------------------------------------------------------
# parsing of the rendered grammar

_TERM = re.compile(
    r"""\s*(?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<qc>q(?:\^(?P<ec>-?\d+))?))?
          | (?P<q>q(?:\^(?P<e>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def _parse_laurent(text: str) -> QRat:
    pos = 0
    total = ZERO
    text = text.strip()
    if not text:
        raise ValueError("empty coefficient string")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse coefficient near {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            if m.group("qc") is not None:
                e = int(m.group("ec")) if m.group("ec") is not None else 1
            else:
                e = 0
        else:
            coef = Fraction(1)
            e = int(m.group("e")) if m.group("e") is not None else 1
        total = total + from_fraction(sign * coef) * qpow(e)
        pos = m.end()
    return total


def parse(text: str) -> QRat:
    """Parse a coefficient rendered by :meth:`QRat.render`."""
    text = text.strip()
    m = re.fullmatch(r"\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)", text, re.DOTALL)
    if m:
        return _parse_laurent(m.group("num")) / _parse_laurent(m.group("den"))
    return _parse_laurent(text)


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
