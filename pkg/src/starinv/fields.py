"""Exact scalar fields with an order-2 automorphism ("conjugation").

Four families are supported:

* ``Q``       rationals (gmpy2 ``mpq``), conjugation is the identity
* ``Qi``      gaussian rationals a + b i, conjugation a + b i -> a - b i
* ``F<p>``    prime field, conjugation is the identity
* ``F<p>^2``  quadratic extension of F_p, conjugation is Frobenius x -> x^p

Scalars are immutable, hashable, and always stored in canonical form, so
``==`` is exact equality.  Each field also exposes coordinates over its prime
subfield (``base``), which the Hermitian-subspace solver needs because
conjugation is only linear over that subfield.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import ParseError

_RAT = r"-?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^\s*({_RAT})\s*$")


def _parse_rational(text):
    m = _RAT_RE.match(text)
    if not m:
        raise ParseError(f"bad rational scalar {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return mpq(m.group(1))


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# scalar types


class GaussQ:
    """a + b i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    @classmethod
    def raw(cls, re, im):
        # re, im already mpq: skip the conversions (hot path)
        x = object.__new__(cls)
        x.re = re
        x.im = im
        return x

    def __add__(self, other):
        return GaussQ.raw(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussQ.raw(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussQ.raw(-self.re, -self.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussQ.raw(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        c, d = other.re, other.im
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by zero in Qi")
        a, b = self.re, self.im
        return GaussQ.raw((a * c + b * d) / n, (b * c - a * d) / n)

    def conj(self):
        return GaussQ.raw(self.re, -self.im)

    def __eq__(self, other):
        return isinstance(other, GaussQ) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"


class ModP:
    """Residue in the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return ModP(self.v + other.v, self.p)

    def __sub__(self, other):
        return ModP(self.v - other.v, self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __mul__(self, other):
        return ModP(self.v * other.v, self.p)

    def __truediv__(self, other):
        if other.v == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return ModP(self.v * pow(other.v, -1, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, ModP) and self.v == other.v and self.p == other.p

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"


class QuadElem:
    """c0 + c1 w in F_p[w] / (w^2 - r1 w - r0)."""

    __slots__ = ("c0", "c1", "f")

    def __init__(self, c0, c1, f):
        self.c0 = c0 % f.p
        self.c1 = c1 % f.p
        self.f = f

    def _new(self, c0, c1):
        return QuadElem(c0, c1, self.f)

    def __add__(self, other):
        return self._new(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other):
        return self._new(self.c0 - other.c0, self.c1 - other.c1)

    def __neg__(self):
        return self._new(-self.c0, -self.c1)

    def __mul__(self, other):
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        hi = a1 * b1
        return self._new(a0 * b0 + hi * self.f.r0, a0 * b1 + a1 * b0 + hi * self.f.r1)

    def conj(self):
        if self.f.p == 2:
            # w -> w^2 = w + 1
            return self._new(self.c0 + self.c1, self.c1)
        # w^p = -w when w^2 is a non-residue
        return self._new(self.c0, -self.c1)

    def __truediv__(self, other):
        c = other.conj()
        norm = (other * c).c0
        if norm == 0:
            raise ZeroDivisionError(f"division by zero in F{self.f.p}^2")
        inv = pow(norm, -1, self.f.p)
        q = self * c
        return self._new(q.c0 * inv, q.c1 * inv)

    def __pow__(self, e):
        out = self._new(1, 0)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, QuadElem)
            and self.c0 == other.c0
            and self.c1 == other.c1
            and self.f.p == other.f.p
        )

    def __hash__(self):
        return hash((self.c0, self.c1, self.f.p))

    def __bool__(self):
        return bool(self.c0) or bool(self.c1)

    def __repr__(self):
        return f"QuadElem({self.c0}, {self.c1}; p={self.f.p})"


# ---------------------------------------------------------------------------
# fields


class Field:
    """Common interface.  Subclasses are frozen dataclasses."""

    name = "?"
    order = None  # None for infinite fields
    conj_is_identity = True

    @property
    def is_finite(self):
        return self.order is not None

    def conj(self, x):
        return x

    def elements(self):
        raise NotImplementedError

    # coordinates over the prime subfield
    @property
    def base(self):
        return self

    @property
    def degree(self):
        return 1

    def basis(self):
        return (self.one,)

    def coords(self, x):
        return (x,)

    def from_coords(self, cs):
        return cs[0]

    def spec(self):
        return self.name


@dataclass(frozen=True)
class Rationals(Field):
    name = "Q"

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def from_int(self, n):
        return mpq(n)

    def parse(self, text):
        return _parse_rational(text)

    def format(self, x):
        return str(x)

    def random_scalar(self, rng, bound):
        return mpq(rng.randint(-bound, bound))

    def small_int(self, rng, bound):
        return self.random_scalar(rng, bound)


_GAUSS_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?P<sign>\s*[+-]\s*)(?P<im1>\d+(?:/\d+)?)?\s*i"
    rf"|(?P<im2>{_RAT}|-)?\s*i|(?P<re2>{_RAT}))\s*$"
)


@dataclass(frozen=True)
class GaussianRationals(Field):
    name = "Qi"
    conj_is_identity = False

    @property
    def zero(self):
        return GaussQ(0, 0)

    @property
    def one(self):
        return GaussQ(1, 0)

    @property
    def i(self):
        return GaussQ(0, 1)

    def from_int(self, n):
        return GaussQ(n, 0)

    def conj(self, x):
        return x.conj()

    @property
    def base(self):
        return Rationals()

    @property
    def degree(self):
        return 2

    def basis(self):
        return (GaussQ(1, 0), GaussQ(0, 1))

    def coords(self, x):
        return (x.re, x.im)

    def from_coords(self, cs):
        return GaussQ(cs[0], cs[1])

    def parse(self, text):
        m = _GAUSS_RE.match(text)
        if not m:
            raise ParseError(f"bad gaussian-rational scalar {text!r}")
        if m.group("re2") is not None:
            return GaussQ(_parse_rational(m.group("re2")), 0)
        if m.group("re") is not None:
            im = _parse_rational(m.group("im1")) if m.group("im1") else mpq(1)
            if m.group("sign").strip() == "-":
                im = -im
            return GaussQ(_parse_rational(m.group("re")), im)
        im2 = m.group("im2")
        if im2 is None:
            im = mpq(1)
        elif im2 == "-":
            im = mpq(-1)
        else:
            im = _parse_rational(im2)
        return GaussQ(0, im)

    def format(self, x):
        if x.im == 0:
            return str(x.re)
        if x.im == 1:
            im = "i"
        elif x.im == -1:
            im = "-i"
        else:
            im = f"{x.im}i"
        if x.re == 0:
            return im
        if im.startswith("-"):
            return f"{x.re}{im}"
        return f"{x.re}+{im}"

    def random_scalar(self, rng, bound):
        return GaussQ(rng.randint(-bound, bound), rng.randint(-bound, bound))

    def small_int(self, rng, bound):
        return GaussQ(rng.randint(-bound, bound), 0)


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"F{self.p}: {self.p} is not prime")

    @property
    def name(self):
        return f"F{self.p}"

    @property
    def order(self):
        return self.p

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def from_int(self, n):
        return ModP(n, self.p)

    def elements(self):
        return (ModP(v, self.p) for v in range(self.p))

    def parse(self, text):
        t = text.strip()
        if not re.fullmatch(r"-?\d+", t):
            raise ParseError(f"bad F{self.p} scalar {text!r}")
        return ModP(int(t), self.p)

    def format(self, x):
        return str(x.v)

    def random_scalar(self, rng, bound):
        return ModP(rng.randint(-bound, bound), self.p)

    def small_int(self, rng, bound):
        return self.random_scalar(rng, bound)


_QUAD_RE = re.compile(r"^\s*(?:(-?\d+)\s*(?:([+-])\s*(\d*)\s*w)?|(-?\d*)\s*w)\s*$")


@dataclass(frozen=True)
class QuadraticField(Field):
    """F_{p^2} = F_p[w] with w^2 = r1 w + r0 (r1 = 0 and r0 a non-residue for
    odd p; w^2 = w + 1 for p = 2)."""

    p: int
    r0: int = field(init=False, compare=False)
    r1: int = field(init=False, compare=False)

    conj_is_identity = False

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"F{self.p}^2: {self.p} is not prime")
        if self.p == 2:
            r0, r1 = 1, 1
        else:
            squares = {(x * x) % self.p for x in range(self.p)}
            r0 = next(r for r in range(2, self.p) if r not in squares)
            r1 = 0
        object.__setattr__(self, "r0", r0)
        object.__setattr__(self, "r1", r1)

    @property
    def name(self):
        return f"F{self.p}^2"

    @property
    def order(self):
        return self.p * self.p

    @property
    def zero(self):
        return QuadElem(0, 0, self)

    @property
    def one(self):
        return QuadElem(1, 0, self)

    @property
    def w(self):
        return QuadElem(0, 1, self)

    def from_int(self, n):
        return QuadElem(n, 0, self)

    def conj(self, x):
        return x.conj()

    def elements(self):
        return (QuadElem(c0, c1, self) for c1, c0 in itertools.product(range(self.p), repeat=2))

    @property
    def base(self):
        return PrimeField(self.p)

    @property
    def degree(self):
        return 2

    def basis(self):
        return (QuadElem(1, 0, self), QuadElem(0, 1, self))

    def coords(self, x):
        return (ModP(x.c0, self.p), ModP(x.c1, self.p))

    def from_coords(self, cs):
        return QuadElem(cs[0].v, cs[1].v, self)

    def parse(self, text):
        m = _QUAD_RE.match(text)
        if not m:
            raise ParseError(f"bad F{self.p}^2 scalar {text!r}")
        if m.group(1) is not None:
            c0 = int(m.group(1))
            c1 = 0
            if m.group(2):
                c1 = int(m.group(3)) if m.group(3) else 1
                if m.group(2) == "-":
                    c1 = -c1
            return QuadElem(c0, c1, self)
        coef = m.group(4)
        c1 = 1 if coef in ("", None) else (-1 if coef == "-" else int(coef))
        return QuadElem(0, c1, self)

    def format(self, x):
        if x.c1 == 0:
            return str(x.c0)
        w = "w" if x.c1 == 1 else f"{x.c1}w"
        if x.c0 == 0:
            return w
        return f"{x.c0}+{w}"

    def random_scalar(self, rng, bound):
        return QuadElem(rng.randint(-bound, bound), rng.randint(-bound, bound), self)

    def small_int(self, rng, bound):
        return QuadElem(rng.randint(-bound, bound), 0, self)


def parse_field(token):
    """``Q``, ``Qi``, ``F<p>`` or ``F<p>^2``."""
    if token == "Q":
        return Rationals()
    if token == "Qi":
        return GaussianRationals()
    m = re.fullmatch(r"F(\d+)(\^2)?", token)
    if not m:
        raise ParseError(f"unknown scalar field {token!r}")
    p = int(m.group(1))
    try:
        return QuadraticField(p) if m.group(2) else PrimeField(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
