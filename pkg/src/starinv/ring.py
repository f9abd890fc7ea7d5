"""Concrete rings with involution and their elements.

Two families of context:

* ``MatrixRing(k, field, involution)`` -- k x k matrices over an exact field,
  involution ``transpose`` or ``ctranspose`` (transpose composed with the
  field's conjugation; identical to ``transpose`` when conjugation is trivial)
* ``ModularRing(n)`` -- Z/nZ with the identity involution

Elements are immutable ``RingElement`` values.  Arithmetic between elements
of different contexts raises ``ContextMismatch``.  Python ints on either side
of ``+``, ``-`` and ``*`` are embedded as multiples of the identity, so
formulas such as ``d * a + 1 - d * dm`` read naturally.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from math import lcm
from operator import mul

from gmpy2 import mpq

from .errors import ContextMismatch, NotEnumerable, ParseError
from .fields import Field, GaussQ, parse_field

TRANSPOSE = "transpose"
CTRANSPOSE = "ctranspose"

DEFAULT_ENUMERATION_BOUND = 10**6


def _integral(vectors):
    """Scale rational vectors by a common denominator: (integer rows, D)."""
    d = 1
    for v in vectors:
        for x in v:
            d = lcm(d, x.denominator)
    return [[int(x.numerator) * (d // x.denominator) for x in v] for v in vectors], d


def _gauss_mul(p, cols):
    # (A + Bi)(C + Di) with A, B, C, D integral over common denominators
    ar, da = _integral([[x.re for x in r] for r in p] + [[x.im for x in r] for r in p])
    bc, db = _integral([[x.re for x in c] for c in cols] + [[x.im for x in c] for c in cols])
    k = len(p)
    A, B = ar[:k], ar[k:]
    C, D = bc[:k], bc[k:]
    d = da * db
    out = []
    for r, i in zip(A, B):
        row = []
        for c, j in zip(C, D):
            re = sum(map(mul, r, c)) - sum(map(mul, i, j))
            im = sum(map(mul, r, j)) + sum(map(mul, i, c))
            row.append(GaussQ.raw(mpq(re, d), mpq(im, d)))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class MatrixRing:
    k: int
    field: Field
    involution: str = TRANSPOSE

    kind = "matrix"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("matrix size must be positive")
        if self.involution not in (TRANSPOSE, CTRANSPOSE):
            raise ValueError(f"unknown involution {self.involution!r}")

    # -- construction ----------------------------------------------------
    def element(self, rows):
        """Build an element from nested rows of field scalars or ints."""
        f = self.field
        rows = tuple(
            tuple(x if not isinstance(x, int) else f.from_int(x) for x in row) for row in rows
        )
        if len(rows) != self.k or any(len(r) != self.k for r in rows):
            raise ValueError(f"expected a {self.k}x{self.k} matrix")
        return RingElement(self, rows)

    def zero(self):
        z = self.field.zero
        return RingElement(self, tuple((z,) * self.k for _ in range(self.k)))

    def one(self):
        return self.scalar(self.field.one)

    def scalar(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        z = self.field.zero
        return RingElement(
            self, tuple(tuple(c if i == j else z for j in range(self.k)) for i in range(self.k))
        )

    def unit_matrix(self, i, j, c=None):
        """c * E_ij."""
        f = self.field
        c = f.one if c is None else c
        return RingElement(
            self,
            tuple(
                tuple(c if (r, s) == (i, j) else f.zero for s in range(self.k))
                for r in range(self.k)
            ),
        )

    # -- arithmetic on payloads ------------------------------------------
    def _add(self, p, q):
        return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(p, q))

    def _sub(self, p, q):
        return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(p, q))

    def _neg(self, p):
        return tuple(tuple(-x for x in r) for r in p)

    def _mul(self, p, q):
        z = self.field.zero
        cols = tuple(zip(*q))
        if isinstance(z, GaussQ):
            return _gauss_mul(p, cols)
        return tuple(tuple(sum((x * y for x, y in zip(r, c)), z) for c in cols) for r in p)

    def _star(self, p):
        if self.involution == CTRANSPOSE and not self.field.conj_is_identity:
            conj = self.field.conj
            return tuple(tuple(conj(x) for x in col) for col in zip(*p))
        return tuple(zip(*p))

    # -- structure -------------------------------------------------------
    @property
    def is_finite(self):
        return self.field.is_finite

    @property
    def size(self):
        q = self.field.order
        return None if q is None else q ** (self.k * self.k)

    @property
    def is_commutative(self):
        return self.k == 1

    def spec(self):
        return f"mat:{self.k}:{self.field.spec()}:{self.involution}"

    def __str__(self):
        return self.spec()


@dataclass(frozen=True)
class ModularRing:
    n: int

    kind = "modular"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus must be at least 2")

    def element(self, v):
        return RingElement(self, int(v) % self.n)

    def zero(self):
        return RingElement(self, 0)

    def one(self):
        return RingElement(self, 1 % self.n)

    def scalar(self, c):
        return RingElement(self, int(c) % self.n)

    def _add(self, p, q):
        return (p + q) % self.n

    def _sub(self, p, q):
        return (p - q) % self.n

    def _neg(self, p):
        return (-p) % self.n

    def _mul(self, p, q):
        return (p * q) % self.n

    def _star(self, p):
        return p

    is_finite = True
    is_commutative = True

    @property
    def size(self):
        return self.n

    def spec(self):
        return f"zmod:{self.n}"

    def __str__(self):
        return self.spec()


RingContext = MatrixRing | ModularRing


class RingElement:
    """An immutable value in a concrete ring with involution."""

    __slots__ = ("ctx", "payload", "_hash")

    def __init__(self, ctx, payload):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other.payload
        if isinstance(other, int):
            return self.ctx.scalar(other).payload
        return NotImplemented

    def __add__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return RingElement(self.ctx, self.ctx._add(self.payload, q))

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return RingElement(self.ctx, self.ctx._sub(self.payload, q))

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return RingElement(self.ctx, self.ctx._sub(q, self.payload))

    def __neg__(self):
        return RingElement(self.ctx, self.ctx._neg(self.payload))

    def __mul__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return RingElement(self.ctx, self.ctx._mul(self.payload, q))

    def __rmul__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return q
        return RingElement(self.ctx, self.ctx._mul(q, self.payload))

    def __pow__(self, n):
        return power(self, n)

    @property
    def star(self):
        return RingElement(self.ctx, self.ctx._star(self.payload))

    def is_zero(self):
        return self == self.ctx.zero()

    def is_one(self):
        return self == self.ctx.one()

    def is_hermitian(self):
        return self.star == self

    def is_idempotent(self):
        return self * self == self

    def is_projection(self):
        return self.is_hermitian() and self.is_idempotent()

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.payload == other.payload and (other.ctx is self.ctx or other.ctx == self.ctx)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.payload)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"<{self.ctx.spec()} {format_element(self)}>"

    def __str__(self):
        return format_element(self)


def star(a):
    return a.star


def power(a, n):
    if n < 0:
        raise ValueError("negative exponent")
    if n == 0:
        return a.ctx.one()
    out = None
    base = a
    while n:
        if n & 1:
            out = base if out is None else out * base
        n >>= 1
        if n:
            base = base * base
    return out


def enumerate_ring(ctx, bound=DEFAULT_ENUMERATION_BOUND):
    """Yield every element of a finite ring exactly once."""
    size = ctx.size
    if size is None:
        raise NotEnumerable(f"{ctx.spec()} is infinite")
    if size > bound:
        raise NotEnumerable(f"{ctx.spec()} has {size} elements (bound {bound})")
    if ctx.kind == "modular":
        for v in range(ctx.n):
            yield RingElement(ctx, v)
        return
    k = ctx.k
    scalars = list(ctx.field.elements())
    for flat in itertools.product(scalars, repeat=k * k):
        yield RingElement(ctx, tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(k)))


# ---------------------------------------------------------------------------
# text format


def parse_ring(spec):
    """``mat:<k>:<Q|Qi|F<p>|F<p>^2>:<transpose|ctranspose>`` or ``zmod:<n>``."""
    parts = spec.strip().split(":")
    try:
        if parts[0] == "zmod" and len(parts) == 2:
            return ModularRing(int(parts[1]))
        if parts[0] == "mat" and len(parts) in (3, 4):
            inv = parts[3] if len(parts) == 4 else TRANSPOSE
            if inv == "conjugate-transpose":
                inv = CTRANSPOSE
            return MatrixRing(int(parts[1]), parse_field(parts[2]), inv)
    except ValueError as exc:
        raise ParseError(f"bad ring spec {spec!r}: {exc}") from None
    raise ParseError(f"bad ring spec {spec!r}")


def entries(a):
    """Row-major list of scalar strings."""
    ctx = a.ctx
    if ctx.kind == "modular":
        return [str(a.payload)]
    fmt = ctx.field.format
    return [fmt(x) for row in a.payload for x in row]


def from_entries(ctx, items, positions=None):
    """Inverse of ``entries``; ``positions`` gives (line, column) per item for
    error messages."""
    if ctx.kind == "modular":
        if len(items) != 1:
            raise ParseError(f"zmod element needs exactly one entry, got {len(items)}")
        t = str(items[0]).strip()
        if not re.fullmatch(r"-?\d+", t):
            line, col = positions[0] if positions else (None, None)
            raise ParseError(f"bad residue {t!r}", line, col)
        return ctx.element(int(t))
    k = ctx.k
    if len(items) != k * k:
        raise ParseError(f"{ctx.spec()} element needs {k * k} entries, got {len(items)}")
    vals = []
    for idx, item in enumerate(items):
        try:
            vals.append(ctx.field.parse(str(item)))
        except ParseError as exc:
            line, col = positions[idx] if positions else (None, None)
            raise ParseError(f"entry {idx}: {exc}", line, col) from None
    return RingElement(ctx, tuple(tuple(vals[i * k:(i + 1) * k]) for i in range(k)))


def format_element(a):
    """Compact text form, re-parseable by ``parse_element``:
    ``[[1,i],[0,0]]`` for matrices, ``4`` for residues."""
    ctx = a.ctx
    if ctx.kind == "modular":
        return str(a.payload)
    fmt = ctx.field.format
    return "[" + ",".join("[" + ",".join(fmt(x) for x in row) + "]" for row in a.payload) + "]"


def to_record(a):
    return {"ring": a.ctx.spec(), "entries": entries(a)}


def dumps_record(a):
    return json.dumps(to_record(a))


def loads_record(text):
    """Parse the JSON record ``{"ring": ..., "entries": [...]}``."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(rec, dict) or "ring" not in rec or "entries" not in rec:
        raise ParseError("record needs 'ring' and 'entries' fields", 1, 1)
    if not isinstance(rec["entries"], list):
        raise ParseError("'entries' must be a list", 1, 1)
    ctx = parse_ring(rec["ring"])
    positions = [_locate(text, json.dumps(str(e))) for e in rec["entries"]]
    return from_entries(ctx, rec["entries"], positions)


def _locate(text, needle):
    idx = text.find(needle)
    if idx < 0:
        return (None, None)
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return (line, col)


def parse_element(ctx, text):
    """Parse inline element syntax.

    Accepts a JSON record, a JSON list of entries, bracketed rows
    (``[[1,i],[0,0]]``), or bare comma/semicolon separated entries
    (``1,i;0,0``).  ``ctx`` may be None only for a full record.
    """
    s = text.strip()
    if s.startswith("{"):
        a = loads_record(s)
        if ctx is not None and a.ctx != ctx:
            raise ParseError(f"record ring {a.ctx.spec()} does not match {ctx.spec()}", 1, 1)
        return a
    if ctx is None:
        raise ParseError("a ring spec is required for inline elements")
    if s.startswith("[") and '"' in s:
        try:
            items = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
        if items and isinstance(items[0], list):
            items = [x for row in items for x in row]
        return from_entries(ctx, items)
    items, positions = [], []
    for m in re.finditer(r"[^\[\],;]+", s):
        tok = m.group(0)
        if tok.strip():
            items.append(tok.strip())
            positions.append((1, m.start() + 1 + (len(tok) - len(tok.lstrip()))))
    return from_entries(ctx, items, positions)
