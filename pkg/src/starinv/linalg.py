"""Exact solvers that the inverse engine reduces to.

Matrix rings are handled by Gauss-Jordan elimination over the scalar field
(leftmost pivot column, first nonzero row below as pivot row, free variables
set to zero), so every solver is deterministic.  Modular rings are small and
are handled by exhaustive search, smallest residue first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotEnumerable, NotInIdeal, NotInvertible, NotRegular, ValidationFailure
from .ring import DEFAULT_ENUMERATION_BOUND, RingElement

LEFT = "left"
RIGHT = "right"


# ---------------------------------------------------------------------------
# scalar matrices (lists of rows)


def rref(rows, zero, ncols=None):
    """Reduced row-echelon form.

    Only the first ``ncols`` columns are eligible as pivots (the rest are
    carried along, e.g. an augmented right-hand side).  Returns the reduced
    rows and the list of pivot columns.
    """
    R = [list(r) for r in rows]
    if not R:
        return R, []
    m = len(R)
    ncols = len(R[0]) if ncols is None else ncols
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow == m:
            break
        found = next((r for r in range(prow, m) if R[r][col]), None)
        if found is None:
            continue
        if found != prow:
            R[prow], R[found] = R[found], R[prow]
        piv = R[prow][col]
        R[prow] = [x / piv for x in R[prow]]
        pr = R[prow]
        for r in range(m):
            if r != prow:
                f = R[r][col]
                if f:
                    R[r] = [x - f * y for x, y in zip(R[r], pr)]
        pivots.append(col)
        prow += 1
    return R, pivots


def solve_linear(M, B, zero):
    """Solve M Y = B exactly; None when inconsistent.

    M is m x n and B is m x r (lists of rows).  Free variables are zero.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    aug = [list(M[i]) + list(B[i]) for i in range(m)]
    R, pivots = rref(aug, zero, n)
    rank = len(pivots)
    for i in range(rank, m):
        if any(R[i][n:]):
            return None
    r = len(B[0]) if m else 0
    Y = [[zero] * r for _ in range(n)]
    for i, col in enumerate(pivots):
        Y[col] = R[i][n:]
    return Y


def nullspace(M, zero, one):
    """Basis of {v : M v = 0}, one vector per free column."""
    if not M:
        return []
    n = len(M[0])
    R, pivots = rref(M, zero)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for i, col in enumerate(pivots):
            v[col] = -R[i][f]
        basis.append(tuple(v))
    return basis


def row_space(M, zero):
    """Nonzero rows of the RREF (a canonical basis of the row space)."""
    R, pivots = rref(M, zero)
    return [tuple(R[i]) for i in range(len(pivots))]


def _transpose(M):
    return [list(c) for c in zip(*M)]


def _identity(k, zero, one):
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


# ---------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class MembershipWitness:
    """``solution * divisor == target`` (left) or ``divisor * solution ==
    target`` (right); checked on construction."""

    solution: RingElement
    side: str
    target: RingElement
    divisor: RingElement

    def __post_init__(self):
        if self.side == LEFT:
            ok = self.solution * self.divisor == self.target
        else:
            ok = self.divisor * self.solution == self.target
        if not ok:
            raise ValidationFailure(f"{self.side} membership witness does not verify")


@dataclass(frozen=True)
class SubspaceBasis:
    """A left/right ideal or annihilator.

    Matrix rings: ``vectors`` is a basis of the subspace of the flattened
    (row-major) k^2-dimensional scalar space, kept in RREF so equal subspaces
    have equal bases.  Modular rings: ``members`` lists the whole set.
    """

    ctx: object
    vectors: tuple = ()
    members: frozenset | None = None

    @property
    def is_set(self):
        return self.members is not None

    @property
    def rank(self):
        return None if self.is_set else len(self.vectors)

    @property
    def elements(self):
        if self.is_set:
            return sorted(self.members, key=lambda e: e.payload)
        return [_unflatten(self.ctx, v) for v in self.vectors]

    def __len__(self):
        return len(self.members) if self.is_set else len(self.vectors)


@dataclass(frozen=True)
class Decomposition:
    sum_is_all: bool
    intersection_is_zero: bool

    @property
    def direct_sum(self):
        return self.sum_is_all and self.intersection_is_zero


def _flatten(a):
    return tuple(x for row in a.payload for x in row)


def _unflatten(ctx, v):
    k = ctx.k
    return RingElement(ctx, tuple(tuple(v[i * k:(i + 1) * k]) for i in range(k)))


def _rows(a):
    return [list(r) for r in a.payload]


def _from_rows(ctx, rows):
    return RingElement(ctx, tuple(tuple(r) for r in rows))


def _check_same(*elems):
    ctx = elems[0].ctx
    for e in elems[1:]:
        e._coerce(elems[0])
    return ctx


def _residues(ctx):
    if ctx.n > DEFAULT_ENUMERATION_BOUND:
        raise NotEnumerable(f"{ctx.spec()} too large for exhaustive search")
    return range(ctx.n)


# ---------------------------------------------------------------------------
# operations


def invert(u):
    """Two-sided inverse of ``u``; raises NotInvertible with a certificate."""
    ctx = u.ctx
    if ctx.kind == "modular":
        g = gcd(u.payload, ctx.n)
        if g != 1:
            raise NotInvertible(f"{u} is a zero divisor in {ctx.spec()}", certificate=g)
        return ctx.element(pow(u.payload, -1, ctx.n))
    f = ctx.field
    Y = solve_linear(_rows(u), _identity(ctx.k, f.zero, f.one), f.zero)
    if Y is None:
        kernel = nullspace(_rows(u), f.zero, f.one)
        raise NotInvertible(f"{u} is singular", certificate=kernel[0])
    return _from_rows(ctx, Y)


def is_invertible(u):
    try:
        invert(u)
    except NotInvertible:
        return False
    return True


def solve_left(target, a):
    """Find x with x * a == target (decides target in R a)."""
    ctx = _check_same(target, a)
    if ctx.kind == "modular":
        for v in _residues(ctx):
            if (v * a.payload - target.payload) % ctx.n == 0:
                return MembershipWitness(ctx.element(v), LEFT, target, a)
        raise NotInIdeal(f"{target} not in R*{a}", side=LEFT)
    f = ctx.field
    # x a = t  <=>  a^T x^T = t^T
    Y = solve_linear(_transpose(_rows(a)), _transpose(_rows(target)), f.zero)
    if Y is None:
        raise NotInIdeal(f"{target} not in R*{a}", side=LEFT)
    return MembershipWitness(_from_rows(ctx, _transpose(Y)), LEFT, target, a)


def solve_right(target, a):
    """Find x with a * x == target (decides target in a R)."""
    ctx = _check_same(target, a)
    if ctx.kind == "modular":
        for v in _residues(ctx):
            if (a.payload * v - target.payload) % ctx.n == 0:
                return MembershipWitness(ctx.element(v), RIGHT, target, a)
        raise NotInIdeal(f"{target} not in {a}*R", side=RIGHT)
    f = ctx.field
    Y = solve_linear(_rows(a), _rows(target), f.zero)
    if Y is None:
        raise NotInIdeal(f"{target} not in {a}*R", side=RIGHT)
    return MembershipWitness(_from_rows(ctx, Y), RIGHT, target, a)


def in_left_ideal(target, a):
    try:
        solve_left(target, a)
    except NotInIdeal:
        return False
    return True


def in_right_ideal(target, a):
    try:
        solve_right(target, a)
    except NotInIdeal:
        return False
    return True


def is_left_invertible(u):
    return in_left_ideal(u.ctx.one(), u)


def is_right_invertible(u):
    return in_right_ideal(u.ctx.one(), u)


def inner_inverse(a):
    """Some x with a x a == a.

    Matrix rings: rank factorization a = F G (F = pivot columns of a, G =
    nonzero rows of rref(a)), then x = G_r F_l with one-sided inverses found
    by elimination.  Modular rings: smallest residue that works.
    """
    ctx = a.ctx
    if ctx.kind == "modular":
        p = a.payload
        for v in _residues(ctx):
            if (p * v * p - p) % ctx.n == 0:
                return ctx.element(v)
        raise NotRegular(f"{a} is not regular in {ctx.spec()}")
    f = ctx.field
    k = ctx.k
    A = _rows(a)
    R, pivots = rref(A, f.zero)
    r = len(pivots)
    if r == 0:
        return ctx.zero()
    F = [[A[i][c] for c in pivots] for i in range(k)]  # k x r
    G = [R[i] for i in range(r)]  # r x k
    I_r = _identity(r, f.zero, f.one)
    # F_l F = I  <=>  F^T F_l^T = I
    Fl = _transpose(solve_linear(_transpose(F), I_r, f.zero))  # r x k
    Gr = solve_linear(G, I_r, f.zero)  # k x r
    x = [[sum((Gr[i][t] * Fl[t][j] for t in range(r)), f.zero) for j in range(k)] for i in range(k)]
    out = _from_rows(ctx, x)
    if a * out * a != a:
        raise ValidationFailure("rank-factorization inner inverse does not verify")
    return out


def _span(ctx, vecs):
    f = ctx.field
    return SubspaceBasis(ctx, tuple(row_space(list(vecs), f.zero)) if vecs else ())


def _embed_rows(ctx, row_vecs):
    """All matrices with one row equal to a given vector, others zero."""
    k, z = ctx.k, ctx.field.zero
    out = []
    for i in range(k):
        for v in row_vecs:
            flat = [z] * (k * k)
            flat[i * k:(i + 1) * k] = list(v)
            out.append(tuple(flat))
    return out


def _embed_cols(ctx, col_vecs):
    k, z = ctx.k, ctx.field.zero
    out = []
    for j in range(k):
        for v in col_vecs:
            flat = [z] * (k * k)
            for i in range(k):
                flat[i * k + j] = v[i]
            out.append(tuple(flat))
    return out


def annihilator(a, side):
    """Left annihilator {x : x a = 0} or right annihilator {x : a x = 0}."""
    ctx = a.ctx
    if ctx.kind == "modular":
        zero = ctx.zero()
        xs = (ctx.element(v) for v in _residues(ctx))
        if side == LEFT:
            return SubspaceBasis(ctx, members=frozenset(x for x in xs if x * a == zero))
        return SubspaceBasis(ctx, members=frozenset(x for x in xs if a * x == zero))
    f = ctx.field
    A = _rows(a)
    if side == LEFT:
        # rows of x lie in the left kernel of a
        return _span(ctx, _embed_rows(ctx, nullspace(_transpose(A), f.zero, f.one)))
    return _span(ctx, _embed_cols(ctx, nullspace(A, f.zero, f.one)))


def ideal_subspace(a, side):
    """R a (side='left') or a R (side='right')."""
    ctx = a.ctx
    if ctx.kind == "modular":
        xs = [ctx.element(v) for v in _residues(ctx)]
        if side == LEFT:
            return SubspaceBasis(ctx, members=frozenset(x * a for x in xs))
        return SubspaceBasis(ctx, members=frozenset(a * x for x in xs))
    f = ctx.field
    A = _rows(a)
    if side == LEFT:
        return _span(ctx, _embed_rows(ctx, row_space(A, f.zero)))
    return _span(ctx, _embed_cols(ctx, row_space(_transpose(A), f.zero)))


def decomposition_check(s1, s2):
    """Is R = s1 + s2, is s1 & s2 = 0 (and hence is R = s1 (+) s2)?"""
    ctx = s1.ctx
    if s1.is_set != s2.is_set:
        raise ValueError("cannot mix set and span subspaces")
    if s1.is_set:
        sums = {x + y for x in s1.members for y in s2.members}
        return Decomposition(len(sums) == ctx.n, s1.members & s2.members == {ctx.zero()})
    full = ctx.k * ctx.k
    both = list(s1.vectors) + list(s2.vectors)
    dim_sum = len(row_space(both, ctx.field.zero)) if both else 0
    dim_int = s1.rank + s2.rank - dim_sum
    return Decomposition(dim_sum == full, dim_int == 0)


def hermitian_annihilator(a, left=True, right=False):
    """Basis, over the prime subfield, of the Hermitian p with p a = 0 (if
    ``left``) and a p = 0 (if ``right``).

    Conjugation is only linear over the prime subfield, so the matrix ring is
    viewed as a vector space of dimension k^2 * [F : prime field] there.
    Modular rings return every qualifying element instead.
    """
    ctx = a.ctx
    if ctx.kind == "modular":
        zero = ctx.zero()
        out = []
        for v in _residues(ctx):
            p = ctx.element(v)
            if (not left or p * a == zero) and (not right or a * p == zero):
                out.append(p)
        return out
    f = ctx.field
    B = f.base
    k, d = ctx.k, f.degree
    basis_scalars = f.basis()

    def coords(x):
        return [c for s in _flatten(x) for c in f.coords(s)]

    columns = []
    for idx in range(k * k):
        i, j = divmod(idx, k)
        for t in range(d):
            e = ctx.unit_matrix(i, j, basis_scalars[t])
            col = coords(e.star - e)
            if left:
                col += coords(e * a)
            if right:
                col += coords(a * e)
            columns.append(col)
    M = _transpose(columns)
    out = []
    for v in nullspace(M, B.zero, B.one):
        flat = []
        for idx in range(k * k):
            flat.append(f.from_coords(v[idx * d:(idx + 1) * d]))
        out.append(_unflatten(ctx, flat))
    return out
