"""Regression fixtures: the transposition example over Q(i) and a set of
small derived cases, each re-derived from scratch on every run."""

from __future__ import annotations

from dataclasses import dataclass

from . import inverses as inv
from . import linalg
from .errors import NotGenInvertible, NotInIdeal, NotInvertible, NotRegular
from .ring import parse_element, parse_ring, power


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: str = ""


def _el(ring, text):
    return parse_element(parse_ring(ring), text)


def _raises(fn, exc):
    try:
        fn()
    except exc:
        return True
    return False


def _example_fixtures():
    ring = "mat:2:Qi:transpose"
    a = _el(ring, "[[1,i],[0,0]]")
    e11 = _el(ring, "[[1,0],[0,0]]")
    sn = power(a.star, 2)

    def witness_ok():
        w = linalg.solve_left(a, sn * a)
        return w.solution == e11 and e11 * sn * a == a

    return [
        ("a^2 = a", lambda: a * a == a),
        ("a a* = 0", lambda: (a * a.star).is_zero()),
        ("a* a = [[1,i],[i,-1]]", lambda: a.star * a == _el(ring, "[[1,i],[i,-1]]")),
        ("a in R(a*)^2 a with witness [[1,0],[0,0]]", witness_ok),
        ("a not in R a(a*)^2 a", lambda: not linalg.in_left_ideal(a, a * sn * a)),
        ("a not in a(a*)^2 R (a(a*)^2 = 0)", lambda: (a * sn).is_zero()
         and not linalg.in_right_ideal(a, a * sn)),
        ("a not MP invertible", lambda: _raises(lambda: inv.mp_inverse(a), inv.NotMPInvertible)),
        ("a core invertible with core [[1,0],[0,0]]", lambda: inv.core_inverse(a) == e11),
        ("a not dual core invertible",
         lambda: _raises(lambda: inv.dual_core_inverse(a), inv.NotDualCoreInvertible)),
        ("u in the regular-unit test is singular",
         lambda: not linalg.is_invertible(sn * a + 1 - linalg.inner_inverse(a) * a)),
    ]


def _derived_fixtures():
    q = "mat:2:Q:transpose"
    b = _el(q, "[[1,1],[0,0]]")
    nil = _el(q, "[[0,1],[0,0]]")
    d = _el(q, "[[2,0],[0,0]]")
    z6 = parse_ring("zmod:6")
    z4 = parse_ring("zmod:4")

    def regular_units():
        rep = inv.regular_unit_characterization(b, _el(q, "[[1,0],[0,0]]"), 2)
        return rep.units["u"] == _el(q, "[[1,0],[1,2]]") and rep.units["v"] == _el(q, "[[2,0],[0,1]]")

    def along_witness():
        return inv.invertible_along_power_star(d, 2).x == _el(q, "[[1/8,0],[0,0]]")

    def zmod_projection():
        v = inv.projection_uniqueness(z6.element(2), 2)
        return v.status == "unique" and v.projections == (z6.element(3),)

    def z6_inverses():
        pf = inv.compute_portfolio(z6.element(2))
        two = z6.element(2)
        return all(pf.value(c) == two for c in ("mp", "group", "core", "dual-core"))

    return [
        ("[[1,1],[0,0]] core = [[1,0],[0,0]]", lambda: inv.core_inverse(b) == _el(q, "[[1,0],[0,0]]")),
        ("[[1,1],[0,0]] dual core = [[1/2,1/2],[1/2,1/2]]",
         lambda: inv.dual_core_inverse(b) == _el(q, "[[1/2,1/2],[1/2,1/2]]")),
        ("[[1,1],[0,0]] mp = [[1/2,0],[1/2,0]]", lambda: inv.mp_inverse(b) == _el(q, "[[1/2,0],[1/2,0]]")),
        ("[[1,1],[0,0]] is not EP", lambda: not inv.compute_portfolio(b).ep),
        ("[[1,1],[0,0]] regular units u = [[1,0],[1,2]], v = [[2,0],[0,1]]", regular_units),
        ("diag(2,0) along witness x = diag(1/8,0)", along_witness),
        ("diag(2,0) mp = diag(1/2,0)", lambda: inv.mp_inverse(d) == _el(q, "[[1/2,0],[0,0]]")),
        ("nilpotent has no group inverse",
         lambda: _raises(lambda: inv.group_inverse(nil), inv.NotGroupInvertible)),
        ("nilpotent has no core inverse",
         lambda: _raises(lambda: inv.core_inverse(nil), inv.NotCoreInvertible)),
        ("zmod:6 element 2 has all four inverses equal to 2", z6_inverses),
        ("zmod:6 projection 3 is the unique one for a = 2, n = 2", zmod_projection),
        ("zmod:4 element 2 is not regular",
         lambda: _raises(lambda: linalg.inner_inverse(z4.element(2)), NotRegular)),
        ("zmod:6 invert(5) = 5", lambda: linalg.invert(z6.element(5)) == z6.element(5)),
        ("zmod:6 invert(2) fails", lambda: _raises(lambda: linalg.invert(z6.element(2)), NotInvertible)),
    ]


def run_fixtures():
    out = []
    for name, check in _example_fixtures() + _derived_fixtures():
        try:
            ok = bool(check())
            detail = ""
        except (NotGenInvertible, NotInIdeal, NotRegular, inv.ValidationFailure) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(FixtureResult(name, ok, detail))
    return out
