import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starinv import inverses as inv
from starinv.errors import (
    BadHermitian,
    BadWitness,
    DNotRegular,
    MissingPrerequisite,
    NotAnnihilating,
    NotCoreInvertible,
    NotDualCoreInvertible,
    NotGroupInvertible,
    NotInvertibleAlong,
    NotMPInvertible,
    NotOneFourInvertible,
    NotRegularPair,
    UnitNotInvertible,
)
from starinv.lab import random_element
from starinv.linalg import is_invertible
from starinv.ring import enumerate_ring, parse_ring

from conftest import EX43, Q2, QI_T


@pytest.fixture
def q(el):
    return lambda text: el(Q2, text)


@pytest.fixture
def ex(el):
    return el(QI_T, EX43)


# -- one-sided ------------------------------------------------------------


def test_one_three(el, q, ex):
    assert inv.one_three_inverse(ex) == el(QI_T, "[[1,0],[0,0]]")
    assert inv.one_three_inverse(q("[[0,1],[0,0]]")) == q("[[0,0],[1,0]]")
    assert inv.one_three_inverse(q("[[1,0],[0,1]]")) == q("[[1,0],[0,1]]")


def test_one_four(q, ex):
    with pytest.raises(NotOneFourInvertible):
        inv.one_four_inverse(ex)
    assert inv.one_four_inverse(q("[[1,1],[0,0]]")) == q("[[1/2,0],[1/2,0]]")
    assert inv.one_four_inverse(q("[[1,0],[0,1]]")).is_one()


# -- MP and group ---------------------------------------------------------


def test_mp_examples(el, q, ex):
    ct = "mat:2:Qi:ctranspose"
    a = el(ct, EX43)
    x = inv.mp_inverse(a)
    assert x == el(ct, "[[1/2,0],[-1/2i,0]]")
    assert inv.is_mp(a, x)
    with pytest.raises(NotMPInvertible):
        inv.mp_inverse(ex)
    assert inv.mp_inverse(q("[[2,0],[0,0]]")) == q("[[1/2,0],[0,0]]")


def test_mp_routes_agree(q):
    a = q("[[1,2],[2,4]]")
    assert inv.mp_by_composition(a) == inv.mp_by_witness(a) == inv.mp_inverse(a)


def test_group_examples(el, q):
    a = q("[[1,1],[0,0]]")
    assert inv.group_inverse(a) == a
    with pytest.raises(NotGroupInvertible):
        inv.group_inverse(q("[[0,1],[0,0]]"))
    assert inv.group_inverse(el("zmod:6", "2")) == el("zmod:6", "2")


# -- core and dual core ---------------------------------------------------


def test_core_examples(el, q, ex):
    assert inv.core_inverse(q("[[1,1],[0,0]]")) == q("[[1,0],[0,0]]")
    assert inv.core_inverse(ex) == el(QI_T, "[[1,0],[0,0]]")
    with pytest.raises(NotCoreInvertible) as info:
        inv.core_inverse(q("[[0,1],[0,0]]"))
    assert info.value.diagnosis


def test_dual_core_examples(q, ex):
    assert inv.dual_core_inverse(q("[[1,1],[0,0]]")) == q("[[1/2,1/2],[1/2,1/2]]")
    with pytest.raises(NotDualCoreInvertible):
        inv.dual_core_inverse(ex)
    p = q("[[1/2,1/2],[1/2,1/2]]")
    assert inv.dual_core_inverse(p) == p


def test_core_routes_for_several_n(q):
    a = q("[[1,1],[0,0]]")
    for n in (2, 3, 4):
        assert inv.core_by_power_star(a, n) == inv.core_by_composition(a)
        assert inv.dual_core_by_power_star(a, n) == inv.dual_core_by_composition(a)
    with pytest.raises(ValueError):
        inv.core_inverse(a, 1)


def test_zero_convention(q):
    z = q("[[0,0],[0,0]]")
    pf = inv.compute_portfolio(z)
    assert pf.value("core") == z == pf.value("dual-core")
    uc = inv.unit_characterization_core(z, 1)
    assert uc.p.is_one() and uc.u.is_one()


def test_group_from_core(q):
    a = q("[[1,1],[0,0]]")
    pf = inv.compute_portfolio(a)
    assert inv.group_from_core(pf, "core") == a
    assert inv.group_from_core(pf, "dual-core") == a
    one = q("[[1,0],[0,1]]")
    assert inv.group_from_core(inv.compute_portfolio(one)).is_one()
    with pytest.raises(MissingPrerequisite):
        inv.group_from_core(inv.compute_portfolio(q("[[0,1],[0,0]]")))


# -- portfolio invariants --------------------------------------------------


def _portfolio_invariants(pf):
    e = pf.exists
    assert e("mp") == (e("one-three") and e("one-four"))
    assert e("core") == (e("group") and e("one-three"))
    assert e("dual-core") == (e("group") and e("one-four"))
    assert pf.ep == (e("core") and e("dual-core") and pf.value("core") == pf.value("dual-core"))
    for cls in inv.CLASSES:
        if e(cls):
            assert inv.CHECKS[cls](pf.element, pf.value(cls))
    for w in pf.witnesses.entries.values():
        assert w.equation


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6),
       spec=st.sampled_from(["mat:2:Q:transpose", "mat:2:Qi:transpose", "mat:3:Qi:ctranspose"]),
       profile=st.sampled_from(["uniform", "rank:1", "nilpotent", "idempotent:1", "hermitian:1", "mixed:1"]))
def test_portfolio_invariants_random(seed, spec, profile):
    _portfolio_invariants(inv.compute_portfolio(random_element(parse_ring(spec), 3, profile, seed=seed)))


def test_portfolio_invariants_exhaustive():
    for a in enumerate_ring(parse_ring("mat:2:F2^2:ctranspose")):
        _portfolio_invariants(inv.compute_portfolio(a))


def test_portfolio_identity_and_example(el, ex):
    pf = inv.compute_portfolio(el(QI_T, "[[1,0],[0,1]]"))
    assert all(pf.value(c).is_one() for c in inv.CLASSES)
    pf = inv.compute_portfolio(ex)
    assert pf.value("core") == el(QI_T, "[[1,0],[0,0]]")
    assert not pf.exists("dual-core") and not pf.exists("mp")
    assert pf.witnesses["s"].value == el(QI_T, "[[1,0],[0,0]]")


# -- unit characterizations ------------------------------------------------


def test_unit_characterization_chain(q):
    a = q("[[1,1],[0,0]]")
    uc = inv.unit_characterization_core(a, 1)
    assert uc.p == q("[[0,0],[0,1]]")
    assert uc.u == q("[[1,1],[0,1]]")
    assert uc.u_inverse * a * uc.u_inverse == q("[[1,0],[0,0]]")
    uc2 = inv.unit_characterization_core(a, 2)
    assert uc2.u == q("[[1,1],[0,1]]")
    assert a * uc2.u_inverse == q("[[1,0],[0,0]]")
    for n in (1, 2, 3):
        assert inv.unit_characterization_core(q("[[1,0],[0,1]]"), n).p.is_zero()
        assert inv.unit_characterization_dual_core(a, n).recovered == inv.dual_core_inverse(a)


def test_core_from_hermitian_unit(q):
    a = q("[[1,1],[0,0]]")
    assert inv.core_from_hermitian_unit(a, q("[[0,0],[0,1]]"), 1) == q("[[1,0],[0,0]]")
    d = q("[[2,0],[0,0]]")
    assert inv.core_from_hermitian_unit(d, q("[[0,0],[0,3]]"), 2) == q("[[1/2,0],[0,0]]")
    nil = q("[[0,1],[0,0]]")
    for p in ("[[0,0],[0,1]]", "[[0,0],[0,-5]]", "[[0,0],[0,0]]"):
        with pytest.raises(UnitNotInvertible):
            inv.core_from_hermitian_unit(nil, q(p), 2)
    with pytest.raises(BadHermitian):
        inv.core_from_hermitian_unit(a, q("[[0,1],[0,1]]"), 1)
    with pytest.raises(NotAnnihilating):
        inv.core_from_hermitian_unit(a, q("[[1,0],[0,0]]"), 1)


def test_projection_uniqueness(el):
    v = inv.projection_uniqueness(el("zmod:6", "2"), 1)
    assert v.status == "unique" and v.projections == (el("zmod:6", "3"),)
    f2 = "mat:2:F2:transpose"
    v = inv.projection_uniqueness(el(f2, "[[1,0],[0,1]]"), 2)
    assert v.projections == (el(f2, "[[0,0],[0,0]]"),)
    v = inv.projection_uniqueness(el("zmod:6", "0"), 1)
    assert v.projections == (el("zmod:6", "1"),)
    v = inv.projection_uniqueness(el(Q2, "[[1,1],[0,0]]"), 2)
    assert v.status == "unverified-uniqueness" and v.canonical == el(Q2, "[[0,0],[0,1]]")


def test_ep_characterization(q):
    v = inv.ep_characterization(q("[[2,0],[0,0]]"), 1)
    assert v.is_ep and v.agree
    assert v.unit.p == q("[[0,0],[0,1]]") and v.unit.u == q("[[2,0],[0,1]]")
    v = inv.ep_characterization(q("[[1,1],[0,0]]"), 2)
    assert not v.is_ep and v.agree
    v = inv.ep_characterization(q("[[1,2],[3,4]]"), 2)
    assert v.is_ep and v.unit.p.is_zero()


# -- inverse along ---------------------------------------------------------


def test_inverse_along(q):
    a = q("[[1,1],[0,0]]")
    r = inv.inverse_along(a, a)
    assert r.value == a == inv.group_inverse(a)
    assert r.u == q("[[1,1],[0,1]]")
    d = q("[[2,0],[0,0]]")
    assert inv.inverse_along(d, d.star).value == q("[[1/2,0],[0,0]]") == inv.mp_inverse(d)
    one = q("[[1,0],[0,1]]")
    u = q("[[1,2],[3,4]]")
    assert inv.inverse_along(u, one).value == q("[[-2,1],[3/2,-1/2]]")
    with pytest.raises(NotInvertibleAlong):
        inv.inverse_along(q("[[0,1],[0,0]]"), one)


def test_inverse_along_needs_regular_d(el):
    with pytest.raises(DNotRegular):
        inv.inverse_along(el("zmod:4", "1"), el("zmod:4", "2"))


# -- regular units ----------------------------------------------------------


def test_regular_units(el, q, ex):
    a = q("[[1,1],[0,0]]")
    rep = inv.regular_unit_characterization(a, q("[[1,0],[0,0]]"), 2)
    assert rep.units["u"] == q("[[1,0],[1,2]]")
    assert rep.units["v"] == q("[[2,0],[0,1]]")
    assert rep.core == q("[[1,0],[0,0]]")
    assert rep.dual_core == q("[[1/2,1/2],[1/2,1/2]]")
    assert all(rep.invertible.values())
    rep = inv.regular_unit_characterization(ex, ex, 2)
    assert rep.units["u"] == el(QI_T, "[[1,0],[i,0]]")
    assert not any(rep.invertible.values())
    two = el("zmod:6", "2")
    rep = inv.regular_unit_characterization(two, two, 2)
    assert rep.units["u"] == el("zmod:6", "5")
    assert rep.core == rep.dual_core == rep.mp == rep.group == two
    with pytest.raises(NotRegularPair):
        inv.regular_unit_characterization(a, q("[[0,0],[0,1]]"), 2)


def test_regular_units_with_reference(q):
    a = q("[[1,2],[2,4]]")
    pf = inv.compute_portfolio(a)
    rep = inv.regular_unit_characterization(a, pf.value("inner"), 3, reference=pf)
    assert rep.mp == inv.mp_inverse(a)
    with pytest.raises(ValueError):
        inv.regular_unit_characterization(a, pf.value("inner"), 2, reference=inv.compute_portfolio(a + a))


def test_along_power_star(q, ex):
    d = q("[[2,0],[0,0]]")
    r = inv.invertible_along_power_star(d, 2)
    assert r.verdict and r.x == q("[[1/8,0],[0,0]]")
    assert r.mp == q("[[1/2,0],[0,0]]")
    r = inv.invertible_along_power_star(ex, 2)
    assert not r.verdict and not r.left_member
    r = inv.invertible_along_power_star(q("[[1,0],[0,1]]"), 3)
    assert r.verdict and r.core.is_one() and r.mp.is_one()


def test_prop44_witness(q, ex):
    d = q("[[2,0],[0,0]]")
    w = inv.prop44_witness(d, q("[[1/8,0],[0,0]]"), 2)
    assert w.solution == q("[[1/16,0],[0,0]]")
    one = q("[[1,0],[0,1]]")
    for n in (1, 2, 3):
        assert inv.prop44_witness(one, one, n).solution.is_one()
        assert inv.prop44_witness_dual(one, one, n).solution.is_one()
    for x in (ex, ex.ctx.one(), ex.star):
        with pytest.raises(BadWitness):
            inv.prop44_witness(ex, x, 2)


# -- Jacobson and Dedekind -------------------------------------------------


def test_jacobson(el, q):
    r = inv.jacobson_partner(q("[[0,1],[0,0]]"), q("[[0,0],[1,0]]"))
    assert r.agree and r.partner_ok
    assert r.inv_ab == q("[[1/2,0],[0,1]]")
    assert r.inv_ba == q("[[1,0],[0,1/2]]")
    r = inv.jacobson_partner(q("[[3,1],[2,2]]"), q("[[0,0],[0,0]]"))
    assert r.inv_ab.is_one() and r.inv_ba.is_one()
    r = inv.jacobson_partner(el("zmod:5", "2"), el("zmod:5", "3"))
    assert r.inv_ab == el("zmod:5", "3") == r.inv_ba


def test_jacobson_singular(q):
    r = inv.jacobson_partner(q("[[1,0],[0,0]]"), q("[[-1,0],[0,0]]"))
    assert not r.ab_invertible and not r.ba_invertible and r.agree


def test_dedekind_core(el, q):
    a = q("[[1,1],[0,0]]")
    r = inv.dedekind_core(a)
    assert r.w == q("[[1,1],[1,2]]")
    assert r.value == q("[[1,0],[0,0]]")
    assert r.left_invertible and r.right_invertible and r.companion
    assert inv.dedekind_core(q("[[1,0],[0,1]]")).value.is_one()
    r = inv.dedekind_core(el("zmod:6", "2"))
    assert r.p == el("zmod:6", "3") and r.w.is_one() and r.value == el("zmod:6", "2")
    with pytest.raises(NotCoreInvertible):
        inv.dedekind_core(q("[[0,1],[0,0]]"))


def test_units_track_invertibility_exhaustively():
    for a in enumerate_ring(parse_ring("mat:2:F3:transpose")):
        pf = inv.compute_portfolio(a)
        both = pf.exists("mp") and pf.exists("group")
        rep = inv.regular_unit_characterization(a, pf.value("inner"), 2, reference=pf)
        assert rep.agree and rep.invertible["u"] == both
        assert is_invertible(rep.units["t"]) == both
