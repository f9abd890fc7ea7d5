import pytest

from starinv import inverses as inv
from starinv import lab
from starinv.errors import NotEnumerable
from starinv.linalg import LEFT, annihilator, is_invertible
from starinv.ring import enumerate_ring, parse_ring

from conftest import EX43, Q2, QI_T


# -- oracle ------------------------------------------------------------------


def test_oracle_zmod6(el):
    two = el("zmod:6", "2")
    rep = lab.brute_force_oracle(two.ctx, two)
    assert rep.regular and rep.ep and rep.unique
    assert rep.mp == rep.group == rep.core == rep.dual_core == two


def test_oracle_not_regular(el):
    two = el("zmod:4", "2")
    rep = lab.brute_force_oracle(two.ctx, two)
    assert not rep.regular and not rep.inner
    assert rep.mp is rep.group is rep.core is rep.dual_core is None


@pytest.mark.parametrize("spec", ["zmod:10", "mat:2:F2:transpose", "mat:2:F2^2:ctranspose"])
def test_oracle_identity(spec):
    ctx = parse_ring(spec)
    rep = lab.brute_force_oracle(ctx, ctx.one())
    assert all(rep.value(c).is_one() for c in ("mp", "group", "core", "dual-core"))


def test_oracle_values_satisfy_definitions():
    table = lab.FiniteRing(parse_ring("mat:2:F3:transpose"), tables=True)
    for a in table.elements[::5]:
        rep = lab.brute_force_oracle(a.ctx, a, table)
        for cls in ("mp", "group", "core", "dual-core"):
            v = rep.value(cls)
            if v is not None:
                assert inv.CHECKS[cls](a, v)
        assert all(inv.is_one_three(a, x) for x in rep.one_three)


def test_oracle_not_enumerable(el):
    with pytest.raises(NotEnumerable):
        lab.brute_force_oracle(parse_ring(Q2), el(Q2, "[[1,0],[0,0]]"))


# -- verify_theorem spec examples ---------------------------------------------


def test_t211_ep_element(el):
    v = lab.verify_theorem(el(Q2, "[[2,0],[0,0]]"), "T2.11", n=2)
    assert len(v.conditions) == 7 and all(v.conditions.values())
    assert v.agree and v.passed
    tags = [t for t, _ in v.formulas]
    assert len(tags) == 5 and all(ok for _, ok in v.formulas)


def test_t33_nilpotent(el):
    v = lab.verify_theorem(el(Q2, "[[0,1],[0,0]]"), "T3.3", n=2)
    assert not any(v.conditions.values())
    assert v.agree and v.passed


def test_t41_units(el):
    a = el(Q2, "[[1,1],[0,0]]")
    v = lab.verify_theorem(a, "T4.1", n=2, a_inner=el(Q2, "[[1,0],[0,0]]"))
    assert len(v.conditions) == 6 and all(v.conditions.values())
    assert v.passed
    assert v.details["u"] == "[[1,0],[1,2]]"


def test_t33_zmod_details(el):
    v = lab.verify_theorem(el("zmod:6", "2"), "T3.3", n=2)
    assert v.passed
    assert v.details["p"] == "3" and v.details["u"] == "1"


def test_example_theorems(el):
    a = el(QI_T, EX43)
    for th in ("P2.9-I", "P2.9-II", "T2.10", "T2.11", "T3.3", "T3.4", "T3.7", "T3.8", "C4.2", "P4.4",
               "T4.6"):
        v = lab.verify_theorem(a, th)
        assert v.passed, v.render()
    v = lab.verify_theorem(a, "T2.10", n=2)
    assert list(v.conditions.values()) == [True, True, False, False]
    v = lab.verify_theorem(a, "T4.1", n=2, a_inner=a)
    assert v.passed and not any(v.conditions.values())


def test_parameter_errors(el):
    a = el(Q2, "[[1,1],[0,0]]")
    with pytest.raises(ValueError):
        lab.verify_theorem(a, "T9.9")
    with pytest.raises(ValueError):
        lab.verify_theorem(a, "T2.10", n=1)
    with pytest.raises(ValueError):
        lab.verify_theorem(a, "T3.4", n=2)
    with pytest.raises(ValueError):
        lab.verify_theorem(a, "T4.1", n=2, a_inner=el(Q2, "[[0,0],[0,1]]"))
    with pytest.raises(ValueError):
        lab.verify_theorem(a, "L2.6")


def test_verdict_relations():
    ctx = parse_ring("zmod:2")
    v = lab.TheoremVerdict("X", ctx.one(), {}, {"a": True, "b": False}, [("equiv", ("a", "b"))])
    assert not v.agree and not v.passed and v.bits == "10"
    v.relations = [("implies", ("b", "a"))]
    assert v.agree
    v.formulas = [("f", False)]
    assert not v.passed
    rec = v.to_record()
    assert list(rec) == ["theorem", "ring", "element", "params", "conditions", "agree", "formulas"]


def test_disagreement_is_reported_not_raised(el):
    # a broken fact source must surface as a failed verdict
    a = el(Q2, "[[1,1],[0,0]]")
    facts = lab.element_facts(a)
    broken = lab.ElementFacts(a, facts.mp, facts.group, None, facts.dual_core, True, True, "test")
    v = lab.verify_theorem(a, "T2.10", n=2, facts=broken)
    assert not v.agree and not v.passed


def test_t37_both_readings_on_finite_ring():
    ctx = parse_ring("mat:2:F2^2:ctranspose")
    table = lab.FiniteRing(ctx, tables=True)
    for a in table.elements[::7]:
        v = lab.verify_theorem(a, "T3.7", finite=table)
        assert v.passed, v.render()
        assert len(v.relations) == 2


def test_t211_n1_is_flagged(el):
    v = lab.verify_theorem(el(Q2, "[[1,1],[0,0]]"), "T2.11", n=1)
    assert v.passed and v.notes


# -- random elements -----------------------------------------------------------


def test_random_element_profiles():
    ctx = parse_ring("mat:3:Q:transpose")
    a = lab.random_element(ctx, 3, "full", seed=1)
    assert is_invertible(a)
    e = lab.random_element(ctx, 3, "idempotent:1", seed=2)
    assert e * e == e and not e.is_zero()
    n = lab.random_element(ctx, 3, "nilpotent", seed=3)
    assert (n * n * n).is_zero()
    h = lab.random_element(parse_ring("mat:3:Qi:ctranspose"), 3, "hermitian:2", seed=4)
    assert h.is_hermitian()
    r = lab.random_element(ctx, 3, "rank:1", seed=5)
    assert annihilator(r, LEFT).rank == 6
    with pytest.raises(ValueError):
        lab.random_element(ctx, 3, "sparkly", seed=0)


def test_random_element_determinism():
    ctx = parse_ring("mat:4:Qi:ctranspose")
    for profile in (None, "full", "rank:2", "mixed:1"):
        assert lab.random_element(ctx, 5, profile, seed=9) == lab.random_element(ctx, 5, profile, seed=9)
    assert list(lab.random_stream(ctx, 10, 5, 3)) == list(lab.random_stream(ctx, 10, 5, 3))


# -- sweeps --------------------------------------------------------------------


def test_sweep_zmod6():
    s = lab.sweep(parse_ring("zmod:6"))
    assert s.ok and s.elements == 6
    assert set(lab.THEOREMS) <= set(s.counts)


def test_sweep_f2():
    s = lab.sweep(parse_ring("mat:2:F2:transpose"))
    assert s.ok and s.elements == 16
    assert s.counts["ORACLE"] == [16, 0]


def test_sweep_random_q3():
    s = lab.sweep(parse_ring("mat:3:Q:transpose"), sampler="random", count=200, entry_bound=3, seed=42)
    assert s.ok, s.lines()
    assert s.elements == 200


def test_sweep_exhaustive_needs_finite():
    with pytest.raises(NotEnumerable):
        lab.sweep(parse_ring(Q2))


def test_sweep_exponent_override():
    s = lab.sweep(parse_ring("zmod:5"), theorems=["T2.10", "T3.4", "P4.4"], ns=[1])
    assert "T2.10" not in s.counts and s.counts["T3.4"][0] == 5 and s.counts["P4.4"][0] == 5


def test_sweep_reports_deterministic(tmp_path):
    paths = []
    for i in range(2):
        s = lab.sweep(parse_ring("mat:2:Qi:ctranspose"), sampler="random", count=15, seed=5, audit=True)
        p = tmp_path / f"r{i}.jsonl"
        s.write_report(p)
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_route_audit(el):
    for text in ("[[1,1],[0,0]]", "[[0,1],[0,0]]", "[[2,0],[0,0]]", "[[1,2],[3,4]]"):
        checks = lab.route_audit(el(Q2, text))
        assert checks and all(ok for _, ok in checks), checks


def test_finite_ring_collections():
    fr = lab.FiniteRing(parse_ring("zmod:6"))
    assert {p.payload for p in fr.projections} == {0, 1, 3, 4}
    assert len(fr) == 6
    assert len(list(enumerate_ring(parse_ring("zmod:6")))) == 6
