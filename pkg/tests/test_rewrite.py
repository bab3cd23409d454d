"""Rewriting and completion tests.

The group-algebra cases double as independent oracles: dihedral and cyclic
group facts (orders, products of reflections) are checked against normal
forms computed by the engine.
"""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbench.freealg import FreeAlgebra
from hopfbench.gf import make_field
from hopfbench.rewrite import (
    complete,
    enumerate_basis,
    find_ambiguities,
    make_system,
    normal_form,
    resolve_ambiguity,
)


def build(p, k, names, rel_texts):
    ctx = FreeAlgebra(make_field(p, k), list(names))
    sys = make_system(ctx, [ctx.parse_poly(t) for t in rel_texts])
    return ctx, sys


def nf_text(ctx, sys, text):
    return ctx.format_poly(normal_form(ctx.parse_poly(text), sys))


# -- plain reduction ----------------------------------------------------------


def test_skew_commutator_example():
    # gx -> xg + g + 1 together with g^2 -> 1, over GF(2)
    ctx, sys = build(2, 1, ["x", "g"], ["g^2 + 1", "gx + xg + g + 1"])
    assert nf_text(ctx, sys, "ggx") == "x"
    # compatibility of reduction with multiplication
    f = ctx.parse_poly("gx")
    g = ctx.parse_poly("g")
    lhs = normal_form(ctx.mul(g, normal_form(f, sys)), sys)
    assert lhs == normal_form(ctx.mul(g, f), sys)


def test_cyclic_power_reduction():
    ctx, sys = build(2, 1, ["g"], ["g^4 + 1"])
    assert nf_text(ctx, sys, "g^5") == "g"
    assert nf_text(ctx, sys, "g^4") == "1"
    assert nf_text(ctx, sys, "g^3") == "g^3"


def test_normal_form_is_linear_and_idempotent():
    ctx, sys = build(2, 1, ["x", "g"], ["g^2 + 1", "gx + xg + g + 1"])

    @given(st.dictionaries(st.lists(st.integers(0, 1), max_size=5).map(tuple), st.just(1), max_size=4))
    @settings(max_examples=60, deadline=None)
    def inner(f):
        nf = normal_form(f, sys)
        assert normal_form(nf, sys) == nf
        g = ctx.parse_poly("gxg")
        assert normal_form(ctx.add(f, g), sys) == ctx.add(nf, normal_form(g, sys))

    inner()


# -- ambiguities --------------------------------------------------------------


def test_overlap_detection_and_resolution():
    ctx, sys = build(2, 1, ["x", "g"], ["g^2 + 1", "gx + xg + g + 1"])
    ambs = find_ambiguities(sys)
    # g^2 with itself at g^3, and g^2 against gx at g^2x
    kinds = {(a.kind, ctx.format_word(a.superword)) for a in ambs}
    assert ("overlap", "g^3") in kinds
    assert ("overlap", "g^2x") in kinds
    for a in ambs:
        assert resolve_ambiguity(a, sys) == {}, ctx.format_word(a.superword)


def test_inclusion_ambiguity():
    ctx, sys = build(2, 1, ["x", "g"], ["gxg + x", "xg + g"])
    ambs = find_ambiguities(sys)
    assert any(a.kind == "inclusion" for a in ambs)
    comp, status = complete(sys)
    assert status == "confluent"
    for a in find_ambiguities(comp):
        assert resolve_ambiguity(a, comp) == {}


# -- completion ---------------------------------------------------------------


def test_dihedral_group_algebra():
    # r^4 = s^2 = 1, s r = r^3 s encoded over GF(2); 8 group elements
    ctx, sys = build(2, 1, ["g", "h"], ["g^4 + 1", "h^2 + 1", "hg + g^3h"])
    comp, status = complete(sys)
    assert status == "confluent"
    words, finite = enumerate_basis(comp, cap=64)
    assert finite and len(words) == 8
    # dihedral facts: s r s = r^-1, and any reflection squares to 1
    assert nf_text(ctx, comp, "hgh") == nf_text(ctx, comp, "g^3")
    assert nf_text(ctx, comp, "ghgh") == "1"
    assert nf_text(ctx, comp, "g^2hg^2h") == "1"
    # all 8 normal forms are distinct group elements: closed under g-,h-mult
    seen = {w for w in words}
    for w in words:
        for letter in ("g", "h"):
            prod = normal_form(ctx.mul(ctx.monomial(w), ctx.parse_poly(letter)), comp)
            assert len(prod) == 1 and set(prod.values()) == {1}
            assert next(iter(prod)) in seen


def test_completion_finds_quantum_plane_is_confluent():
    ctx, sys = build(2, 2, ["x", "y"], ["yx + 2*xy"])  # yx = t*xy over GF(4)
    comp, status = complete(sys)
    assert status == "confluent"
    assert len(comp.rules) == 1
    words, finite = enumerate_basis(comp, cap=20)
    assert not finite  # free on x alone already infinite... truncated at cap
    assert len(words) == 21


def test_unit_collapse():
    ctx, sys = build(2, 1, ["g"], ["g^2 + 1", "g^2"])
    comp, status = complete(sys)
    assert status == "confluent"
    assert comp.unit_collapsed
    assert normal_form(ctx.parse_poly("g + 1"), comp) == {}
    words, finite = enumerate_basis(comp, cap=10)
    assert finite and words == []


def test_cap_exceeded_on_divergent_system():
    # x^2 -> xy keeps spawning rules x y^n x -> x y^(n+1)
    ctx, sys = build(2, 1, ["y", "x"], ["x^2 + xy"])
    comp, status = complete(sys)
    assert status == "cap_exceeded"
    comp2, status2 = complete(sys, degree_cap=12)
    assert status2 == "cap_exceeded"
    assert max(len(r.lead) for r in comp2.rules) > max(len(r.lead) for r in comp.rules)


def test_completion_is_deterministic():
    ctx, sys = build(2, 1, ["g", "h"], ["g^4 + 1", "h^2 + 1", "hg + g^3h"])
    a, _ = complete(sys)
    b, _ = complete(sys)
    assert [(r.lead, r.tail) for r in a.rules] == [(r.lead, r.tail) for r in b.rules]


def test_completed_normal_forms_agree_on_ideal():
    # every input relation must reduce to zero under the completed system
    ctx, sys = build(3, 1, ["x", "g"], ["g^3 + 2", "gx + 2xg + 2g + 2g^2"])
    comp, status = complete(sys)
    assert status == "confluent"
    for rel in ["g^3 + 2", "gx + 2xg + 2g + 2g^2"]:
        assert normal_form(ctx.parse_poly(rel), comp) == {}


def test_enumerate_basis_ascending_and_prefix_closed():
    ctx, sys = build(2, 1, ["x", "g"], ["g^2 + 1", "gx + xg + g + 1", "x^4"])
    comp, status = complete(sys)
    assert status == "confluent"
    words, finite = enumerate_basis(comp, cap=100)
    assert finite
    keys = [ctx.deglex_key(w) for w in words]
    assert keys == sorted(keys)
    wordset = set(words)
    for w in words:
        assert w[:-1] in wordset or w == ()
