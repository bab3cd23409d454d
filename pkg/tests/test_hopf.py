"""Hopf construction, axiom verification, collapse reporting, morphisms.

The running examples: the cyclic group algebra kC4, a 4-dimensional
char-2 analogue of the Taft algebra, and the 16-dimensional algebra with
dihedral coradical and one skew-primitive (built at several parameter values
and over GF(4) for the isomorphism tests).
"""

from __future__ import annotations

import pytest

from hopfbench.findim import generated_subspace_dim
from hopfbench.gf import make_field, rank_nullspace
from hopfbench.hopf import (
    CollapseReport,
    GenSpec,
    HopfAlgebra,
    HopfPresentation,
    bosonize,
    build_hopf,
    check_axioms,
    compute_antipode,
    grouplikes,
    iso_search,
    skew_primitive_space,
)


def present(p, k, gens, rels, claimed=None):
    return HopfPresentation(make_field(p, k), gens, rels, claimed_dim=claimed)


def cyclic4(p=2, k=1):
    return present(p, k, [GenSpec("g", "grouplike")], ["g^4 - 1"], claimed=4)


def dihedral16(lam, p=2, k=1):
    """Dihedral-coradical dim-16 algebra with x skew-primitive for g^2."""
    gens = [GenSpec("g", "grouplike"), GenSpec("h", "grouplike"), GenSpec("x", "skewprim", "g^2")]
    rels = [
        "g^4 - 1",
        "h^2 - 1",
        "hg - g^3h",
        "gx - xg - (g - g^3)",
        f"hx - xh - {lam}*(h - hg^2)",
        "x^2",
    ]
    return present(p, k, gens, rels, claimed=16)


def taft4():
    gens = [GenSpec("g", "grouplike"), GenSpec("x", "skewprim", "g")]
    return present(2, 1, gens, ["g^2 - 1", "gx - xg", "x^2"], claimed=4)


@pytest.fixture(scope="module")
def HC4():
    H = build_hopf(cyclic4())
    assert isinstance(H, HopfAlgebra)
    return H


@pytest.fixture(scope="module")
def H16():
    H = build_hopf(dihedral16(0))
    assert isinstance(H, HopfAlgebra)
    return H


# -- construction -------------------------------------------------------------


def test_cyclic4_builds(HC4):
    assert HC4.dim == 4
    assert HC4.A.labels == ["1", "g", "g^2", "g^3"]
    assert check_axioms(HC4).ok


def test_cyclic4_antipode_is_inverse_map(HC4):
    g = HC4.element("g")
    assert HC4.antipode_of(g) == HC4.element("g^3")
    M = compute_antipode(HC4)
    # S permutes the group basis by inversion: columns 0,1,2,3 -> 1, g^3, g^2, g
    assert M[0][0] == 1 and M[3][1] == 1 and M[2][2] == 1 and M[1][3] == 1
    # S is an involution here
    n = HC4.dim
    f = HC4.field
    sq = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sq[i][j] = 0
            for t in range(n):
                sq[i][j] = f.add(sq[i][j], f.mul(M[i][t], M[t][j]))
    assert all(sq[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def test_dihedral16_builds_and_passes_axioms(H16):
    assert H16.dim == 16
    report = check_axioms(H16)
    assert report.ok, report.checks
    assert report.failing() == []


def test_dihedral16_antipode_on_skew_generator(H16):
    # S(x) = -(g^2)^(-1) x = g^2 x in characteristic 2
    x = H16.element("x")
    assert H16.antipode_of(x) == H16.element("g^2x")


def test_taft4_builds():
    H = build_hopf(taft4())
    assert isinstance(H, HopfAlgebra)
    assert H.dim == 4
    assert check_axioms(H).ok
    # S(x) = -g^{-1} x = gx
    assert H.antipode_of(H.element("x")) == H.element("gx")


# -- grouplikes and skew primitives -------------------------------------------


def test_grouplikes_enumerate_cyclic(HC4):
    els = grouplikes(HC4, mode="enumerate")
    assert len(els) == 4
    for v in els:
        assert len(v) == 1 and set(v.values()) == {1}


def test_grouplikes_enumerate_dihedral(H16):
    els = grouplikes(H16, mode="enumerate")
    assert len(els) == 8
    keys = {tuple(sorted(v.items())) for v in els}
    group = {tuple(sorted(v.items())) for v in H16.group_elements()}
    assert keys == group


def test_grouplikes_verify(H16):
    checked = grouplikes(H16, mode="verify", elements=["g", "gh", "1", "x", "g + x", "g^2h"])
    oks = [ok for _, ok in checked]
    assert oks == [True, True, True, False, False, True]


def test_grouplikes_enumerate_infeasible_raises():
    H = build_hopf(dihedral16(0, 2, 2))  # GF(4)^16 is out of reach
    with pytest.raises(ValueError):
        grouplikes(H, mode="enumerate")


def test_skew_primitive_space_dihedral(H16):
    basis = skew_primitive_space(H16, "1", "g^2")
    assert len(basis) == 2
    # both x and 1 - g^2 lie in the space
    from hopfbench.gf import RowSpan

    span = RowSpan(H16.field, H16.dim)
    for v in basis:
        span.insert(v)
    assert span.contains(H16.element("x"))
    assert span.contains(H16.element("1 - g^2"))


def test_skew_primitive_space_group_algebra(HC4):
    # in a group algebra: P_{1,1} = 0 and g - h always belongs to P_{g,h}
    assert skew_primitive_space(HC4, "1", "1") == []
    basis = skew_primitive_space(HC4, "1", "g^2")
    from hopfbench.gf import RowSpan

    span = RowSpan(HC4.field, HC4.dim)
    for v in basis:
        span.insert(v)
    assert span.contains(HC4.element("1 - g^2"))


def test_tensor_square_nilpotency(H16):
    gx = H16.flatten(H16.element("g"), H16.element("x"))
    assert H16.tmult(gx, gx) == {}


# -- collapse taxonomy ---------------------------------------------------------


def test_collapse_unit():
    P = present(2, 1, [GenSpec("g", "grouplike")], ["g^2 - 1", "g^2"])
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "unit_collapse"


def test_collapse_dimension_drop():
    P = present(2, 1, [GenSpec("g", "grouplike")], ["g^4 - 1", "g^2 - 1"], claimed=4)
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "dimension_drop"
    assert rep.detail["dim"] == 2


def test_collapse_dimension_mismatch():
    P = present(2, 1, [GenSpec("g", "grouplike")], ["g^4 - 1"], claimed=2)
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "dimension_mismatch"


def test_collapse_counit_failure():
    P = present(2, 1, [GenSpec("g", "grouplike")], ["g^4"], claimed=4)
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "non_coideal"
    assert "counit" in rep.message


def test_collapse_coideal_failure():
    gens = [GenSpec("g", "grouplike"), GenSpec("x", "skewprim", "g")]
    P = present(2, 1, gens, ["g^2 - 1", "gx - xg", "x^2 - g - 1"])
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "non_coideal"
    assert "coproduct" in rep.message


def test_collapse_no_antipode():
    # idempotent "grouplike": a bialgebra with no antipode
    P = present(2, 1, [GenSpec("e", "grouplike")], ["e^2 - e"])
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "antipode_failure"


def test_collapse_not_finite():
    P = present(2, 1, [GenSpec("g", "grouplike")], [])
    rep = build_hopf(P)
    assert isinstance(rep, CollapseReport) and rep.kind == "not_finite"


def test_collapse_cap_exceeded():
    gens = [GenSpec("y", "grouplike"), GenSpec("x", "grouplike")]
    rep = build_hopf(present(2, 1, gens, ["x^2 - xy"]))
    assert isinstance(rep, CollapseReport) and rep.kind == "completion_cap_exceeded"


# -- fault injection against check_axioms --------------------------------------


def corrupt(H, attr, index, key):
    import copy

    H2 = HopfAlgebra(H.presentation, H.A)
    H2.delta = [dict(d) for d in H.delta]
    H2.eps = list(H.eps)
    H2.S = [dict(s) for s in H.S]
    H2.gen_vectors = H.gen_vectors
    H2.gen_delta = H.gen_delta
    target = getattr(H2, attr)[index]
    if isinstance(target, dict):
        if key in target:
            del target[key]
        else:
            target[key] = 1
    else:
        getattr(H2, attr)[index] = 1 if target == 0 else 0
    return H2


def test_fault_injected_delta_detected(H16):
    bad = corrupt(H16, "delta", 5, 0)
    rep = check_axioms(bad)
    assert not rep.ok
    assert set(rep.failing()) & {"coassociativity", "counit", "comult_multiplicative"}


def test_fault_injected_eps_detected(H16):
    bad = corrupt(H16, "eps", 1, None)
    rep = check_axioms(bad)
    assert not rep.ok
    assert "counit" in rep.failing() or "counit_multiplicative" in rep.failing()


def test_fault_injected_antipode_detected(H16):
    bad = corrupt(H16, "S", 3, 7)
    rep = check_axioms(bad)
    assert not rep.ok
    assert set(rep.failing()) & {"antipode_left", "antipode_right"}


# -- presentation text round trip ----------------------------------------------


def test_presentation_text_round_trip():
    P = dihedral16(1)
    text = P.to_text()
    Q = HopfPresentation.from_text(text)
    assert Q.field is P.field
    assert [(g.name, g.kind, g.coaction) for g in Q.gens] == [(g.name, g.kind, g.coaction) for g in P.gens]
    assert Q.relations == P.relations
    # comments and blank lines are ignored
    text2 = "# header\n\n" + text
    assert HopfPresentation.from_text(text2).relations == P.relations


def test_presentation_rejects_bad_coaction():
    gens = [GenSpec("g", "grouplike"), GenSpec("x", "skewprim", "x")]
    with pytest.raises(ValueError):
        present(2, 1, gens, [])


# -- bosonize -------------------------------------------------------------------


def test_bosonize_assembles_taft():
    fld = make_field(2, 1)
    P = bosonize(
        {"field": fld, "gens": ["g"], "relations": ["g^2 - 1"]},
        {},
        {"x": "g"},
        ["x^2"],
    )
    H = build_hopf(P)
    assert isinstance(H, HopfAlgebra)
    assert H.dim == 4
    assert check_axioms(H).ok


def test_bosonize_rejects_noncentral_tag():
    fld = make_field(2, 1)
    group = {"field": fld, "gens": ["g", "h"], "relations": ["g^4 - 1", "h^2 - 1", "hg - g^3h"]}
    with pytest.raises(ValueError):
        bosonize(group, {}, {"x": "g"}, ["x^2"])  # g is not central in the dihedral group
    # g^2 is central: accepted
    P = bosonize(group, {}, {"x": "g^2"}, ["x^2"])
    assert isinstance(P, HopfPresentation)


def test_bosonize_rejects_tag_mixing_action():
    fld = make_field(2, 1)
    group = {"field": fld, "gens": ["g"], "relations": ["g^2 - 1"]}
    with pytest.raises(ValueError):
        bosonize(group, {("g", "x"): "y"}, {"x": "g", "y": "1"}, ["x^2", "y^2"])


# -- isomorphism search ----------------------------------------------------------


def test_iso_self(H16):
    morphs = iso_search(H16, H16, limit=1)
    assert morphs
    phi = morphs[0]
    # independent verification: the matrix is invertible and products are preserved
    M = phi.matrix()
    rank, _ = rank_nullspace(M, H16.field)
    assert rank == 16
    import random

    rng = random.Random(1)
    for _ in range(10):
        i, j = rng.randrange(16), rng.randrange(16)
        lhs = phi.apply_word(H16.A.basis[i] + H16.A.basis[j])
        prod = H16.A.get_mult(i, j)
        rhs = {}
        for t, c in prod.items():
            for s, d in phi.apply_word(H16.A.basis[t]).items():
                v = H16.field.add(rhs.get(s, 0), H16.field.mul(c, d))
                if v:
                    rhs[s] = v
                elif s in rhs:
                    del rhs[s]
        assert lhs == rhs


def test_iso_lambda_shift_exists(H16):
    H1 = build_hopf(dihedral16(1))
    assert isinstance(H1, HopfAlgebra)
    morphs = iso_search(H16, H1, limit=1)
    assert morphs


def test_iso_gf4_distinguishes_parameters():
    H0 = build_hopf(dihedral16(0, 2, 2))
    Ht = build_hopf(dihedral16(2, 2, 2))  # parameter t
    Ht1 = build_hopf(dihedral16(3, 2, 2))  # parameter t + 1
    assert all(isinstance(h, HopfAlgebra) for h in (H0, Ht, Ht1))
    assert iso_search(H0, Ht, limit=1) == []
    assert iso_search(Ht, Ht1, limit=1) != []


def test_iso_dimension_mismatch_is_empty(HC4, H16):
    assert iso_search(HC4, H16) == []


def test_generated_subspace_certifies_surjectivity(H16):
    vecs = [H16.element("g"), H16.element("h"), H16.element("x")]
    assert generated_subspace_dim(vecs, H16.A) == 16
    vecs2 = [H16.element("g"), H16.element("h")]
    assert generated_subspace_dim(vecs2, H16.A) == 8
