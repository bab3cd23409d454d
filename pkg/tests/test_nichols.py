"""Braided spaces, quantum symmetrizer, graded Nichols dimensions.

Closed-form anchors: trivial braidings give truncated polynomial algebras
(binomial-type graded dimensions), a rank-1 space truncates at the
characteristic, and the unipotent rank-2 space in characteristic 2 closes at
total dimension 16.  The ladder route is cross-checked against a literal
permutation-by-permutation sum in low degree.
"""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbench.gf import make_field, matrix_rank, rank_nullspace
from hopfbench.nichols import (
    BraidedSpace,
    YdModuleData,
    bashev_module,
    braid_lift,
    check_braid_equation,
    make_braided,
    nichols_dims,
    perm_of_word,
    quantum_symmetrizer,
    reduced_word,
    symmetrizer_literal,
    yd_cyclic,
)

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)


def trunc_coeffs(p, m, deg):
    """Coefficients of ((1 - t^p)/(1 - t))^m up to degree deg."""
    poly = [1]
    block = [1] * p
    for _ in range(m):
        out = [0] * (len(poly) + p - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(block):
                out[i + j] += a * b
        poly = out
    return (poly + [0] * deg)[: deg + 1]


# -- constructors ---------------------------------------------------------------


def test_diagonal_rank1_identity():
    V = make_braided("diagonal:1", F2)
    assert V.m == 1 and V.c == ((1,),)


def test_jordan_formula_entries():
    V = make_braided("jordan:1,2", F2)
    # columns indexed e_i x e_j at i*m+j, 0-indexed basis (x1, x2)
    assert V.c_cols[2] == {1: 1}  # c(x2 x x1) = x1 x x2
    assert V.c_cols[3] == {3: 1, 1: 1}  # c(x2 x x2) = (x2 + x1) x x2
    assert V.c_cols[0] == {0: 1}
    assert V.c_cols[1] == {2: 1, 0: 1}


def test_yd_cyclic_matches_unipotent_braiding():
    # the 2-dimensional module over C4 with tag exponent 1 braids exactly
    # like the unipotent rank-2 space
    V = make_braided("yd-cyclic:1,2,4", F2)
    W = make_braided("jordan:1,2", F2)
    assert V.c == W.c


def test_bashev_action_shape():
    V = make_braided("bashev:1,0,0", F2)
    # tag acts by y -> y + x: c(v x y) = (y + x) x v
    assert V.c_cols[1] == {2: 1, 0: 1}  # c(x x y)
    assert V.c_cols[3] == {3: 1, 1: 1}  # c(y x y)


def test_direct_sum_requires_same_group():
    with pytest.raises(ValueError):
        make_braided("yd-cyclic:1,2,2+yd-cyclic:0,1,4", F2)
    with pytest.raises(ValueError):
        make_braided("jordan:1,2+yd-cyclic:0,1,2", F2)


def test_constructor_rejections():
    with pytest.raises(ValueError):
        make_braided("diagonal:0", F2)  # zero q-entry
    with pytest.raises(ValueError):
        make_braided("diagonal:2", F2)  # not a raw encoding over GF(2)
    with pytest.raises(ValueError):
        make_braided("jordan:0,2", F2)
    with pytest.raises(ValueError):
        make_braided("jordan:1,1", F2)
    with pytest.raises(ValueError):
        make_braided("yd-cyclic:1,3,2", F2)  # r exceeds the group order
    with pytest.raises(ValueError):
        make_braided("yd-cyclic:1,2,3", F2)  # group order not a power of 2
    with pytest.raises(ValueError):
        make_braided("bashev:1,0,0", F3)
    with pytest.raises(ValueError):
        make_braided("nonsense:1", F2)


def test_invalid_yd_data_rejected():
    # non-commuting actions
    bad = YdModuleData(F2, (((0, 1), (1, 0)), ((1, 1), (0, 1))), ((0, 0), (0, 0)), (2, 2))
    with pytest.raises(ValueError):
        make_braided(bad, F2)
    # action of wrong order
    bad2 = YdModuleData(F3, (((1, 1), (0, 1)),), ((1,), (1,)), (2,))
    with pytest.raises(ValueError):
        make_braided(bad2, F3)
    # grading not preserved
    bad3 = YdModuleData(F2, (((1, 1), (0, 1)),), ((0,), (1,)), (2,))
    with pytest.raises(ValueError):
        make_braided(bad3, F2)


# -- braid equation --------------------------------------------------------------


def test_braid_equation_diagonal_and_jordan():
    assert check_braid_equation(make_braided("diagonal:2,1;1,3", F4))
    assert check_braid_equation(make_braided("jordan:1,2", F2))
    assert check_braid_equation(make_braided("jordan:2,3", F3))


def test_braid_equation_fails_for_transvection():
    # an invertible map mixing the blocks that is not a braiding
    c = [
        [1, 0, 0, 0],
        [1, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 1],
    ]
    with pytest.raises(ValueError, match="braid equation"):
        BraidedSpace(F2, 2, c)
    # the checker itself, on an instance built without validation
    V = object.__new__(BraidedSpace)
    V.field, V.m = F2, 2
    V.c = tuple(tuple(r) for r in c)
    V.c_cols = tuple({i: c[i][j] for i in range(4) if c[i][j]} for j in range(4))
    assert not check_braid_equation(V)


def test_noninvertible_braiding_rejected():
    c = [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    with pytest.raises(ValueError, match="invertible"):
        BraidedSpace(F2, 2, c)


def test_braid_group_representation_relations():
    # adjacent braid relation on three factors, distant commutation on four
    from hopfbench.nichols import _apply_c_at

    for V in (make_braided("jordan:1,2", F2), make_braided("diagonal:2,1;1,2", F4)):
        d3 = V.m**3
        for j in range(d3):
            v = {j: 1}
            a = _apply_c_at(V, _apply_c_at(V, _apply_c_at(V, v, 1, 3), 2, 3), 1, 3)
            b = _apply_c_at(V, _apply_c_at(V, _apply_c_at(V, v, 2, 3), 1, 3), 2, 3)
            assert a == b
        d4 = V.m**4
        for j in range(d4):
            v = {j: 1}
            a = _apply_c_at(V, _apply_c_at(V, v, 3, 4), 1, 4)
            b = _apply_c_at(V, _apply_c_at(V, v, 1, 4), 3, 4)
            assert a == b


# -- reduced words and Matsumoto lifts --------------------------------------------


@given(st.permutations(list(range(6))))
def test_reduced_word_length_and_value(perm):
    perm = tuple(perm)
    word = reduced_word(perm)
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    assert len(word) == inversions
    assert perm_of_word(word, len(perm)) == perm


def _legal_moves(word):
    """All words obtained by one commutation or braid move."""
    out = []
    w = list(word)
    for i in range(len(w) - 1):
        if abs(w[i] - w[i + 1]) >= 2:
            out.append(tuple(w[:i] + [w[i + 1], w[i]] + w[i + 2 :]))
    for i in range(len(w) - 2):
        a, b = w[i], w[i + 1]
        if abs(a - b) == 1 and w[i + 2] == a:
            out.append(tuple(w[:i] + [b, a, b] + w[i + 3 :]))
    return out


@settings(deadline=None, max_examples=40)
@given(st.permutations(list(range(5))), st.randoms(use_true_random=False))
def test_matsumoto_lift_word_independent(perm, rng):
    V = make_braided("jordan:1,2", F2)
    n = len(perm)
    word = reduced_word(tuple(perm))
    lift0 = [braid_lift(V, n, word, {j: 1}) for j in range(V.m**n)]
    for _ in range(4):
        moves = _legal_moves(word)
        if not moves:
            break
        word = rng.choice(moves)
        assert perm_of_word(word, n) == tuple(perm)
        assert [braid_lift(V, n, word, {j: 1}) for j in range(V.m**n)] == lift0


# -- the symmetrizer ---------------------------------------------------------------


def test_symmetrizer_degree_one_is_identity():
    V = make_braided("jordan:1,2", F2)
    assert quantum_symmetrizer(V, 1) == [[1, 0], [0, 1]]


def test_symmetrizer_degree_two_is_id_plus_c():
    for V in (make_braided("jordan:1,2", F2), make_braided("diagonal:2,1;1,2", F4)):
        M = quantum_symmetrizer(V, 2)
        f = V.field
        d = V.m * V.m
        expected = [[f.add(V.c[i][j], 1 if i == j else 0) for j in range(d)] for i in range(d)]
        assert M == expected


def test_symmetrizer_rank1_char2_vanishes():
    V = make_braided("diagonal:1", F2)
    assert quantum_symmetrizer(V, 2) == [[0]]


@pytest.mark.parametrize(
    "spec,fld",
    [
        ("jordan:1,2", F2),
        ("diagonal:2,1;1,2", F4),
        ("yd-cyclic:1,2,4", F2),
        ("bashev:1,0,0", F2),
        ("yd-cyclic:1,2,3", F3),
    ],
)
def test_symmetrizer_ladder_matches_literal_sum(spec, fld):
    V = make_braided(spec, fld)
    for n in (2, 3, 4):
        assert quantum_symmetrizer(V, n) == symmetrizer_literal(V, n)


def test_symmetrizer_budget():
    V = make_braided("jordan:1,3", F2)
    with pytest.raises(ValueError, match="budget"):
        quantum_symmetrizer(V, 9)


# -- graded dimensions ---------------------------------------------------------------


def test_trivial_rank1_char2():
    graded, total, closed = nichols_dims(make_braided("diagonal:1", F2))
    assert graded[:3] == [1, 1, 0] and total == 2 and closed


def test_trivial_rank2_char2():
    graded, total, closed = nichols_dims(make_braided("diagonal:1,1;1,1", F2))
    assert total == 4 and closed
    assert graded[:4] == trunc_coeffs(2, 2, 3)


def test_trivial_rank3_char2():
    graded, total, closed = nichols_dims(make_braided("diagonal:1,1,1;1,1,1;1,1,1", F2))
    assert total == 8 and closed
    assert graded == trunc_coeffs(2, 3, 6)


def test_trivial_rank2_char3():
    graded, total, closed = nichols_dims(make_braided("diagonal:1,1;1,1", F3))
    assert total == 9 and closed
    assert graded[:5] == trunc_coeffs(3, 2, 4)


def test_trivial_rank3_char3():
    # the top degree is 6, so the default window reports an honest lower bound
    V = make_braided("diagonal:1,1,1;1,1,1;1,1,1", F3)
    graded, total, closed = nichols_dims(V)
    assert total == 27 and not closed
    # one degree more shows the vanishing and closes the count
    graded, total, closed = nichols_dims(V, n_max=7)
    assert total == 27 and closed
    assert graded == trunc_coeffs(3, 3, 7)


def test_unipotent_rank2_char2_total16():
    graded, total, closed = nichols_dims(make_braided("jordan:1,2", F2))
    assert total == 16 and closed
    assert graded[1] == 2


def test_cyclic_tag2_char3_total9():
    for i in (1, 2):
        graded, total, closed = nichols_dims(make_braided(f"yd-cyclic:{i},2,3", F3))
        assert total == 9 and closed


def test_cyclic_trivial_tag_char2_total4():
    graded, total, closed = nichols_dims(make_braided("yd-cyclic:0,2,2", F2))
    assert total == 4 and closed


def test_gf4_quantum_plane_total9():
    # q11 = q22 = t (order 3), q12*q21 = 1: two commuting truncated lines
    graded, total, closed = nichols_dims(make_braided("diagonal:2,1;1,2", F4))
    assert (total, closed) == (9, True)
    assert graded[:6] == [1, 2, 3, 2, 1, 0]


def test_mixed_module_lower_bound_exceeds_8():
    V = make_braided("yd-cyclic:1,2,2+yd-cyclic:0,1,2", F2)
    graded, total, closed = nichols_dims(V)
    assert not closed
    assert total > 8
    assert len(graded) == 7  # default window for three generators


def test_bashev_tags_separate_types():
    # the tuples with k + l*lambda = 0 braid trivially (total 4); the others
    # are unipotent of rank 2 (total 16)
    quads = []
    for k in (0, 1):
        for l in (0, 1):
            for lam in (0, 1):
                graded, total, closed = nichols_dims(make_braided(f"bashev:{k},{l},{lam}", F2))
                assert closed
                u = (k + l * lam) % 2
                assert total == (4 if u == 0 else 16)
                quads.append(((k, l, lam), total))
    assert {q for q, t in quads if t == 4} == {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 1)}


def test_rank_invariant_under_base_change():
    f = F2
    V = make_braided("jordan:1,2", F2)
    rng = random.Random(7)
    m = V.m
    d = m * m
    for _ in range(3):
        while True:
            P = [[rng.randrange(2) for _ in range(m)] for _ in range(m)]
            if matrix_rank([r[:] for r in P], f) == m:
                break
        PP = [[0] * d for _ in range(d)]
        for i in range(m):
            for j in range(m):
                for a in range(m):
                    for b in range(m):
                        PP[i * m + a][j * m + b] = f.mul(P[i][j], P[a][b])
        # invert PP by solving against the identity
        inv = _mat_inv(PP, f)
        cPP = _mat_mul_dense(V.c, PP, f)
        c2 = _mat_mul_dense(inv, cPP, f)
        W = BraidedSpace(f, m, c2)
        g1, t1, c1 = nichols_dims(V, n_max=5)
        g2, t2, cl2 = nichols_dims(W, n_max=5)
        assert g1 == g2 and t1 == t2 and c1 == cl2


def _mat_mul_dense(A, B, f):
    n = len(B)
    return [
        [
            __import__("functools").reduce(f.add, (f.mul(A[i][t], B[t][j]) for t in range(n)), 0)
            for j in range(n)
        ]
        for i in range(n)
    ]


def _mat_inv(M, f):
    n = len(M)
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        piv = next(i for i in range(r, n) if aug[i][c])
        aug[r], aug[piv] = aug[piv], aug[r]
        s = f.inv(aug[r][c])
        aug[r] = [f.mul(s, e) for e in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                t = aug[i][c]
                aug[i] = [f.sub(a, f.mul(t, b)) for a, b in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def test_rank_paths_agree_on_symmetrizer():
    # generic elimination and the expanded prime-field route must agree
    V = make_braided("diagonal:2,1;1,2", F4)
    M = quantum_symmetrizer(V, 3)
    assert matrix_rank([r[:] for r in M], F4, blowup=True) == matrix_rank(
        [r[:] for r in M], F4, blowup=False
    )


def test_nullspace_vectors_are_killed():
    V = make_braided("jordan:1,2", F2)
    M = quantum_symmetrizer(V, 2)
    rank, null = rank_nullspace([r[:] for r in M], F2)
    assert rank + len(null) == 4
    f = F2
    for v in null:
        out = [0] * 4
        for i in range(4):
            for j in range(4):
                out[i] = f.add(out[i], f.mul(M[i][j], v[j]))
        assert all(e == 0 for e in out)
