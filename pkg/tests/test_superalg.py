"""Koszul-sign arithmetic, exterior Hopf superalgebras, the duality pairing,
even quotients, odd cotangents/primitives, and the tensor decomposition."""

import random

import pytest

from hopfcross.algebra import FHopf, group_hopf_algebra, ti
from hopfcross.errors import (
    CharacteristicTwoError,
    NotSuperCommutativeError,
    ValidationError,
)
from hopfcross.groups import GroupTable
from hopfcross.linalg import Matrix, PrimeField, Rationals, basis_vec
from hopfcross.superalg import (
    ExteriorHopf,
    SuperPresentation,
    SuperVectorSpace,
    decompose,
    duality_pairing,
    even_quotient,
    exterior_hopf,
    koszul_swap,
    odd_cotangent,
    odd_primitives,
    super_tensor_product,
)

Q = Rationals()
F5 = PrimeField(5)


def even_presentation(hopf):
    return SuperPresentation(hopf, (0,) * hopf.dim)


def scramble(sp, seed):
    """Transport the structure through a random parity-preserving change of
    basis; the result presents the same Hopf superalgebra."""
    h = sp.hopf
    f = h.field
    dim = h.dim
    rng = random.Random(seed)
    while True:
        cols = []
        for i in range(dim):
            col = [
                f.from_int(rng.randrange(-3, 4)) if sp.parity[j] == sp.parity[i] else f.zero
                for j in range(dim)
            ]
            cols.append(tuple(col))
        t = Matrix.from_cols(f, cols)
        if t.is_invertible():
            break
    tinv = t.inverse()
    product = {}
    for i in range(dim):
        for j in range(dim):
            prod = tinv.apply(h.mult(t.col(i), t.col(j)))
            product[(i, j)] = {k: c for k, c in enumerate(prod) if c}
    unit = tinv.apply(h.one())
    coproduct = {}
    for i in range(dim):
        out = {}
        for (j, k), c in h.delta(t.col(i)).items():
            for x, u in enumerate(tinv.col(j)):
                for y, v in enumerate(tinv.col(k)):
                    if u and v:
                        key = (x, y)
                        out[key] = out.get(key, f.zero) + c * u * v
        coproduct[i] = {k: v for k, v in out.items() if v}
    counit = tuple(h.eps(t.col(i)) for i in range(dim))
    antipode = tinv * h.antipode * t
    labels = tuple("a%d" % i for i in range(dim))
    return SuperPresentation(
        FHopf(f, labels, product, unit, coproduct, counit, antipode), sp.parity
    )


# ---------------------------------------------------------------------------
# Koszul swap and tensor products


def test_swap_purely_even_is_transposition():
    v = SuperVectorSpace.purely_even(2)
    w = SuperVectorSpace.purely_even(3)
    c = koszul_swap(Q, v, w)
    for i in range(2):
        for j in range(3):
            assert c.col(ti(i, j, 3)) == basis_vec(Q, 6, ti(j, i, 2))


def test_swap_odd_odd_sign():
    v = SuperVectorSpace.purely_odd(1)
    c = koszul_swap(Q, v, v)
    assert c.col(0) == (-Q.one,)


def test_swap_involution_random_parities():
    rng = random.Random(1)
    for _ in range(10):
        pv = tuple(rng.randrange(2) for _ in range(3))
        pw = tuple(rng.randrange(2) for _ in range(2))
        v, w = SuperVectorSpace(pv), SuperVectorSpace(pw)
        assert koszul_swap(Q, w, v) * koszul_swap(Q, v, w) == Matrix.identity(Q, 6)


def test_characteristic_two_rejected():
    f2 = PrimeField(2)
    with pytest.raises(CharacteristicTwoError):
        koszul_swap(f2, SuperVectorSpace.purely_odd(1), SuperVectorSpace.purely_odd(1))
    with pytest.raises(CharacteristicTwoError):
        exterior_hopf(1, f2)


def test_tensor_of_purely_even_is_plain():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    tp = super_tensor_product(even_presentation(h), even_presentation(h))
    assert tp.is_super_commutative()
    assert all(p == 0 for p in tp.parity)


def test_exterior_tensor_is_bigger_exterior():
    # Lambda(v) (x) Lambda(w) ~ Lambda(v, w) via v (x) 1 and 1 (x) w
    e1 = exterior_hopf(1, Q)
    tp = super_tensor_product(e1.presentation, e1.presentation)
    e2 = exterior_hopf(2, Q)
    # the iso maps the subset basis {1, v1, v2, v1^v2} to
    # {1(x)1, v(x)1, 1(x)w, v(x)w}
    perm = {0: 0, 1: 2, 2: 1, 3: 3}
    cols = [basis_vec(Q, 4, perm[i]) for i in range(4)]
    m = Matrix.from_cols(Q, cols)
    for i in range(4):
        for j in range(4):
            lhs = m.apply(e2.hopf.mult(basis_vec(Q, 4, i), basis_vec(Q, 4, j)))
            rhs = tp.hopf.mult(m.col(i), m.col(j))
            assert lhs == rhs
    # the Koszul sign shows up: (1 (x) w)(v (x) 1) = -(v (x) w)
    one_w = m.col(e2.index[(2,)])
    v_one = m.col(e2.index[(1,)])
    v_w = m.col(e2.index[(1, 2)])
    assert tp.hopf.mult(one_w, v_one) == tuple(-c for c in v_w)


# ---------------------------------------------------------------------------
# exterior Hopf superalgebras


def test_exterior_dims():
    for n in range(6):
        assert exterior_hopf(n, Q).dim == 2 ** n


def test_exterior_n1_primitive():
    ext = exterior_hopf(1, Q)
    assert ext.hopf.mult_basis(1, 1) == {}
    assert ext.hopf.delta_basis(1) == {(0, 1): Q.one, (1, 0): Q.one}


def test_exterior_n2_coproduct_signs():
    ext = exterior_hopf(2, Q)
    i12 = ext.index[(1, 2)]
    i1, i2, i0 = ext.index[(1,)], ext.index[(2,)], ext.index[()]
    assert ext.hopf.delta_basis(i12) == {
        (i12, i0): Q.one,
        (i1, i2): Q.one,
        (i2, i1): -Q.one,
        (i0, i12): Q.one,
    }


def test_exterior_axioms_over_both_fields():
    for field in (Q, F5):
        for n in range(1, 4):
            ext = exterior_hopf(n, field)
            assert not ext.presentation.check_super_axioms()
            assert ext.presentation.is_super_commutative()


def test_exterior_antipode_sign():
    ext = exterior_hopf(3, Q)
    for i, s in enumerate(ext.subsets):
        expected = basis_vec(Q, 8, i) if len(s) % 2 == 0 else tuple(
            -c for c in basis_vec(Q, 8, i)
        )
        assert ext.hopf.antipode.col(i) == expected


# ---------------------------------------------------------------------------
# duality pairing


def test_pairing_n1_is_evaluation():
    p = duality_pairing(1, Q)
    assert p.matrix == Matrix.identity(Q, 2)


def test_pairing_n2_determinant_formula():
    # <f1 ^ f2, v1 ^ v2> = f1(v1) f2(v2) - f1(v2) f2(v1) = 1 on the subset basis
    p = duality_pairing(2, Q)
    ext = exterior_hopf(2, Q)
    i12 = ext.index[(1, 2)]
    assert p.matrix.data[i12][i12] == Q.one


def test_pairing_diagonal_and_block_orthogonal():
    for n in (1, 2, 3):
        p = duality_pairing(n, Q)
        ext = exterior_hopf(n, Q)
        for i, s in enumerate(ext.subsets):
            for j, t in enumerate(ext.subsets):
                entry = p.matrix.data[i][j]
                if len(s) != len(t):
                    assert entry == Q.zero
                elif i == j:
                    assert entry in (Q.one, -Q.one)
                else:
                    assert entry == Q.zero
        assert p.matrix.is_invertible()
        assert p.iso.matrix.is_invertible()


# ---------------------------------------------------------------------------
# even quotient, odd cotangent, odd primitives


def test_even_quotient_of_exterior_is_scalars():
    H, pi = even_quotient(exterior_hopf(2, Q).presentation)
    assert H.dim == 1
    assert pi.matrix.rank() == 1


def test_even_quotient_of_purely_even_is_identity():
    h = group_hopf_algebra(GroupTable.cyclic(3), Q)
    H, pi = even_quotient(even_presentation(h))
    assert H.dim == 3
    assert pi.matrix == Matrix.identity(Q, 3)


def test_even_quotient_of_tensor_recovers_group_algebra():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    A = super_tensor_product(exterior_hopf(2, Q).presentation, even_presentation(h))
    H, pi = even_quotient(A)
    assert H.dim == 2
    assert H.is_commutative() and H.is_cocommutative()


def test_even_quotient_rejects_non_supercommutative():
    # declare every index odd in a group algebra: products of odd elements
    # land in odd degree, and the (-1) rule fails
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    sp = SuperPresentation.__new__(SuperPresentation)
    sp.hopf = h
    sp.space = SuperVectorSpace((0, 1))
    sp.parity = (0, 1)
    with pytest.raises(NotSuperCommutativeError):
        even_quotient(sp)


def test_odd_cotangent_of_exterior_is_generators():
    cot = odd_cotangent(exterior_hopf(3, Q).presentation)
    assert cot.dim == 3


def test_odd_cotangent_of_tensor():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    A = super_tensor_product(exterior_hopf(2, Q).presentation, even_presentation(h))
    assert odd_cotangent(A).dim == 2


def test_odd_cotangent_purely_even_is_zero():
    h = group_hopf_algebra(GroupTable.cyclic(3), Q)
    assert odd_cotangent(even_presentation(h)).dim == 0


def test_odd_primitives_of_exterior():
    u = odd_primitives(exterior_hopf(2, Q).presentation)
    assert len(u) == 2
    ext = exterior_hopf(2, Q)
    # the primitives are supported on the degree-1 subset coordinates
    for v in u:
        assert v[ext.index[()]] == Q.zero
        assert v[ext.index[(1, 2)]] == Q.zero


def test_odd_primitives_purely_even_empty():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    assert odd_primitives(even_presentation(h)) == []


def test_primitive_count_matches_cotangent_on_corpus():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    corpus = [
        exterior_hopf(1, Q).presentation,
        exterior_hopf(2, Q).presentation,
        exterior_hopf(3, Q).presentation,
        even_presentation(h),
        super_tensor_product(exterior_hopf(2, Q).presentation, even_presentation(h)),
    ]
    for sp in corpus:
        assert len(odd_primitives(sp)) == odd_cotangent(sp).dim


# ---------------------------------------------------------------------------
# decomposition


def test_decompose_tensor_product():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    A = super_tensor_product(exterior_hopf(2, Q).presentation, even_presentation(h))
    res = decompose(A)
    assert res.h.dim == 2
    assert res.w.odd_dim == 2
    assert res.alpha.matrix.is_invertible()
    assert res.exterior.dim * res.h.dim == A.dim == 8


def test_decompose_scrambled_basis():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    A = super_tensor_product(exterior_hopf(2, Q).presentation, even_presentation(h))
    scrambled = scramble(A, seed=7)
    assert not scrambled.check_super_axioms()
    res = decompose(scrambled)
    assert res.h.dim == 2 and res.w.odd_dim == 2
    assert res.alpha.matrix.is_invertible()


def test_decompose_purely_even_is_identity_like():
    h = group_hopf_algebra(GroupTable.cyclic(2), Q)
    res = decompose(even_presentation(h))
    assert res.w.odd_dim == 0
    assert res.h.dim == 2
    assert res.alpha.matrix.is_invertible()


def test_decompose_exterior_n3():
    res = decompose(exterior_hopf(3, Q).presentation)
    assert res.h.dim == 1
    assert res.w.odd_dim == 3
    assert res.alpha.matrix.is_invertible()
    # here alpha = delta is an automorphism of Lambda(V)
    assert res.delta.matrix.is_invertible()


def test_decompose_over_f5():
    h = group_hopf_algebra(GroupTable.cyclic(2), F5)
    A = super_tensor_product(exterior_hopf(1, F5).presentation, even_presentation(h))
    res = decompose(A)
    assert res.w.odd_dim == 1 and res.h.dim == 2


def test_odd_squares_vanish_on_supercommutative():
    A = super_tensor_product(
        exterior_hopf(2, Q).presentation,
        even_presentation(group_hopf_algebra(GroupTable.cyclic(2), Q)),
    )
    rng = random.Random(3)
    odd_idx = [i for i, p in enumerate(A.parity) if p == 1]
    for _ in range(20):
        v = [Q.zero] * A.dim
        for i in odd_idx:
            v[i] = Q.from_int(rng.randrange(-5, 6))
        sq = A.hopf.mult(tuple(v), tuple(v))
        assert all(c == Q.zero for c in sq)
