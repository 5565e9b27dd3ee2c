"""Group-graded algebras, Morita contexts, and crossed products."""

import pytest

from hopfcross.algebra import ti
from hopfcross.errors import NotCrossedProductError, ValidationError
from hopfcross.graded import (
    GradedAlgebra,
    GroupCrossedSystem,
    check_grading,
    check_group_crossed_system,
    group_crossed_product,
    is_strongly_graded,
    morita_context,
    recognize_group_crossed_product,
)
from hopfcross.groups import GroupTable
from hopfcross.linalg import Matrix, PrimeField, Rationals, basis_vec
from hopfcross.standard import dual_numbers, matrix2, product_field

Q = Rationals()
Z2 = GroupTable.cyclic(2)


def matrix2_graded(field=Q):
    # diagonal part in degree 0, antidiagonal part in degree 1
    return GradedAlgebra(matrix2(field), Z2, (0, 0, 1, 1))


def dual_numbers_graded(field=Q, square=None):
    return GradedAlgebra(dual_numbers(field, square), Z2, (0, 1))


def group_algebra_graded(grp, field=Q):
    """k-Gamma graded by itself: deg g = g."""
    n = grp.order
    o = field.one
    product = {(i, j): {grp.mul(i, j): o} for i in range(n) for j in range(n)}
    from hopfcross.algebra import FAlgebra

    alg = FAlgebra(field, grp.elements, product, basis_vec(field, n, grp.identity))
    return GradedAlgebra(alg, grp, tuple(range(n)))


# -- check_grading ----------------------------------------------------------


def test_group_algebra_grading_passes():
    s3 = GroupTable.symmetric(3)
    assert check_grading(group_algebra_graded(s3)).ok


def test_matrix2_grading_passes():
    assert check_grading(matrix2_graded()).ok


def test_mislabeled_degree_fails_with_witness():
    # e12 marked degree 0: e21 * e12 = e11 then lands outside A_{1*0}
    ga = GradedAlgebra(matrix2(Q), Z2, (0, 0, 0, 1))
    report = check_grading(ga)
    assert not report.ok
    assert any(v[0] == "product-leaves-component" for v in report.violations)


def test_unit_outside_neutral_component_fails():
    ga = GradedAlgebra(product_field(Q), Z2, (0, 1))
    report = check_grading(ga)
    assert ("unit-outside-neutral-component", (1,)) in report.violations


# -- is_strongly_graded / morita_context ------------------------------------


def test_matrix2_strongly_graded_all_pairs():
    ok, table = is_strongly_graded(matrix2_graded())
    assert ok
    assert all(table.values()) and len(table) == 4


def test_dual_numbers_not_strongly_graded():
    ok, table = is_strongly_graded(dual_numbers_graded())
    assert not ok
    assert table[("g", "g")] is False  # x * x = 0 misses A_1


def test_trivial_group_strongly_graded():
    ga = GradedAlgebra(matrix2(Q), GroupTable.trivial(), (0, 0, 0, 0))
    ok, _ = is_strongly_graded(ga)
    assert ok


def test_matrix2_morita_maps_bijective():
    rep = morita_context(matrix2_graded(), 1)
    assert rep.fwd_bijective and rep.bwd_bijective
    # A_g (x)_B A_g has dimension 4 before the relations, 2 after
    assert rep.mu_fwd.domain_dim == 2 and rep.mu_fwd.codomain_dim == 2


def test_dual_numbers_morita_maps_zero():
    rep = morita_context(dual_numbers_graded(), 1)
    assert not rep.fwd_surjective and not rep.bwd_surjective
    assert all(not c for row in rep.mu_fwd.matrix.data for c in row)


def test_neutral_morita_context_is_product():
    rep = morita_context(matrix2_graded(), 0)
    assert rep.fwd_bijective and rep.bwd_bijective


def test_strongly_graded_implies_all_pairs_bijective():
    # mu_{g,g^-1} surjective forces bijectivity of every mu_{g,h}
    from hopfcross.graded import relative_tensor_over_neutral

    ga = matrix2_graded()
    ok, _ = is_strongly_graded(ga)
    assert ok
    for g in range(2):
        for h in range(2):
            quot, mu = relative_tensor_over_neutral(ga, g, h)
            assert mu.rank() == ga.component_dim(Z2.mul(g, h)) == quot.dim


# -- group crossed systems ---------------------------------------------------


def scalar_system(field, c):
    """B = k, Gamma = Z/2, trivial action, sigma(g, g) = c."""
    from hopfcross.algebra import FAlgebra

    base = FAlgebra(field, ("1",), {(0, 0): {0: field.one}}, (field.one,))
    ident = Matrix.identity(field, 1)
    one = (field.one,)
    sigma = {(0, 0): one, (0, 1): one, (1, 0): one, (1, 1): (c,)}
    cinv = field.one / c
    sigma_inv = {(0, 0): one, (0, 1): one, (1, 0): one, (1, 1): (cinv,)}
    return GroupCrossedSystem(base, Z2, (ident, ident), sigma, sigma_inv)


def swap_system(field):
    """B = k x k, Gamma = Z/2 with the swap action, sigma = 1."""
    base = product_field(field)
    one = base.one()
    ident = Matrix.identity(field, 2)
    swap = Matrix(field, [[field.zero, field.one], [field.one, field.zero]])
    sigma = {(g, h): one for g in range(2) for h in range(2)}
    return GroupCrossedSystem(base, Z2, (ident, swap), sigma, dict(sigma))


def test_trivial_system_passes():
    assert check_group_crossed_system(scalar_system(Q, Q.one)).ok


def test_scalar_cocycle_passes():
    c = Q.from_int(5)
    assert check_group_crossed_system(scalar_system(Q, c)).ok


def test_unnormalized_sigma_fails():
    s = scalar_system(Q, Q.one)
    two = Q.from_int(2)
    s.sigma[(1, 0)] = (two,)
    s.sigma_inv[(1, 0)] = (Q.one / two,)
    report = check_group_crossed_system(s)
    assert ("sigma-not-normalized", (1,)) in report.violations


def test_swap_system_passes():
    assert check_group_crossed_system(swap_system(Q)).ok


# -- group_crossed_product ---------------------------------------------------


def test_scalar_crossed_product_is_quadratic_extension():
    c = Q.from_int(3)
    ga = group_crossed_product(scalar_system(Q, c))
    a = ga.algebra
    assert a.dim == 2
    u = basis_vec(Q, 2, 1)  # the u_g basis vector
    assert a.mult(u, u) == (c, Q.zero)  # u^2 = c * 1
    ok, _ = is_strongly_graded(ga)
    assert ok


def test_trivial_crossed_product_is_group_algebra():
    ga = group_crossed_product(scalar_system(Q, Q.one))
    a = ga.algebra
    u = basis_vec(Q, 2, 1)
    assert a.mult(u, u) == a.one()


def test_swap_crossed_product_isomorphic_to_matrix2():
    ga = group_crossed_product(swap_system(Q))
    a = ga.algebra
    m2 = matrix2(Q)
    # candidate: p(x)u_1 -> e11, q(x)u_1 -> e22, p(x)u_g -> e12, q(x)u_g -> e21
    # basis order of a is b-major: p.u_1, p.u_g, q.u_1, q.u_g
    cols = [
        basis_vec(Q, 4, 0),  # e11
        basis_vec(Q, 4, 2),  # e12
        basis_vec(Q, 4, 1),  # e22
        basis_vec(Q, 4, 3),  # e21
    ]
    phi = Matrix.from_cols(Q, cols)
    assert phi.is_invertible()
    assert phi.apply(a.one()) == m2.one()
    for i in range(4):
        for j in range(4):
            ei, ej = basis_vec(Q, 4, i), basis_vec(Q, 4, j)
            assert phi.apply(a.mult(ei, ej)) == m2.mult(phi.apply(ei), phi.apply(ej))


def test_crossed_product_neutral_component_is_base():
    ga = group_crossed_product(swap_system(Q))
    base = ga.neutral_subalgebra()
    ref = product_field(Q)
    assert base.canonical_constants() == ref.canonical_constants()


def test_invalid_system_rejected():
    s = scalar_system(Q, Q.one)
    s.sigma[(1, 1)] = (Q.zero,)
    s.sigma_inv[(1, 1)] = (Q.zero,)
    with pytest.raises(ValidationError):
        group_crossed_product(s)


# -- recognize_group_crossed_product ----------------------------------------


def test_recognize_matrix2():
    rec = recognize_group_crossed_product(matrix2_graded())
    # unit of the antidiagonal component: the swap matrix e12 + e21
    assert rec.units[1] == (Q.zero, Q.zero, Q.one, Q.one)
    # sigma(g, g) = swap^2 = identity
    assert rec.system.sigma[(1, 1)] == (Q.one, Q.one)
    # the action by g swaps the two diagonal idempotents
    act = rec.system.action[1]
    assert act.apply(basis_vec(Q, 2, 0)) == basis_vec(Q, 2, 1)
    assert rec.iso.is_bijective()


def test_recognize_dual_numbers_fails_definitively_over_q():
    # det(L_a) on A_g = kx is identically zero, certified by evaluation
    with pytest.raises(NotCrossedProductError) as exc:
        recognize_group_crossed_product(dual_numbers_graded())
    assert exc.value.definitive


def test_recognize_dual_numbers_fails_exhaustively_over_f3():
    f3 = PrimeField(3)
    with pytest.raises(NotCrossedProductError) as exc:
        recognize_group_crossed_product(dual_numbers_graded(f3))
    assert exc.value.definitive


def test_recognize_group_algebra_is_identity():
    s3 = GroupTable.symmetric(3)
    ga = group_algebra_graded(s3)
    rec = recognize_group_crossed_product(ga)
    assert rec.iso.matrix == Matrix.identity(Q, 6)
    one = rec.system.base.one()
    assert all(v == one for v in rec.system.sigma.values())


def test_recognize_roundtrip_on_scalar_product():
    c = Q.from_int(7)
    ga = group_crossed_product(scalar_system(Q, c))
    rec = recognize_group_crossed_product(ga)
    again = group_crossed_product(rec.system)
    assert rec.iso.matrix.apply(ga.algebra.one()) == again.algebra.one()
    # u^2 = c survives the roundtrip (sigma(g,g) must still be a unit times c)
    assert rec.system.sigma[(1, 1)] != (Q.zero,)


def test_theorem_consistency_three_verdicts_agree():
    """Unit-in-every-component <=> strongly graded + free components of rank
    dim B <=> recognition succeeds."""
    cases = [
        (matrix2_graded(), True),
        (dual_numbers_graded(), False),
        (group_algebra_graded(GroupTable.cyclic(3)), True),
        (group_crossed_product(swap_system(Q)), True),
        (dual_numbers_graded(PrimeField(3)), False),
    ]
    for ga, expected in cases:
        strong, _ = is_strongly_graded(ga)
        db = ga.component_dim(ga.group.identity)
        free_ranks = all(
            ga.component_dim(g) == db for g in range(ga.group.order)
        )
        try:
            recognize_group_crossed_product(ga)
            recognized = True
        except NotCrossedProductError:
            recognized = False
        assert recognized == expected
        assert (strong and free_ranks) == expected
