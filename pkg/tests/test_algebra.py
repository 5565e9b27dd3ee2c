import itertools

import pytest

from hopfcross.algebra import (
    ComoduleCoalgebraData,
    ConvElement,
    FBialgebra,
    FCoalgebra,
    FHopf,
    check_axioms,
    compute_antipode,
    convolution_invert,
    convolution_unit,
    convolve,
    dual_hopf,
    group_hopf_algebra,
    identity_conv,
    smash_coproduct,
    ti,
)
from hopfcross.errors import NoAntipodeError, NotConvolutionInvertibleError
from hopfcross.groups import GroupTable
from hopfcross.linalg import Matrix, PrimeField, Rationals, basis_vec
from hopfcross.standard import kz2, kz3, ks3, monoid_bialgebra, sweedler

Q = Rationals()
F5 = PrimeField(5)


# --- axiom checks -----------------------------------------------------------


def test_kz2_passes_hopf_axioms():
    assert check_axioms("hopf", kz2(Q)).ok


def test_broken_counit_reports_witness():
    h = kz2(Q)
    bad = FBialgebra(Q, h.basis, h.product, h.unit, h.coproduct, (Q.one, Q.zero))
    report = check_axioms("coalgebra", bad.as_coalgebra())
    assert not report.ok
    names = {v[0] for v in report.violations}
    witnesses = {v[1] for v in report.violations}
    assert names & {"counit-left", "counit-right"}
    assert (1,) in witnesses  # basis element g


def test_sweedler_passes_hopf_axioms_brute_force():
    # oracle: the checker itself enumerates all basis triples; additionally
    # verify associativity independently on all triples of basis vectors here
    for field in (Q, F5):
        h = sweedler(field)
        dim = h.dim
        for i, j, k in itertools.product(range(dim), repeat=3):
            ei, ej, ek = (basis_vec(field, dim, t) for t in (i, j, k))
            assert h.mult(h.mult(ei, ej), ek) == h.mult(ei, h.mult(ej, ek))
        assert check_axioms("hopf", h).ok


# --- convolution ------------------------------------------------------------


def test_convolution_unit_is_neutral():
    h = kz3(Q)
    c, a = h.as_coalgebra(), h.as_algebra()
    unit = convolution_unit(c, a)
    f = ConvElement(c, a, Matrix(Q, [[Q.from_int((i + j) % 3) for j in range(3)] for i in range(3)]))
    assert convolve(unit, f) == f
    assert convolve(f, unit) == f


def test_convolve_id_with_antipode_is_unit():
    h = kz3(Q)
    s = ConvElement(h.as_coalgebra(), h.as_algebra(), h.antipode)
    assert convolve(identity_conv(h), s) == convolution_unit(h.as_coalgebra(), h.as_algebra())


def test_convolution_on_group_likes_is_pointwise():
    h = ks3(Q)
    c, a = h.as_coalgebra(), h.as_algebra()
    f = ConvElement(c, a, Matrix.from_cols(Q, [basis_vec(Q, 6, (i + 1) % 6) for i in range(6)]))
    g = ConvElement(c, a, Matrix.from_cols(Q, [basis_vec(Q, 6, (2 * i) % 6) for i in range(6)]))
    fg = convolve(f, g)
    for i in range(6):
        e = basis_vec(Q, 6, i)
        assert fg(e) == a.mult(f(e), g(e))


def test_invert_unit_and_identity():
    h = kz3(Q)
    c, a = h.as_coalgebra(), h.as_algebra()
    unit = convolution_unit(c, a)
    assert convolution_invert(unit) == unit
    inv = convolution_invert(identity_conv(h))
    # the antipode g -> g^{-1}
    assert inv.matrix == h.antipode


def test_invert_zero_fails():
    h = kz3(Q)
    z = ConvElement(h.as_coalgebra(), h.as_algebra(), Matrix.zeros(Q, 3, 3))
    with pytest.raises(NotConvolutionInvertibleError):
        convolution_invert(z)


# --- antipode computation ---------------------------------------------------


def test_antipode_kz2_is_identity():
    b = kz2(Q)
    bial = FBialgebra(Q, b.basis, b.product, b.unit, b.coproduct, b.counit)
    h = compute_antipode(bial)
    assert h.antipode == Matrix.identity(Q, 2)


def test_antipode_sweedler():
    sw = sweedler(Q)
    bial = FBialgebra(Q, sw.basis, sw.product, sw.unit, sw.coproduct, sw.counit)
    h = compute_antipode(bial)
    # S(g) = g, S(x) = -gx (frozen from the hand construction, itself verified
    # by the antipode law in check_axioms)
    assert h.antipode == sw.antipode
    assert check_axioms("hopf", h).ok


def test_monoid_bialgebra_has_no_antipode():
    b = monoid_bialgebra(Q)
    # oracle: L_id singular by direct rank computation
    from hopfcross.algebra import convolution_unit as cu

    with pytest.raises(NoAntipodeError):
        compute_antipode(b)


def test_antipode_recomputation_is_idempotent():
    for h in (kz3(Q), sweedler(Q)):
        bial = FBialgebra(h.field, h.basis, h.product, h.unit, h.coproduct, h.counit)
        assert compute_antipode(bial).antipode == compute_antipode(bial).antipode == h.antipode


# --- group Hopf algebras ----------------------------------------------------


def test_group_hopf_z2():
    h = kz2(Q)
    assert h.dim == 2
    assert h.antipode == Matrix.identity(Q, 2)


def test_group_hopf_s3_antipode_is_inverse_permutation():
    t = GroupTable.symmetric(3)
    h = group_hopf_algebra(t, Q)
    expected = Matrix.from_cols(Q, [basis_vec(Q, 6, t.inv[i]) for i in range(6)])
    assert h.antipode == expected
    assert check_axioms("hopf", h).ok


def test_group_hopf_z3_counit_all_ones():
    h = kz3(Q)
    assert h.counit == (Q.one, Q.one, Q.one)


def test_group_antipode_is_involution():
    for t in (GroupTable.cyclic(2), GroupTable.cyclic(3), GroupTable.symmetric(3)):
        h = group_hopf_algebra(t, Q)
        assert h.antipode * h.antipode == Matrix.identity(Q, h.dim)


# --- duals ------------------------------------------------------------------


def test_dual_kz2_commutative_cocommutative():
    d = dual_hopf(kz2(Q))
    assert check_axioms("hopf", d).ok
    assert d.is_commutative() and d.is_cocommutative()


def test_dual_swaps_commutativity_flags():
    h = ks3(Q)
    d = dual_hopf(h)
    assert (h.is_commutative(), h.is_cocommutative()) == (False, True)
    assert (d.is_commutative(), d.is_cocommutative()) == (True, False)


def test_dual_sweedler_passes_axioms():
    assert check_axioms("hopf", dual_hopf(sweedler(Q))).ok


def test_double_dual_isomorphic_via_evaluation():
    h = sweedler(Q)
    dd = dual_hopf(dual_hopf(h))
    # evaluation pairing identifies H with H** coordinatewise on this basis
    assert dd.product == h.product
    assert dd.coproduct == h.coproduct
    assert dd.antipode == h.antipode


# --- smash coproduct --------------------------------------------------------


def _trivial_coaction_data(h, d):
    f = h.field
    cols = []
    for i in range(d.dim):
        v = [f.zero] * (d.dim * h.dim)
        for j, c in enumerate(h.unit):
            if c:
                v[ti(i, j, h.dim)] = c
        cols.append(tuple(v))
    return ComoduleCoalgebraData(d, h, Matrix.from_cols(f, cols))


def test_smash_coproduct_trivial_coaction_is_tensor_coalgebra():
    h = kz2(Q)
    d = kz3(Q).as_coalgebra()
    sc = smash_coproduct(_trivial_coaction_data(h, d))
    from hopfcross.algebra import tensor_coalgebra

    plain = tensor_coalgebra(h.as_coalgebra(), d)
    assert sc.coalgebra.coproduct == plain.coproduct
    assert sc.coalgebra.counit == plain.counit


def test_smash_coproduct_graded_coalgebra():
    # D = dual of k[x]/(x^2): Delta(c1) = c0 (x) c1 + c1 (x) c0, graded over
    # Z/2 by deg(c_i) = g^i; this satisfies the comodule-coalgebra laws
    h = kz2(Q)
    d = FCoalgebra(
        Q,
        ("c0", "c1"),
        {0: {(0, 0): Q.one}, 1: {(0, 1): Q.one, (1, 0): Q.one}},
        (Q.one, Q.zero),
    )
    cols = []
    for i in range(2):
        v = [Q.zero] * 4
        v[ti(i, i, 2)] = Q.one
        cols.append(tuple(v))
    data = ComoduleCoalgebraData(d, h, Matrix.from_cols(Q, cols))
    sc = smash_coproduct(data)
    assert check_axioms("coalgebra", sc.coalgebra).ok
    # the action map sends h' (x) (h (x) d) to h'h (x) d
    x = [Q.zero] * 8
    x[ti(1, ti(0, 1, 2), 4)] = Q.one  # g . (1 (x) c1)
    out = sc.module_action.apply(tuple(x))
    expected = [Q.zero] * 4
    expected[ti(1, 1, 2)] = Q.one  # = g (x) c1
    assert out == tuple(expected)


def test_smash_coproduct_rejects_non_colinear_coaction():
    # on the group algebra kZ/2 itself, rho(d) = d (x) g^{|d|} is NOT a
    # comodule-coalgebra structure: Delta(g) = g (x) g has degree g.g = 1
    from hopfcross.errors import ValidationError

    h = kz2(Q)
    d = kz2(Q).as_coalgebra()
    cols = []
    for i in range(2):
        v = [Q.zero] * 4
        v[ti(i, i, 2)] = Q.one
        cols.append(tuple(v))
    data = ComoduleCoalgebraData(d, h, Matrix.from_cols(Q, cols))
    with pytest.raises(ValidationError):
        smash_coproduct(data)


def test_smash_coproduct_counit_formula():
    h = kz2(Q)
    d = kz3(Q).as_coalgebra()
    sc = smash_coproduct(_trivial_coaction_data(h, d))
    for hi in range(h.dim):
        for di in range(d.dim):
            assert sc.coalgebra.counit[ti(hi, di, d.dim)] == h.counit[hi] * d.counit[di]


# --- invariants -------------------------------------------------------------


def test_every_hopf_satisfies_antipode_convolution_identity():
    for h in (kz2(Q), kz3(F5), ks3(Q), sweedler(Q), sweedler(F5), dual_hopf(sweedler(Q))):
        s = ConvElement(h.as_coalgebra(), h.as_algebra(), h.antipode)
        unit = convolution_unit(h.as_coalgebra(), h.as_algebra())
        assert convolve(identity_conv(h), s) == unit
        assert convolve(s, identity_conv(h)) == unit
