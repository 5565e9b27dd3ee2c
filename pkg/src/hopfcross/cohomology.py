"""Normalized Hochschild cochains for a Hopf algebra with coefficients in a
square-zero augmentation ideal, the HH^2 classification of augmented cleft
extensions, gauge isomorphisms, and the constructive splitting and lifting
machinery through nilpotent kernels.

Cochains C^n = Hom(H^(x)n, B+) are stored as (dim B+) x (dim H)^n matrices
with the usual row-major flattening of tensor indices.
"""

from .algebra import ConvElement, FAlgebra, convolution_invert, ti
from .comodule import (
    ComoduleAlgebra,
    CrossedSystem,
    Section,
    coinvariants,
    crossed_product,
    find_section,
    section_to_crossed_system,
)
from .errors import (
    CocycleViolationError,
    KernelNotNilpotentError,
    NotAlgebraMapError,
    NotHopfModuleError,
    NotSquareZeroError,
    ShapeMismatchError,
    ValidationError,
)
from .linalg import (
    LinearMap,
    Matrix,
    QuotientSpace,
    basis_vec,
    in_span,
    kernel_basis,
    row_space_basis,
    solve_linear,
    vadd,
    vscale,
    vsub,
    vzero,
)


class AugmentedAlgebra:
    """An algebra B with an algebra map eps_B : B -> k; B = k.1 (+) B+."""

    def __init__(self, algebra, augmentation):
        if len(augmentation) != algebra.dim:
            raise ShapeMismatchError("augmentation vector has wrong length")
        self.algebra = algebra
        self.augmentation = tuple(augmentation)
        f = algebra.field
        if self.eps(algebra.one()) != f.one:
            raise ValidationError("augmentation does not send 1 to 1")
        for i in range(algebra.dim):
            for j in range(algebra.dim):
                prod = algebra.mult(basis_vec(f, algebra.dim, i), basis_vec(f, algebra.dim, j))
                if self.eps(prod) != self.augmentation[i] * self.augmentation[j]:
                    raise ValidationError("augmentation is not multiplicative at (%d, %d)" % (i, j))
        self.plus_basis = kernel_basis(Matrix(f, [self.augmentation]))
        self.plus_dim = len(self.plus_basis)
        if self.plus_dim != algebra.dim - 1:
            raise ValidationError("B is not k.1 (+) B+")
        self._plus_matrix = (
            Matrix.from_cols(f, self.plus_basis)
            if self.plus_basis
            else Matrix.zeros(f, algebra.dim, 0)
        )
        self.square_zero = all(
            algebra.mult(u, v) == vzero(f, algebra.dim)
            for u in self.plus_basis
            for v in self.plus_basis
        )

    @property
    def field(self):
        return self.algebra.field

    def eps(self, vec):
        s = self.field.zero
        for a, e in zip(vec, self.augmentation):
            if a and e:
                s = s + a * e
        return s

    def embed_plus(self, coords):
        return self._plus_matrix.apply(coords)

    def decompose(self, bvec):
        """b = c.1 + b+, returned as (c, coordinates of b+ in the plus basis)."""
        c = self.eps(bvec)
        plus = vsub(bvec, vscale(c, self.algebra.one()))
        res = solve_linear(self._plus_matrix, plus)
        if not res.consistent:
            raise ValidationError("vector fails to decompose against the plus basis")
        return c, res.solution


class HModuleStructure:
    """A left H-module structure on B+: action matrix dP x (dH * dP),
    column index ti(h, p, dP)."""

    def __init__(self, hopf, aug, action):
        dp = aug.plus_dim
        if action.rows != dp or action.cols != hopf.dim * dp:
            raise ShapeMismatchError("action matrix shape mismatch")
        self.hopf = hopf
        self.aug = aug
        self.action = action

    @property
    def plus_dim(self):
        return self.aug.plus_dim

    def act_basis(self, h, p):
        return self.action.col(ti(h, p, self.plus_dim))

    def act(self, hvec, pvec):
        f = self.hopf.field
        out = vzero(f, self.plus_dim)
        for h, c in enumerate(hvec):
            if not c:
                continue
            for p, d in enumerate(pvec):
                if d:
                    out = vadd(out, vscale(c * d, self.act_basis(h, p)))
        return out

    def validate(self):
        h = self.hopf
        f = h.field
        dp = self.plus_dim
        violations = []
        for p in range(dp):
            ep = basis_vec(f, dp, p)
            if self.act(h.unit, ep) != ep:
                violations.append(("action-not-unital", (p,)))
            for g in range(h.dim):
                for t in range(h.dim):
                    lhs = self.act(basis_vec(f, h.dim, g), self.act_basis(t, p))
                    gh = [f.zero] * h.dim
                    for k, c in h.mult_basis(g, t).items():
                        gh[k] = c
                    if lhs != self.act(tuple(gh), ep):
                        violations.append(("action-not-associative", (g, t, p)))
        return violations


class NormalizedCochain:
    """degree 1: t : H -> B+ with t(1) = 0, as a dP x dH matrix;
    degree 2: s : H (x) H -> B+ with s(h,1) = 0 = s(1,h), as dP x dH^2."""

    def __init__(self, degree, matrix):
        if degree not in (1, 2, 3):
            # degree 3 occurs only as the target of the degree-2 differential
            raise ValidationError("cochain degree must be 1, 2 or 3")
        self.degree = degree
        self.matrix = matrix

    def value1(self, hvec):
        return self.matrix.apply(hvec)

    def value2_basis(self, g, h):
        return self.matrix.col(ti(g, h, self.matrix_cols_minor()))

    def matrix_cols_minor(self):
        # dH for the second tensor slot of a 2-cochain
        return isqrt_exact(self.matrix.cols)


def isqrt_exact(n):
    from math import isqrt

    r = isqrt(n)
    if r * r != n:
        raise ShapeMismatchError("2-cochain matrix has non-square column count")
    return r


def _check_normalized(act, cochain):
    h = act.hopf
    f = h.field
    dp = act.plus_dim
    zero = vzero(f, dp)
    if cochain.degree == 1:
        return cochain.matrix.apply(h.unit) == zero
    dh = h.dim
    unit = h.unit
    for g in range(dh):
        left = vzero(f, dp)
        right = vzero(f, dp)
        for t, c in enumerate(unit):
            if c:
                left = vadd(left, vscale(c, cochain.matrix.col(ti(g, t, dh))))
                right = vadd(right, vscale(c, cochain.matrix.col(ti(t, g, dh))))
        if left != zero or right != zero:
            return False
    return True


def differential(cochain, act):
    """The Hochschild differential into the next degree."""
    h = act.hopf
    f = h.field
    dh, dp = h.dim, act.plus_dim
    if cochain.degree == 1:
        t = cochain.matrix
        cols = []
        for g in range(dh):
            for u in range(dh):
                gh = [f.zero] * dh
                for k, c in h.mult_basis(g, u).items():
                    gh[k] = c
                val = act.act(basis_vec(f, dh, g), t.col(u))
                val = vsub(val, t.apply(tuple(gh)))
                val = vadd(val, vscale(h.counit[u], t.col(g)))
                cols.append(val)
        return NormalizedCochain(2, Matrix.from_cols(f, cols) if cols else Matrix.zeros(f, dp, 0))
    s = cochain.matrix
    cols = []
    for g in range(dh):
        for u in range(dh):
            gu = [f.zero] * dh
            for k, c in h.mult_basis(g, u).items():
                gu[k] = c
            for l in range(dh):
                ul = [f.zero] * dh
                for k, c in h.mult_basis(u, l).items():
                    ul[k] = c
                val = act.act(basis_vec(f, dh, g), s.col(ti(u, l, dh)))
                acc = vzero(f, dp)
                for k, c in enumerate(gu):
                    if c:
                        acc = vadd(acc, vscale(c, s.col(ti(k, l, dh))))
                val = vsub(val, acc)
                acc = vzero(f, dp)
                for k, c in enumerate(ul):
                    if c:
                        acc = vadd(acc, vscale(c, s.col(ti(g, k, dh))))
                val = vadd(val, acc)
                val = vsub(val, vscale(h.counit[l], s.col(ti(g, u, dh))))
                cols.append(val)
    return NormalizedCochain(3, Matrix.from_cols(f, cols) if cols else Matrix.zeros(f, dp, 0))


def _flatten_cochain(m):
    out = []
    for j in range(m.cols):
        out.extend(m.col(j))
    return tuple(out)


def _unflatten_cochain(f, flat, dp, ncols):
    return Matrix.from_cols(f, [tuple(flat[j * dp:(j + 1) * dp]) for j in range(ncols)])


def _differential_matrix(act, degree):
    """The flat matrix of the degree-(degree) differential C^degree -> C^(degree+1)."""
    h = act.hopf
    f = h.field
    dh, dp = h.dim, act.plus_dim
    ncols = dh ** degree
    cols = []
    for j in range(ncols):
        for p in range(dp):
            flat = [f.zero] * (dp * ncols)
            flat[j * dp + p] = f.one
            c = NormalizedCochain(degree, _unflatten_cochain(f, flat, dp, ncols))
            cols.append(_flatten_cochain(differential(c, act).matrix))
    out_len = dp * dh ** (degree + 1)
    return Matrix.from_cols(f, cols) if cols else Matrix.zeros(f, out_len, 0)


def _normalization_constraints(act, degree):
    """Linear constraints expressing t(1) = 0 or s(h,1) = 0 = s(1,h)."""
    h = act.hopf
    f = h.field
    dh, dp = h.dim, act.plus_dim
    rows = []
    if degree == 1:
        for p in range(dp):
            row = [f.zero] * (dp * dh)
            for t, c in enumerate(h.unit):
                if c:
                    row[t * dp + p] = c
            rows.append(tuple(row))
        return rows
    for g in range(dh):
        for p in range(dp):
            left = [f.zero] * (dp * dh * dh)
            right = [f.zero] * (dp * dh * dh)
            for t, c in enumerate(h.unit):
                if c:
                    left[ti(g, t, dh) * dp + p] = c
                    right[ti(t, g, dh) * dp + p] = c
            rows.append(tuple(left))
            rows.append(tuple(right))
    return rows


class HH2Result:
    def __init__(self, act, dimension, representatives, cocycle_span, coboundary_span):
        self.act = act
        self.dimension = dimension
        self.representatives = representatives  # flat vectors
        self._cocycle_span = cocycle_span
        self._coboundary_span = coboundary_span

    def representative_cochains(self):
        f = self.act.hopf.field
        dp, dh = self.act.plus_dim, self.act.hopf.dim
        return [
            NormalizedCochain(2, _unflatten_cochain(f, v, dp, dh * dh))
            for v in self.representatives
        ]

    def decide(self, cochain):
        """Coordinates of [s] against the representative basis."""
        act = self.act
        f = act.hopf.field
        if not _check_normalized(act, cochain):
            raise CocycleViolationError("cochain is not normalized")
        if not differential(cochain, act).matrix.is_zero():
            raise CocycleViolationError("cochain is not a cocycle")
        flat = _flatten_cochain(cochain.matrix)
        cols = [list(v) for v in self.representatives] + [list(v) for v in self._coboundary_span]
        if not cols:
            return ()
        res = solve_linear(Matrix.from_cols(f, cols), flat)
        if not res.consistent:
            raise CocycleViolationError("cocycle lies outside the computed cocycle space")
        return tuple(res.solution[: len(self.representatives)])

    def is_zero_class(self, cochain):
        return all(not c for c in self.decide(cochain))


def hh2(hopf, act):
    """ker d2 / im d1 on normalized cochains, by exact rank computation."""
    violations = act.validate()
    if violations:
        raise ValidationError("invalid module structure: %r" % (violations,))
    f = hopf.field
    dh, dp = hopf.dim, act.plus_dim
    n2 = dp * dh * dh
    if dp == 0:
        return HH2Result(act, 0, [], [], [])
    d2 = _differential_matrix(act, 2)
    constraints = _normalization_constraints(act, 2)
    stacked = Matrix(f, list(d2.data) + constraints)
    cocycles = kernel_basis(stacked)
    d1 = _differential_matrix(act, 1)
    n1_constraints = _normalization_constraints(act, 1)
    n1_basis = kernel_basis(Matrix(f, n1_constraints)) if n1_constraints else [
        basis_vec(f, dp * dh, i) for i in range(dp * dh)
    ]
    coboundaries = row_space_basis(f, [d1.apply(t) for t in n1_basis], n2)
    dim = len(cocycles) - len(coboundaries)
    # representatives: echelon complement of the coboundaries in the cocycles
    reps = []
    span = list(coboundaries)
    for z in cocycles:
        if not in_span(f, span, z):
            reps.append(z)
            span = row_space_basis(f, span + [z], n2)
    if len(reps) != dim:
        raise ValidationError("representative count disagrees with the computed dimension")
    # guard the normalized-complex convention against the full complex
    if dh <= 4:
        full_z = len(kernel_basis(d2))
        full_b = d1.rank()
        if full_z - full_b != dim:
            raise ValidationError("normalized and full complexes disagree")
    return HH2Result(act, dim, reps, cocycles, coboundaries)


# ---------------------------------------------------------------------------
# cocycles <-> crossed systems over a square-zero augmentation ideal


def crossed_system_from_cocycle(act, s, aug=None):
    """Build (measuring, sigma) from an H-action on B+ and a normalized
    2-cocycle s; sigma^{-1}(g, h) = eps(g)eps(h)1 - s(g, h)."""
    if aug is None:
        aug = act.aug
    if not aug.square_zero:
        raise NotSquareZeroError("the augmentation ideal does not square to zero")
    violations = act.validate()
    if violations:
        raise ValidationError("invalid module structure: %r" % (violations,))
    if not _check_normalized(act, s):
        raise CocycleViolationError("cochain is not normalized")
    if not differential(s, act).matrix.is_zero():
        raise CocycleViolationError("cochain fails the 2-cocycle condition")
    h = act.hopf
    b = aug.algebra
    f = b.field
    dh, db = h.dim, b.dim
    meas_cols = [None] * (dh * db)
    for g in range(dh):
        for i in range(db):
            c, plus = aug.decompose(basis_vec(f, db, i))
            val = vscale(h.counit[g] * c, b.one())
            val = vadd(val, aug.embed_plus(act.act(basis_vec(f, dh, g), plus)))
            meas_cols[ti(g, i, db)] = val
    sig_cols = [None] * (dh * dh)
    inv_cols = [None] * (dh * dh)
    for g in range(dh):
        for t in range(dh):
            head = vscale(h.counit[g] * h.counit[t], b.one())
            tail = aug.embed_plus(s.matrix.col(ti(g, t, dh)))
            sig_cols[ti(g, t, dh)] = vadd(head, tail)
            inv_cols[ti(g, t, dh)] = vsub(head, tail)
    system = CrossedSystem(
        h,
        b,
        Matrix.from_cols(f, meas_cols),
        Matrix.from_cols(f, sig_cols),
        Matrix.from_cols(f, inv_cols),
    )
    from .comodule import check_crossed_system

    violations = check_crossed_system(system)
    if violations:
        raise ValidationError("cocycle data fails the crossed-system laws: %r" % (violations,))
    return system


# ---------------------------------------------------------------------------
# augmented cleft extensions and their classification


class AugmentedCleftExtension:
    def __init__(self, comodule_algebra, augmentation, section=None):
        if len(augmentation) != comodule_algebra.algebra.dim:
            raise ShapeMismatchError("augmentation vector has wrong length")
        self.comodule_algebra = comodule_algebra
        self.augmentation = tuple(augmentation)
        self.section = section

    def eps(self, vec):
        f = self.comodule_algebra.field
        s = f.zero
        for a, e in zip(vec, self.augmentation):
            if a and e:
                s = s + a * e
        return s


def reaugment_section(ext, sec):
    """Replace phi with h |-> eps_A(phi^{-1}(h1)) phi(h2), which is augmented."""
    ca = ext.comodule_algebra
    a, h = ca.algebra, ca.hopf
    f = ca.field
    phi = sec.phi.matrix
    phi_inv = sec.phi_inv.matrix
    cols = []
    for j in range(h.dim):
        acc = vzero(f, a.dim)
        for (p, q), c in h.delta_basis(j).items():
            acc = vadd(acc, vscale(c * ext.eps(phi_inv.col(p)), phi.col(q)))
        cols.append(acc)
    new_phi = Matrix.from_cols(f, cols)
    hc = h.as_coalgebra()
    new_inv = convolution_invert(ConvElement(hc, a, new_phi)).matrix
    for j in range(h.dim):
        if ext.eps(new_phi.col(j)) != h.counit[j]:
            raise ValidationError("re-augmented section fails the augmentation identity")
    return Section(ca, LinearMap(new_phi, h.basis, a.basis),
                   LinearMap(new_inv, h.basis, a.basis))


class Classification:
    def __init__(self, aug, act, cochain, hh2_result, class_coords, system, section):
        self.aug = aug
        self.act = act
        self.cochain = cochain
        self.hh2_result = hh2_result
        self.class_coords = class_coords
        self.system = system
        self.section = section

    @property
    def is_split(self):
        return all(not c for c in self.class_coords)


def classify_cleft_extension(ext):
    """Read off (action on B+, HH^2 class) from an augmented cleft extension
    over a square-zero augmented base."""
    ca = ext.comodule_algebra
    ca.require_valid()
    h = ca.hopf
    f = ca.field
    coinv = coinvariants(ca)
    b = coinv.subalgebra
    baug = AugmentedAlgebra(b, tuple(ext.eps(coinv.embed(basis_vec(f, b.dim, t)))
                                     for t in range(b.dim)))
    if not baug.square_zero:
        raise NotSquareZeroError("coinvariant augmentation ideal does not square to zero")
    sec = ext.section if ext.section is not None else find_section(ca)
    sec = reaugment_section(ext, sec)
    system, iso = section_to_crossed_system(sec)
    # the coinvariants of section_to_crossed_system share the basis computed
    # above (both canonical), so the system base is baug.algebra
    if system.base.canonical_constants() != b.canonical_constants():
        raise ValidationError("coinvariant presentations disagree")
    dh, db = h.dim, b.dim
    dp = baug.plus_dim
    # invert (hit): the action on B+ is the measuring restricted to B+
    act_cols = [None] * (dh * dp)
    for g in range(dh):
        for p in range(dp):
            val = system.act(basis_vec(f, dh, g), baug.plus_basis[p])
            c, plus = baug.decompose(val)
            if c:
                raise ValidationError("measuring does not preserve the augmentation ideal")
            act_cols[ti(g, p, dp)] = plus
    action = Matrix.from_cols(f, act_cols) if act_cols else Matrix.zeros(f, 0, 0)
    act = HModuleStructure(h, baug, action)
    # invert (sigma): s(g, h) = sigma(g, h) - eps(g)eps(h)1
    s_cols = [None] * (dh * dh)
    for g in range(dh):
        for t in range(dh):
            val = vsub(system.sigma_basis(g, t),
                       vscale(h.counit[g] * h.counit[t], b.one()))
            c, plus = baug.decompose(val)
            if c:
                raise ValidationError("cocycle part escapes the augmentation ideal")
            s_cols[ti(g, t, dh)] = plus
    s = NormalizedCochain(2, Matrix.from_cols(f, s_cols) if dp else Matrix.zeros(f, 0, dh * dh))
    result = hh2(h, act)
    coords = result.decide(s) if dp else ()
    return Classification(baug, act, s, result, coords, system, sec)


# ---------------------------------------------------------------------------
# gauge isomorphisms


def gauge_map_matrix(system, t):
    """f_t(b (x) h) = sum b (eps(h1)1 + t(h1)) (x) h2 on B (x) H (b-major)."""
    h, b = system.hopf, system.base
    f = b.field
    dh, db = h.dim, b.dim
    aug_embed = t  # a dB x dH matrix with values in B (already embedded)
    cols = []
    for i in range(db):
        bi = basis_vec(f, db, i)
        for g in range(dh):
            out = [f.zero] * (db * dh)
            for (g1, g2), c in h.delta_basis(g).items():
                factor = vadd(vscale(h.counit[g1], b.one()), aug_embed.col(g1))
                prod = b.mult(bi, factor)
                for x, u in enumerate(prod):
                    if u:
                        out[ti(x, g2, dh)] = out[ti(x, g2, dh)] + c * u
            cols.append(tuple(out))
    return Matrix.from_cols(f, cols)


def gauge_iso(t, source, target):
    """The gauge map f_t between two crossed products over the same (B, H);
    verified bijective with inverse f_{-t} and checked to be an algebra map."""
    h, b = source.hopf, source.base
    f = b.field
    if target.hopf is not h and target.hopf.canonical_constants() != h.canonical_constants():
        raise ShapeMismatchError("gauge between crossed products over different Hopf algebras")
    if target.base.canonical_constants() != b.canonical_constants():
        raise ShapeMismatchError("gauge between crossed products over different bases")
    dh, db = h.dim, b.dim
    if t.degree != 1:
        raise ValidationError("gauge cochains have degree 1")
    embedded = t.matrix  # dB x dH, values already in B
    ft = gauge_map_matrix(source, embedded)
    fneg = gauge_map_matrix(source, embedded.scale(-f.one))
    ident = Matrix.identity(f, db * dh)
    if ft * fneg != ident or fneg * ft != ident:
        raise ValidationError("f_t is not inverted by f_{-t}")
    src = crossed_product(source)
    dst = crossed_product(target)
    a1, a2 = src.algebra, dst.algebra
    if ft.apply(a1.one()) != a2.one():
        raise NotAlgebraMapError("gauge map does not preserve the unit")
    for i in range(a1.dim):
        for j in range(a1.dim):
            ei, ej = basis_vec(f, a1.dim, i), basis_vec(f, a1.dim, j)
            if ft.apply(a1.mult(ei, ej)) != a2.mult(ft.apply(ei), ft.apply(ej)):
                raise NotAlgebraMapError(
                    "gauge map is not multiplicative at basis pair (%d, %d)" % (i, j)
                )
    return LinearMap(ft, a1.basis, a2.basis)


def embed_cochain(aug, cochain):
    """A degree-1 cochain in plus coordinates, re-expressed with values in B."""
    f = aug.field
    cols = [aug.embed_plus(cochain.matrix.col(j)) for j in range(cochain.matrix.cols)]
    return NormalizedCochain(1, Matrix.from_cols(f, cols))


# ---------------------------------------------------------------------------
# split extensions


class SplitResult:
    def __init__(self, splitting, obstruction):
        self.splitting = splitting      # LinearMap H -> A, or None
        self.obstruction = obstruction  # class coordinates, or None

    @property
    def split(self):
        return self.splitting is not None


def split_extension(ext):
    """Return an augmented comodule-algebra map H -> A when the class
    vanishes, or the nonzero class as the obstruction."""
    cls = classify_cleft_extension(ext)
    if not cls.is_split:
        return SplitResult(None, cls.class_coords)
    ca = ext.comodule_algebra
    h = ca.hopf
    f = ca.field
    act = cls.act
    dp = act.plus_dim
    dh = h.dim
    if dp == 0 or cls.cochain.matrix.is_zero():
        t_flat = (f.zero,) * (dp * dh)
    else:
        d1 = _differential_matrix(act, 1)
        constraints = _normalization_constraints(act, 1)
        stacked = Matrix(f, list(d1.data) + constraints)
        rhs = list(_flatten_cochain(cls.cochain.matrix)) + [f.zero] * len(constraints)
        res = solve_linear(stacked, tuple(rhs))
        if not res.consistent:
            raise ValidationError("zero class admits no coboundary witness")
        t_flat = res.solution
    t = NormalizedCochain(1, _unflatten_cochain(f, t_flat, dp, dh)) if dp else (
        NormalizedCochain(1, Matrix.zeros(f, 0, dh)))
    # psi(h) = sum phi(h1) (eps(h2)1 - t~(h2)) where t~ embeds t in B inside A;
    # equivalently pull 1 (x) h back through the gauge f_t on the crossed side
    system = cls.system
    emb = embed_cochain(cls.aug, t) if dp else NormalizedCochain(1, Matrix.zeros(f, cls.aug.algebra.dim, dh))
    fneg = gauge_map_matrix(system, emb.matrix.scale(-f.one))
    # iso : B x| H -> A from the stored section
    _, iso = section_to_crossed_system(cls.section)
    db = system.base.dim
    cols = []
    for g in range(dh):
        v = [f.zero] * (db * dh)
        # 1_B (x) e_g
        for i, c in enumerate(system.base.unit):
            if c:
                v[ti(i, g, dh)] = c
        cols.append(iso.matrix.apply(fneg.apply(tuple(v))))
    psi = Matrix.from_cols(f, cols)
    a = ca.algebra
    # verify: algebra map, colinear, augmented
    for g in range(dh):
        for u in range(dh):
            lhs = vzero(f, a.dim)
            for k, c in h.mult_basis(g, u).items():
                lhs = vadd(lhs, vscale(c, psi.col(k)))
            if lhs != a.mult(psi.col(g), psi.col(u)):
                raise ValidationError("computed splitting is not multiplicative")
    if psi.apply(h.unit) != a.one():
        raise ValidationError("computed splitting does not preserve the unit")
    from .comodule import _check_colinear

    _check_colinear(ca, psi)
    for g in range(dh):
        if ext.eps(psi.col(g)) != h.counit[g]:
            raise ValidationError("computed splitting is not augmented")
    return SplitResult(LinearMap(psi, h.basis, a.basis), None)


# ---------------------------------------------------------------------------
# Hopf modules


class HopfModule:
    """A right H-module and right H-comodule with rho(m a) = rho(m) rho(a).

    action: dM x (dM * dH) matrix, column index ti(m, h, dH);
    coaction: (dM * dH) x dM matrix, flat row index ti(m, h, dH).
    """

    def __init__(self, hopf, action, coaction):
        self.hopf = hopf
        self.dim = action.rows
        dh = hopf.dim
        if action.cols != self.dim * dh:
            raise ShapeMismatchError("module action shape mismatch")
        if coaction.rows != self.dim * dh or coaction.cols != self.dim:
            raise ShapeMismatchError("module coaction shape mismatch")
        self.action = action
        self.coaction = coaction

    @property
    def field(self):
        return self.hopf.field

    def act_basis(self, m, h):
        return self.action.col(ti(m, h, self.hopf.dim))

    def act(self, mvec, hvec):
        f = self.field
        out = vzero(f, self.dim)
        for m, c in enumerate(mvec):
            if not c:
                continue
            for t, d in enumerate(hvec):
                if d:
                    out = vadd(out, vscale(c * d, self.act_basis(m, t)))
        return out

    def rho_basis(self, m):
        dh = self.hopf.dim
        col = self.coaction.col(m)
        return {divmod(flat, dh): c for flat, c in enumerate(col) if c}

    def validate(self):
        h = self.hopf
        f = self.field
        dm, dh = self.dim, h.dim
        violations = []
        for m in range(dm):
            em = basis_vec(f, dm, m)
            if self.act(em, h.unit) != em:
                violations.append(("module-not-unital", (m,)))
            for g in range(dh):
                for t in range(dh):
                    lhs = self.act(self.act_basis(m, g), basis_vec(f, dh, t))
                    gh = [f.zero] * dh
                    for k, c in h.mult_basis(g, t).items():
                        gh[k] = c
                    if lhs != self.act(em, tuple(gh)):
                        violations.append(("module-not-associative", (m, g, t)))
            # comodule axioms
            rm = self.rho_basis(m)
            out = [f.zero] * dm
            for (x, t), c in rm.items():
                if h.counit[t]:
                    out[x] = out[x] + c * h.counit[t]
            if tuple(out) != em:
                violations.append(("comodule-not-counital", (m,)))
            lhs = {}
            for (x, t), c in rm.items():
                for (y, s), d in self.rho_basis(x).items():
                    key = (y, s, t)
                    lhs[key] = lhs.get(key, f.zero) + c * d
            rhs = {}
            for (x, t), c in rm.items():
                for (u, v), d in h.delta_basis(t).items():
                    key = (x, u, v)
                    rhs[key] = rhs.get(key, f.zero) + c * d
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                violations.append(("comodule-not-coassociative", (m,)))
        # compatibility rho(m a) = rho(m) rho(a)
        for m in range(dm):
            rm = self.rho_basis(m)
            for g in range(dh):
                lhs = {}
                for x, c in enumerate(self.act_basis(m, g)):
                    if c:
                        for key, d in self.rho_basis(x).items():
                            lhs[key] = lhs.get(key, f.zero) + c * d
                rhs = {}
                for (x, t), c in rm.items():
                    for (g1, g2), d in h.delta_basis(g).items():
                        mv = self.act_basis(x, g1)
                        for k, u in h.mult_basis(t, g2).items():
                            for y, e in enumerate(mv):
                                if e:
                                    key = (y, k)
                                    rhs[key] = rhs.get(key, f.zero) + c * d * u * e
                if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                    violations.append(("hopf-module-compatibility", (m, g)))
        return violations


class HopfModuleDecomposition:
    def __init__(self, coinvariant_basis, iso):
        self.coinvariant_basis = coinvariant_basis
        self.iso = iso


def hopf_module_decompose(module):
    """The Hopf-module theorem map M^{coH} (x) H -> M, m (x) h |-> m h,
    materialized and verified bijective."""
    violations = module.validate()
    if violations:
        raise NotHopfModuleError("not a Hopf module: %r" % (violations,))
    h = module.hopf
    f = module.field
    dm, dh = module.dim, h.dim
    cols = []
    for m in range(dm):
        sparse = dict(module.rho_basis(m))
        for t, c in enumerate(h.unit):
            if c:
                sparse[(m, t)] = sparse.get((m, t), f.zero) - c
        v = [f.zero] * (dm * dh)
        for (x, t), c in sparse.items():
            if c:
                v[ti(x, t, dh)] = c
        cols.append(tuple(v))
    coinv = kernel_basis(Matrix.from_cols(f, cols))
    iso_cols = []
    for v in coinv:
        for t in range(dh):
            iso_cols.append(module.act(v, basis_vec(f, dh, t)))
    iso_m = Matrix.from_cols(f, iso_cols) if iso_cols else Matrix.zeros(f, dm, 0)
    if len(coinv) * dh != dm or not iso_m.is_invertible():
        raise NotHopfModuleError("the Hopf-module decomposition map is not bijective")
    labels = ["v%d(x)%s" % (i, h.basis[t]) for i in range(len(coinv)) for t in range(dh)]
    return HopfModuleDecomposition(coinv, LinearMap(iso_m, labels, ["m%d" % i for i in range(dm)]))


# ---------------------------------------------------------------------------
# colinear splitting through a nilpotent kernel


def _check_surjection(ca, hopf, pi):
    """pi : A -> H must be a colinear algebra surjection."""
    a = ca.algebra
    f = ca.field
    if pi.rows != hopf.dim or pi.cols != a.dim:
        raise ShapeMismatchError("surjection matrix shape mismatch")
    if pi.rank() != hopf.dim:
        raise ValidationError("map onto the Hopf algebra is not surjective")
    if pi.apply(a.one()) != hopf.one():
        raise ValidationError("map does not preserve the unit")
    for i in range(a.dim):
        for j in range(a.dim):
            ei, ej = basis_vec(f, a.dim, i), basis_vec(f, a.dim, j)
            if pi.apply(a.mult(ei, ej)) != hopf.mult(pi.apply(ei), pi.apply(ej)):
                raise ValidationError("map is not multiplicative at (%d, %d)" % (i, j))
    for i in range(a.dim):
        img = pi.apply(basis_vec(f, a.dim, i))
        lhs = hopf.delta(img)
        rhs = {}
        for (x, t), c in ca.rho_basis(i).items():
            for y, d in enumerate(pi.col(x)):
                if d:
                    key = (y, t)
                    rhs[key] = rhs.get(key, f.zero) + c * d
        if lhs != {k: v for k, v in rhs.items() if v}:
            raise ValidationError("map is not colinear at index %d" % i)


def ideal_power_chain(algebra, ideal_basis):
    """[I, I^2, ...] as echelon bases, stopping at zero or stabilization."""
    f = algebra.field
    n = algebra.dim
    chain = [row_space_basis(f, ideal_basis, n)]
    while chain[-1]:
        prods = [algebra.mult(x, y) for x in chain[-1] for y in chain[0]]
        nxt = row_space_basis(f, prods, n)
        if len(nxt) == len(chain[-1]):
            # I^{i+1} = I^i inside I^i means the power chain stabilized
            if all(in_span(f, chain[-1], v) for v in nxt):
                raise KernelNotNilpotentError("ideal power chain stabilized above zero")
        chain.append(nxt)
        if len(chain) > n + 1:
            raise KernelNotNilpotentError("ideal power chain does not terminate")
    return chain


def _quotient_coaction(ca, quot):
    """The induced sparse coaction on a quotient of A by a subcomodule ideal."""
    f = ca.field
    out = []
    for t in range(quot.dim):
        amb = quot.lift(basis_vec(f, quot.dim, t))
        sparse = {}
        for key, c in ca.rho(amb).items():
            x, s = key
            proj = quot.project(basis_vec(f, ca.algebra.dim, x))
            for y, d in enumerate(proj):
                if d:
                    k2 = (y, s)
                    sparse[k2] = sparse.get(k2, f.zero) + c * d
        out.append({k: v for k, v in sparse.items() if v})
    return out


def colinear_splitting_nilpotent(ca, pi):
    """A unit-preserving, convolution-invertible colinear splitting of a
    comodule-algebra surjection pi : A -> H with nilpotent kernel.

    Follows the quotient chain A/I^n -> ... -> A/I = H, splitting each
    square-annihilated step through the Hopf-module decomposition of its
    kernel.
    """
    ca.require_valid()
    a, h = ca.algebra, ca.hopf
    f = ca.field
    da, dh = a.dim, h.dim
    _check_surjection(ca, h, pi)
    ideal = kernel_basis(pi)
    chain = ideal_power_chain(a, list(ideal))  # chain[i] = basis of I^{i+1}
    n = len(chain)  # I^n = 0
    # quots[i] = A / I^{i+1}; quots[n-1] has no relations (identity on A)
    quots = [QuotientSpace(f, da, chain[i]) for i in range(n)]
    # lambda : H -> A, a fixed linear right inverse of pi
    lam_cols = []
    for g in range(dh):
        res = solve_linear(pi, basis_vec(f, dh, g))
        lam_cols.append(res.solution)
    lam = Matrix.from_cols(f, lam_cols)
    # phi on A/I: H -> A/I, h |-> class of lambda(h); bijective by dimensions
    phi_cols = [quots[0].project(lam.col(g)) for g in range(dh)]
    if len(phi_cols[0]) != dh:
        raise ValidationError("A/I does not have the dimension of H")
    phi = Matrix.from_cols(f, phi_cols)
    for step in range(1, n):
        x_quot = quots[step]
        y_quot = quots[step - 1]
        rho_x = _quotient_coaction(ca, x_quot)
        # K = image of I^step in X
        kbasis = row_space_basis(f, [x_quot.project(v) for v in chain[step - 1]], x_quot.dim)
        kmat = Matrix.from_cols(f, kbasis) if kbasis else Matrix.zeros(f, x_quot.dim, 0)
        dk = len(kbasis)
        # Hopf module structure on K: right H-action k . h = k * lambda(h)
        act_cols = [None] * (dk * dh)
        coact_cols = []
        for s in range(dk):
            lift_k = x_quot.lift(kbasis[s])
            for g in range(dh):
                prod = x_quot.project(a.mult(lift_k, lam.col(g)))
                res = solve_linear(kmat, prod)
                if not res.consistent:
                    raise ValidationError("kernel is not stable under the H-action")
                act_cols[ti(s, g, dh)] = res.solution
            # coaction restricted to K, in K coordinates; group the tensor
            # terms by the H-leg first, since only those sums lie in K
            by_t = {}
            for (x, t), c in _sparse_apply(rho_x, kbasis[s], f).items():
                leg = by_t.setdefault(t, [f.zero] * x_quot.dim)
                leg[x] = leg[x] + c
            v = [f.zero] * (dk * dh)
            for t, leg in by_t.items():
                res = solve_linear(kmat, tuple(leg))
                if not res.consistent:
                    raise ValidationError("kernel is not a subcomodule")
                for y, d in enumerate(res.solution):
                    if d:
                        v[ti(y, t, dh)] = d
            coact_cols.append(tuple(v))
        module = HopfModule(
            h,
            Matrix.from_cols(f, act_cols) if act_cols else Matrix.zeros(f, dk, 0),
            Matrix.from_cols(f, coact_cols) if coact_cols else Matrix.zeros(f, dk * dh, 0),
        )
        decomp = hopf_module_decompose(module)
        dv = len(decomp.coinvariant_basis)
        iso_inv = _matrix_inverse(decomp.iso.matrix)
        # linear retraction r0 : X -> K along the echelon complement of K
        r0 = _retraction_onto(f, kbasis, x_quot.dim)
        # v-map X -> V and the colinear retraction r = iso o (v (x) id) o rho_X
        r_cols = []
        for xidx in range(x_quot.dim):
            acc = [f.zero] * dk
            for (x0, t), c in rho_x[xidx].items():
                vcoords = _v_of(f, r0, iso_inv, dv, dh, h, x0)
                # (v (x) id): v(x0) (x) e_t, then iso back into K
                flat = [f.zero] * (dv * dh)
                for i, u in enumerate(vcoords):
                    if u:
                        flat[ti(i, t, dh)] = u
                img = decomp.iso.matrix.apply(tuple(flat))
                acc = [p + c * q for p, q in zip(acc, img)]
            r_cols.append(tuple(acc))
        rmat = Matrix.from_cols(f, r_cols)
        # r restricted to K must be the identity
        for s in range(dk):
            if rmat.apply(kbasis[s]) != basis_vec(f, dk, s):
                raise ValidationError("colinear retraction is not the identity on the kernel")
        # colinear section s : Y -> X, y |-> x - K r(x) for any preimage x
        p_cols = [y_quot.project(x_quot.lift(basis_vec(f, x_quot.dim, t)))
                  for t in range(x_quot.dim)]
        pmat = Matrix.from_cols(f, p_cols)
        s_cols = []
        for yidx in range(y_quot.dim):
            res = solve_linear(pmat, basis_vec(f, y_quot.dim, yidx))
            x = res.solution
            corr = kmat.apply(rmat.apply(x)) if dk else vzero(f, x_quot.dim)
            s_cols.append(vsub(x, corr))
        smat = Matrix.from_cols(f, s_cols)
        if pmat * smat != Matrix.identity(f, y_quot.dim):
            raise ValidationError("colinear section fails to split the quotient step")
        phi = smat * phi
    # lift phi from A/I^n (no relations) back to ambient A coordinates
    final_cols = [quots[n - 1].lift(phi.col(g)) for g in range(dh)]
    phi_a = Matrix.from_cols(f, final_cols)
    if pi * phi_a != Matrix.identity(f, dh):
        raise ValidationError("computed splitting does not split pi")
    from .comodule import _check_colinear, _normalized_section

    _check_colinear(ca, phi_a)
    sec = _normalized_section(ca, phi_a)
    if pi * sec.phi.matrix != Matrix.identity(f, dh):
        raise ValidationError("normalization broke the splitting property")
    return sec


def _sparse_apply(rho_list, vec, f):
    out = {}
    for i, c in enumerate(vec):
        if not c:
            continue
        for key, d in rho_list[i].items():
            out[key] = out.get(key, f.zero) + c * d
    return {k: v for k, v in out.items() if v}


def _matrix_inverse(m):
    return m.inverse()


def _retraction_onto(f, kbasis, ambient):
    """K-coordinates of the projection onto span(kbasis) along the standard
    complement of its pivot columns."""
    if not kbasis:
        return Matrix.zeros(f, 0, ambient)
    pivots = [next(j for j, a in enumerate(row) if a) for row in kbasis]
    cols = []
    for j in range(ambient):
        if j in pivots:
            cols.append(basis_vec(f, len(kbasis), pivots.index(j)))
        else:
            cols.append(vzero(f, len(kbasis)))
    return Matrix.from_cols(f, cols)


def _v_of(f, r0, iso_inv, dv, dh, h, xidx):
    """v = (id (x) eps) o iso^{-1} o r0, evaluated on the basis vector xidx."""
    k = r0.col(xidx)
    flat = iso_inv.apply(k)
    out = [f.zero] * dv
    for i in range(dv):
        for t in range(dh):
            c = flat[ti(i, t, dh)]
            if c and h.counit[t]:
                out[i] = out[i] + c * h.counit[t]
    return tuple(out)


# ---------------------------------------------------------------------------
# lifting comodule algebra maps through nilpotent kernels


class LiftResult:
    def __init__(self, lift, obstruction_step, obstruction):
        self.lift = lift
        self.obstruction_step = obstruction_step
        self.obstruction = obstruction

    @property
    def lifted(self):
        return self.lift is not None


def _check_comodule_algebra_map(src_hopf, dst, psi):
    f = dst.field
    a = dst.algebra
    if psi.apply(src_hopf.unit) != a.one():
        raise ValidationError("map does not preserve the unit")
    for g in range(src_hopf.dim):
        for t in range(src_hopf.dim):
            lhs = vzero(f, a.dim)
            for k, c in src_hopf.mult_basis(g, t).items():
                lhs = vadd(lhs, vscale(c, psi.col(k)))
            if lhs != a.mult(psi.col(g), psi.col(t)):
                raise ValidationError("map is not multiplicative at (%d, %d)" % (g, t))
    for g in range(src_hopf.dim):
        lhs = dst.rho(psi.col(g))
        rhs = {}
        for (p, q), c in src_hopf.delta_basis(g).items():
            for x, d in enumerate(psi.col(p)):
                if d:
                    key = (x, q)
                    rhs[key] = rhs.get(key, f.zero) + c * d
        if lhs != {k: v for k, v in rhs.items() if v}:
            raise ValidationError("map is not colinear at index %d" % g)


def quotient_comodule_algebra(ca, ideal_vectors):
    """A / I for a two-sided ideal that is also a subcomodule; returns the
    quotient comodule algebra and the projection."""
    a = ca.algebra
    f = ca.field
    quot = QuotientSpace(f, a.dim, ideal_vectors)
    dq = quot.dim
    product = {}
    for s in range(dq):
        ls = quot.lift(basis_vec(f, dq, s))
        for t in range(dq):
            lt = quot.lift(basis_vec(f, dq, t))
            prod = quot.project(a.mult(ls, lt))
            product[(s, t)] = {k: c for k, c in enumerate(prod) if c}
    unit = quot.project(a.one())
    labels = tuple("q%d" % s for s in range(dq))
    alg = FAlgebra(f, labels, product, unit)
    rho_list = _quotient_coaction(ca, quot)
    dh = ca.hopf.dim
    cols = []
    for s in range(dq):
        v = [f.zero] * (dq * dh)
        for (x, t), c in rho_list[s].items():
            v[ti(x, t, dh)] = c
        cols.append(tuple(v))
    out = ComoduleAlgebra(alg, ca.hopf, Matrix.from_cols(f, cols))
    out.require_valid()
    proj_cols = [quot.project(basis_vec(f, a.dim, j)) for j in range(a.dim)]
    return out, Matrix.from_cols(f, proj_cols)


def sub_comodule_algebra(ca, span_vectors):
    """The comodule subalgebra spanned by the given vectors (must be closed
    under product, contain 1, and be a subcomodule); returns it with the
    inclusion."""
    a = ca.algebra
    f = ca.field
    basis = row_space_basis(f, span_vectors, a.dim)
    inc = Matrix.from_cols(f, basis)
    ds = len(basis)

    def coords(vec):
        res = solve_linear(inc, vec)
        if not res.consistent:
            raise ValidationError("subspace is not closed")
        return res.solution

    product = {}
    for s in range(ds):
        for t in range(ds):
            prod = coords(a.mult(basis[s], basis[t]))
            product[(s, t)] = {k: c for k, c in enumerate(prod) if c}
    unit = coords(a.one())
    labels = tuple("s%d" % s for s in range(ds))
    alg = FAlgebra(f, labels, product, unit)
    dh = ca.hopf.dim
    cols = []
    for s in range(ds):
        v = [f.zero] * (ds * dh)
        for (x, t), c in ca.rho(basis[s]).items():
            sub = coords(basis_vec(f, a.dim, x))
            for y, d in enumerate(sub):
                if d:
                    v[ti(y, t, dh)] = v[ti(y, t, dh)] + c * d
        cols.append(tuple(v))
    out = ComoduleAlgebra(alg, ca.hopf, Matrix.from_cols(f, cols))
    out.require_valid()
    return out, LinearMap(inc, labels, a.basis)


def lift_comodule_algebra_map(c_ca, d_ca, varpi, psi):
    """Lift a comodule algebra map psi : H -> D through a surjection
    varpi : C -> D with nilpotent kernel, one square-annihilated quotient
    step at a time (exponents 2^i)."""
    c_ca.require_valid()
    d_ca.require_valid()
    h = c_ca.hopf
    f = c_ca.field
    _check_comodule_algebra_map(h, d_ca, psi)
    if psi.rank() != h.dim:
        raise ValidationError("comodule algebra map H -> D is not injective")
    ca_alg, d_alg = c_ca.algebra, d_ca.algebra
    # varpi verification
    if varpi.rank() != d_alg.dim:
        raise ValidationError("map C -> D is not surjective")
    if varpi.apply(ca_alg.one()) != d_alg.one():
        raise ValidationError("map C -> D does not preserve the unit")
    for i in range(ca_alg.dim):
        for j in range(ca_alg.dim):
            ei, ej = basis_vec(f, ca_alg.dim, i), basis_vec(f, ca_alg.dim, j)
            if varpi.apply(ca_alg.mult(ei, ej)) != d_alg.mult(varpi.apply(ei), varpi.apply(ej)):
                raise ValidationError("map C -> D is not multiplicative")
    for i in range(ca_alg.dim):
        lhs = d_ca.rho(varpi.apply(basis_vec(f, ca_alg.dim, i)))
        rhs = {}
        for (x, t), c in c_ca.rho_basis(i).items():
            for y, d in enumerate(varpi.col(x)):
                if d:
                    key = (y, t)
                    rhs[key] = rhs.get(key, f.zero) + c * d
        if lhs != {k: v for k, v in rhs.items() if v}:
            raise ValidationError("map C -> D is not colinear")
    ideal = kernel_basis(varpi)
    chain = ideal_power_chain(ca_alg, list(ideal))
    n = len(chain)  # J^n = 0
    # exponents 1 = 2^0 < 2 < 4 < ... >= n
    exps = [1]
    while exps[-1] < n:
        exps.append(exps[-1] * 2)
    # quotient comodule algebras C/J^e and the projections from C
    stages = []
    for e in exps:
        vecs = chain[e - 1] if e - 1 < len(chain) else []
        stages.append(quotient_comodule_algebra(c_ca, vecs))
    # psi_0 : H -> C/J, obtained from psi through the iso C/J ~ D
    q0, proj0 = stages[0]
    # varpi factors as iso o proj0; compute iso : C/J -> D and its inverse
    iso_cols = []
    for t in range(q0.algebra.dim):
        # any preimage of the class under proj0
        res = solve_linear(proj0, basis_vec(f, q0.algebra.dim, t))
        iso_cols.append(varpi.apply(res.solution))
    iso0 = Matrix.from_cols(f, iso_cols)
    if not iso0.is_invertible():
        raise ValidationError("C/J is not isomorphic to D")
    current = iso0.inverse() * psi  # H -> C/J
    _check_comodule_algebra_map(h, q0, current)
    for step in range(1, len(exps)):
        upper, proj_upper = stages[step]
        lower, proj_lower = stages[step - 1]
        # the step surjection C/J^{2^i} -> C/J^{2^{i-1}}
        step_cols = []
        for t in range(upper.algebra.dim):
            res = solve_linear(proj_upper, basis_vec(f, upper.algebra.dim, t))
            step_cols.append(proj_lower.apply(res.solution))
        step_pi = Matrix.from_cols(f, step_cols)
        # pull-back A = step_pi^{-1}(image of psi_{step-1})
        image = [current.col(g) for g in range(h.dim)]
        span = row_space_basis(f, image, lower.algebra.dim)
        # preimage of span under step_pi: kernel of (complement projection o step_pi)
        comp = QuotientSpace(f, lower.algebra.dim, span)
        if comp.dim == 0:
            avecs = [basis_vec(f, upper.algebra.dim, j) for j in range(upper.algebra.dim)]
        else:
            comp_proj = Matrix.from_cols(
                f, [comp.project(step_pi.col(j)) for j in range(upper.algebra.dim)]
            )
            avecs = kernel_basis(comp_proj)
        sub, inc = sub_comodule_algebra(upper, [tuple(v) for v in avecs])
        # pi : A -> H through psi_{step-1}^{-1} on the image
        psi_cols = [current.col(g) for g in range(h.dim)]
        psi_mat = Matrix.from_cols(f, psi_cols)
        pi_cols = []
        for t in range(sub.algebra.dim):
            img = step_pi.apply(inc.matrix.col(t))
            res = solve_linear(psi_mat, img)
            if not res.consistent:
                raise ValidationError("pull-back image escapes the embedded copy of H")
            pi_cols.append(res.solution)
        pi = Matrix.from_cols(f, pi_cols)
        # split pi as an augmented cleft extension with square-zero kernel
        sec = colinear_splitting_nilpotent(sub, pi)
        aug = tuple(h.eps(pi.col(t)) for t in range(sub.algebra.dim))
        ext = AugmentedCleftExtension(sub, aug, sec)
        res = split_extension(ext)
        if not res.split:
            return LiftResult(None, step, res.obstruction)
        current = inc.matrix * res.splitting.matrix  # H -> C/J^{2^step}
        _check_comodule_algebra_map(h, upper, current)
    # the last stage has no relations; lift to ambient C coordinates
    top_quot = QuotientSpace(f, ca_alg.dim,
                             chain[exps[-1] - 1] if exps[-1] - 1 < len(chain) else [])
    final = Matrix.from_cols(f, [top_quot.lift(current.col(g)) for g in range(h.dim)])
    _check_comodule_algebra_map(h, c_ca, final)
    if varpi * final != psi:
        raise ValidationError("computed lift does not project to the given map")
    return LiftResult(LinearMap(final, h.basis, ca_alg.basis), None, None)
