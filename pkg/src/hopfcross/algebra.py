"""Finite-dimensional algebra/coalgebra/bialgebra/Hopf presentations.

A presentation stores structure constants sparsely: the product as
``{(i, j): {k: scalar}}`` and the coproduct as ``{i: {(j, k): scalar}}``.
Vectors of coefficients are dense tuples.  Tensor indices are row-major:
basis element ``e_i (x) e_j`` of ``A (x) B`` has index ``i * dim(B) + j``.
"""

from .errors import (
    InvalidGroupTableError,
    NoAntipodeError,
    NotConvolutionInvertibleError,
    ShapeMismatchError,
    ValidationError,
)
from .linalg import (
    Matrix,
    basis_vec,
    is_zero_vec,
    solve_linear,
    vadd,
    vscale,
    vzero,
)


def ti(i, j, dim_j):
    """Flat index of e_i (x) e_j."""
    return i * dim_j + j


def _clean_sparse_product(field, dim, product):
    out = {}
    for (i, j), terms in product.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ShapeMismatchError("product index out of range")
        kept = {k: c for k, c in terms.items() if c}
        if kept:
            out[(i, j)] = kept
    return out


def _clean_sparse_coproduct(field, dim, coproduct):
    out = {}
    for i, terms in coproduct.items():
        if not 0 <= i < dim:
            raise ShapeMismatchError("coproduct index out of range")
        kept = {jk: c for jk, c in terms.items() if c}
        if kept:
            out[i] = kept
    return out


class FAlgebra:
    def __init__(self, field, basis, product, unit):
        self.field = field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if len(unit) != self.dim:
            raise ShapeMismatchError("unit vector has wrong length")
        self.product = _clean_sparse_product(field, self.dim, product)
        self.unit = tuple(unit)

    def one(self):
        return self.unit

    def mult_basis(self, i, j):
        return self.product.get((i, j), {})

    def mult(self, x, y):
        out = [self.field.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in self.mult_basis(i, j).items():
                    out[k] = out[k] + ab * c
        return tuple(out)

    def left_mult_matrix(self, x):
        cols = [self.mult(x, basis_vec(self.field, self.dim, j)) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols)

    def right_mult_matrix(self, x):
        cols = [self.mult(basis_vec(self.field, self.dim, j), x) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols)

    def product_matrix(self):
        """dim x dim^2 matrix of the multiplication A (x) A -> A."""
        cols = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = [self.field.zero] * self.dim
                for k, c in self.mult_basis(i, j).items():
                    v[k] = c
                cols.append(tuple(v))
        return Matrix.from_cols(self.field, cols)

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mult_basis(i, j) != self.mult_basis(j, i):
                    return False
        return True

    def canonical_constants(self):
        prod = tuple(
            (i, j, k, c)
            for (i, j) in sorted(self.product)
            for k, c in sorted(self.product[(i, j)].items())
        )
        return ("algebra", self.dim, prod, self.unit)


class FCoalgebra:
    def __init__(self, field, basis, coproduct, counit):
        self.field = field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        if len(counit) != self.dim:
            raise ShapeMismatchError("counit vector has wrong length")
        self.coproduct = _clean_sparse_coproduct(field, self.dim, coproduct)
        self.counit = tuple(counit)

    def delta_basis(self, i):
        return self.coproduct.get(i, {})

    def delta(self, vec):
        """Sparse coproduct of a dense vector: dict {(j, k): scalar}."""
        out = {}
        for i, a in enumerate(vec):
            if not a:
                continue
            for jk, c in self.delta_basis(i).items():
                out[jk] = out.get(jk, self.field.zero) + a * c
        return {jk: c for jk, c in out.items() if c}

    def eps(self, vec):
        s = self.field.zero
        for a, e in zip(vec, self.counit):
            if a and e:
                s = s + a * e
        return s

    def coproduct_matrix(self):
        """dim^2 x dim matrix of Delta."""
        z = self.field.zero
        cols = []
        for i in range(self.dim):
            v = [z] * (self.dim * self.dim)
            for (j, k), c in self.delta_basis(i).items():
                v[ti(j, k, self.dim)] = c
            cols.append(tuple(v))
        return Matrix.from_cols(self.field, cols)

    def delta2_basis(self, i):
        """Canonical three-fold coproduct (Delta (x) id) o Delta on e_i.

        Both Sweedler associations share this single code path.
        """
        out = {}
        for (j, k), c in self.delta_basis(i).items():
            for (a, b), d in self.delta_basis(j).items():
                key = (a, b, k)
                out[key] = out.get(key, self.field.zero) + c * d
        return {key: c for key, c in out.items() if c}

    def is_cocommutative(self):
        for i in range(self.dim):
            d = self.delta_basis(i)
            sw = {(k, j): c for (j, k), c in d.items()}
            if d != sw:
                return False
        return True

    def canonical_constants(self):
        cop = tuple(
            (i, j, k, c)
            for i in sorted(self.coproduct)
            for (j, k), c in sorted(self.coproduct[i].items())
        )
        return ("coalgebra", self.dim, cop, self.counit)


class FBialgebra:
    """Algebra and coalgebra on one basis, with compatible structures."""

    def __init__(self, field, basis, product, unit, coproduct, counit):
        self.field = field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self._alg = FAlgebra(field, basis, product, unit)
        self._coalg = FCoalgebra(field, basis, coproduct, counit)

    # algebra / coalgebra views and delegated accessors
    def as_algebra(self):
        return self._alg

    def as_coalgebra(self):
        return self._coalg

    @property
    def product(self):
        return self._alg.product

    @property
    def unit(self):
        return self._alg.unit

    @property
    def coproduct(self):
        return self._coalg.coproduct

    @property
    def counit(self):
        return self._coalg.counit

    def one(self):
        return self._alg.unit

    def mult(self, x, y):
        return self._alg.mult(x, y)

    def mult_basis(self, i, j):
        return self._alg.mult_basis(i, j)

    def delta(self, vec):
        return self._coalg.delta(vec)

    def delta_basis(self, i):
        return self._coalg.delta_basis(i)

    def delta2_basis(self, i):
        return self._coalg.delta2_basis(i)

    def eps(self, vec):
        return self._coalg.eps(vec)

    def is_commutative(self):
        return self._alg.is_commutative()

    def is_cocommutative(self):
        return self._coalg.is_cocommutative()


class FHopf(FBialgebra):
    def __init__(self, field, basis, product, unit, coproduct, counit, antipode):
        super().__init__(field, basis, product, unit, coproduct, counit)
        if antipode.rows != self.dim or antipode.cols != self.dim:
            raise ShapeMismatchError("antipode matrix shape mismatch")
        self.antipode = antipode

    @staticmethod
    def from_bialgebra(b, antipode):
        return FHopf(b.field, b.basis, b.product, b.unit, b.coproduct, b.counit, antipode)


# ---------------------------------------------------------------------------
# axiom checking


class AxiomReport:
    def __init__(self, kind, violations):
        self.kind = kind
        self.violations = violations

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        if self.ok:
            return "AxiomReport(%s: pass)" % self.kind
        return "AxiomReport(%s: %d violations, first %r)" % (
            self.kind,
            len(self.violations),
            self.violations[0],
        )


MAX_VIOLATIONS = 10


def _check_algebra(a, out):
    f = a.field
    dim = a.dim
    for i in range(dim):
        e = basis_vec(f, dim, i)
        if a.mult(a.unit, e) != e:
            out.append(("left-unit", (i,)))
        if a.mult(e, a.unit) != e:
            out.append(("right-unit", (i,)))
        if len(out) >= MAX_VIOLATIONS:
            return
    for i in range(dim):
        for j in range(dim):
            eij = a.mult(basis_vec(f, dim, i), basis_vec(f, dim, j))
            for l in range(dim):
                el = basis_vec(f, dim, l)
                lhs = a.mult(eij, el)
                rhs = a.mult(
                    basis_vec(f, dim, i),
                    a.mult(basis_vec(f, dim, j), el),
                )
                if lhs != rhs:
                    out.append(("associativity", (i, j, l)))
                    if len(out) >= MAX_VIOLATIONS:
                        return


def _check_coalgebra(c, out):
    f = c.field
    for i in range(c.dim):
        lhs = c.delta2_basis(i)
        rhs = {}
        for (j, k), u in c.delta_basis(i).items():
            for (a, b), v in c.delta_basis(k).items():
                key = (j, a, b)
                rhs[key] = rhs.get(key, f.zero) + u * v
        rhs = {key: v for key, v in rhs.items() if v}
        if lhs != rhs:
            out.append(("coassociativity", (i,)))
        left = [f.zero] * c.dim
        right = [f.zero] * c.dim
        for (j, k), u in c.delta_basis(i).items():
            left[k] = left[k] + c.counit[j] * u
            right[j] = right[j] + u * c.counit[k]
        e = basis_vec(f, c.dim, i)
        if tuple(left) != e:
            out.append(("counit-left", (i,)))
        if tuple(right) != e:
            out.append(("counit-right", (i,)))
        if len(out) >= MAX_VIOLATIONS:
            return


def _delta_of_product(b, i, j):
    """Delta(e_i e_j) as a sparse dict over basis pairs."""
    f = b.field
    out = {}
    for k, c in b.mult_basis(i, j).items():
        for jk, d in b.delta_basis(k).items():
            out[jk] = out.get(jk, f.zero) + c * d
    return {jk: c for jk, c in out.items() if c}


def _product_of_deltas(b, i, j):
    """Delta(e_i) Delta(e_j) in the tensor-square algebra."""
    f = b.field
    out = {}
    for (a1, a2), c in b.delta_basis(i).items():
        for (b1, b2), d in b.delta_basis(j).items():
            cd = c * d
            for x, u in b.mult_basis(a1, b1).items():
                for y, v in b.mult_basis(a2, b2).items():
                    key = (x, y)
                    out[key] = out.get(key, f.zero) + cd * u * v
    return {key: c for key, c in out.items() if c}


def _check_bialgebra(b, out):
    f = b.field
    dim = b.dim
    # Delta(1) = 1 (x) 1 and eps(1) = 1
    d1 = b.delta(b.unit)
    expected = {}
    for i, a in enumerate(b.unit):
        for j, c in enumerate(b.unit):
            if a and c:
                expected[(i, j)] = a * c
    if d1 != expected:
        out.append(("coproduct-of-unit", ()))
    if b.eps(b.unit) != f.one:
        out.append(("counit-of-unit", ()))
    for i in range(dim):
        for j in range(dim):
            if _delta_of_product(b, i, j) != _product_of_deltas(b, i, j):
                out.append(("coproduct-multiplicative", (i, j)))
            ei = basis_vec(f, dim, i)
            ej = basis_vec(f, dim, j)
            if b.eps(b.mult(ei, ej)) != b.counit[i] * b.counit[j]:
                out.append(("counit-multiplicative", (i, j)))
            if len(out) >= MAX_VIOLATIONS:
                return


def _check_antipode(h, out):
    f = h.field
    dim = h.dim
    for i in range(dim):
        lhs = [f.zero] * dim
        rhs = [f.zero] * dim
        for (j, k), c in h.delta_basis(i).items():
            sj = h.antipode.col(j)
            sk = h.antipode.col(k)
            lhs = vadd(lhs, vscale(c, h.mult(basis_vec(f, dim, j), sk)))
            rhs = vadd(rhs, vscale(c, h.mult(sj, basis_vec(f, dim, k))))
        target = vscale(h.counit[i], h.unit)
        if tuple(lhs) != target:
            out.append(("antipode-right", (i,)))
        if tuple(rhs) != target:
            out.append(("antipode-left", (i,)))
        if len(out) >= MAX_VIOLATIONS:
            return


def check_axioms(kind, data):
    """Check structure axioms up to the requested level.

    kind is one of "algebra", "coalgebra", "bialgebra", "hopf".
    """
    out = []
    if kind == "algebra":
        _check_algebra(data, out)
    elif kind == "coalgebra":
        _check_coalgebra(data, out)
    elif kind == "bialgebra":
        _check_algebra(data.as_algebra(), out)
        if len(out) < MAX_VIOLATIONS:
            _check_coalgebra(data.as_coalgebra(), out)
        if len(out) < MAX_VIOLATIONS:
            _check_bialgebra(data, out)
    elif kind == "hopf":
        report = check_axioms("bialgebra", data)
        out = list(report.violations)
        if len(out) < MAX_VIOLATIONS:
            _check_antipode(data, out)
    else:
        raise ValueError("unknown axiom kind %r" % (kind,))
    return AxiomReport(kind, out[:MAX_VIOLATIONS])


# ---------------------------------------------------------------------------
# convolution algebra Hom(C, A)


class ConvElement:
    """A linear map C -> A inside the convolution algebra Hom(C, A)."""

    def __init__(self, coalgebra, algebra, matrix):
        if matrix.rows != algebra.dim or matrix.cols != coalgebra.dim:
            raise ShapeMismatchError("convolution element shape mismatch")
        self.coalgebra = coalgebra
        self.algebra = algebra
        self.matrix = matrix

    def __call__(self, vec):
        return self.matrix.apply(vec)

    def __eq__(self, other):
        return (
            isinstance(other, ConvElement)
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(self.matrix)


def convolution_unit(coalgebra, algebra):
    cols = [vscale(coalgebra.counit[i], algebra.unit) for i in range(coalgebra.dim)]
    return ConvElement(coalgebra, algebra, Matrix.from_cols(algebra.field, cols))


def convolve(f, g):
    if f.coalgebra is not g.coalgebra and f.coalgebra.canonical_constants() != g.coalgebra.canonical_constants():
        raise ShapeMismatchError("convolution with mismatched coalgebras")
    if f.algebra is not g.algebra and f.algebra.canonical_constants() != g.algebra.canonical_constants():
        raise ShapeMismatchError("convolution with mismatched algebras")
    c, a = f.coalgebra, g.algebra
    z = vzero(a.field, a.dim)
    cols = []
    for i in range(c.dim):
        acc = z
        for (j, k), u in c.delta_basis(i).items():
            acc = vadd(acc, vscale(u, a.mult(f.matrix.col(j), g.matrix.col(k))))
        cols.append(acc)
    return ConvElement(c, a, Matrix.from_cols(a.field, cols))


def convolution_left_operator(coalgebra, algebra, fmat):
    """The operator g |-> f*g on Hom(C, A), flattened at index (k, r) =
    coefficient of e_r in g(e_k)."""
    fld = algebra.field
    dc, da = coalgebra.dim, algebra.dim
    n = dc * da
    rows = [[fld.zero] * n for _ in range(n)]
    cache = {}
    for i in range(dc):
        for (j, k), u in coalgebra.delta_basis(i).items():
            for r_src in range(da):
                key = (j, r_src)
                if key not in cache:
                    cache[key] = algebra.mult(fmat.col(j), basis_vec(fld, da, r_src))
                vec = cache[key]
                colidx = ti(k, r_src, da)
                for r_out, val in enumerate(vec):
                    if val:
                        rows[ti(i, r_out, da)][colidx] = (
                            rows[ti(i, r_out, da)][colidx] + u * val
                        )
    return Matrix(fld, rows)


def convolution_invert(f):
    """Invert f in Hom(C, A) by solving the linear system L_f(g) = unit.

    The two-sided identity is always re-verified, guarding against
    non-coassociative or non-associative corrupt inputs.
    """
    c, a = f.coalgebra, f.algebra
    fld = a.field
    dc, da = c.dim, a.dim
    op = convolution_left_operator(c, a, f.matrix)
    unit = convolution_unit(c, a)
    rhs = []
    for i in range(dc):
        rhs.extend(unit.matrix.col(i))
    res = solve_linear(op, tuple(rhs))
    if not res.consistent:
        raise NotConvolutionInvertibleError("left convolution by f is not surjective")
    g_cols = [
        tuple(res.solution[ti(k, r, da)] for r in range(da)) for k in range(dc)
    ]
    g = ConvElement(c, a, Matrix.from_cols(fld, g_cols))
    if convolve(f, g) != unit or convolve(g, f) != unit:
        raise NotConvolutionInvertibleError("candidate inverse fails the two-sided identity")
    return g


def identity_conv(bialgebra):
    return ConvElement(
        bialgebra.as_coalgebra(),
        bialgebra.as_algebra(),
        Matrix.identity(bialgebra.field, bialgebra.dim),
    )


def compute_antipode(b):
    """Upgrade a bialgebra to a Hopf algebra by inverting id in Hom(B, B)."""
    report = check_axioms("bialgebra", b)
    if not report.ok:
        raise ValidationError("not a bialgebra: %r" % (report,))
    try:
        s = convolution_invert(identity_conv(b))
    except NotConvolutionInvertibleError as exc:
        raise NoAntipodeError("identity map is not convolution-invertible") from exc
    h = FHopf.from_bialgebra(b, s.matrix)
    violations = []
    _check_antipode(h, violations)
    if violations:
        raise NoAntipodeError("computed antipode fails the antipode law")
    return h


# ---------------------------------------------------------------------------
# group Hopf algebras


def group_hopf_algebra(table, field):
    """The group algebra of a finite group, with its standard Hopf structure."""
    table.validate()
    n = table.order
    product = {
        (i, j): {table.mult[i][j]: field.one} for i in range(n) for j in range(n)
    }
    unit = basis_vec(field, n, table.identity)
    coproduct = {i: {(i, i): field.one} for i in range(n)}
    counit = (field.one,) * n
    antipode = Matrix.from_cols(
        field, [basis_vec(field, n, table.inv[i]) for i in range(n)]
    )
    return FHopf(field, table.elements, product, unit, coproduct, counit, antipode)


def is_group_like_basis(h):
    """True when every basis element of h is group-like."""
    for i in range(h.dim):
        if h.delta_basis(i) != {(i, i): h.field.one}:
            return False
        if h.counit[i] != h.field.one:
            return False
    return True


def group_table_from_hopf(h):
    """Extract a GroupTable from a group-algebra presentation."""
    from .groups import GroupTable

    if not is_group_like_basis(h):
        raise InvalidGroupTableError("basis is not group-like")
    n = h.dim
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = h.mult_basis(i, j)
            if len(terms) != 1:
                raise InvalidGroupTableError("product of basis elements is not a basis element")
            (k, c), = terms.items()
            if c != h.field.one:
                raise InvalidGroupTableError("product has non-unit coefficient")
            row.append(k)
        mult.append(row)
    return GroupTable(list(h.basis), mult)


# ---------------------------------------------------------------------------
# duals


def dual_hopf(h):
    """The dual Hopf algebra of a finite-dimensional Hopf algebra."""
    f = h.field
    dim = h.dim
    product = {}
    for k, terms in h.coproduct.items():
        for (i, j), c in terms.items():
            product.setdefault((i, j), {})[k] = (
                product.get((i, j), {}).get(k, f.zero) + c
            )
    coproduct = {}
    for (i, j), terms in h.product.items():
        for k, c in terms.items():
            coproduct.setdefault(k, {})[(i, j)] = (
                coproduct.get(k, {}).get((i, j), f.zero) + c
            )
    unit = h.counit
    counit = h.unit
    dual = FHopf(
        f,
        tuple("%s*" % lbl for lbl in h.basis),
        product,
        unit,
        coproduct,
        counit,
        h.antipode.transpose(),
    )
    report = check_axioms("hopf", dual)
    if not report.ok:
        raise ValidationError("dual presentation fails Hopf axioms: %r" % (report,))
    return dual


# ---------------------------------------------------------------------------
# tensor products of algebras (ordinary, no signs)


def tensor_algebra(a, b, labels=None):
    """The tensor-product algebra A (x) B with componentwise product."""
    if a.field != b.field:
        raise ShapeMismatchError("tensor factors over different fields")
    f = a.field
    da, db = a.dim, b.dim
    if labels is None:
        labels = tuple(
            "%s(x)%s" % (x, y) for x in a.basis for y in b.basis
        )
    product = {}
    for (i1, i2) in [(i, j) for i in range(da) for j in range(da)]:
        pa = a.mult_basis(i1, i2)
        if not pa:
            continue
        for (j1, j2) in [(i, j) for i in range(db) for j in range(db)]:
            pb = b.mult_basis(j1, j2)
            if not pb:
                continue
            terms = {}
            for ka, ca in pa.items():
                for kb, cb in pb.items():
                    terms[ti(ka, kb, db)] = ca * cb
            product[(ti(i1, j1, db), ti(i2, j2, db))] = terms
    unit = [f.zero] * (da * db)
    for i, x in enumerate(a.unit):
        for j, y in enumerate(b.unit):
            if x and y:
                unit[ti(i, j, db)] = x * y
    return FAlgebra(f, labels, product, tuple(unit))


def tensor_coalgebra(c, d, labels=None):
    """The tensor-product coalgebra C (x) D (middle-leg swap, no signs)."""
    if c.field != d.field:
        raise ShapeMismatchError("tensor factors over different fields")
    f = c.field
    dc, dd = c.dim, d.dim
    if labels is None:
        labels = tuple("%s(x)%s" % (x, y) for x in c.basis for y in d.basis)
    coproduct = {}
    for i in range(dc):
        for j in range(dd):
            terms = {}
            for (a1, a2), u in c.delta_basis(i).items():
                for (b1, b2), v in d.delta_basis(j).items():
                    terms[(ti(a1, b1, dd), ti(a2, b2, dd))] = u * v
            coproduct[ti(i, j, dd)] = terms
    counit = tuple(
        c.counit[i] * d.counit[j] for i in range(dc) for j in range(dd)
    )
    return FCoalgebra(f, labels, coproduct, counit)


# ---------------------------------------------------------------------------
# smash coproduct


class ComoduleCoalgebraData:
    """A right H-comodule coalgebra: D with coaction rho_D : D -> D (x) H."""

    def __init__(self, coalgebra, hopf, coaction):
        self.coalgebra = coalgebra
        self.hopf = hopf
        if coaction.rows != coalgebra.dim * hopf.dim or coaction.cols != coalgebra.dim:
            raise ShapeMismatchError("coaction matrix shape mismatch")
        self.coaction = coaction

    def rho_basis(self, i):
        """Sparse coaction of e_i: dict {(d, h): scalar}."""
        col = self.coaction.col(i)
        dh = self.hopf.dim
        return {
            (idx // dh, idx % dh): c for idx, c in enumerate(col) if c
        }

    def validate(self):
        d, h = self.coalgebra, self.hopf
        f = d.field
        errors = []
        for i in range(d.dim):
            rho = self.rho_basis(i)
            # counital: (id (x) eps) rho = id
            v = [f.zero] * d.dim
            for (a, x), c in rho.items():
                v[a] = v[a] + c * h.counit[x]
            if tuple(v) != basis_vec(f, d.dim, i):
                errors.append(("coaction-counital", (i,)))
            # coassociative: (rho (x) id) rho = (id (x) Delta) rho
            lhs = {}
            for (a, x), c in rho.items():
                for (a2, y), c2 in self.rho_basis(a).items():
                    key = (a2, y, x)
                    lhs[key] = lhs.get(key, f.zero) + c * c2
            rhs = {}
            for (a, x), c in rho.items():
                for (y, z), c2 in h.delta_basis(x).items():
                    key = (a, y, z)
                    rhs[key] = rhs.get(key, f.zero) + c * c2
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                errors.append(("coaction-coassociative", (i,)))
            # Delta_D is H-colinear: rho_{D(x)D} o Delta = (Delta (x) id) o rho
            lhs = {}
            for (d1, d2), c in d.delta_basis(i).items():
                for (a1, x1), u in self.rho_basis(d1).items():
                    for (a2, x2), v2 in self.rho_basis(d2).items():
                        for x, w in h.mult_basis(x1, x2).items():
                            key = (a1, a2, x)
                            lhs[key] = lhs.get(key, f.zero) + c * u * v2 * w
            rhs = {}
            for (a, x), c in rho.items():
                for (d1, d2), u in d.delta_basis(a).items():
                    key = (d1, d2, x)
                    rhs[key] = rhs.get(key, f.zero) + c * u
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                errors.append(("coproduct-not-colinear", (i,)))
            # eps_D is H-colinear: (eps (x) id) rho = eps(.) 1_H
            v = [f.zero] * h.dim
            for (a, x), c in rho.items():
                v[x] = v[x] + c * d.counit[a]
            if tuple(v) != vscale(d.counit[i], h.unit):
                errors.append(("counit-not-colinear", (i,)))
        return errors


class SmashCoproduct:
    """The coalgebra H |x D with its left H-module structure map."""

    def __init__(self, coalgebra, module_action, hopf, data):
        self.coalgebra = coalgebra
        self.module_action = module_action
        self.hopf = hopf
        self.data = data


def smash_coproduct(data):
    """Build the smash coproduct coalgebra on H (x) D (h-index major)."""
    errors = data.validate()
    if errors:
        raise ValidationError("invalid coaction: %r" % (errors,))
    h, d = data.hopf, data.coalgebra
    f = h.field
    dh, dd = h.dim, d.dim
    labels = tuple("%s|x%s" % (x, y) for x in h.basis for y in d.basis)
    coproduct = {}
    for hi in range(dh):
        for di in range(dd):
            terms = {}
            for (h1, h2), u in h.delta_basis(hi).items():
                for (d1, d2), v in d.delta_basis(di).items():
                    for (d10, d11), w in data.rho_basis(d1).items():
                        for x, m in h.mult_basis(h2, d11).items():
                            key = (ti(h1, d10, dd), ti(x, d2, dd))
                            terms[key] = terms.get(key, f.zero) + u * v * w * m
            coproduct[ti(hi, di, dd)] = {k: v for k, v in terms.items() if v}
    counit = tuple(
        h.counit[hi] * d.counit[di] for hi in range(dh) for di in range(dd)
    )
    coalg = FCoalgebra(f, labels, coproduct, counit)
    report = check_axioms("coalgebra", coalg)
    if not report.ok:
        raise ValidationError("smash coproduct fails coalgebra axioms: %r" % (report,))
    # left H-module structure: h' . (h (x) d) = h'h (x) d
    n = dh * dd
    cols = []
    for hp in range(dh):
        for hi in range(dh):
            for di in range(dd):
                v = [f.zero] * n
                for x, c in h.mult_basis(hp, hi).items():
                    v[ti(x, di, dd)] = c
                cols.append(tuple(v))
    action = Matrix.from_cols(f, cols)
    return SmashCoproduct(coalg, action, h, data)
