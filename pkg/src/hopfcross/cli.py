"""Command-line entry point: load JSON presentations, run any library
operation, and emit deterministic verdict reports.

Exit codes: 0 = pass/found, 1 = fail/not-found/obstruction, 2 = input error.
Scalars are (numerator, denominator) pairs over Q (denominator omitted when
1) and bare residues over Fp. Machine reports (--json) are byte-identical
across runs with identical inputs and flags.
"""

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    ComoduleCoalgebraData,
    FBialgebra,
    FCoalgebra,
    FHopf,
    check_axioms,
    compute_antipode,
    convolution_invert,
    ConvElement,
    dual_hopf,
    smash_coproduct,
)
from .cohomology import (
    AugmentedAlgebra,
    AugmentedCleftExtension,
    HModuleStructure,
    NormalizedCochain,
    classify_cleft_extension,
    hh2,
    lift_comodule_algebra_map,
    split_extension,
)
from .comodule import (
    ComoduleAlgebra,
    CrossedSystem,
    check_crossed_system,
    coinvariants,
    crossed_product,
    find_section,
    galois_map,
    graded_bridge,
    section_to_crossed_system,
)
from .errors import (
    HopfcrossError,
    InvalidGroupTableError,
    NoAntipodeError,
    NoSectionFoundError,
    NotCrossedProductError,
    ParseError,
    ValidationError,
)
from .graded import (
    GradedAlgebra,
    check_grading,
    is_strongly_graded,
    morita_context,
    recognize_group_crossed_product,
)
from .groups import GroupTable
from .linalg import Matrix, PrimeField, Rationals
from .search import SearchBudget
from .superalg import SuperPresentation, decompose, duality_pairing
from .algebra import FAlgebra

FORMAT_VERSION = 1


# ---------------------------------------------------------------------------
# scalar and matrix encoding


def _field_to_json(field):
    if field.characteristic == 0:
        return {"kind": "Q"}
    return {"kind": "Fp", "p": field.characteristic}


def _field_from_json(obj):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("field block must be an object with a 'kind'")
    if obj["kind"] == "Q":
        return Rationals()
    if obj["kind"] == "Fp":
        p = obj.get("p")
        if not isinstance(p, int):
            raise ParseError("Fp field needs an integer 'p'")
        try:
            return PrimeField(p)
        except ValueError:
            raise ValidationError("p = %d is not prime" % p)
    raise ParseError("unknown field kind %r" % (obj["kind"],))


def _scal_json(field, c):
    if field.characteristic:
        return [c.value]
    fr = Fraction(c)
    if fr.denominator == 1:
        return [fr.numerator]
    return [fr.numerator, fr.denominator]


def _scal_parse(field, parts, where):
    if not parts or len(parts) > 2:
        raise ParseError("bad scalar in %s" % where)
    if field.characteristic:
        if len(parts) != 1:
            raise ParseError("no denominators over Fp (%s)" % where)
        return field.from_int(parts[0])
    if len(parts) == 1:
        return field.from_fraction(parts[0])
    return field.from_fraction(parts[0], parts[1])


def _matrix_to_json(field, m):
    entries = []
    for i in range(m.rows):
        for j in range(m.cols):
            c = m.data[i][j]
            if c:
                entries.append([i, j] + _scal_json(field, c))
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def _matrix_from_json(field, obj, where):
    if not isinstance(obj, dict) or "rows" not in obj or "cols" not in obj:
        raise ParseError("matrix block %s needs 'rows' and 'cols'" % where)
    r, c = obj["rows"], obj["cols"]
    data = [[field.zero] * c for _ in range(r)]
    for e in obj.get("entries", []):
        i, j = e[0], e[1]
        if not (0 <= i < r and 0 <= j < c):
            raise ParseError("entry (%d, %d) out of range in %s" % (i, j, where))
        data[i][j] = _scal_parse(field, e[2:], where)
    return Matrix(field, data)


def _vector_from_json(field, obj, dim, where):
    v = [field.zero] * dim
    for e in obj:
        i = e[0]
        if not 0 <= i < dim:
            raise ParseError("index %d out of range in %s" % (i, where))
        v[i] = _scal_parse(field, e[1:], where)
    return tuple(v)


def _vector_to_json(field, v):
    return [[i] + _scal_json(field, c) for i, c in enumerate(v) if c]


def _sparse3_from_json(field, obj, dim, where):
    out = {}
    for e in obj:
        i, j, k = e[0], e[1], e[2]
        for idx in (i, j, k):
            if not 0 <= idx < dim:
                raise ParseError("index %d out of range in %s" % (idx, where))
        out.setdefault((i, j), {})[k] = _scal_parse(field, e[3:], where)
    return out


def _product_to_json(field, alg):
    entries = []
    for (i, j), terms in sorted(alg.product.items()):
        for k, c in sorted(terms.items()):
            if c:
                entries.append([i, j, k] + _scal_json(field, c))
    return entries


def _coproduct_to_json(field, coalg):
    entries = []
    for i in sorted(coalg.coproduct):
        for (j, k), c in sorted(coalg.coproduct[i].items()):
            if c:
                entries.append([i, j, k] + _scal_json(field, c))
    return entries


def _coproduct_from_json(field, obj, dim, where):
    out = {}
    for e in obj:
        i, j, k = e[0], e[1], e[2]
        for idx in (i, j, k):
            if not 0 <= idx < dim:
                raise ParseError("index %d out of range in %s" % (idx, where))
        out.setdefault(i, {})[(j, k)] = _scal_parse(field, e[3:], where)
    return out


def _require(doc, key, kind):
    if key not in doc:
        raise ValidationError("kind %r is missing the %r block" % (kind, key))
    return doc[key]


# ---------------------------------------------------------------------------
# presentation encoding


def encode_algebra(alg):
    return {
        "format_version": FORMAT_VERSION,
        "kind": "algebra",
        "field": _field_to_json(alg.field),
        "basis": list(alg.basis),
        "product": _product_to_json(alg.field, alg),
        "unit": _vector_to_json(alg.field, alg.unit),
    }


def encode_hopf(h, kind="hopf"):
    f = h.field
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "field": _field_to_json(f),
        "basis": list(h.basis),
        "product": _product_to_json(f, h.as_algebra()),
        "unit": _vector_to_json(f, h.unit),
        "coproduct": _coproduct_to_json(f, h.as_coalgebra()),
        "counit": _vector_to_json(f, h.counit),
    }
    if kind in ("hopf", "super-hopf"):
        doc["antipode"] = _matrix_to_json(f, h.antipode)
    return doc


def encode_super_hopf(sp):
    doc = encode_hopf(sp.hopf, kind="super-hopf")
    doc["parity"] = list(sp.parity)
    return doc


def encode_graded_algebra(ga):
    doc = encode_algebra(ga.algebra)
    doc["kind"] = "graded-algebra"
    doc["group"] = {
        "elements": list(ga.group.elements),
        "table": [list(row) for row in ga.group.mult],
    }
    doc["degree"] = list(ga.degree)
    return doc


def encode_comodule_algebra(ca, augmentation=None):
    doc = encode_algebra(ca.algebra)
    doc["kind"] = "comodule-algebra"
    doc["hopf"] = encode_hopf(ca.hopf)
    doc["coaction"] = _matrix_to_json(ca.field, ca.coaction)
    if augmentation is not None:
        doc["augmentation"] = _vector_to_json(ca.field, augmentation)
    return doc


def encode_crossed_system(s):
    f = s.base.field
    return {
        "format_version": FORMAT_VERSION,
        "kind": "crossed-system",
        "field": _field_to_json(f),
        "hopf": encode_hopf(s.hopf),
        "base": encode_algebra(s.base),
        "measuring": _matrix_to_json(f, s.measuring),
        "sigma": _matrix_to_json(f, s.sigma),
        "sigma_inv": _matrix_to_json(f, s.sigma_inv),
    }


def encode_hmodule(act, cochain=None):
    f = act.hopf.field
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": "hmodule",
        "field": _field_to_json(f),
        "hopf": encode_hopf(act.hopf),
        "base": encode_algebra(act.aug.algebra),
        "augmentation": _vector_to_json(f, act.aug.augmentation),
        "action": _matrix_to_json(f, act.action),
    }
    if cochain is not None:
        doc["cochain"] = _matrix_to_json(f, cochain.matrix)
    return doc


def encode_lift_problem(domain, target, varpi, psi):
    f = domain.field
    return {
        "format_version": FORMAT_VERSION,
        "kind": "lift-problem",
        "field": _field_to_json(f),
        "domain": encode_comodule_algebra(domain),
        "target": encode_comodule_algebra(target),
        "surjection": _matrix_to_json(f, varpi),
        "map": _matrix_to_json(f, psi),
    }


def encode_comodule_coalgebra(data):
    f = data.coalgebra.field
    return {
        "format_version": FORMAT_VERSION,
        "kind": "comodule-coalgebra",
        "field": _field_to_json(f),
        "basis": list(data.coalgebra.basis),
        "coproduct": _coproduct_to_json(f, data.coalgebra),
        "counit": _vector_to_json(f, data.coalgebra.counit),
        "hopf": encode_hopf(data.hopf),
        "coaction": _matrix_to_json(f, data.coaction),
    }


def encode_coalgebra(c):
    return {
        "format_version": FORMAT_VERSION,
        "kind": "coalgebra",
        "field": _field_to_json(c.field),
        "basis": list(c.basis),
        "coproduct": _coproduct_to_json(c.field, c),
        "counit": _vector_to_json(c.field, c.counit),
    }


# ---------------------------------------------------------------------------
# parsing


class Presentation:
    def __init__(self, kind, payload, augmentation=None):
        self.kind = kind
        self.payload = payload
        self.augmentation = augmentation


def _parse_algebra(doc, field, kind):
    basis = _require(doc, "basis", kind)
    dim = len(basis)
    product = _sparse3_from_json(field, _require(doc, "product", kind), dim, "product")
    unit = _vector_from_json(field, _require(doc, "unit", kind), dim, "unit")
    return FAlgebra(field, tuple(basis), product, unit)


def _parse_coalgebra(doc, field, kind):
    basis = _require(doc, "basis", kind)
    dim = len(basis)
    coproduct = _coproduct_from_json(
        field, _require(doc, "coproduct", kind), dim, "coproduct"
    )
    counit = _vector_from_json(field, _require(doc, "counit", kind), dim, "counit")
    return FCoalgebra(field, tuple(basis), coproduct, counit)


def _parse_hopf(doc, field, kind="hopf"):
    alg = _parse_algebra(doc, field, kind)
    coalg = _parse_coalgebra(doc, field, kind)
    if kind == "bialgebra":
        return FBialgebra(field, alg.basis, alg.product, alg.unit,
                          coalg.coproduct, coalg.counit)
    antipode = _matrix_from_json(field, _require(doc, "antipode", kind), "antipode")
    return FHopf(field, alg.basis, alg.product, alg.unit,
                 coalg.coproduct, coalg.counit, antipode)


def _parse_group(doc, kind):
    block = _require(doc, "group", kind)
    try:
        table = GroupTable(block["elements"], block["table"])
        table.validate()
    except InvalidGroupTableError as e:
        raise ValidationError("group table is invalid: %s" % (e,))
    return table


def parse_presentation(path_or_doc):
    """Load and structurally validate a presentation file (or parsed dict)."""
    if isinstance(path_or_doc, dict):
        doc = path_or_doc
    else:
        try:
            with open(path_or_doc) as fh:
                doc = json.load(fh)
        except OSError as e:
            raise ParseError("cannot read %s: %s" % (path_or_doc, e))
        except json.JSONDecodeError as e:
            raise ParseError("invalid JSON in %s: %s" % (path_or_doc, e))
    if doc.get("format_version") != FORMAT_VERSION:
        raise ParseError("unsupported format_version %r" % (doc.get("format_version"),))
    kind = doc.get("kind")
    field = _field_from_json(_require(doc, "field", kind))
    if kind == "algebra":
        return Presentation(kind, _parse_algebra(doc, field, kind))
    if kind == "coalgebra":
        return Presentation(kind, _parse_coalgebra(doc, field, kind))
    if kind in ("bialgebra", "hopf"):
        return Presentation(kind, _parse_hopf(doc, field, kind))
    if kind == "super-hopf":
        h = _parse_hopf(doc, field, "hopf")
        parity = _require(doc, "parity", kind)
        return Presentation(kind, SuperPresentation(h, tuple(parity)))
    if kind == "graded-algebra":
        alg = _parse_algebra(doc, field, kind)
        group = _parse_group(doc, kind)
        degree = _require(doc, "degree", kind)
        if any(not (0 <= g < group.order) for g in degree):
            raise ParseError("degree entry out of group range")
        return Presentation(kind, GradedAlgebra(alg, group, tuple(degree)))
    if kind == "comodule-algebra":
        alg = _parse_algebra(doc, field, kind)
        hopf = _parse_hopf(_require(doc, "hopf", kind), field, "hopf")
        coaction = _matrix_from_json(field, _require(doc, "coaction", kind), "coaction")
        ca = ComoduleAlgebra(alg, hopf, coaction)
        aug = None
        if "augmentation" in doc:
            aug = _vector_from_json(field, doc["augmentation"], alg.dim, "augmentation")
        return Presentation(kind, ca, augmentation=aug)
    if kind == "crossed-system":
        hopf = _parse_hopf(_require(doc, "hopf", kind), field, "hopf")
        base = _parse_algebra(_require(doc, "base", kind), field, "algebra")
        return Presentation(kind, CrossedSystem(
            hopf,
            base,
            _matrix_from_json(field, _require(doc, "measuring", kind), "measuring"),
            _matrix_from_json(field, _require(doc, "sigma", kind), "sigma"),
            _matrix_from_json(field, _require(doc, "sigma_inv", kind), "sigma_inv"),
        ))
    if kind == "hmodule":
        hopf = _parse_hopf(_require(doc, "hopf", kind), field, "hopf")
        base = _parse_algebra(_require(doc, "base", kind), field, "algebra")
        augvec = _vector_from_json(
            field, _require(doc, "augmentation", kind), base.dim, "augmentation"
        )
        aug = AugmentedAlgebra(base, augvec)
        act = HModuleStructure(
            hopf, aug, _matrix_from_json(field, _require(doc, "action", kind), "action")
        )
        cochain = None
        if "cochain" in doc:
            cochain = NormalizedCochain(
                2, _matrix_from_json(field, doc["cochain"], "cochain")
            )
        return Presentation(kind, (act, cochain))
    if kind == "lift-problem":
        domain = parse_presentation(_require(doc, "domain", kind)).payload
        target = parse_presentation(_require(doc, "target", kind)).payload
        varpi = _matrix_from_json(field, _require(doc, "surjection", kind), "surjection")
        psi = _matrix_from_json(field, _require(doc, "map", kind), "map")
        return Presentation(kind, (domain, target, varpi, psi))
    if kind == "comodule-coalgebra":
        coalg = _parse_coalgebra(doc, field, kind)
        hopf = _parse_hopf(_require(doc, "hopf", kind), field, "hopf")
        coaction = _matrix_from_json(field, _require(doc, "coaction", kind), "coaction")
        return Presentation(kind, ComoduleCoalgebraData(coalg, hopf, coaction))
    raise ParseError("unknown presentation kind %r" % (kind,))


# ---------------------------------------------------------------------------
# reports


class Report:
    def __init__(self, command, verdict, exit_code, witnesses=None,
                 certificates=None, definitive=None, budget_exhausted=None):
        self.command = command
        self.verdict = verdict
        self.exit_code = exit_code
        self.witnesses = witnesses or {}
        self.certificates = certificates or {}
        self.definitive = definitive
        self.budget_exhausted = budget_exhausted

    def to_json(self):
        doc = {
            "command": self.command,
            "verdict": self.verdict,
            "exit_code": self.exit_code,
            "witnesses": self.witnesses,
            "certificates": self.certificates,
        }
        if self.definitive is not None:
            doc["definitive"] = self.definitive
        if self.budget_exhausted is not None:
            doc["budget_exhausted"] = self.budget_exhausted
        return doc

    def render_human(self):
        lines = ["%s: %s" % (self.command, self.verdict)]
        for key in sorted(self.witnesses):
            lines.append("  %s: %s" % (key, json.dumps(self.witnesses[key], sort_keys=True)))
        if self.definitive is not None:
            lines.append("  definitive: %s" % self.definitive)
        if self.budget_exhausted is not None:
            lines.append("  budget_exhausted: %s" % self.budget_exhausted)
        return "\n".join(lines)


def _emit(report, args):
    if args.json:
        sys.stdout.write(json.dumps(report.to_json(), sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(report.render_human() + "\n")
    return report.exit_code


def _mj(field, m):
    return _matrix_to_json(field, m)


# ---------------------------------------------------------------------------
# commands


def _semantic_check(pres):
    kind, obj = pres.kind, pres.payload
    if kind in ("algebra", "coalgebra", "bialgebra", "hopf"):
        report = check_axioms(kind, obj)
        return report.violations
    if kind == "super-hopf":
        return obj.check_super_axioms()
    if kind == "graded-algebra":
        return list(check_grading(obj).violations)
    if kind == "comodule-algebra":
        return obj.validate()
    if kind == "crossed-system":
        return check_crossed_system(obj)
    if kind == "hmodule":
        return obj[0].validate()
    if kind == "comodule-coalgebra":
        return obj.validate()
    if kind == "lift-problem":
        domain, target, varpi, psi = obj
        violations = [("domain-" + n, w) for n, w in domain.validate()]
        violations += [("target-" + n, w) for n, w in target.validate()]
        if (varpi.rows, varpi.cols) != (target.algebra.dim, domain.algebra.dim):
            violations.append(("surjection-shape", (varpi.rows, varpi.cols)))
        if (psi.rows, psi.cols) != (target.algebra.dim, target.hopf.dim):
            violations.append(("map-shape", (psi.rows, psi.cols)))
        return violations
    raise ValidationError("kind %r has no checker" % (kind,))


def cmd_check(args):
    pres = parse_presentation(args.file)
    if args.kind and args.kind != pres.kind:
        raise ValidationError(
            "file declares kind %r, expected %r" % (pres.kind, args.kind)
        )
    violations = _semantic_check(pres)
    if violations:
        return _emit(Report("check", "fail", 1, witnesses={
            "violations": [[v[0], list(v[1])] for v in violations[:10]],
        }), args)
    return _emit(Report("check", "pass", 0, witnesses={"kind": pres.kind}), args)


def cmd_antipode(args):
    pres = parse_presentation(args.file)
    if pres.kind not in ("bialgebra", "hopf"):
        raise ValidationError("antipode needs a bialgebra or hopf file")
    b = pres.payload
    try:
        s = compute_antipode(b).antipode
    except NoAntipodeError:
        return _emit(Report("antipode", "not-found", 1), args)
    if args.certify:
        inv = convolution_invert(ConvElement(
            b.as_coalgebra(), b.as_algebra(), Matrix.identity(b.field, b.dim)
        ))
        if inv.matrix != s:
            raise ValidationError("antipode certificate failed re-verification")
    return _emit(Report("antipode", "found", 0, certificates={
        "antipode": _mj(b.field, s),
    }), args)


def cmd_dual(args):
    pres = parse_presentation(args.file)
    if pres.kind != "hopf":
        raise ValidationError("dual needs a hopf file")
    d = dual_hopf(pres.payload)
    if args.certify:
        rep = check_axioms("hopf", d)
        if not rep.ok:
            raise ValidationError("dual failed re-verification: %r" % (rep,))
    return _emit(Report("dual", "pass", 0, witnesses={
        "presentation": encode_hopf(d),
    }), args)


def _as_comodule_algebra(pres):
    if pres.kind == "comodule-algebra":
        return pres.payload
    if pres.kind == "graded-algebra":
        return graded_bridge(pres.payload)
    raise ValidationError("expected a comodule-algebra or graded-algebra file")


def cmd_coinvariants(args):
    ca = _as_comodule_algebra(parse_presentation(args.file))
    coinv = coinvariants(ca)
    return _emit(Report("coinvariants", "pass", 0, witnesses={
        "dimension": coinv.subalgebra.dim,
    }, certificates={
        "inclusion": _mj(ca.field, coinv.inclusion.matrix),
    }), args)


def cmd_galois(args):
    ca = _as_comodule_algebra(parse_presentation(args.file))
    rep = galois_map(ca)
    if args.certify and rep.bijective:
        if not rep.beta.matrix.is_invertible():
            raise ValidationError("Galois certificate failed re-verification")
    verdict = "pass" if rep.bijective else "fail"
    return _emit(Report("galois", verdict, 0 if rep.bijective else 1, witnesses={
        "bijective": rep.bijective,
        "rank": rep.beta.matrix.rank(),
    }, certificates={"beta": _mj(ca.field, rep.beta.matrix)}), args)


def cmd_strongly_graded(args):
    pres = parse_presentation(args.file)
    if pres.kind != "graded-algebra":
        raise ValidationError("strongly-graded needs a graded-algebra file")
    ok, table = is_strongly_graded(pres.payload)
    if args.certify and ok:
        for g in range(pres.payload.group.order):
            morita_context(pres.payload, g)
    witness_table = {"%s,%s" % k: v for k, v in sorted(table.items())}
    return _emit(Report("strongly-graded", "pass" if ok else "fail",
                        0 if ok else 1,
                        witnesses={"table": witness_table}), args)


def cmd_recognize_crossed(args):
    pres = parse_presentation(args.file)
    if pres.kind != "graded-algebra":
        raise ValidationError("recognize-crossed needs a graded-algebra file")
    budget = _budget_from(args)
    try:
        rec = recognize_group_crossed_product(pres.payload, budget)
    except NotCrossedProductError as e:
        return _emit(Report("recognize-crossed", "not-found", 1,
                            definitive=e.definitive,
                            budget_exhausted=not e.definitive), args)
    f = pres.payload.field
    return _emit(Report("recognize-crossed", "found", 0, certificates={
        "units": {str(g): _vector_to_json(f, u) for g, u in enumerate(rec.units)},
        "iso": _mj(f, rec.iso.matrix),
    }), args)


def cmd_crossed_product(args):
    pres = parse_presentation(args.file)
    if pres.kind != "crossed-system":
        raise ValidationError("crossed-product needs a crossed-system file")
    violations = check_crossed_system(pres.payload)
    if violations:
        return _emit(Report("crossed-product", "fail", 1, witnesses={
            "violations": [[v[0], list(v[1])] for v in violations[:10]],
        }), args)
    ca = crossed_product(pres.payload)
    return _emit(Report("crossed-product", "pass", 0, witnesses={
        "presentation": encode_comodule_algebra(ca),
    }), args)


def cmd_find_section(args):
    ca = _as_comodule_algebra(parse_presentation(args.file))
    budget = _budget_from(args)
    try:
        sec = find_section(ca, budget)
    except NoSectionFoundError as e:
        return _emit(Report("find-section", "not-found", 1,
                            definitive=e.definitive,
                            budget_exhausted=not e.definitive), args)
    if args.certify:
        from .comodule import _check_colinear

        _check_colinear(ca, sec.phi.matrix)
        if sec.phi.matrix.apply(ca.hopf.unit) != ca.algebra.one():
            raise ValidationError("section certificate failed re-verification")
    return _emit(Report("find-section", "found", 0, certificates={
        "phi": _mj(ca.field, sec.phi.matrix),
        "phi_inv": _mj(ca.field, sec.phi_inv.matrix),
    }), args)


def cmd_recognize_cleft(args):
    ca = _as_comodule_algebra(parse_presentation(args.file))
    budget = _budget_from(args)
    galois = galois_map(ca)
    try:
        sec = find_section(ca, budget)
    except NoSectionFoundError as e:
        if galois.bijective and e.definitive:
            raise ValidationError("cleftness verdicts disagree")
        return _emit(Report("recognize-cleft", "not-found", 1,
                            definitive=e.definitive,
                            budget_exhausted=not e.definitive,
                            witnesses={"galois_bijective": galois.bijective}), args)
    if not galois.bijective:
        raise ValidationError("cleftness verdicts disagree")
    system, iso = section_to_crossed_system(sec)
    return _emit(Report("recognize-cleft", "found", 0, witnesses={
        "galois_bijective": True,
    }, certificates={
        "system": encode_crossed_system(system),
        "iso": _mj(ca.field, iso.matrix),
    }), args)


def _augmented_extension(pres):
    ca = pres.payload
    if pres.kind != "comodule-algebra" or pres.augmentation is None:
        raise ValidationError(
            "this command needs a comodule-algebra file with an augmentation block"
        )
    return AugmentedCleftExtension(ca, pres.augmentation)


def cmd_classify_cleft(args):
    ext = _augmented_extension(parse_presentation(args.file))
    cls = classify_cleft_extension(ext)
    f = ext.comodule_algebra.field
    return _emit(Report("classify-cleft", "pass", 0, witnesses={
        "hh2_dimension": cls.hh2_result.dimension,
        "class": [_scal_json(f, c) for c in cls.class_coords],
        "is_split": cls.is_split,
    }, certificates={
        "cocycle": _mj(f, cls.cochain.matrix),
    }), args)


def cmd_hh2(args):
    pres = parse_presentation(args.file)
    if pres.kind != "hmodule":
        raise ValidationError("hh2 needs an hmodule file")
    act, cochain = pres.payload
    result = hh2(act.hopf, act)
    f = act.hopf.field
    witnesses = {"dimension": result.dimension}
    if cochain is not None:
        witnesses["class"] = [_scal_json(f, c) for c in result.decide(cochain)]
    return _emit(Report("hh2", "pass", 0, witnesses=witnesses, certificates={
        "representatives": [
            _mj(f, c.matrix) for c in result.representative_cochains()
        ],
    }), args)


def cmd_split(args):
    ext = _augmented_extension(parse_presentation(args.file))
    res = split_extension(ext)
    f = ext.comodule_algebra.field
    if res.split:
        if args.certify:
            psi = res.splitting.matrix
            h = ext.comodule_algebra.hopf
            a = ext.comodule_algebra.algebra
            if psi.apply(h.unit) != a.one():
                raise ValidationError("splitting certificate failed re-verification")
        return _emit(Report("split", "found", 0, certificates={
            "splitting": _mj(f, res.splitting.matrix),
        }), args)
    return _emit(Report("split", "not-found", 1, witnesses={
        "obstruction": [_scal_json(f, c) for c in res.obstruction],
    }), args)


def cmd_lift(args):
    pres = parse_presentation(args.file)
    if pres.kind != "lift-problem":
        raise ValidationError("lift needs a lift-problem file")
    domain, target, varpi, psi = pres.payload
    res = lift_comodule_algebra_map(domain, target, varpi, psi)
    f = domain.field
    if res.lifted:
        if args.certify and varpi * res.lift.matrix != psi:
            raise ValidationError("lift certificate failed re-verification")
        return _emit(Report("lift", "found", 0, certificates={
            "lift": _mj(f, res.lift.matrix),
        }), args)
    return _emit(Report("lift", "not-found", 1, witnesses={
        "obstruction_step": res.obstruction_step,
        "obstruction": [_scal_json(f, c) for c in res.obstruction],
    }), args)


def cmd_smash_coproduct(args):
    pres = parse_presentation(args.file)
    if pres.kind != "comodule-coalgebra":
        raise ValidationError("smash-coproduct needs a comodule-coalgebra file")
    out = smash_coproduct(pres.payload)
    if args.certify:
        rep = check_axioms("coalgebra", out.coalgebra)
        if not rep.ok:
            raise ValidationError("smash coproduct failed re-verification: %r" % (rep,))
    return _emit(Report("smash-coproduct", "pass", 0, witnesses={
        "presentation": encode_coalgebra(out.coalgebra),
    }), args)


def cmd_super_decompose(args):
    pres = parse_presentation(args.file)
    if pres.kind != "super-hopf":
        raise ValidationError("super-decompose needs a super-hopf file")
    res = decompose(pres.payload)
    f = pres.payload.field
    if args.certify and not res.alpha.matrix.is_invertible():
        raise ValidationError("decomposition certificate failed re-verification")
    return _emit(Report("super-decompose", "pass", 0, witnesses={
        "h_dimension": res.h.dim,
        "w_dimension": res.w.odd_dim,
        "h": encode_hopf(res.h),
    }, certificates={
        "pi": _mj(f, res.pi.matrix),
        "phi": _mj(f, res.phi.matrix),
        "delta": _mj(f, res.delta.matrix),
        "alpha": _mj(f, res.alpha.matrix),
    }), args)


def cmd_pairing(args):
    field = PrimeField(args.prime) if args.prime else Rationals()
    pairing = duality_pairing(args.n, field)
    if args.certify and not pairing.matrix.is_invertible():
        raise ValidationError("pairing certificate failed re-verification")
    return _emit(Report("pairing", "pass", 0, witnesses={
        "n": args.n,
        "nondegenerate": True,
    }, certificates={
        "pairing": _mj(field, pairing.matrix),
        "iso": _mj(field, pairing.iso.matrix),
    }), args)


# ---------------------------------------------------------------------------
# dispatch


def _budget_from(args):
    return SearchBudget(seed=args.seed, draws=args.budget)


def _add_common(sub, with_file=True):
    if with_file:
        sub.add_argument("file")
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--budget", type=int, default=1000)
    sub.add_argument("--certify", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfcross",
        description="exact-arithmetic checks and constructions for Hopf-algebraic structures",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    commands = {
        "check": cmd_check,
        "antipode": cmd_antipode,
        "dual": cmd_dual,
        "coinvariants": cmd_coinvariants,
        "galois": cmd_galois,
        "strongly-graded": cmd_strongly_graded,
        "recognize-crossed": cmd_recognize_crossed,
        "crossed-product": cmd_crossed_product,
        "find-section": cmd_find_section,
        "recognize-cleft": cmd_recognize_cleft,
        "classify-cleft": cmd_classify_cleft,
        "hh2": cmd_hh2,
        "split": cmd_split,
        "lift": cmd_lift,
        "smash-coproduct": cmd_smash_coproduct,
        "super-decompose": cmd_super_decompose,
        "pairing": cmd_pairing,
    }
    for name, func in commands.items():
        sub = subs.add_parser(name)
        if name == "pairing":
            sub.add_argument("--n", type=int, required=True)
            sub.add_argument("--prime", type=int, default=None)
            _add_common(sub, with_file=False)
        else:
            _add_common(sub)
        if name == "check":
            sub.add_argument("--kind", default=None)
        sub.set_defaults(func=func)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HopfcrossError as e:
        sys.stderr.write("error: %s\n" % (e,))
        if args.json:
            sys.stdout.write(json.dumps({
                "command": args.command,
                "verdict": "error",
                "exit_code": 2,
                "error": str(e),
            }, sort_keys=True, separators=(",", ":")) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
