"""Budgeted search for invertible elements in a linear family of matrices.

Used wherever an invertible element must be found inside a linear subspace:
units of a graded component (left-multiplication matrices) and
convolution-invertible colinear maps.  The determinant of the family is a
polynomial in the coefficients; invertible elements form its non-vanishing
locus, so random evaluation succeeds whenever any exists.  The deterministic
ladder is exhausted in a fixed order before any randomness so results are
reproducible; over a finite field small families are enumerated exhaustively,
which makes a negative answer definitive.
"""

import itertools
import random

from .linalg import Matrix


class SearchBudget:
    def __init__(self, seed=0, draws=1000, enumeration_bound=10 ** 6,
                 ladder_dim_cap=12, zero_cert_bound=4096):
        self.seed = seed
        self.draws = draws
        self.enumeration_bound = enumeration_bound
        self.ladder_dim_cap = ladder_dim_cap
        self.zero_cert_bound = zero_cert_bound


DEFAULT_BUDGET = SearchBudget()


class SearchOutcome:
    def __init__(self, coeffs, definitive, tried):
        self.coeffs = coeffs
        self.definitive = definitive
        self.tried = tried

    @property
    def found(self):
        return self.coeffs is not None


def _combine(field, mats, coeffs):
    acc = Matrix.zeros(field, mats[0].rows, mats[0].cols)
    for c, m in zip(coeffs, mats):
        if c:
            acc = acc + m.scale(c)
    return acc


def find_invertible_combination(field, mats, budget=DEFAULT_BUDGET, test=None):
    """Search for coefficients c with sum(c_i * mats[i]) invertible.

    `test` may replace the default invertibility test (it receives the
    coefficient tuple and returns True on acceptance); the ladder and
    budget semantics are unchanged.
    """
    if not mats:
        return SearchOutcome(None, True, 0)
    m = len(mats)
    n = mats[0].rows

    det_family = test is None
    if test is None:
        def test(coeffs):
            return bool(_combine(field, mats, coeffs).det())

    tried = 0

    def attempt(coeffs):
        nonlocal tried
        tried += 1
        return test(coeffs)

    # exhaustive enumeration over small finite families: definitive either way
    if field.order is not None and field.order ** m <= budget.enumeration_bound:
        for coeffs in itertools.product(field.elements(), repeat=m):
            if all(not c for c in coeffs):
                continue
            if attempt(coeffs):
                return SearchOutcome(coeffs, True, tried)
        return SearchOutcome(None, True, tried)

    # deterministic ladder: standard basis vectors first
    for i in range(m):
        coeffs = tuple(field.one if j == i else field.zero for j in range(m))
        if attempt(coeffs):
            return SearchOutcome(coeffs, True, tried)
    # then all -1/0/1 vectors for small families
    if m <= budget.ladder_dim_cap:
        pool = (field.zero, field.one, -field.one)
        for coeffs in itertools.product(pool, repeat=m):
            if all(not c for c in coeffs):
                continue
            if attempt(coeffs):
                return SearchOutcome(coeffs, True, tried)

    # certify det == 0 as a polynomial when the evaluation grid is affordable:
    # total degree <= n, so a grid of n+1 points per variable decides
    if det_family and (n + 1) ** m <= budget.zero_cert_bound:
        points = [field.from_int(v) for v in range(n + 1)]
        all_zero = True
        for coeffs in itertools.product(points, repeat=m):
            if _combine(field, mats, coeffs).det():
                all_zero = False
                # the grid point itself is a witness
                return SearchOutcome(coeffs, True, tried)
        if all_zero:
            return SearchOutcome(None, True, tried)

    # seeded random draws
    rng = random.Random(budget.seed)
    for _ in range(budget.draws):
        coeffs = tuple(field.random(rng) for _ in range(m))
        if attempt(coeffs):
            return SearchOutcome(coeffs, True, tried)
    return SearchOutcome(None, False, tried)
