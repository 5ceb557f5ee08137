"""Basic and relative invariants of a reflection group.

Basic invariants f_1..f_l are found by Reynolds averaging degree by degree,
with the degrees read off the Molien series by peeling factors 1/(1-t^d).
Relative invariants are built directly from the hyperplane data:

    Q = prod alpha_H,   J = prod alpha_H^(e_H - 1),   H = prod alpha_H^(e_H - 2).

Scalars in the "up to scalar" identities are never pinned down; only exact
proportionality is checked.
"""

from itertools import combinations

from .field import Cyclotomic, Rational
from .linalg import EchelonSpan, nullspace
from .multipoly import (Poly, monomials, act, act_matrix_columns, reynolds,
                        partial, jacobian, hessian, _poly_det, molien_series)


class InvariantSearchError(RuntimeError):
    pass


class BasicInvariants:
    def __init__(self, degrees, polys):
        self.degrees = tuple(degrees)
        self.polys = list(polys)

    @property
    def d(self):
        """Minimal degree of a nonconstant invariant."""
        return self.degrees[0]

    @property
    def f1(self):
        return self.polys[0]

    def __repr__(self):
        return "BasicInvariants(degrees=%r)" % (self.degrees,)


class RelativeInvariants:
    def __init__(self, Q, J, H):
        self.Q = Q
        self.J = J
        self.H = H

    def __repr__(self):
        return ("RelativeInvariants(deg Q=%d, deg J=%d, deg H=%d)"
                % (self.Q.degree(), self.J.degree(), self.H.degree()))


def invariant_component(group, m, method="auto"):
    """Basis of the degree-m invariants.

    method "reynolds" averages every degree-m monomial over the group;
    method "fixed" solves for the joint fixed space of the generators acting
    on S_m, which is much cheaper on larger groups.  "auto" picks by size.
    The two routes agree (property-tested) and both return a deterministic,
    lead-normalized echelon basis.
    """
    n = group.field_order
    ell = group.rank
    basis = monomials(ell, m)
    if method == "auto":
        method = ("reynolds"
                  if len(group.elements) * len(basis) <= 2000 else "fixed")
    span = EchelonSpan(len(basis))
    if method == "reynolds":
        for expt in basis:
            mono = Poly.monomial(n, ell, expt, Cyclotomic.one(n))
            avg = reynolds(group, mono)
            if avg:
                span.insert(avg.coefficient_vector(basis))
    elif method == "fixed":
        stacked = []
        one = Cyclotomic.one(n)
        for g in group.spec.generators:
            cols = act_matrix_columns(g, m)
            for i in range(len(basis)):
                stacked.append([cols[j][i] - (one if i == j else 0)
                                for j in range(len(basis))])
        for vec in nullspace(stacked, len(basis)):
            span.insert([c if isinstance(c, Cyclotomic)
                         else Cyclotomic.from_rational(n, c) for c in vec])
    else:
        raise ValueError("unknown method %r" % method)
    return [Poly.from_coefficient_vector(n, ell, basis, row).lead_normalized()
            for row in span.rows]


def molien_degrees(group):
    """Degrees d_1 <= ... <= d_l read off the Molien series.

    Peels factors (1 - t^d) from the series until it is identically 1; the
    peeled exponents are the degrees of a set of basic invariants.
    """
    ell = group.rank
    trunc = 16
    while True:
        series = list(molien_series(group, trunc).coeffs)
        degrees = []
        for _ in range(ell):
            d = next((m for m in range(1, len(series)) if series[m]), None)
            if d is None:
                break
            degrees.append(d)
            # series *= (1 - t^d)
            for m in range(len(series) - 1, d - 1, -1):
                series[m] -= series[m - d]
        if len(degrees) == ell:
            if any(series[1:]):
                raise InvariantSearchError(
                    "Molien series is not a product of %d geometric factors"
                    % ell)
            return degrees
        trunc *= 2
        if trunc > 4 * len(group.elements):
            raise InvariantSearchError("could not locate %d degrees" % ell)


def minimal_invariant(group):
    """(d, f1): the least positive invariant degree and its unique invariant,
    lead-coefficient normalized.  The degree-d component must be a line."""
    d = molien_degrees(group)[0]
    comp = invariant_component(group, d)
    if len(comp) != 1:
        raise InvariantSearchError(
            "degree-%d invariants have dimension %d, expected a line"
            % (d, len(comp)))
    return d, comp[0]


def _jacobian_matrix(fs, ell):
    return [[partial(f, j) for j in range(ell)] for f in fs]


def _functionally_independent(fs, ell):
    """True iff some maximal minor of the Jacobian matrix is nonzero."""
    rows = _jacobian_matrix(fs, ell)
    k = len(fs)
    for cols in combinations(range(ell), k):
        minor = [[row[c] for c in cols] for row in rows]
        if _poly_det(minor):
            return True
    return False


def basic_invariants(group):
    """Greedy algebraically-independent invariants at the Molien degrees."""
    ell = group.rank
    degrees = molien_degrees(group)
    chosen = []
    for d in degrees:
        candidates = invariant_component(group, d)
        picked = None
        for f in candidates:
            if _functionally_independent(chosen + [f], ell):
                picked = f
                break
        if picked is None:
            raise InvariantSearchError(
                "no invariant of degree %d independent of the previous ones"
                % d)
        chosen.append(picked)
    order = 1
    for d in degrees:
        order *= d
    if order != len(group.elements):
        raise InvariantSearchError(
            "degree product %d disagrees with group order %d"
            % (order, len(group.elements)))
    return BasicInvariants(degrees, chosen)


def relative_invariants(group):
    n = group.field_order
    ell = group.rank
    one = Poly.constant(n, ell, Rational(1))
    Q, J, H = one, one, one
    for hyp in group.hyperplanes:
        alpha = Poly(n, ell,
                     dict((tuple(1 if k == i else 0 for k in range(ell)), c)
                          for i, c in enumerate(hyp.alpha) if c))
        Q = Q * alpha
        J = J * alpha ** (hyp.order - 1)
        if hyp.order > 2:
            H = H * alpha ** (hyp.order - 2)
    return RelativeInvariants(Q, J, H)


def check_det_twists(group, rel=None):
    """act(g,Q) = det(g)^-1 Q, act(g,J) = det(g) J, act(g,H) = det(g)^2 H
    for every generator g.  Returns a list of (description, ok)."""
    if rel is None:
        rel = relative_invariants(group)
    report = []
    for gi, g in enumerate(group.spec.generators):
        det = group.determinant(group.index[g])
        det_inv = det.inverse()
        report.append(("g%d(Q) = det^-1 Q" % gi,
                       act(g, rel.Q) == rel.Q.scale(det_inv)))
        report.append(("g%d(J) = det J" % gi,
                       act(g, rel.J) == rel.J.scale(det)))
        report.append(("g%d(H) = det^2 H" % gi,
                       act(g, rel.H) == rel.H.scale(det * det)))
    return report


def check_classical_identities(group, basic=None, rel=None):
    """Three verdicts: Q*H = J exactly; Jac(f_1..f_l) proportional to J;
    Hess(f_1) proportional to H."""
    if basic is None:
        basic = basic_invariants(group)
    if rel is None:
        rel = relative_invariants(group)
    jac = jacobian(basic.polys)
    hess = hessian(basic.f1)
    return {
        "qh_eq_j": rel.Q * rel.H == rel.J,
        "jacobian_proportional": jac.proportional_to(rel.J),
        "hessian_proportional": hess.proportional_to(rel.H),
    }
