"""Regenerate the shipped catalog JSON files.

Classical families (cyclic, wreath G(r,1,l), Coxeter, dihedral) use standard
explicit matrices.  For the exceptional entries the generators are found from
the reflection ansatz

    r_first = diag(zeta_p0, 1, ...),   r_last = diag(..., 1, zeta_plast),
    r_mid   = I + (zeta_p - 1) w a^T   with w = (1,..,1), sum(a) = 1,

whose free coefficients a_j are pinned down by the braid relations: the braid
differences are exact polynomials in the a_j over Q(zeta), solved numerically
to high precision, recognized as cyclotomic numbers by integer-relation
search, and then re-verified exactly (relations, group order by closure, and
reflection count) before anything is written.

Run:  python tools/make_catalog.py
"""

import json
import os
import random
import sys

import mpmath
from mpmath import mp

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from shephardlab.field import Cyclotomic, Rational, euler_phi
from shephardlab.linalg import MatrixExact
from shephardlab.multipoly import Poly
from shephardlab.groups import generate_group, verify_presentation
from shephardlab.catalog import CATALOG_DIR, encode_matrix, _spec_from_doc

mp.dps = 60

R0 = Rational(0)
R1 = Rational(1)


# ---------------------------------------------------------------------------
# helpers


def cmat(n, rows):
    """Matrix over Q(zeta_n) from entries that are ints, Rationals, or
    Cyclotomics."""
    out = []
    for row in rows:
        out_row = []
        for e in row:
            if not isinstance(e, Cyclotomic):
                e = Cyclotomic.from_rational(n, Rational(e))
            elif e.order != n:
                raise ValueError("field order mismatch")
            out_row.append(e)
        out.append(out_row)
    return MatrixExact(n, out)


def zeta(n, k=1):
    return Cyclotomic.zeta(n, k)


def entry(name, family, symbol, field_order, degrees, generators,
          aliases=(), stretch=False):
    order = 1
    for d in degrees:
        order *= d
    return {
        "name": name,
        "aliases": list(aliases),
        "family": family,
        "symbol": symbol,
        "field_order": field_order,
        "rank": len(degrees),
        "degrees": list(degrees),
        "order": order,
        "stretch": stretch,
        "generators": [encode_matrix(g) for g in generators],
    }


def verify_entry(doc, cap=200000):
    spec = _spec_from_doc(doc)
    group = generate_group(spec, cap=cap)
    if len(group) != spec.expected_order:
        raise RuntimeError("%s: closure has %d elements, expected %d"
                           % (doc["name"], len(group), spec.expected_order))
    for desc, ok in verify_presentation(group):
        if not ok:
            raise RuntimeError("%s: relation failed: %s" % (doc["name"], desc))
    nrefl = sum(d - 1 for d in spec.known_degrees)
    if len(group.reflections) != nrefl:
        raise RuntimeError("%s: %d reflections, expected %d"
                           % (doc["name"], len(group.reflections), nrefl))
    return group


# ---------------------------------------------------------------------------
# explicit families


def swap_matrix(n, rank, i):
    """Adjacent transposition of coordinates i, i+1 over Q(zeta_n)."""
    rows = [[1 if r == c else 0 for c in range(rank)] for r in range(rank)]
    rows[i][i] = rows[i + 1][i + 1] = 0
    rows[i][i + 1] = rows[i + 1][i] = 1
    return cmat(n, rows)


def cyclic_entries():
    out = []
    for p in range(2, 9):
        g = cmat(p, [[zeta(p)]])
        out.append(entry("C%d" % p, "wreath", str(p), p, [p], [g],
                         aliases=[str(p)]))
    return out


def wreath_entries():
    out = []
    for r, ell in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
        n = r
        diag = [[zeta(n) if i == j == 0 else (1 if i == j else 0)
                 for j in range(ell)] for i in range(ell)]
        gens = [cmat(n, diag)] + [swap_matrix(n, ell, i) for i in range(ell - 1)]
        symbol = "%d[4]2" % r + "[3]2" * (ell - 2)
        degrees = [r * (k + 1) for k in range(ell)]
        out.append(entry("G(%d,1,%d)" % (r, ell), "wreath", symbol, n,
                         degrees, gens))
    return out


def coxeter_entries():
    out = []
    # A2, A3: simply-laced Cartan reflections
    a2 = [cmat(1, [[-1, 1], [0, 1]]), cmat(1, [[1, 0], [1, -1]])]
    out.append(entry("A2", "coxeter", "2[3]2", 1, [2, 3], a2))
    a3 = [
        cmat(1, [[-1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        cmat(1, [[1, 0, 0], [1, -1, 1], [0, 0, 1]]),
        cmat(1, [[1, 0, 0], [0, 1, 0], [0, 1, -1]]),
    ]
    out.append(entry("A3", "coxeter", "2[3]2[3]2", 1, [2, 3, 4], a3))
    # B2 over Q(i) so fourth roots of unity are on hand for its characters
    b2 = [cmat(4, [[-1, 2], [0, 1]]), cmat(4, [[1, 0], [1, -1]])]
    out.append(entry("B2", "coxeter", "2[4]2", 4, [2, 4], b2))
    b3 = [
        cmat(1, [[-1, 2, 0], [0, 1, 0], [0, 0, 1]]),
        cmat(1, [[1, 0, 0], [1, -1, 1], [0, 0, 1]]),
        cmat(1, [[1, 0, 0], [0, 1, 0], [0, 1, -1]]),
    ]
    out.append(entry("B3", "coxeter", "2[4]2[3]2", 1, [2, 4, 6], b3))
    # H3: geometric representation over Q(zeta_5); tau = 2 cos(pi/5)
    tau = Cyclotomic(5, (R0, R0, -R1, -R1))
    zero5, one5 = Cyclotomic.zero(5), Cyclotomic.one(5)
    h3 = [
        cmat(5, [[-one5, tau, zero5], [zero5, one5, zero5],
                 [zero5, zero5, one5]]),
        cmat(5, [[one5, zero5, zero5], [tau, -one5, one5],
                 [zero5, zero5, one5]]),
        cmat(5, [[one5, zero5, zero5], [zero5, one5, zero5],
                 [zero5, one5, -one5]]),
    ]
    out.append(entry("H3", "coxeter", "2[5]2[3]2", 5, [2, 6, 10], h3))
    return out


def dihedral_entries():
    out = []
    for m in range(3, 9):
        n = m
        s = cmat(n, [[0, 1], [1, 0]])
        t = cmat(n, [[Cyclotomic.zero(n), zeta(n, m - 1)],
                     [zeta(n), Cyclotomic.zero(n)]])
        out.append(entry("I2(%d)" % m, "coxeter", "2[%d]2" % m, n, [2, m],
                         [s, t]))
    return out


# ---------------------------------------------------------------------------
# exceptional entries via the reflection ansatz


def _poly_matrix_identity(n, nvars, rank):
    one = Poly.constant(n, nvars, R1)
    zero = Poly.zero(n, nvars)
    return [[one if i == j else zero for j in range(rank)]
            for i in range(rank)]


def _poly_matmul(A, B):
    rank = len(A)
    out = []
    for i in range(rank):
        row = []
        for j in range(rank):
            acc = None
            for k in range(rank):
                term = A[i][k] * B[k][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def _poly_alternating(A, B, q):
    acc = None
    for k in range(q):
        m = A if k % 2 == 0 else B
        acc = m if acc is None else _poly_matmul(acc, m)
    return acc


def _embed(c, n):
    """Numeric value of a Cyclotomic under zeta_n -> exp(2 pi i / n)."""
    z = mpmath.exp(2j * mpmath.pi / n)
    acc = mpmath.mpc(0)
    for i, q in enumerate(c.coeffs):
        if q:
            acc += mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator) * z ** i
    return acc


def _eval_poly(p, values, n):
    """Numeric value of a sparse Poly at the given complex arguments."""
    acc = mpmath.mpc(0)
    for e, c in p.terms.items():
        term = _embed(c, n)
        for x, k in zip(values, e):
            if k:
                term *= x ** k
        acc += term
    return acc


def _recognize(x, N):
    """Express a numeric complex value in Q(zeta_N), or return None.

    Looks for an integer relation among 1, zeta, ..., zeta^(phi-1), x; the
    real and imaginary parts are folded into one real per value with an
    irrational mixing weight so a relation forces both parts to vanish.
    """
    phi = euler_phi(N)
    z = mpmath.exp(2j * mpmath.pi / N)
    vec = []
    for j in range(phi):
        v = z ** j
        vec.append(v.real + mpmath.pi * v.imag)
    vec.append(mpmath.re(x) + mpmath.pi * mpmath.im(x))
    rel = mpmath.pslq(vec, tol=mpmath.mpf(10) ** -40, maxcoeff=10 ** 10,
                      maxsteps=10 ** 4)
    if rel is None or rel[-1] == 0:
        return None
    coeffs = tuple(Rational(-rel[j], rel[-1]) for j in range(phi))
    cand = Cyclotomic(N, coeffs)
    if abs(_embed(cand, N) - x) > mpmath.mpf(10) ** -30:
        return None
    return cand


def _ansatz_polys(n, p_orders, q_lengths):
    """Braid-difference entries as exact polynomials in the free ansatz
    coefficients (rank-1: one unknown u; rank-2 middle: unknowns u1, u2)."""
    rank = len(p_orders)
    nvars = rank - 1
    one = Poly.constant(n, nvars, R1)
    if rank == 2:
        u = Poly.variable(n, nvars, 0)
        a = [u, one - u]
    else:
        u1 = Poly.variable(n, nvars, 0)
        u2 = Poly.variable(n, nvars, 1)
        a = [u1, u2, one - u1 - u2]

    def diag_reflection(pos):
        m = _poly_matrix_identity(n, nvars, rank)
        zc = zeta(n, n // p_orders[pos])
        m[pos][pos] = Poly.constant(n, nvars, R1).scale(zc)
        return m

    mid = rank // 2 if rank == 3 else 1
    zmid = zeta(n, n // p_orders[mid]) - Cyclotomic.one(n)
    gens = []
    for pos in range(rank):
        if pos == mid:
            m = []
            for i in range(rank):
                row = []
                for j in range(rank):
                    d = one if i == j else Poly.zero(n, nvars)
                    row.append(d + a[j].scale(zmid))
                m.append(row)
            gens.append(m)
        else:
            gens.append(diag_reflection(pos))
    systems = []
    for i, q in enumerate(q_lengths):
        lhs = _poly_alternating(gens[i], gens[i + 1], q)
        rhs = _poly_alternating(gens[i + 1], gens[i], q)
        diff = [[lhs[r][c] - rhs[r][c] for c in range(rank)]
                for r in range(rank)]
        systems.append([p for row in diff for p in row if p])
    return systems


def _solve_rank2(n, polys):
    """All numeric roots of a one-variable polynomial system."""
    main = max(polys, key=lambda p: p.degree())
    d = main.degree()
    coeffs = [_embed(main.coefficient((k,)), n) for k in range(d, -1, -1)]
    while coeffs and abs(coeffs[0]) < mpmath.mpf(10) ** -40:
        coeffs = coeffs[1:]
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
    good = []
    for r in roots:
        if all(abs(_eval_poly(p, [r], n)) < mpmath.mpf(10) ** -35
               for p in polys):
            if not any(abs(r - g) < mpmath.mpf(10) ** -25 for g in good):
                good.append(r)
    return [[r] for r in good]


def _solve_rank3(n, systems):
    """Numeric solutions of the two braid systems in two unknowns, by
    multi-start Newton iteration on one equation from each system."""
    allpolys = [p for sys_ in systems for p in sys_]
    f1 = max(systems[0], key=lambda p: len(p.terms))
    f2 = max(systems[1], key=lambda p: len(p.terms))

    def f(u1, u2):
        return (_eval_poly(f1, [u1, u2], n), _eval_poly(f2, [u1, u2], n))

    rng = random.Random(20260824)
    starts = [(mpmath.mpf(1) / 3, mpmath.mpf(1) / 3)]
    for _ in range(80):
        starts.append((mpmath.mpc(rng.uniform(-1, 1.5), rng.uniform(-1, 1)),
                       mpmath.mpc(rng.uniform(-1, 1.5), rng.uniform(-1, 1))))
    good = []
    for s in starts:
        try:
            sol = mpmath.findroot(f, s, maxsteps=120)
        except Exception:
            continue
        u = [sol[0], sol[1]]
        if any(abs(_eval_poly(p, u, n)) > mpmath.mpf(10) ** -35
               for p in allpolys):
            continue
        if any(max(abs(u[0] - g[0]), abs(u[1] - g[1])) < mpmath.mpf(10) ** -20
               for g in good):
            continue
        good.append(u)
    return good


def _build_exceptional(name, symbol_p, symbol_q, degrees, stretch=False,
                       cap=200000):
    rank = len(symbol_p)
    n0 = 1
    for p in symbol_p:
        n0 = n0 * p // _gcd(n0, p)
    field_candidates = []
    for N in (n0, 2 * n0, _lcm(n0, 4), 12, 24):
        if N not in field_candidates and all(N % p == 0 for p in symbol_p):
            field_candidates.append(N)
    last_error = None
    for N in field_candidates:
        systems = _ansatz_polys(N, symbol_p, symbol_q)
        if rank == 2:
            sols = _solve_rank2(N, systems[0])
        else:
            sols = _solve_rank3(N, systems)
        sols.sort(key=lambda u: tuple((mpmath.nstr(v, 20)) for v in u))
        for numeric in sols:
            coeffs = [_recognize(x, N) for x in numeric]
            if any(c is None for c in coeffs):
                last_error = "recognition failed over Q(zeta_%d)" % N
                continue
            doc = _exceptional_doc(name, symbol_p, symbol_q, degrees, N,
                                   coeffs, stretch)
            try:
                verify_entry(doc, cap=cap)
            except RuntimeError as exc:
                last_error = str(exc)
                continue
            return doc
    raise RuntimeError("no verified solution for %s: %s" % (name, last_error))


def _exceptional_doc(name, symbol_p, symbol_q, degrees, N, ucoeffs, stretch):
    rank = len(symbol_p)
    a = list(ucoeffs)
    a.append(Cyclotomic.one(N) - sum(a, Cyclotomic.zero(N)))
    mid = rank // 2 if rank == 3 else 1
    zmid = zeta(N, N // symbol_p[mid]) - Cyclotomic.one(N)
    one, zero = Cyclotomic.one(N), Cyclotomic.zero(N)
    gens = []
    for pos in range(rank):
        if pos == mid:
            rows = [[(one if i == j else zero) + zmid * a[j]
                     for j in range(rank)] for i in range(rank)]
        else:
            rows = [[(zeta(N, N // symbol_p[pos]) if i == j == pos else
                      (one if i == j else zero)) for j in range(rank)]
                    for i in range(rank)]
        gens.append(MatrixExact(N, rows))
    symbol = str(symbol_p[0])
    for q, p in zip(symbol_q, symbol_p[1:]):
        symbol += "[%d]%d" % (q, p)
    return entry(name, "shephard-exceptional", symbol, N, degrees, gens,
                 stretch=stretch)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b)


def exceptional_entries():
    out = []
    out.append(_build_exceptional("3[3]3", [3, 3], [3], [4, 6]))
    out.append(_build_exceptional("3[4]3", [3, 3], [4], [6, 12]))
    out.append(_build_exceptional("4[3]4", [4, 4], [3], [8, 12]))
    out.append(_build_exceptional("3[6]2", [3, 2], [6], [4, 12]))
    out.append(_build_exceptional("3[3]3[3]3", [3, 3, 3], [3, 3], [6, 9, 12],
                                  stretch=True))
    out.append(_build_exceptional("2[4]3[3]3", [2, 3, 3], [4, 3],
                                  [6, 12, 18], stretch=True))
    return out


# ---------------------------------------------------------------------------


def main():
    docs = (cyclic_entries() + wreath_entries() + coxeter_entries()
            + dihedral_entries() + exceptional_entries())
    os.makedirs(CATALOG_DIR, exist_ok=True)
    for doc in docs:
        group = verify_entry(doc)
        fname = doc["name"].replace("[", "_").replace("]", "_") \
            .replace("(", "").replace(")", "").replace(",", "-") + ".json"
        path = os.path.join(CATALOG_DIR, fname)
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print("wrote %-12s order %-5d field Q(zeta_%d) -> %s"
              % (doc["name"], len(group), doc["field_order"], fname))


if __name__ == "__main__":
    main()
