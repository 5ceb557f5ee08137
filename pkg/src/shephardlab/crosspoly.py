"""Generalized cross-polytopes, their order complexes, and the retraction
pair between the r-fold and ordinary cross-polytope.

A proper face of the generalized cross-polytope on l coordinate axes with r
phases is a nonempty partial assignment: a set of axes with one phase
0..r-1 chosen on each, encoded as a frozenset of (axis, phase) pairs with
distinct axes.  The order complex has these faces as vertices and strict
inclusion chains as simplices; its chambers are complete flags, r^l * l! of
them.

The vertex maps (axis, 0) <-> +e_axis and (axis, k>0) -> -e_axis induce the
retraction pair: iota embeds the 2-phase polytope by sending the minus
vertex to phase 1, rho collapses all nonzero phases back to the minus
vertex.
"""

from itertools import combinations, product, permutations

from .complexes import shelling_check


class CrossPolytopeModel:
    def __init__(self, r, ell):
        if r < 2 or ell < 1:
            raise ValueError("need r >= 2 and ell >= 1")
        self.r = r
        self.ell = ell
        self.faces = []
        for s in range(1, ell + 1):
            for axes in combinations(range(ell), s):
                for phases in product(range(r), repeat=s):
                    self.faces.append(frozenset(zip(axes, phases)))
        self.face_set = set(self.faces)

    def face_count_by_dim(self):
        out = {}
        for f in self.faces:
            out[len(f) - 1] = out.get(len(f) - 1, 0) + 1
        return out

    def chains(self):
        """All simplices of the order complex: strictly increasing chains of
        faces (each given as a tuple, shortest first)."""
        by_size = {}
        for f in self.faces:
            by_size.setdefault(len(f), []).append(f)
        out = []

        def extend(chain):
            out.append(tuple(chain))
            top = chain[-1]
            for s in range(len(top) + 1, self.ell + 1):
                for f in by_size.get(s, []):
                    if top < f:
                        extend(chain + [f])

        for f in self.faces:
            extend([f])
        return out

    def chambers(self):
        """Complete flags, as (flag tuple, label word) pairs.

        The label word records, step by step, which vertex the flag adds:
        axis i with phase 0 gets label i+1, phase k > 0 gets label
        ell + 1 + (i+1)*r + k, so phase-0 steps sort strictly before any
        nonzero-phase step."""
        out = []
        for sigma in permutations(range(self.ell)):
            for phases in product(range(self.r), repeat=self.ell):
                flag = []
                acc = set()
                word = []
                for i in sigma:
                    acc.add((i, phases[i]))
                    flag.append(frozenset(acc))
                    if phases[i] == 0:
                        word.append(i + 1)
                    else:
                        word.append(self.ell + 1 + (i + 1) * self.r
                                    + phases[i])
                out.append((tuple(flag), tuple(word)))
        return out


def iota_vertex(face, r):
    """Embed a 2-phase face into the r-phase polytope (phase 1 stays 1)."""
    return frozenset((i, k) for i, k in face)


def rho_vertex(face):
    """Collapse an r-phase face onto the 2-phase polytope."""
    return frozenset((i, 0 if k == 0 else 1) for i, k in face)


def _is_chain(faces):
    return all(a < b for a, b in zip(faces, faces[1:]))


def cross_polytope_retraction(r, ell):
    """Verify the retraction pair on the order complexes.

    Checks, over every simplex of the relevant order complex: iota and rho
    map chains to chains of the same length (simpliciality), both preserve
    the vertex coloring by face rank, and rho after iota is the identity."""
    big = CrossPolytopeModel(r, ell)
    small = CrossPolytopeModel(2, ell)
    iota_ok = color_iota = True
    for chain in small.chains():
        image = [iota_vertex(f, r) for f in chain]
        if not all(f in big.face_set for f in image) or not _is_chain(image):
            iota_ok = False
        if [len(f) for f in image] != [len(f) for f in chain]:
            color_iota = False
    rho_ok = color_rho = True
    for chain in big.chains():
        image = [rho_vertex(f) for f in chain]
        if not all(f in small.face_set for f in image) or not _is_chain(image):
            rho_ok = False
        if [len(f) for f in image] != [len(f) for f in chain]:
            color_rho = False
    retract_ok = all(rho_vertex(iota_vertex(f, r)) == f for f in small.faces)
    return {
        "iota_simplicial": iota_ok,
        "rho_simplicial": rho_ok,
        "iota_preserves_colors": color_iota,
        "rho_preserves_colors": color_rho,
        "rho_iota_identity": retract_ok,
        "pass": all([iota_ok, rho_ok, color_iota, color_rho, retract_ok]),
    }


def lex_shelling_cross_polytope(r, ell):
    """Order the chambers of the order complex lexicographically by their
    step-label words and run the shelling check."""
    model = CrossPolytopeModel(r, ell)
    chambers = model.chambers()
    chambers.sort(key=lambda fw: fw[1])
    facets = [frozenset(flag) for flag, _ in chambers]
    verdict = shelling_check(facets)
    return {
        "chamber_count": len(facets),
        "expected_count": _factorial(ell) * r ** ell,
        "shelling": verdict,
        "pass": (verdict["pass"]
                 and len(facets) == _factorial(ell) * r ** ell),
    }


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
