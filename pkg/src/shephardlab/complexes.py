"""Coset complexes of reflection groups and their exact topology.

The complex has one cell per left coset g G_J of a proper standard parabolic
subgroup; a cell's vertices are the cosets of the maximal parabolics
containing it, one per "color" (dropped generator index).  Orientation sorts
vertices by color, so the group permutes chains without signs.

Boundary matrices are kept as sparse integer columns; ranks are computed by
exact sparse elimination with unit-pivot preference, which keeps the stretch
entries (1296 chambers) tractable.
"""

from .field import Rational
from .linalg import nullspace, invariant_subspace_trace


class CosetComplex:
    def __init__(self, group):
        self.group = group
        ell = group.rank
        self.R = tuple(range(len(group.spec.generators)))
        self.top_dim = ell - 1
        # cells_by_dim[i] = list of (J frozenset, coset id); dimension
        # |R - J| - 1 = i.  Deterministic order: by sorted J, then coset id.
        self.cells_by_dim = []
        self.cell_index = {}
        for dim in range(ell):
            cells = []
            for J in _subsets_of_size(self.R, ell - 1 - dim):
                cosets = group.parabolic_cosets(J)
                for cid in range(len(cosets.cosets)):
                    self.cell_index[(J, cid)] = (dim, len(cells))
                    cells.append((J, cid))
            self.cells_by_dim.append(cells)
        self._vertex_sets = None
        self._boundaries = None

    # -- vertices ----------------------------------------------------------

    def vertex_color(self, vertex_cell):
        """Color of a vertex: the index of the generator its parabolic drops."""
        J, _ = vertex_cell
        (missing,) = set(self.R) - J
        return missing

    def cell_vertices(self, J, cid):
        """Vertex ids (indices into cells_by_dim[0]) of the cell, in color
        order."""
        group = self.group
        rep = group.parabolic_cosets(J).cosets[cid][0]
        out = []
        for color in sorted(set(self.R) - J):
            Jv = frozenset(self.R) - {color}
            vcid = group.parabolic_cosets(Jv).coset_of[rep]
            out.append(self.cell_index[(Jv, vcid)][1])
        return out

    @property
    def vertex_sets(self):
        """Frozenset of vertex ids per cell, keyed (dim, cell position)."""
        if self._vertex_sets is None:
            vs = {}
            for dim, cells in enumerate(self.cells_by_dim):
                for pos, (J, cid) in enumerate(cells):
                    vs[(dim, pos)] = frozenset(self.cell_vertices(J, cid))
            self._vertex_sets = vs
        return self._vertex_sets

    def is_simplicial(self):
        """Distinct cells must span distinct vertex sets."""
        return len(set(self.vertex_sets.values())) == len(self.vertex_sets)

    # -- chain complex -----------------------------------------------------

    @property
    def boundaries(self):
        """boundaries[i] = sparse columns of d_i : C_i -> C_(i-1), one dict
        {row: sign} per i-cell; boundaries[0] is the augmentation to the
        empty cell."""
        if self._boundaries is None:
            group = self.group
            mats = []
            for dim, cells in enumerate(self.cells_by_dim):
                cols = []
                for J, cid in cells:
                    if dim == 0:
                        cols.append({0: 1})
                        continue
                    rep = group.parabolic_cosets(J).cosets[cid][0]
                    col = {}
                    for pos, color in enumerate(sorted(set(self.R) - J)):
                        Jf = J | {color}
                        fcid = group.parabolic_cosets(Jf).coset_of[rep]
                        row = self.cell_index[(Jf, fcid)][1]
                        col[row] = 1 if pos % 2 == 0 else -1
                    cols.append(col)
                mats.append(cols)
            self._boundaries = mats
        return self._boundaries

    def chambers(self):
        """Top cells as element indices (coset of the trivial subgroup)."""
        return [self.group.parabolic_cosets(frozenset()).cosets[cid][0]
                for _, cid in self.cells_by_dim[self.top_dim]]


def _subsets_of_size(items, k):
    from itertools import combinations
    return [frozenset(c) for c in combinations(sorted(items), k)]


def build_coset_complex(group):
    complex_ = CosetComplex(group)
    if not complex_.is_simplicial():
        raise RuntimeError("coset complex is not simplicial: two cells share "
                           "a vertex set")
    return complex_


# -- exact sparse rank ----------------------------------------------------


def sparse_rank(columns):
    """Rank of a sparse integer/rational matrix given as column dicts.

    Exact elimination choosing, among the sparsest live columns, a unit
    entry as pivot when one exists (so integer data stays integer)."""
    cols = [dict(c) for c in columns if c]
    rank = 0
    while cols:
        best = min(range(len(cols)), key=lambda j: len(cols[j]))
        col = cols.pop(best)
        pivot_row = None
        for r, v in col.items():
            if v == 1 or v == -1:
                pivot_row = r
                break
        if pivot_row is None:
            pivot_row = next(iter(col))
        pv = col[pivot_row]
        rank += 1
        live = []
        for other in cols:
            v = other.get(pivot_row)
            if v:
                f = Rational(v) / Rational(pv) if pv not in (1, -1) \
                    else (v if pv == 1 else -v)
                for r, w in col.items():
                    nv = other.get(r, 0) - f * w
                    if nv:
                        other[r] = nv
                    elif r in other:
                        del other[r]
            if other:
                live.append(other)
        cols = live
    return rank


def homology_ranks(complex_):
    """Reduced Betti numbers (beta_0 .. beta_topdim), exactly."""
    bnd = complex_.boundaries
    ranks = [sparse_rank(cols) for cols in bnd]
    betti = []
    for i in range(len(bnd)):
        ncells = len(bnd[i])
        r_next = ranks[i + 1] if i + 1 < len(bnd) else 0
        betti.append(ncells - ranks[i] - r_next)
    return betti


def homology_concentrated(complex_):
    betti = homology_ranks(complex_)
    return all(b == 0 for b in betti[:-1]), betti


# -- characters -----------------------------------------------------------


def top_cycle_basis(complex_):
    """Basis of ker d_topdim as coefficient columns over the chambers."""
    bnd = complex_.boundaries[complex_.top_dim]
    ncols = len(bnd)
    nrows = len(complex_.cells_by_dim[complex_.top_dim - 1]) \
        if complex_.top_dim > 0 else 1
    rows = [[Rational(0)] * ncols for _ in range(nrows)]
    for j, col in enumerate(bnd):
        for r, v in col.items():
            rows[r][j] = Rational(v)
    return nullspace(rows, ncols)


def chamber_permutation(complex_, i):
    """Permutation of chamber positions induced by left multiplication."""
    group = complex_.group
    cosets = group.parabolic_cosets(frozenset())
    top = complex_.cells_by_dim[complex_.top_dim]
    pos_of_cid = dict((cid, pos) for pos, (_, cid) in enumerate(top))
    perm = []
    for _, cid in top:
        x = cosets.cosets[cid][0]
        gx = group.product(i, x)
        perm.append(pos_of_cid[cosets.coset_of[gx]])
    return perm


def homology_character(complex_, i, cycle_basis=None):
    """Trace of element i on the top homology = top cycle space.

    The action permutes chambers sign-free (colors are preserved and the
    orientation is color-sorted), so this is a permutation trace on the
    cycle space."""
    if cycle_basis is None:
        cycle_basis = top_cycle_basis(complex_)
    perm = chamber_permutation(complex_, i)

    def action(vec):
        out = [Rational(0)] * len(vec)
        for j, c in enumerate(vec):
            if c:
                out[perm[j]] = c
        return out

    return invariant_subspace_trace(cycle_basis, action)


def virtual_character(group, i):
    """sum over J of (-1)^(|R|-|J|) * #{fixed cosets of G_J}, J = R included."""
    R = tuple(range(len(group.spec.generators)))
    total = 0
    for k in range(len(R) + 1):
        for J in _subsets_of_size(R, k):
            cosets = group.parabolic_cosets(J)
            fixed = 0
            for coset in cosets.cosets:
                x = coset[0]
                if cosets.coset_of[group.product(i, x)] == cosets.coset_of[x]:
                    fixed += 1
            sign = -1 if (len(R) - k) % 2 else 1
            total += sign * fixed
    return total


def fixed_cells_alternating_sum(complex_, i):
    """Hopf left-hand side: sum over dimensions (empty cell at -1) of
    (-1)^dim * #fixed cells."""
    group = complex_.group
    total = -1  # the empty cell, always fixed, at dimension -1
    for dim, cells in enumerate(complex_.cells_by_dim):
        fixed = 0
        for J, cid in cells:
            cosets = group.parabolic_cosets(J)
            x = cosets.cosets[cid][0]
            if cosets.coset_of[group.product(i, x)] == cid:
                fixed += 1
        total += fixed if dim % 2 == 0 else -fixed
    return total


# -- Cohen-Macaulayness ---------------------------------------------------


def _betti_of_cells(cell_sets):
    """Reduced Betti numbers of an abstract simplicial complex given by the
    full list of its (distinct, subset-closed) cells as vertex frozensets."""
    if not cell_sets:
        return []
    by_dim = {}
    for s in cell_sets:
        by_dim.setdefault(len(s) - 1, []).append(s)
    top = max(by_dim)
    index = {}
    ordered = []
    for dim in range(top + 1):
        cells = sorted(by_dim.get(dim, []), key=sorted)
        for pos, s in enumerate(cells):
            index[s] = pos
        ordered.append(cells)
    mats = []
    for dim in range(top + 1):
        cols = []
        for s in ordered[dim]:
            if dim == 0:
                cols.append({0: 1})
                continue
            verts = sorted(s)
            col = {}
            for pos in range(len(verts)):
                face = frozenset(verts[:pos] + verts[pos + 1:])
                col[index[face]] = 1 if pos % 2 == 0 else -1
            cols.append(col)
        mats.append(cols)
    ranks = [sparse_rank(cols) for cols in mats]
    betti = []
    for i in range(top + 1):
        r_next = ranks[i + 1] if i + 1 <= top else 0
        betti.append(len(mats[i]) - ranks[i] - r_next)
    return betti


def link_cells(complex_, face_vertices):
    """Cells of the link of a face, as vertex frozensets."""
    face = frozenset(face_vertices)
    out = []
    for vs in complex_.vertex_sets.values():
        if face < vs:
            out.append(vs - face)
    return out


def cm_check(complex_):
    """Cohen-Macaulay verdict: reduced homology of the complex and of every
    face link is concentrated in the respective top dimension."""
    all_faces = [frozenset()] + list(complex_.vertex_sets.values())
    failures = []
    for face in all_faces:
        cells = (list(complex_.vertex_sets.values()) if not face
                 else link_cells(complex_, face))
        if not cells:
            continue  # link of a chamber: nothing to check
        betti = _betti_of_cells(cells)
        if any(b != 0 for b in betti[:-1]):
            failures.append((sorted(face), betti))
    return {"pass": not failures, "failures": failures}


# -- shellability ---------------------------------------------------------


def shelling_check(complex_or_sets, order=None):
    """Shelling verdict for a pure simplicial complex.

    Accepts either a CosetComplex (facets = chambers) or a list of facet
    vertex frozensets; `order` is a permutation of facet positions (default:
    given order).  Returns dict with pass flag and first failing index."""
    if isinstance(complex_or_sets, CosetComplex):
        top = complex_or_sets.top_dim
        facets = [complex_or_sets.vertex_sets[(top, p)]
                  for p in range(len(complex_or_sets.cells_by_dim[top]))]
    else:
        facets = [frozenset(f) for f in complex_or_sets]
    if len(set(len(f) for f in facets)) > 1:
        raise ValueError("complex is not pure")
    if order is None:
        order = list(range(len(facets)))
    seq = [facets[i] for i in order]
    size = len(seq[0])
    for k in range(1, len(seq)):
        fk = seq[k]
        ridges = [fk & seq[j] for j in range(k)
                  if len(fk & seq[j]) == size - 1]
        for j in range(k):
            inter = fk & seq[j]
            if not any(inter <= r for r in ridges):
                return {"pass": False, "first_failure": k}
    return {"pass": True, "first_failure": None}


def solomon_tits_order(complex_, seed=0):
    """A chamber order respecting BFS gallery distance from the base chamber
    (the identity coset), with seeded tie-breaking; plus its shelling verdict."""
    import random
    group = complex_.group
    cosets = group.parabolic_cosets(frozenset())
    top = complex_.cells_by_dim[complex_.top_dim]
    pos_of_cid = dict((cid, pos) for pos, (_, cid) in enumerate(top))
    npos = len(top)
    # panel adjacency: chambers in a common coset of a rank-1 parabolic
    neighbors = [[] for _ in range(npos)]
    for gen in range(len(group.spec.generators)):
        panels = group.parabolic_cosets(frozenset([gen]))
        for coset in panels.cosets:
            members = [pos_of_cid[cosets.coset_of[x]] for x in coset]
            for a in members:
                for b in members:
                    if a != b:
                        neighbors[a].append(b)
    base = pos_of_cid[cosets.coset_of[0]]
    dist = [None] * npos
    dist[base] = 0
    frontier = [base]
    while frontier:
        nxt = []
        for a in frontier:
            for b in neighbors[a]:
                if dist[b] is None:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
        frontier = nxt
    if any(d is None for d in dist):
        raise RuntimeError("chamber graph is disconnected")
    rng = random.Random(seed)
    tie = [rng.random() for _ in range(npos)]
    order = sorted(range(npos), key=lambda p: (dist[p], tie[p]))
    verdict = shelling_check(complex_, order)
    return {"order": order, "distances": dist, "shelling": verdict}
