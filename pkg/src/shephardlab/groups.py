"""Reflection groups as enumerated matrix groups.

A GroupSpec holds validated generator matrices over one cyclotomic field;
generate_group closes them under multiplication (breadth first, identity
first) and the resulting ReflectionGroup answers structural queries:
conjugacy classes, reflections and their hyperplanes, parabolic subgroups
and their left cosets.  Everything is cached and immutable after creation.
"""

from .field import Cyclotomic
from .linalg import MatrixExact, rank as mat_rank_rows


class GroupTooLarge(RuntimeError):
    pass


class GroupSpec:
    def __init__(self, name, symbol, field_order, generators, known_degrees,
                 family, aliases=(), stretch=False):
        self.name = name
        self.symbol = symbol
        self.field_order = field_order
        self.generators = list(generators)
        self.known_degrees = tuple(known_degrees)
        self.family = family
        self.aliases = tuple(aliases)
        self.stretch = stretch
        rank = symbol.rank
        for g in self.generators:
            if g.nrows != rank or g.ncols != rank:
                raise ValueError("generator is not %dx%d" % (rank, rank))
            if g.order != field_order:
                raise ValueError("generator entries not in the declared field")

    @property
    def rank(self):
        return self.symbol.rank

    @property
    def expected_order(self):
        out = 1
        for d in self.known_degrees:
            out *= d
        return out

    def __repr__(self):
        return "GroupSpec(%r)" % self.name


class HyperplaneDatum:
    """A reflecting hyperplane: normalized linear form, pointwise-stabilizer
    order, a generator of that cyclic stabilizer, and the reflections on it."""

    def __init__(self, alpha, order, fixer_generator, reflection_indices):
        self.alpha = tuple(alpha)
        self.order = order
        self.fixer_generator = fixer_generator
        self.reflection_indices = tuple(reflection_indices)

    def __repr__(self):
        return "HyperplaneDatum(alpha=%r, order=%d)" % (list(self.alpha), self.order)


class ParabolicCosets:
    def __init__(self, J, subgroup_elements, cosets):
        self.J = frozenset(J)
        self.subgroup_elements = tuple(subgroup_elements)
        self.cosets = [tuple(c) for c in cosets]
        self.representatives = [c[0] for c in self.cosets]
        self.coset_of = {}
        for cid, coset in enumerate(self.cosets):
            for idx in coset:
                self.coset_of[idx] = cid

    def __len__(self):
        return len(self.cosets)


class ReflectionGroup:
    def __init__(self, spec, elements, index):
        self.spec = spec
        self.elements = elements  # MatrixExact list, identity first, BFS order
        self.index = index  # matrix -> element index
        self._inverses = None
        self._orders = {}
        self._classes = None
        self._class_of = None
        self._reflections = None
        self._hyperplanes = None
        self._parabolics = {}
        self._dets = None

    # -- basics -----------------------------------------------------------

    @property
    def rank(self):
        return self.spec.rank

    @property
    def field_order(self):
        return self.spec.field_order

    def __len__(self):
        return len(self.elements)

    def product(self, i, j):
        return self.index[self.elements[i] * self.elements[j]]

    @property
    def inverses(self):
        if self._inverses is None:
            inv = [None] * len(self.elements)
            for i, g in enumerate(self.elements):
                if inv[i] is None:
                    gi = g.inverse()
                    j = self.index[gi]
                    inv[i] = j
                    inv[j] = i
            self._inverses = inv
        return self._inverses

    def element_order(self, i):
        if i not in self._orders:
            ident = self.elements[0]
            g = self.elements[i]
            acc, k = g, 1
            while acc != ident:
                acc = acc * g
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def determinant(self, i):
        if self._dets is None:
            self._dets = [None] * len(self.elements)
        if self._dets[i] is None:
            self._dets[i] = _det(self.elements[i])
        return self._dets[i]

    # -- conjugacy classes ------------------------------------------------

    @property
    def classes(self):
        if self._classes is None:
            self._compute_classes()
        return self._classes

    @property
    def class_of(self):
        if self._class_of is None:
            self._compute_classes()
        return self._class_of

    @property
    def class_reps(self):
        return [cls[0] for cls in self.classes]

    def _compute_classes(self):
        n = len(self.elements)
        gen_pairs = [(g, g.inverse()) for g in self.spec.generators]
        class_of = [None] * n
        classes = []
        for start in range(n):
            if class_of[start] is not None:
                continue
            cid = len(classes)
            orbit = [start]
            class_of[start] = cid
            frontier = [start]
            while frontier:
                nxt = []
                for i in frontier:
                    x = self.elements[i]
                    for g, gi in gen_pairs:
                        j = self.index[g * x * gi]
                        if class_of[j] is None:
                            class_of[j] = cid
                            orbit.append(j)
                            nxt.append(j)
                frontier = nxt
            classes.append(sorted(orbit))
        self._classes = classes
        self._class_of = class_of

    # -- reflections and hyperplanes --------------------------------------

    @property
    def reflections(self):
        if self._reflections is None:
            ident = self.elements[0]
            refl = []
            for i, g in enumerate(self.elements):
                if i == 0:
                    continue
                diff = g - ident
                if mat_rank_rows([list(r) for r in diff.entries]) == 1:
                    refl.append(i)
            self._reflections = refl
        return self._reflections

    @property
    def hyperplanes(self):
        if self._hyperplanes is None:
            self._hyperplanes = self._compute_hyperplanes()
        return self._hyperplanes

    def _compute_hyperplanes(self):
        ident = self.elements[0]
        by_alpha = {}
        for i in self.reflections:
            diff = self.elements[i] - ident
            alpha = None
            for row in diff.entries:
                if any(row):
                    alpha = row
                    break
            lead = next(c for c in alpha if c)
            inv = lead.inverse()
            alpha = tuple(inv * c for c in alpha)
            by_alpha.setdefault(alpha, []).append(i)
        data = []
        for alpha, refl in sorted(by_alpha.items(), key=lambda kv: min(kv[1])):
            e = 1 + len(refl)
            gen = None
            for i in refl:
                if self.element_order(i) == e:
                    gen = i
                    break
            if gen is None:
                raise RuntimeError("pointwise stabilizer of a hyperplane is "
                                   "not cyclic of order %d" % e)
            # the powers of the generator must recover exactly this stabilizer
            powers = set()
            acc = self.elements[gen]
            for _ in range(e - 1):
                powers.add(self.index[acc])
                acc = acc * self.elements[gen]
            if powers != set(refl):
                raise RuntimeError("inconsistent grouping of reflections by "
                                   "hyperplane")
            data.append(HyperplaneDatum(alpha, e, gen, sorted(refl)))
        return data

    # -- parabolic subgroups ----------------------------------------------

    def parabolic_cosets(self, J):
        """Left cosets of the subgroup generated by the given generator
        indices; each coset is listed with its minimal element index first."""
        J = frozenset(J)
        if J in self._parabolics:
            return self._parabolics[J]
        sub = self._closure([self.index[self.spec.generators[j]] for j in J])
        n = len(self.elements)
        assigned = [False] * n
        cosets = []
        for x in range(n):
            if assigned[x]:
                continue
            xm = self.elements[x]
            coset = sorted(self.index[xm * self.elements[h]] for h in sub)
            for idx in coset:
                assigned[idx] = True
            cosets.append(coset)
        result = ParabolicCosets(J, sorted(sub), cosets)
        self._parabolics[J] = result
        return result

    def _closure(self, generator_indices):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for j in generator_indices:
                    k = self.product(i, j)
                    if k not in seen:
                        seen.add(k)
                        nxt.append(k)
            frontier = nxt
        return seen


def _det(m):
    n = m.nrows
    if n == 1:
        return m.entries[0][0]
    acc = None
    for i in range(n):
        c = m.entries[i][0]
        if not c:
            continue
        minor = MatrixExact(m.order, [r[1:] for k, r in enumerate(m.entries) if k != i])
        term = c * _det(minor)
        if i % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc if acc is not None else Cyclotomic.zero(m.order)


def generate_group(spec, cap=200000):
    """Breadth-first closure of the generators under left multiplication."""
    ident = MatrixExact.identity(spec.field_order, spec.rank)
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in spec.generators:
                y = g * x
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        raise GroupTooLarge(
                            "group closure exceeded cap %d" % cap)
        frontier = nxt
    return ReflectionGroup(spec, elements, index)


def verify_presentation(group):
    """Check the three relation families of the unbranched presentation.

    Returns a list of (description, ok) pairs; failures are entries, not
    exceptions.
    """
    spec = group.spec
    sym = spec.symbol
    gens = spec.generators
    ident = MatrixExact.identity(spec.field_order, spec.rank)
    report = []
    for i, p in enumerate(sym.p):
        acc = gens[i]
        for _ in range(p - 1):
            acc = acc * gens[i]
        report.append(("r%d^%d = 1" % (i, p), acc == ident))
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            ok = gens[i] * gens[j] == gens[j] * gens[i]
            report.append(("r%d r%d = r%d r%d" % (i, j, j, i), ok))
    for i, q in enumerate(sym.q):
        a, b = gens[i], gens[i + 1]
        lhs = _alternating(a, b, q)
        rhs = _alternating(b, a, q)
        report.append(("braid(r%d, r%d) of length %d" % (i, i + 1, q),
                       lhs == rhs))
    return report


def _alternating(a, b, q):
    acc = None
    for k in range(q):
        m = a if k % 2 == 0 else b
        acc = m if acc is None else acc * m
    return acc
