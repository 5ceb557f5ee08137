"""Exact dense linear algebra over a cyclotomic field (or plain rationals).

Row reduction uses exact division with the first nonzero entry as pivot, so
results are deterministic and tolerance-free.  Scalars only need +, -, *, /,
bool (zero test) and ==, which covers both Cyclotomic and Rational.
"""


class NoSolution(Exception):
    """Raised when a linear system M x = b is inconsistent."""


def rref(rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_column_list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv = 1 / pv if not hasattr(pv, "inverse") else pv.inverse()
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + rows[r:], pivots


def rank(rows):
    _, pivots = rref(rows)
    return len(pivots)


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def nullspace(rows, ncols=None):
    """Basis of the right kernel, as column vectors (lists)."""
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        rows = []
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][fc]
        basis.append(vec)
    return basis


def solve_columns(columns, rhs_columns):
    """Solve M x = b for each b in rhs_columns, M given by its columns.

    Returns a list of coefficient vectors.  Raises NoSolution if any target
    lies outside the column space.
    """
    nrows = len(columns[0]) if columns else len(rhs_columns[0])
    ncols = len(columns)
    aug = []
    for i in range(nrows):
        aug.append([col[i] for col in columns] + [b[i] for b in rhs_columns])
    red, pivots = rref(aug)
    sols = []
    col_of_pivot = dict((c, i) for i, c in enumerate(pivots))
    for k in range(len(rhs_columns)):
        bc = ncols + k
        if bc in col_of_pivot:
            raise NoSolution("target vector %d is outside the column space" % k)
    for k in range(len(rhs_columns)):
        x = [0] * ncols
        for i, c in enumerate(pivots):
            if c < ncols:
                x[c] = red[i][ncols + k]
        # consistency: rows with no pivot among the first ncols must be zero
        for i in range(len(pivots), len(red)):
            if red[i][ncols + k]:
                raise NoSolution("inconsistent system")
        sols.append(x)
    return sols


def invariant_subspace_trace(basis, action):
    """Trace of a linear map on span(basis).

    basis: list of column vectors spanning a subspace W stable under action.
    action: callable column -> column.  Raises NoSolution if some image
    escapes W (stability violated).
    """
    if not basis:
        return 0
    images = [action(b) for b in basis]
    coeffs = solve_columns(basis, images)
    tr = None
    for j, c in enumerate(coeffs):
        tr = c[j] if tr is None else tr + c[j]
    return tr


class EchelonSpan:
    """A subspace kept in reduced row-echelon form, for fast membership tests.

    Vectors are coordinate rows over a fixed ordered basis of the ambient
    space.  Basis rows have unit leading entries on distinct pivot columns.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, vec):
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                for j in range(p, self.ncols):
                    if row[j]:
                        vec[j] = vec[j] - c * row[j]
        return vec

    def insert(self, vec):
        """Add vec to the span; returns True if it enlarged the space."""
        vec = self._reduce(vec)
        pivot = None
        for j in range(self.ncols):
            if vec[j]:
                pivot = j
                break
        if pivot is None:
            return False
        pv = vec[pivot]
        inv = 1 / pv if not hasattr(pv, "inverse") else pv.inverse()
        vec = [x * inv for x in vec]
        for row in self.rows:
            c = row[pivot]
            if c:
                for j in range(self.ncols):
                    if vec[j]:
                        row[j] = row[j] - c * vec[j]
        k = 0
        while k < len(self.pivots) and self.pivots[k] < pivot:
            k += 1
        self.rows.insert(k, vec)
        self.pivots.insert(k, pivot)
        return True

    def residual(self, vec):
        """vec minus its projection onto the span; zero iff vec is inside.
        The residual is supported on the non-pivot coordinates."""
        return self._reduce(vec)

    def contains(self, vec):
        return not any(self._reduce(vec))

    def coefficients(self, vec):
        """Coefficients of vec in the echelon basis, or None if outside.

        Because basis rows are in RREF, the coefficient on basis row i is just
        the entry of vec at pivot i; the residual check makes this exact.
        """
        res = list(vec)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = res[p]
            coeffs.append(c)
            if c:
                for j in range(p, self.ncols):
                    if row[j]:
                        res[j] = res[j] - c * row[j]
        if any(res):
            return None
        return coeffs


class MatrixExact:
    """Immutable dense matrix with Cyclotomic entries of one field order."""

    __slots__ = ("order", "entries", "_hash")

    def __init__(self, order, entries):
        self.order = order
        self.entries = tuple(tuple(row) for row in entries)
        if self.entries:
            w = len(self.entries[0])
            if any(len(r) != w for r in self.entries):
                raise ValueError("ragged matrix")
        self._hash = None

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def identity(order, n):
        from .field import Cyclotomic
        one = Cyclotomic.one(order)
        zero = Cyclotomic.zero(order)
        return MatrixExact(order, [[one if i == j else zero for j in range(n)]
                                   for i in range(n)])

    def __mul__(self, other):
        if not isinstance(other, MatrixExact):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = None
                for a, b in zip(row, col):
                    if a and b:
                        term = a * b
                        acc = term if acc is None else acc + term
                if acc is None:
                    from .field import Cyclotomic
                    acc = Cyclotomic.zero(self.order)
                out_row.append(acc)
            out.append(out_row)
        return MatrixExact(self.order, out)

    def __sub__(self, other):
        return MatrixExact(self.order,
                           [[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def __add__(self, other):
        return MatrixExact(self.order,
                           [[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, c):
        return MatrixExact(self.order, [[c * a for a in row] for row in self.entries])

    def transpose(self):
        return MatrixExact(self.order, list(zip(*self.entries)))

    def conjugate(self):
        return MatrixExact(self.order,
                           [[a.conjugate() for a in row] for row in self.entries])

    def rank(self):
        return rank([list(r) for r in self.entries])

    def inverse(self):
        n = self.nrows
        ident = MatrixExact.identity(self.order, n)
        cols = solve_columns(
            [[self.entries[i][j] for i in range(n)] for j in range(n)],
            [[ident.entries[i][j] for i in range(n)] for j in range(n)])
        return MatrixExact(self.order, list(zip(*cols)))

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of scalars."""
        out = []
        for row in self.entries:
            acc = None
            for a, b in zip(row, vec):
                if a and b:
                    term = a * b
                    acc = term if acc is None else acc + term
            if acc is None:
                from .field import Cyclotomic
                acc = Cyclotomic.zero(self.order)
            out.append(acc)
        return out

    def trace(self):
        acc = self.entries[0][0]
        for i in range(1, self.nrows):
            acc = acc + self.entries[i][i]
        return acc

    def __eq__(self, other):
        return (isinstance(other, MatrixExact) and self.order == other.order
                and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.entries))
        return self._hash

    def __repr__(self):
        return "MatrixExact(%d, %r)" % (self.order, [list(r) for r in self.entries])


def mat_rank(m):
    return m.rank()


def mat_solve(m, b):
    """Exact solution of m x = b, or raise NoSolution."""
    cols = [[m.entries[i][j] for i in range(m.nrows)] for j in range(m.ncols)]
    return solve_columns(cols, [list(b)])[0]
