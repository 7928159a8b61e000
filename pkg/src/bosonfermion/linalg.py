"""Sparse exact linear algebra over the rationals.

Everything downstream (module maps, differentials, homology) runs through this
module.  Matrices are stored row-sparse: a list of ``{col: Fraction}`` dicts.
All arithmetic is exact; there are no tolerances anywhere.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class SMat:
    """A sparse matrix of Fractions."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [{} for _ in range(nrows)]
        else:
            assert len(rows) == nrows
            self.rows = rows

    # -- constructors -------------------------------------------------------

    @staticmethod
    def identity(n):
        return SMat(n, n, [{i: ONE} for i in range(n)])

    @staticmethod
    def zeros(nrows, ncols):
        return SMat(nrows, ncols)

    @staticmethod
    def from_dense(data):
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = []
        for r in data:
            assert len(r) == ncols
            rows.append({j: Fraction(v) for j, v in enumerate(r) if v})
        return SMat(nrows, ncols, rows)

    @staticmethod
    def from_entries(nrows, ncols, entries):
        """Build from an iterable of (row, col, value) with repeats summed."""
        rows = [defaultdict(lambda: ZERO) for _ in range(nrows)]
        for i, j, v in entries:
            rows[i][j] += v
        clean = [{j: v for j, v in r.items() if v} for r in rows]
        return SMat(nrows, ncols, clean)

    def copy(self):
        return SMat(self.nrows, self.ncols, [dict(r) for r in self.rows])

    # -- elementary queries --------------------------------------------------

    def to_dense(self):
        return [
            [self.rows[i].get(j, ZERO) for j in range(self.ncols)]
            for i in range(self.nrows)
        ]

    def entry(self, i, j):
        return self.rows[i].get(j, ZERO)

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def is_zero(self):
        return all(not r for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, SMat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(a == b for a, b in zip(self.rows, other.rows))

    def __repr__(self):
        return f"SMat({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            for j, v in b.items():
                w = r.get(j, ZERO) + v
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
            rows.append(r)
        return SMat(self.nrows, self.ncols, rows)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SMat.zeros(self.nrows, self.ncols)
        return SMat(
            self.nrows,
            self.ncols,
            [{j: c * v for j, v in r.items()} for r in self.rows],
        )

    def __matmul__(self, other):
        assert self.ncols == other.nrows, (self, other)
        rows = []
        orows = other.rows
        for a in self.rows:
            acc = {}
            for j, av in a.items():
                for l, bv in orows[j].items():
                    w = acc.get(l, ZERO) + av * bv
                    if w:
                        acc[l] = w
                    else:
                        acc.pop(l, None)
            rows.append(acc)
        return SMat(self.nrows, other.ncols, rows)

    def transpose(self):
        rows = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return SMat(self.ncols, self.nrows, rows)

    # -- slicing / stacking ---------------------------------------------------

    def submatrix(self, row_idx, col_idx):
        col_pos = {j: p for p, j in enumerate(col_idx)}
        rows = []
        for i in row_idx:
            rows.append(
                {col_pos[j]: v for j, v in self.rows[i].items() if j in col_pos}
            )
        return SMat(len(row_idx), len(col_idx), rows)

    def columns(self, col_idx):
        return self.submatrix(range(self.nrows), col_idx)

    @staticmethod
    def vstack(blocks):
        ncols = blocks[0].ncols
        rows = []
        for b in blocks:
            assert b.ncols == ncols
            rows.extend(dict(r) for r in b.rows)
        return SMat(len(rows), ncols, rows)

    @staticmethod
    def hstack(blocks):
        nrows = blocks[0].nrows
        assert all(b.nrows == nrows for b in blocks)
        rows = [{} for _ in range(nrows)]
        off = 0
        for b in blocks:
            for i, r in enumerate(b.rows):
                for j, v in r.items():
                    rows[i][off + j] = v
            off += b.ncols
        return SMat(nrows, off, rows)

    @staticmethod
    def block(grid, row_dims, col_dims):
        """Assemble a block matrix; None entries are zero blocks."""
        rows = [{} for _ in range(sum(row_dims))]
        roff = 0
        for bi, rdim in enumerate(row_dims):
            coff = 0
            for bj, cdim in enumerate(col_dims):
                blk = grid[bi][bj]
                if blk is not None:
                    assert blk.nrows == rdim and blk.ncols == cdim, (
                        bi, bj, blk.nrows, blk.ncols, rdim, cdim)
                    for i, r in enumerate(blk.rows):
                        for j, v in r.items():
                            rows[roff + i][coff + j] = v
                coff += cdim
            roff += rdim
        return SMat(sum(row_dims), sum(col_dims), rows)


# -- elimination engine -------------------------------------------------------


class _Eliminator:
    """Row reduction to reduced echelon form, tracking column occupancy."""

    def __init__(self, mat):
        self.ncols = mat.ncols
        self.rows = [dict(r) for r in mat.rows]
        self.occ = defaultdict(set)
        for i, r in enumerate(self.rows):
            for j in r:
                self.occ[j].add(i)
        self.pivots = []  # (row, col), in column order
        self.used = set()

    def reduce(self, upto_col=None):
        limit = self.ncols if upto_col is None else upto_col
        for col in range(limit):
            cand = [i for i in self.occ.get(col, ()) if i not in self.used]
            if not cand:
                continue
            r = min(cand, key=lambda i: len(self.rows[i]))
            self.used.add(r)
            self.pivots.append((r, col))
            piv = self.rows[r][col]
            if piv != ONE:
                inv = ONE / piv
                for j in list(self.rows[r]):
                    self.rows[r][j] *= inv
            prow = self.rows[r]
            for i in list(self.occ[col]):
                if i == r:
                    continue
                irow = self.rows[i]
                factor = irow[col]
                for j, v in prow.items():
                    w = irow.get(j, ZERO) - factor * v
                    if w:
                        if j not in irow:
                            self.occ[j].add(i)
                        irow[j] = w
                    else:
                        if j in irow:
                            del irow[j]
                            self.occ[j].discard(i)
        return self


def rank(mat):
    return len(_Eliminator(mat).reduce().pivots)


def rref(mat):
    """Reduced row echelon form; returns (SMat, pivot_columns)."""
    el = _Eliminator(mat).reduce()
    order = [r for r, _ in el.pivots] + [
        i for i in range(mat.nrows) if i not in el.used
    ]
    rows = [dict(el.rows[i]) for i in order]
    return SMat(mat.nrows, mat.ncols, rows), [c for _, c in el.pivots]


def independent_columns(mat):
    """Indices of a maximal independent set of columns (RREF pivot columns)."""
    return rref(mat)[1]


def nullspace(mat):
    """Matrix whose columns are a basis of the kernel (ncols x nullity)."""
    el = _Eliminator(mat).reduce()
    pivot_col_to_row = {c: r for r, c in el.pivots}
    pivot_cols = set(pivot_col_to_row)
    free_cols = [j for j in range(mat.ncols) if j not in pivot_cols]
    rows = [{} for _ in range(mat.ncols)]
    for k, f in enumerate(free_cols):
        rows[f][k] = ONE
        for c, r in pivot_col_to_row.items():
            v = el.rows[r].get(f, ZERO)
            if v:
                rows[c][k] = -v
    return SMat(mat.ncols, len(free_cols), rows)


def solve(a, b):
    """One exact solution X of A @ X = B; raises ValueError if inconsistent."""
    assert a.nrows == b.nrows
    aug = SMat.hstack([a, b])
    el = _Eliminator(aug).reduce(upto_col=a.ncols)
    # rows never chosen as pivots must have empty A-part; a nonzero B-part
    # there means the system is inconsistent.
    for i in range(a.nrows):
        if i in el.used:
            continue
        row = el.rows[i]
        if any(j < a.ncols for j in row):
            continue  # unreachable after full reduction; defensive
        if row:
            raise ValueError("inconsistent linear system")
    rows = [{} for _ in range(a.ncols)]
    for r, c in el.pivots:
        for j, v in el.rows[r].items():
            if j >= a.ncols:
                rows[c][j - a.ncols] = v
    return SMat(a.ncols, b.ncols, rows)


def inverse(mat):
    assert mat.nrows == mat.ncols
    x = solve(mat, SMat.identity(mat.nrows))
    assert (mat @ x) == SMat.identity(mat.nrows), "matrix not invertible"
    return x


def idempotent_image(e, check=True):
    """For an exact idempotent E, a factorization E = iota @ pi with pi @ iota = id.

    iota's columns are independent columns of E (a basis of the image);
    pi expresses E-applied vectors in that basis.
    Returns (iota, pi); the image dimension is iota.ncols.
    """
    assert e.nrows == e.ncols
    cols = independent_columns(e)
    iota = e.columns(cols)
    r = len(cols)
    if r == 0:
        return SMat.zeros(e.nrows, 0), SMat.zeros(0, e.nrows)
    piv_rows = independent_columns(iota.transpose())
    assert len(piv_rows) == r
    block = iota.submatrix(piv_rows, range(r))
    pi = inverse(block) @ e.submatrix(piv_rows, range(e.ncols))
    if check:
        assert (pi @ iota) == SMat.identity(r), "projection/inclusion mismatch"
    return iota, pi


def bareiss_rank(mat):
    """Rank by dense fraction-free (Bareiss) elimination on a cleared-denominator
    integer matrix.  Cross-check route for the sparse rational elimination."""
    dense = []
    for i in range(mat.nrows):
        row = [mat.entry(i, j) for j in range(mat.ncols)]
        den = 1
        for v in row:
            den = den * v.denominator // _gcd(den, v.denominator)
        dense.append([int(v * den) for v in row])
    m, n = len(dense), mat.ncols
    r = 0
    prev = 1
    for col in range(n):
        piv = None
        for i in range(r, m):
            if dense[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        for i in range(r + 1, m):
            for j in range(col + 1, n):
                dense[i][j] = (dense[r][col] * dense[i][j] - dense[i][col] * dense[r][j]) // prev
            dense[i][col] = 0
        prev = dense[r][col]
        r += 1
    return r


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
