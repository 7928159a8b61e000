"""Bounded chain complexes of symmetric-group modules, exactly.

Chain groups are matrix representations of one fixed symmetric group; the
differential lowers the chain degree by one and squares to zero exactly
(checked on construction).  Homology inherits the group action: a basis of
cycles-mod-boundaries is chosen by exact column reduction and the action is
re-expressed in that basis.

Also here: shifts, direct sums, mapping cones, bicomplex totalization with
the alternating-sign rule, and reduction by repeated cancellation of
invertible differential entries (which preserves homotopy type and, on a
bounded complex, terminates in a complex with zero differential).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import (
    SMat,
    bareiss_rank,
    independent_columns,
    inverse,
    nullspace,
    rank,
    solve,
)
from .reports import Report
from .symfunc import SymFunc
from .symrep import RepModule, frobenius_char, zero_module

ONE = Fraction(1)


def module_direct_sum(mods, group_degree):
    """Block-diagonal direct sum of modules of one group degree."""
    mods = [m for m in mods]
    dim = sum(m.dim for m in mods)
    gens = []
    for i in range(max(0, group_degree - 1)):
        entries = []
        off = 0
        for m in mods:
            g = m.gens[i]
            for r, row in enumerate(g.rows):
                for c, v in row.items():
                    entries.append((off + r, off + c, v))
            off += m.dim
        gens.append(SMat.from_entries(dim, dim, entries))
    return RepModule(group_degree, dim, gens)


class Complex:
    """A bounded chain complex; ``modules[k]`` has ``diffs[k]`` mapping it
    to ``modules[k-1]``."""

    __slots__ = ("group_degree", "modules", "diffs")

    def __init__(self, group_degree, modules, diffs=None, check=True):
        self.group_degree = int(group_degree)
        self.modules = {}
        for k, m in modules.items():
            assert m.degree == self.group_degree, (m.degree, self.group_degree)
            if m.dim > 0:
                self.modules[int(k)] = m
        self.diffs = {}
        for k, mat in (diffs or {}).items():
            k = int(k)
            assert mat.nrows == self.dim(k - 1) and mat.ncols == self.dim(k), (
                k, mat.nrows, mat.ncols, self.dim(k - 1), self.dim(k))
            if mat.nnz():
                self.diffs[k] = mat
        if check:
            self.check_differential()

    # -- structure ---------------------------------------------------------------

    def degrees(self):
        return sorted(self.modules)

    def module(self, k):
        got = self.modules.get(int(k))
        return got if got is not None else zero_module(self.group_degree)

    def dim(self, k):
        return self.module(k).dim

    def dims(self):
        return {k: m.dim for k, m in sorted(self.modules.items())}

    def d(self, k):
        got = self.diffs.get(int(k))
        if got is not None:
            return got
        return SMat.zeros(self.dim(k - 1), self.dim(k))

    def is_zero_complex(self):
        return not self.modules

    def total_dim(self):
        return sum(m.dim for m in self.modules.values())

    def check_differential(self):
        for k in self.diffs:
            if (k + 1) in self.diffs:
                assert (self.d(k) @ self.d(k + 1)).is_zero(), (
                    f"d∘d != 0 between degrees {k + 1} and {k - 1}")

    def validate(self):
        """Full gate: shapes, d² = 0, and equivariance of every differential."""
        self.check_differential()
        for k, mat in self.diffs.items():
            src, tgt = self.module(k), self.module(k - 1)
            for gs, gt in zip(src.gens, tgt.gens):
                assert gt @ mat == mat @ gs, f"differential at {k} not equivariant"

    # -- constructions -----------------------------------------------------------

    def shifted(self, s):
        """Degree shift: the result has chain group C_{k-s} in degree k and
        differential scaled by (-1)^s."""
        sign = ONE if s % 2 == 0 else -ONE
        return Complex(
            self.group_degree,
            {k + s: m for k, m in self.modules.items()},
            {k + s: mat.scale(sign) for k, mat in self.diffs.items()},
            check=False,
        )

    def scaled_differential(self, c):
        return Complex(
            self.group_degree,
            dict(self.modules),
            {k: mat.scale(c) for k, mat in self.diffs.items()},
            check=False,
        )

    # -- homology ----------------------------------------------------------------

    def _boundary_basis(self, k):
        """Independent columns of the incoming differential d_{k+1}."""
        if (k + 1) not in self.diffs:
            return SMat.zeros(self.dim(k), 0)
        mat = self.diffs[k + 1]
        return mat.columns(independent_columns(mat))

    def homology_module(self, k):
        """H_k with its inherited action."""
        cdim = self.dim(k)
        if cdim == 0:
            return zero_module(self.group_degree)
        cycles = nullspace(self.d(k))
        bounds = self._boundary_basis(k)
        aug = SMat.hstack([bounds, cycles])
        b = bounds.ncols
        sel = [p - b for p in independent_columns(aug) if p >= b]
        h = len(sel)
        if h == 0:
            return zero_module(self.group_degree)
        basis = cycles.columns(sel)
        mixed = SMat.hstack([bounds, basis])
        gens = []
        for g in self.module(k).gens:
            coords = solve(mixed, g @ basis)
            gens.append(coords.submatrix(range(b, b + h), range(h)))
        return RepModule(self.group_degree, h, gens)

    def betti(self):
        out = {}
        for k in self._support_range():
            h = self.homology_dim(k)
            if h:
                out[k] = h
        return out

    def homology_dim(self, k):
        cdim = self.dim(k)
        if cdim == 0:
            return 0
        out_rank = rank(self.d(k)) if k in self.diffs else 0
        in_rank = rank(self.d(k + 1)) if (k + 1) in self.diffs else 0
        return cdim - out_rank - in_rank

    def _support_range(self):
        if not self.modules:
            return range(0)
        ks = self.degrees()
        return range(ks[0], ks[-1] + 1)

    def homology_complex(self):
        """The complex of homology modules with zero differential (the
        minimal model; over the rational group algebra every bounded complex
        is homotopy-equivalent to it)."""
        mods = {}
        for k in self._support_range():
            hm = self.homology_module(k)
            if hm.dim:
                mods[k] = hm
        return Complex(self.group_degree, mods, {}, check=False)

    def homology_characters(self):
        return {k: frobenius_char(self.homology_module(k))
                for k in self._support_range()
                if self.homology_dim(k)}

    def euler_frobenius(self):
        """Alternating sum of chain-group characters (equals the alternating
        sum over homology)."""
        total = SymFunc.zero()
        for k, m in self.modules.items():
            ch = frobenius_char(m)
            total = total + (ch if k % 2 == 0 else ch.scale(-1))
        return total


def zero_complex(group_degree):
    return Complex(group_degree, {}, {}, check=False)


def single_module_complex(m, at=0):
    return Complex(m.degree, {at: m}, {}, check=False)


def direct_sum(complexes, group_degree=None):
    complexes = list(complexes)
    if group_degree is None:
        group_degree = complexes[0].group_degree
    keys = sorted({k for c in complexes for k in c.modules})
    mods, diffs = {}, {}
    for k in keys:
        mods[k] = module_direct_sum([c.module(k) for c in complexes],
                                    group_degree)
    for k in keys + [keys[-1] + 1 if keys else 0]:
        if any((k in c.diffs) for c in complexes):
            blocks = [c.d(k) for c in complexes]
            entries = []
            roff = coff = 0
            for bmat in blocks:
                for r, row in enumerate(bmat.rows):
                    for c_, v in row.items():
                        entries.append((roff + r, coff + c_, v))
                roff += bmat.nrows
                coff += bmat.ncols
            diffs[k] = SMat.from_entries(roff, coff, entries)
    return Complex(group_degree, mods, diffs, check=False)


class ChainMap:
    """A degree-preserving map of complexes commuting with differentials."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source, target, mats, check=True):
        self.source = source
        self.target = target
        self.mats = {}
        for k, mat in mats.items():
            k = int(k)
            assert mat.nrows == target.dim(k) and mat.ncols == source.dim(k)
            if mat.nnz():
                self.mats[k] = mat
        if check:
            self.check_commutes()

    def mat(self, k):
        got = self.mats.get(int(k))
        if got is not None:
            return got
        return SMat.zeros(self.target.dim(k), self.source.dim(k))

    def check_commutes(self):
        keys = set(self.mats) | set(self.source.diffs) | set(self.target.diffs)
        for k in keys:
            lhs = self.target.d(k) @ self.mat(k)
            rhs = self.mat(k - 1) @ self.source.d(k)
            assert lhs == rhs, f"chain map does not commute at degree {k}"


def cone(f):
    """Mapping cone: degree k carries source_{k-1} ⊕ target_k with
    differential [[-d_src, 0], [f, d_tgt]]."""
    a, b = f.source, f.target
    gd = a.group_degree
    keys = sorted({k + 1 for k in a.modules} | set(b.modules))
    mods, diffs = {}, {}
    for k in keys:
        mods[k] = module_direct_sum([a.module(k - 1), b.module(k)], gd)
    all_k = sorted({k for k in keys} | {k + 1 for k in keys})
    for k in all_k:
        da = a.d(k - 1).scale(-1)
        fm = f.mat(k - 1)
        db = b.d(k)
        nr = a.dim(k - 2) + b.dim(k - 1)
        nc = a.dim(k - 1) + b.dim(k)
        if nr == 0 or nc == 0:
            continue
        entries = []
        for r, row in enumerate(da.rows):
            for c, v in row.items():
                entries.append((r, c, v))
        roff = a.dim(k - 2)
        for r, row in enumerate(fm.rows):
            for c, v in row.items():
                entries.append((roff + r, c, v))
        coff = a.dim(k - 1)
        for r, row in enumerate(db.rows):
            for c, v in row.items():
                entries.append((roff + r, coff + c, v))
        mat = SMat.from_entries(nr, nc, entries)
        if mat.nnz():
            diffs[k] = mat
    return Complex(gd, mods, diffs)


def totalize(modules, d_h, d_v, group_degree, check=True):
    """Total complex of a bicomplex with commuting squares.

    ``modules[(x, y)]`` sits in total degree x + y; ``d_h[(x, y)]`` maps to
    (x-1, y) and ``d_v[(x, y)]`` to (x, y-1).  The vertical part is twisted
    by (-1)^x, which makes the total differential square to zero.
    """
    cells = {xy: m for xy, m in modules.items() if m.dim > 0}
    by_total = {}
    for (x, y), m in cells.items():
        by_total.setdefault(x + y, []).append((x, y))
    for k in by_total:
        by_total[k].sort()
    offsets, mods = {}, {}
    for k, cell_list in sorted(by_total.items()):
        off = 0
        for xy in cell_list:
            offsets[xy] = off
            off += cells[xy].dim
        mods[k] = module_direct_sum([cells[xy] for xy in cell_list],
                                    group_degree)
    diffs = {}
    for k in sorted(by_total):
        if (k - 1) not in by_total and not any(
                (x - 1, y) in cells or (x, y - 1) in cells
                for x, y in by_total[k]):
            continue
        nr = sum(cells[xy].dim for xy in by_total.get(k - 1, []))
        nc = sum(cells[xy].dim for xy in by_total[k])
        if nr == 0 or nc == 0:
            continue
        entries = []
        for (x, y) in by_total[k]:
            coff = offsets[(x, y)]
            hmat = d_h.get((x, y))
            if hmat is not None and (x - 1, y) in offsets:
                roff = offsets[(x - 1, y)]
                for r, row in enumerate(hmat.rows):
                    for c, v in row.items():
                        entries.append((roff + r, coff + c, v))
            vmat = d_v.get((x, y))
            if vmat is not None and (x, y - 1) in offsets:
                roff = offsets[(x, y - 1)]
                sign = ONE if x % 2 == 0 else -ONE
                for r, row in enumerate(vmat.rows):
                    for c, v in row.items():
                        entries.append((roff + r, coff + c, sign * v))
        mat = SMat.from_entries(nr, nc, entries)
        if mat.nnz():
            diffs[k] = mat
    return Complex(group_degree, mods, diffs, check=check)


# -- reduction by invertible-entry cancellation ---------------------------------------


def _drop_indices(n, removed):
    keep = [i for i in range(n) if i != removed]
    return keep


def eliminate_entry(c, k, r, col):
    """Cancel the basis pair coupled by the invertible entry d_k[r, col].

    The chain groups lose one generator each in degrees k and k-1; the
    degree-k differential picks up the Schur-complement correction, the
    adjacent differentials just lose a row/column.  Module structure is not
    carried (reduction bases are not equivariant); the result is for
    dimension work only.
    """
    dmat = c.d(k)
    alpha = dmat.entry(r, col)
    assert alpha != 0
    keep_cols = _drop_indices(c.dim(k), col)
    keep_rows = _drop_indices(c.dim(k - 1), r)
    # Schur complement on d_k
    new_dk = dmat.submatrix(keep_rows, keep_cols)
    col_part = dmat.submatrix(keep_rows, [col])
    row_part = dmat.submatrix([r], keep_cols)
    corr = col_part @ row_part
    new_dk = new_dk - corr.scale(ONE / alpha)
    mods = dict(c.modules)
    diffs = dict(c.diffs)

    def plain(dim):
        return RepModule(0, dim, [])

    mods[k] = plain(c.dim(k) - 1)
    mods[k - 1] = plain(c.dim(k - 1) - 1)
    for kk in (k, k - 1):
        if mods[kk].dim == 0:
            del mods[kk]
    if new_dk.nnz():
        diffs[k] = new_dk
    else:
        diffs.pop(k, None)
    if (k + 1) in diffs:
        up = diffs[k + 1].submatrix(keep_cols, range(c.dim(k + 1)))
        if up.nnz():
            diffs[k + 1] = up
        else:
            del diffs[k + 1]
    if (k - 1) in diffs:
        down = diffs[k - 1].submatrix(range(c.dim(k - 2)), keep_rows)
        if down.nnz():
            diffs[k - 1] = down
        else:
            del diffs[k - 1]
    return Complex(0, mods, diffs, check=False)


def forget_action(c):
    """The underlying complex of plain vector spaces (degree-0 modules)."""
    return Complex(
        0,
        {k: RepModule(0, m.dim, []) for k, m in c.modules.items()},
        dict(c.diffs),
        check=False,
    )


def reduce_complex(c):
    """Cancel invertible differential entries until none remain; the result
    has zero differential and chain dimensions equal to the Betti numbers."""
    cur = forget_action(c)
    while True:
        picked = None
        for k in sorted(cur.diffs):
            mat = cur.diffs[k]
            best = None
            for r, row in enumerate(mat.rows):
                if not row:
                    continue
                weight = len(row)
                if best is None or weight < best[0]:
                    best = (weight, r, min(row))
            if best is not None:
                picked = (k, best[1], best[2])
                break
        if picked is None:
            return cur
        cur = eliminate_entry(cur, *picked)


# -- randomized cross-checks -----------------------------------------------------------


def _random_invertible(rng, n):
    """A product of elementary row operations and a permutation: exactly
    invertible with small integer entries."""
    mat = SMat.identity(n)
    order = list(range(n))
    rng.shuffle(order)
    mat = mat.submatrix(order, range(n))
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        cval = Fraction(rng.choice([-2, -1, 1, 2]))
        add = {j: cval}
        rows = [dict(rr) for rr in mat.rows]
        for col, v in list(rows[j].items()):
            w = rows[i].get(col, Fraction(0)) + cval * v
            if w:
                rows[i][col] = w
            else:
                rows[i].pop(col, None)
        mat = SMat(n, n, rows)
    return mat


def random_complex_with_known_homology(rng, span=4):
    """A plain complex assembled from a zero-differential core plus
    cancelling pairs, scrambled by exact basis changes; returns
    (complex, planted_betti)."""
    planted = {k: rng.randrange(0, 3) for k in range(span)}
    pairs = {k: rng.randrange(0, 3) for k in range(1, span)}
    dims = {}
    for k in range(span):
        dims[k] = planted[k] + pairs.get(k, 0) + pairs.get(k + 1, 0)
    diffs = {}
    for k in range(1, span):
        p = pairs[k]
        if p == 0 or dims[k] == 0 or dims[k - 1] == 0:
            continue
        entries = []
        # pair block sits after the planted block in degree k, and after
        # planted + incoming-pair blocks in degree k - 1
        roff = planted[k - 1] + pairs.get(k - 1, 0)
        coff = planted[k]
        for i in range(p):
            entries.append((roff + i, coff + i, ONE))
        diffs[k] = SMat.from_entries(dims[k - 1], dims[k], entries)
    basis = {k: _random_invertible(rng, dims[k]) for k in range(span)}
    scrambled = {}
    for k, mat in diffs.items():
        scrambled[k] = basis[k - 1] @ mat @ inverse(basis[k])
    mods = {k: RepModule(0, d, []) for k, d in dims.items() if d > 0}
    betti = {k: v for k, v in planted.items() if v > 0}
    return Complex(0, mods, scrambled), betti


def elimination_fuzz_report(instances=100, seed=20260815):
    """Randomized battery: planted homology = direct homology = reduced
    dimensions; sparse and fraction-free ranks agree; reduction kills the
    differential."""
    rng = random.Random(seed)
    report = Report(
        "gaussian elimination fuzz",
        config={"instances": instances, "seed": seed},
    )
    for i in range(instances):
        c, planted = random_complex_with_known_homology(rng)
        betti = c.betti()
        reduced = reduce_complex(c)
        checks = {
            "direct betti matches planted": betti == planted,
            "reduction kills differential": not reduced.diffs,
            "reduced dims match planted": reduced.dims() == planted,
            "rank routes agree": all(
                rank(m) == bareiss_rank(m) for m in c.diffs.values()),
        }
        report.add(f"instance {i:03d}", all(checks.values()),
                   **{k: v for k, v in checks.items() if not v})
    return report
