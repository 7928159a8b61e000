"""Integer partitions, standard Young tableaux, and strip enumeration.

Conventions, fixed once and used everywhere:

- A partition is a weakly decreasing tuple of positive integers; row 1 is the
  longest row.  Rows are indexed 1-based.
- The canonical order on partitions of the same size is descending
  lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  It refines dominance.
- Text form: comma-separated parts, with "0" for the empty partition.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache


class Partition:
    """An integer partition, stored as a weakly decreasing tuple of positive parts.

    Trailing zeros in the input are dropped, so ``Partition((3, 1, 0))`` equals
    ``Partition((3, 1))``.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            self.parts = parts.parts
            return
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative, got {parts}")
        self.parts = parts

    def size(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def row(self, s):
        """Length of row s (1-based); 0 beyond the last row."""
        return self.parts[s - 1] if 1 <= s <= len(self.parts) else 0

    def conjugate(self):
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other):
        """Whether this diagram contains ``other`` (componentwise)."""
        other = Partition(other)
        if len(other.parts) > len(self.parts):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def sort_key(self):
        """Key realizing the canonical order: by size, then descending lex."""
        return (self.size(), tuple(-p for p in self.parts))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return format_partition(self)


def parse_partition(text):
    """Parse "3,1" (or "0" / "" for the empty partition)."""
    text = text.strip()
    if text in ("", "0"):
        return Partition(())
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)


def format_partition(lam):
    parts = Partition(lam).parts
    return ",".join(str(p) for p in parts) if parts else "0"


def conjugate(lam):
    return Partition(lam).conjugate()


def dominates(lam, mu):
    """Dominance order: prefix sums of lam are >= those of mu (same size)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size():
        return False
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam.row(i + 1)
        acc_m += mu.row(i + 1)
        if acc_l < acc_m:
            return False
    return True


def boxes_added(lam):
    """All partitions obtained by adding one box, as (Partition, row) pairs.

    Rows are 1-based; adding below the last row reports row length(lam)+1.
    Listed top row first.
    """
    lam = Partition(lam)
    out = []
    for s in range(1, len(lam.parts) + 2):
        above = lam.row(s - 1) if s > 1 else None
        if s == 1 or above > lam.row(s):
            new = list(lam.parts) + [0] * (s - len(lam.parts))
            new[s - 1] += 1
            out.append((Partition(new), s))
    return out


def boxes_removed(lam):
    """All partitions obtained by removing one corner box, as (Partition, row)."""
    lam = Partition(lam)
    out = []
    for s in range(1, len(lam.parts) + 1):
        below = lam.row(s + 1)
        if lam.row(s) > below:
            new = list(lam.parts)
            new[s - 1] -= 1
            out.append((Partition(new), s))
    return out


@lru_cache(maxsize=None)
def _partitions_tuple(n, cap):
    """All weakly decreasing tuples summing to n with parts <= cap, descending lex."""
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_tuple(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n):
    """All partitions of n in canonical (descending lexicographic) order."""
    if n < 0:
        return []
    return [Partition(t) for t in _partitions_tuple(n, n if n else 1)]


def partitions_up_to(n):
    """All partitions of size 0..n, canonical order within each size."""
    out = []
    for k in range(n + 1):
        out.extend(enumerate_partitions(k))
    return out


def hook_lengths(lam):
    """Hook length of each box, as a list of rows."""
    lam = Partition(lam)
    conj = lam.conjugate()
    return [
        [lam.row(i) - j + conj.row(j) - i + 1 for j in range(1, lam.row(i) + 1)]
        for i in range(1, len(lam.parts) + 1)
    ]


def syt_count(lam):
    """Number of standard Young tableaux of shape lam, by the hook-length formula."""
    lam = Partition(lam)
    n = lam.size()
    num = 1
    for k in range(1, n + 1):
        num *= k
    den = 1
    for row in hook_lengths(lam):
        for h in row:
            den *= h
    q, r = divmod(num, den)
    assert r == 0, (lam, num, den)
    return q


class StandardTableau:
    """A standard Young tableau: rows of entries, increasing along rows and columns."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = sum(len(r) for r in self.rows)
        seen = sorted(x for row in self.rows for x in row)
        assert seen == list(range(1, n + 1)), f"entries must be 1..{n}: {rows}"
        for row in self.rows:
            assert all(a < b for a, b in zip(row, row[1:])), rows
        for r1, r2 in zip(self.rows, self.rows[1:]):
            assert len(r1) >= len(r2), rows
            assert all(r1[j] < r2[j] for j in range(len(r2))), rows

    def shape(self):
        return Partition(len(r) for r in self.rows)

    def size(self):
        return sum(len(r) for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(("StandardTableau", self.rows))

    def __repr__(self):
        return f"StandardTableau({self.rows!r})"


def row_reading_tableau(lam):
    """The tableau filling 1..n along rows, top to bottom ("row reading")."""
    lam = Partition(lam)
    rows, next_entry = [], 1
    for p in lam.parts:
        rows.append(tuple(range(next_entry, next_entry + p)))
        next_entry += p
    return StandardTableau(rows)


def enumerate_syt(lam):
    """All standard tableaux of shape lam, in a deterministic order.

    Built recursively: each tableau arises from removing the largest entry at a
    corner; corners are visited top row first.
    """
    lam = Partition(lam)

    def build(shape):
        n = sum(shape)
        if n == 0:
            return [()]
        out = []
        for sub, row in boxes_removed(Partition(shape)):
            for rows in build(sub.parts):
                new = [list(r) for r in rows]
                while len(new) < row:
                    new.append([])
                new[row - 1].append(n)
                out.append(tuple(tuple(r) for r in new))
        return out

    return [StandardTableau(rows) for rows in build(lam.parts)]


def horizontal_strips(lam, k):
    """Partitions mu >= lam with |mu| = |lam| + k and mu/lam a horizontal strip.

    A horizontal strip has at most one added box per column, i.e.
    mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...  Returned in canonical order.
    """
    lam = Partition(lam)
    if k < 0:
        return []
    if k == 0:
        return [lam]
    rows = len(lam.parts) + 1
    out = []

    def extend(i, remaining, built):
        if i > rows:
            if remaining == 0:
                out.append(Partition(built))
            return
        lo = lam.row(i)
        hi = lam.row(i - 1) if i > 1 else lam.row(1) + remaining
        hi = min(hi, lo + remaining)
        if built:
            hi = min(hi, built[-1])
        for val in range(hi, lo - 1, -1):
            extend(i + 1, remaining - (val - lo), built + [val])

    extend(1, k, [])
    out.sort(key=Partition.sort_key)
    return out


def vertical_strips(lam, k):
    """Partitions mu >= lam with mu/lam a vertical strip of size k (one box per row)."""
    lam = Partition(lam)
    return sorted(
        (m.conjugate() for m in horizontal_strips(lam.conjugate(), k)),
        key=Partition.sort_key,
    )


def horizontal_strips_below(lam, k):
    """Partitions mu <= lam with lam/mu a horizontal strip of size k."""
    lam = Partition(lam)
    if k < 0:
        return []
    return sorted(
        (mu for mu in _subdiagrams_with_size(lam, lam.size() - k)
         if _is_horizontal_strip(lam, mu)),
        key=Partition.sort_key,
    )


def vertical_strips_below(lam, k):
    lam = Partition(lam)
    return sorted(
        (m.conjugate() for m in horizontal_strips_below(lam.conjugate(), k)),
        key=Partition.sort_key,
    )


def _subdiagrams_with_size(lam, m):
    """All mu contained in lam with |mu| = m."""
    lam = Partition(lam)
    out = []

    def extend(i, remaining, built):
        if remaining == 0:
            out.append(Partition(built))
            return
        if i > len(lam.parts):
            return
        hi = min(lam.row(i), built[-1] if built else remaining, remaining)
        for val in range(hi, 0, -1):
            if remaining - val <= sum(
                min(lam.row(j), val) for j in range(i + 1, len(lam.parts) + 1)
            ):
                extend(i + 1, remaining - val, built + [val])

    extend(1, m, [])
    return out


def _is_horizontal_strip(lam, mu):
    """Whether lam/mu is a horizontal strip (mu inside lam, interleaved rows)."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return False
    return all(lam.row(i + 1) <= mu.row(i) for i in range(1, len(lam.parts)))


def cycle_type_representative(mu, n=None):
    """A permutation of {1..n} with cycle type mu, as a tuple of images.

    Cycles are laid consecutively: (1..mu_1)(mu_1+1..mu_1+mu_2)...
    """
    mu = Partition(mu)
    n = mu.size() if n is None else n
    assert n >= mu.size()
    img = list(range(1, n + 1))
    start = 1
    for part in mu.parts:
        for j in range(start, start + part - 1):
            img[j - 1] = j + 1
        img[start + part - 2] = start
        start += part
    return tuple(img)


def centralizer_order(mu):
    """z_mu = prod_i i^{m_i} m_i!  (order of the centralizer of cycle type mu)."""
    mu = Partition(mu)
    mult = {}
    for p in mu.parts:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i**m
        for j in range(1, m + 1):
            z *= j
    return z
