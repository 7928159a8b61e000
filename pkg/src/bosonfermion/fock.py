"""Charged fermionic Fock space, the Clifford operators, and the
charge-graded isomorphism onto symmetric functions.

A semi-infinite wedge with charge c is encoded by its (charge, partition)
pair alone: the occupied energies are i_s = lambda_s + c - s + 1/2 for
s = 1, 2, ...; equivalently the integer codes m_s = lambda_s + c - s,
which are strictly decreasing and eventually equal to c - s.  The fermionic
mode psi(j) inserts the code j-1 (if free) with sign (-1)^{number of
occupied codes above}, and psi_star(j) removes it (if present) at 1-based
slot s with sign (-1)^{s+1}.

The bosonic side is a charge-indexed family of symmetric functions; the
dictionary sends (c, lambda) to t^c s_lambda, fermionic modes to the
charge-shifted creation/annihilation operators.
"""

from __future__ import annotations

from fractions import Fraction

from .partition_core import Partition, format_partition, parse_partition, partitions_up_to
from .reports import Report
from .symfunc import SymFunc, bernstein, bernstein_star, schur

ZERO = Fraction(0)
ONE = Fraction(1)


class FermionBasisVector:
    """A charged-partition basis vector of fermionic Fock space."""

    __slots__ = ("charge", "shape")

    def __init__(self, charge, shape=()):
        self.charge = int(charge)
        self.shape = Partition(shape)

    def codes(self, count):
        """The first ``count`` occupied integer codes m_s = lambda_s + c - s."""
        lam, c = self.shape, self.charge
        return [lam.row(s) + c - s for s in range(1, count + 1)]

    def __eq__(self, other):
        return (
            isinstance(other, FermionBasisVector)
            and self.charge == other.charge
            and self.shape == other.shape
        )

    def __hash__(self):
        return hash(("FermionBasisVector", self.charge, self.shape))

    def __repr__(self):
        return f"FermionBasisVector({self.charge}, {self.shape.parts})"


def vacuum(charge):
    return FermionBasisVector(charge, ())


def charge_of(v):
    return v.charge


def principal_degree(v):
    """The energy above the charge-c vacuum: |lambda|."""
    return v.shape.size()


class FermionState:
    """A finite rational linear combination of basis vectors."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for vec, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[vec] = c
        self.terms = clean

    @staticmethod
    def of(vec, coeff=ONE):
        return FermionState({vec: coeff})

    @staticmethod
    def zero():
        return FermionState()

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for v, c in other.terms.items():
            w = out.get(v, ZERO) + c
            if w:
                out[v] = w
            else:
                out.pop(v, None)
        res = FermionState.__new__(FermionState)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return FermionState.zero()
        res = FermionState.__new__(FermionState)
        res.terms = {v: c * w for v, w in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, FermionState) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "FermionState(0)"
        bits = [f"{c}*{v!r}" for v, c in sorted(
            self.terms.items(), key=lambda t: (t[0].charge, t[0].shape.sort_key()))]
        return "FermionState(" + " + ".join(bits) + ")"


def _as_state(v):
    if isinstance(v, FermionBasisVector):
        return FermionState.of(v)
    return v


def _insert_code(vec, t):
    """Insert code t into vec's occupied set; (sign, new vector) or None if occupied."""
    lam, c = vec.shape, vec.charge
    depth = len(lam.parts) + max(0, c - t) + 2
    codes = vec.codes(depth)
    if t in codes or t <= c - depth:
        return None
    above = sum(1 for m in codes if m > t)
    new_codes = sorted(codes + [t], reverse=True)
    new_charge = c + 1
    parts = []
    for s, m in enumerate(new_codes, start=1):
        parts.append(m - new_charge + s)
    while parts and parts[-1] == 0:
        parts.pop()
    assert all(p > 0 for p in parts), (vec, t, parts)
    return (-1) ** above, FermionBasisVector(new_charge, parts)


def _remove_code(vec, t):
    """Remove code t; (sign, new vector) or None if absent."""
    lam, c = vec.shape, vec.charge
    depth = len(lam.parts) + max(0, c - t) + 2
    codes = vec.codes(depth)
    if t not in codes:
        if t <= c - depth:
            # deep inside the vacuum tail: occupied, but removing it would
            # need more depth; extend
            depth = c - t + 2
            codes = vec.codes(depth)
        else:
            return None
    if t not in codes:
        return None
    slot = codes.index(t) + 1  # 1-based
    new_codes = [m for m in codes if m != t]
    new_charge = c - 1
    parts = []
    for s, m in enumerate(new_codes, start=1):
        parts.append(m - new_charge + s)
    while parts and parts[-1] == 0:
        parts.pop()
    assert all(p > 0 for p in parts), (vec, t, parts)
    return (-1) ** (slot + 1), FermionBasisVector(new_charge, parts)


def psi(j, v, _flip_sign=False):
    """The fermionic creation mode: inserts energy j - 1/2.

    ``_flip_sign`` is a test hook that deliberately corrupts the sign, used
    by the mutation check of ``verify_correspondence``.
    """
    out = FermionState.zero()
    for vec, coeff in _as_state(v).terms.items():
        hit = _insert_code(vec, j - 1)
        if hit is None:
            continue
        sign, new_vec = hit
        if _flip_sign:
            sign = -sign
        out = out + FermionState.of(new_vec, coeff * sign)
    return out


def psi_star(j, v):
    """The fermionic annihilation mode: removes energy j - 1/2."""
    out = FermionState.zero()
    for vec, coeff in _as_state(v).terms.items():
        hit = _remove_code(vec, j - 1)
        if hit is None:
            continue
        sign, new_vec = hit
        out = out + FermionState.of(new_vec, coeff * sign)
    return out


# -- bosonic side ---------------------------------------------------------------


class BosonState:
    """A finite family {charge: SymFunc}, i.e. an element of the charged ring."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for c, f in (terms or {}).items():
            if not f.is_zero():
                clean[int(c)] = f
        self.terms = clean

    @staticmethod
    def of(charge, f):
        return BosonState({charge: f})

    @staticmethod
    def zero():
        return BosonState()

    def component(self, charge):
        return self.terms.get(charge, SymFunc.zero())

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for c, f in other.terms.items():
            g = out.get(c, SymFunc.zero()) + f
            if g.is_zero():
                out.pop(c, None)
            else:
                out[c] = g
        return BosonState(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return BosonState({k: f.scale(c) for k, f in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, BosonState) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "BosonState(0)"
        bits = [f"t^{c}*({f!r})" for c, f in sorted(self.terms.items())]
        return "BosonState(" + " + ".join(bits) + ")"


def sigma_iso(v):
    """The charge-graded isomorphism: (c, lambda) -> t^c s_lambda."""
    out = {}
    for vec, coeff in _as_state(v).terms.items():
        c = vec.charge
        add = schur(vec.shape).scale(coeff)
        out[c] = out.get(c, SymFunc.zero()) + add
    return BosonState(out)


def sigma_inv(b):
    out = FermionState.zero()
    for c, f in b.terms.items():
        for lam, coeff in f.terms.items():
            out = out + FermionState.of(FermionBasisVector(c, lam), coeff)
    return out


def boson_psi(i, b):
    """The bosonic realization of psi(i): t^c f -> t^{c+1} B_{i-(c+1)} f."""
    out = BosonState.zero()
    for c, f in b.terms.items():
        out = out + BosonState.of(c + 1, bernstein(i - (c + 1), f))
    return out


def boson_psi_star(i, b):
    """The bosonic realization of psi_star(i): t^c f -> t^{c-1} B*_{i-c} f."""
    out = BosonState.zero()
    for c, f in b.terms.items():
        out = out + BosonState.of(c - 1, bernstein_star(i - c, f))
    return out


# -- serialization -----------------------------------------------------------------


def fermion_state_to_json(v):
    recs = []
    for vec, c in sorted(
        _as_state(v).terms.items(),
        key=lambda t: (t[0].charge, t[0].shape.sort_key()),
    ):
        recs.append(
            {
                "charge": vec.charge,
                "partition": format_partition(vec.shape),
                "coefficient": str(c),
            }
        )
    return recs


def fermion_state_from_json(recs):
    out = FermionState.zero()
    for r in recs:
        vec = FermionBasisVector(int(r["charge"]), parse_partition(r["partition"]))
        out = out + FermionState.of(vec, Fraction(r["coefficient"]))
    return out


def boson_state_to_json(b):
    recs = []
    for c in sorted(b.terms):
        f = b.terms[c]
        for lam in f.support():
            recs.append(
                {
                    "charge": c,
                    "partition": format_partition(lam),
                    "coefficient": str(f.terms[lam]),
                }
            )
    return recs


def boson_state_from_json(recs):
    out = BosonState.zero()
    for r in recs:
        out = out + BosonState.of(
            int(r["charge"]),
            schur(parse_partition(r["partition"])).scale(Fraction(r["coefficient"])),
        )
    return out


# -- verification suites -------------------------------------------------------------


def _window(pair):
    lo, hi = pair
    return range(lo, hi + 1)


def verify_correspondence(max_degree, charge_window, index_window, inject_sign_flip=False):
    """Check that the charge-partition dictionary intertwines the fermionic
    modes with the charge-shifted creation/annihilation operators, vector by
    vector.  Mismatches become report entries; the report passes iff none."""
    report = Report(
        "fermion-boson correspondence",
        config={
            "max_degree": max_degree,
            "charge_window": list(charge_window),
            "index_window": list(index_window),
        },
    )
    shapes = partitions_up_to(max_degree)
    for c in _window(charge_window):
        for lam in shapes:
            vec = FermionBasisVector(c, lam)
            bos = sigma_iso(vec)
            for i in _window(index_window):
                lhs = sigma_iso(psi(i, vec, _flip_sign=inject_sign_flip))
                rhs = boson_psi(i, bos)
                name = f"psi[i={i}] on (c={c}, {format_partition(lam)})"
                if lhs != rhs:
                    report.add(name, False, lhs=boson_state_to_json(lhs),
                               rhs=boson_state_to_json(rhs))
                lhs2 = sigma_iso(psi_star(i, vec))
                rhs2 = boson_psi_star(i, bos)
                name2 = f"psi_star[i={i}] on (c={c}, {format_partition(lam)})"
                if lhs2 != rhs2:
                    report.add(name2, False, lhs=boson_state_to_json(lhs2),
                               rhs=boson_state_to_json(rhs2))
    report.add(
        "correspondence window complete",
        True,
        vectors=len(shapes) * len(list(_window(charge_window))),
        indices=len(list(_window(index_window))),
    )
    return report


def clifford_relation_report(max_degree, charge_window, index_window):
    """Anticommutator battery on basis vectors in the window."""
    report = Report(
        "clifford anticommutators",
        config={
            "max_degree": max_degree,
            "charge_window": list(charge_window),
            "index_window": list(index_window),
        },
    )
    shapes = partitions_up_to(max_degree)
    idx = list(_window(index_window))
    bad = 0
    total = 0
    for c in _window(charge_window):
        for lam in shapes:
            vec = FermionBasisVector(c, lam)
            state = FermionState.of(vec)
            for i in idx:
                for j in idx:
                    total += 3
                    acc = psi(i, psi(j, state)) + psi(j, psi(i, state))
                    if not acc.is_zero():
                        bad += 1
                        report.add(f"psi-psi i={i} j={j} c={c} lam={format_partition(lam)}", False)
                    acc = psi_star(i, psi_star(j, state)) + psi_star(j, psi_star(i, state))
                    if not acc.is_zero():
                        bad += 1
                        report.add(f"psi*-psi* i={i} j={j} c={c} lam={format_partition(lam)}", False)
                    acc = psi(i, psi_star(j, state)) + psi_star(j, psi(i, state))
                    expect = state if i == j else FermionState.zero()
                    if acc != expect:
                        bad += 1
                        report.add(f"psi-psi* i={i} j={j} c={c} lam={format_partition(lam)}", False)
    report.add("clifford relations", bad == 0, checked=total, failed=bad)
    return report


def alpha_window_sum(vec):
    """The bounded-window evaluation of the first lowering oscillator mode,
    sum_j psi(j+1) psi_star(j) over the window where it can act on ``vec``."""
    c, lam = vec.charge, vec.shape
    lo = c - len(lam.parts) - 1
    hi = c + lam.row(1) + 1
    out = FermionState.zero()
    for j in range(lo, hi + 1):
        out = out + psi(j + 1, psi_star(j, FermionState.of(vec)))
    return out
