"""The ring of symmetric functions over Q, with Schur functions as the
working basis, and the operators acting on it: multiplication, skewing
(adjoint multiplication), the five classical bases, creation/annihilation
(Bernstein) operators, and the Heisenberg-type operators.

Representation: a symmetric function is a finite Q-linear combination of
Schur functions, stored as ``{Partition: Fraction}``.  Products expand one
factor into the complete-homogeneous basis (inverse Kostka, a triangular
solve along the canonical order refining dominance) and then apply iterated
Pieri rules.  Skewing is the adjoint pairing against the Schur basis.

Memo tables (`warm_up`) are filled by a single writer; afterwards all reads
are safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegreeCapExceeded
from .partition_core import (
    Partition,
    centralizer_order,
    enumerate_partitions,
    format_partition,
    horizontal_strips,
    horizontal_strips_below,
    parse_partition,
    vertical_strips,
    vertical_strips_below,
    _subdiagrams_with_size,
)

ZERO = Fraction(0)
ONE = Fraction(1)

BASES = ("schur", "complete", "elementary", "powersum", "monomial")
_BASIS_ALIASES = {"s": "schur", "h": "complete", "e": "elementary",
                  "p": "powersum", "m": "monomial"}


def _basis_name(b):
    b = b.lower()
    b = _BASIS_ALIASES.get(b, b)
    if b not in BASES:
        raise ValueError(f"unknown basis {b!r}; expected one of {BASES}")
    return b


class SymFunc:
    """A symmetric function: finite Schur-basis linear combination."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[Partition(lam)] = c
        self.terms = clean

    @staticmethod
    def zero():
        return SymFunc()

    @staticmethod
    def one():
        return SymFunc({Partition(()): ONE})

    def is_zero(self):
        return not self.terms

    def coefficient(self, lam):
        return self.terms.get(Partition(lam), ZERO)

    def support(self):
        return sorted(self.terms, key=Partition.sort_key)

    def degree(self):
        """Largest degree with a nonzero term (None for the zero function)."""
        return max((l.size() for l in self.terms), default=None)

    def homogeneous_component(self, d):
        return SymFunc({l: c for l, c in self.terms.items() if l.size() == d})

    def components(self):
        """Nonzero homogeneous components, as {degree: SymFunc}."""
        out = {}
        for l, c in self.terms.items():
            out.setdefault(l.size(), {})[l] = c
        return {d: SymFunc(t) for d, t in sorted(out.items())}

    def __add__(self, other):
        out = dict(self.terms)
        for l, c in other.terms.items():
            w = out.get(l, ZERO) + c
            if w:
                out[l] = w
            else:
                out.pop(l, None)
        res = SymFunc.__new__(SymFunc)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return SymFunc.zero()
        res = SymFunc.__new__(SymFunc)
        res.terms = {l: c * v for l, v in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "SymFunc(0)"
        bits = []
        for l in self.support():
            c = self.terms[l]
            bits.append(f"{c}*s[{format_partition(l)}]")
        return "SymFunc(" + " + ".join(bits) + ")"


def schur(lam):
    return SymFunc({Partition(lam): ONE})


def _as_partition_arg(mu):
    if isinstance(mu, int):
        return Partition((mu,)) if mu > 0 else Partition(())
    return Partition(mu)


def complete(mu):
    """h_mu = prod of complete homogeneous h_{mu_i}."""
    mu = _as_partition_arg(mu)
    out = SymFunc.one()
    for k in mu.parts:
        out = _mult_h(k, out)
    return out


def elementary(mu):
    """e_mu = prod of elementary e_{mu_i}."""
    mu = _as_partition_arg(mu)
    out = SymFunc.one()
    for k in mu.parts:
        out = _mult_e(k, out)
    return out


def powersum(mu):
    """p_mu = prod of power sums p_{mu_i}."""
    mu = _as_partition_arg(mu)
    out = SymFunc.one()
    for k in mu.parts:
        out = multiply(_power_sum_schur(k), out)
    return out


def monomial(mu):
    """The monomial symmetric function m_mu."""
    mu = _as_partition_arg(mu)
    return SymFunc(dict(_m_to_schur(mu)))


def inner(f, g):
    """Hall inner product (Schur functions orthonormal)."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    return sum((c * g.terms.get(l, ZERO) for l, c in f.terms.items()), ZERO)


def omega(f):
    """The degree-preserving involution transposing every partition."""
    return SymFunc({l.conjugate(): c for l, c in f.terms.items()})


# -- Pieri kernels (cached at the partition level) ----------------------------


@lru_cache(maxsize=None)
def _pieri_h(k, lam):
    return tuple(horizontal_strips(lam, k))


@lru_cache(maxsize=None)
def _pieri_e(k, lam):
    return tuple(vertical_strips(lam, k))


@lru_cache(maxsize=None)
def _copieri_h(k, lam):
    return tuple(horizontal_strips_below(lam, k))


@lru_cache(maxsize=None)
def _copieri_e(k, lam):
    return tuple(vertical_strips_below(lam, k))


def _mult_h(k, f):
    if k == 0:
        return f
    out = {}
    for lam, c in f.terms.items():
        for mu in _pieri_h(k, lam):
            out[mu] = out.get(mu, ZERO) + c
    return SymFunc(out)


def _mult_e(k, f):
    if k == 0:
        return f
    out = {}
    for lam, c in f.terms.items():
        for mu in _pieri_e(k, lam):
            out[mu] = out.get(mu, ZERO) + c
    return SymFunc(out)


def _skew_h(k, f):
    """h_k^⊥ f: the pairing ⟨f, h_k s_ν⟩ evaluated by the transposed Pieri incidence."""
    if k == 0:
        return f
    out = {}
    for lam, c in f.terms.items():
        for mu in _copieri_h(k, lam):
            out[mu] = out.get(mu, ZERO) + c
    return SymFunc(out)


def _skew_e(k, f):
    if k == 0:
        return f
    out = {}
    for lam, c in f.terms.items():
        for mu in _copieri_e(k, lam):
            out[mu] = out.get(mu, ZERO) + c
    return SymFunc(out)


# -- basis conversions ---------------------------------------------------------


@lru_cache(maxsize=None)
def _h_to_schur(mu):
    """h_mu in the Schur basis (the Kostka numbers K_{lam,mu}), by iterated Pieri."""
    f = SymFunc.one()
    for k in mu.parts:
        f = _mult_h(k, f)
    return tuple(sorted(f.terms.items(), key=lambda t: t[0].sort_key()))


def kostka(lam, mu):
    """K_{lam,mu} = coefficient of s_lam in h_mu."""
    lam, mu = Partition(lam), Partition(mu)
    for l, c in _h_to_schur(mu):
        if l == lam:
            return int(c)
    return 0


@lru_cache(maxsize=None)
def _schur_to_h(lam):
    """s_lam in the h basis, by back-substitution along the canonical order
    (which refines dominance, the triangularity direction of Kostka)."""
    n = lam.size()
    coeffs = {lam: ONE}
    for l, c in _h_to_schur(lam):
        if l != lam:
            # h_lam = s_lam + sum_{l > lam in dominance} K_{l,lam} s_l
            for mu, d in _schur_to_h(l):
                w = coeffs.get(mu, ZERO) - c * d
                if w:
                    coeffs[mu] = w
                else:
                    coeffs.pop(mu, None)
    assert all(m.size() == n for m in coeffs)
    return tuple(sorted(coeffs.items(), key=lambda t: t[0].sort_key()))


@lru_cache(maxsize=None)
def _power_sum_schur(k):
    """p_k in the Schur basis: alternating hooks s_{(k-j, 1^j)}."""
    if k == 0:
        return SymFunc.one()
    out = {}
    for j in range(k):
        out[Partition((k - j,) + (1,) * j)] = ONE if j % 2 == 0 else -ONE
    return SymFunc(out)


@lru_cache(maxsize=None)
def _p_to_schur(mu):
    f = SymFunc.one()
    for k in mu.parts:
        f = multiply(f, _power_sum_schur(k))
    return tuple(sorted(f.terms.items(), key=lambda t: t[0].sort_key()))


def character(lam, mu):
    """The symmetric-group character value chi^lam(mu) = <s_lam, p_mu>."""
    lam, mu = Partition(lam), Partition(mu)
    assert lam.size() == mu.size()
    for l, c in _p_to_schur(mu):
        if l == lam:
            assert c.denominator == 1
            return int(c)
    return 0


@lru_cache(maxsize=None)
def _m_to_schur(mu):
    """m_mu in the Schur basis: invert s_lam = sum_mu K_{lam,mu} m_mu, ascending."""
    # from s_mu = m_mu + sum_{nu strictly dominated by mu} K_{mu,nu} m_nu
    out = {mu: ONE}
    for nu in enumerate_partitions(mu.size()):
        if nu == mu:
            continue
        k = kostka(mu, nu)
        if k and nu.sort_key() > mu.sort_key():
            for l, c in _m_to_schur(nu):
                w = out.get(l, ZERO) - k * c
                if w:
                    out[l] = w
                else:
                    out.pop(l, None)
    return tuple(sorted(out.items(), key=lambda t: t[0].sort_key()))


def to_basis(f, basis):
    """Coefficients of f in the named basis, as {Partition: Fraction}."""
    basis = _basis_name(basis)
    if basis == "schur":
        return dict(f.terms)
    out = {}
    if basis == "complete":
        for lam, c in f.terms.items():
            for mu, d in _schur_to_h(lam):
                _acc(out, mu, c * d)
    elif basis == "elementary":
        # omega twist: s_lam = sum c_mu h_mu  =>  s_{lam'} = sum c_mu e_mu
        for lam, c in f.terms.items():
            for mu, d in _schur_to_h(lam.conjugate()):
                _acc(out, mu, c * d)
    elif basis == "powersum":
        degrees = {l.size() for l in f.terms}
        for n in degrees:
            comp = f.homogeneous_component(n)
            for mu in enumerate_partitions(n):
                z = centralizer_order(mu)
                val = sum(
                    (c * character(lam, mu) for lam, c in comp.terms.items()),
                    ZERO,
                )
                _acc(out, mu, val / z)
    elif basis == "monomial":
        for lam, c in f.terms.items():
            for mu in enumerate_partitions(lam.size()):
                k = kostka(lam, mu)
                if k:
                    _acc(out, mu, c * k)
    return {m: v for m, v in out.items() if v}


def from_basis(basis, coeffs):
    """Build a SymFunc from coefficients in the named basis."""
    basis = _basis_name(basis)
    out = SymFunc.zero()
    for mu, c in coeffs.items():
        mu = Partition(mu)
        c = Fraction(c)
        if not c:
            continue
        if basis == "schur":
            out = out + SymFunc({mu: c})
        elif basis == "complete":
            out = out + complete(mu).scale(c)
        elif basis == "elementary":
            out = out + elementary(mu).scale(c)
        elif basis == "powersum":
            out = out + powersum(mu).scale(c)
        elif basis == "monomial":
            out = out + monomial(mu).scale(c)
    return out


def _acc(d, k, v):
    w = d.get(k, ZERO) + v
    if w:
        d[k] = w
    else:
        d.pop(k, None)


# -- products and skews --------------------------------------------------------


def _check_cap(degree, cap):
    if cap is not None and degree is not None and degree > cap:
        raise DegreeCapExceeded(f"result degree {degree} exceeds cap {cap}")


def multiply(f, g, degree_cap=None):
    """Product f*g: expand g into the h basis, then iterated Pieri on f."""
    if f.is_zero() or g.is_zero():
        return SymFunc.zero()
    _check_cap(f.degree() + g.degree(), degree_cap)
    out = SymFunc.zero()
    for lam, c in g.terms.items():
        for mu, d in _schur_to_h(lam):
            piece = f.scale(c * d)
            for k in mu.parts:
                piece = _mult_h(k, piece)
            out = out + piece
    return out


def skew(g, f):
    """g^⊥ f, defined by ⟨g^⊥f, s_ν⟩ = ⟨f, g·s_ν⟩ for every partition ν."""
    if f.is_zero() or g.is_zero():
        return SymFunc.zero()
    out = {}
    for dg, gcomp in g.components().items():
        for df, fcomp in f.components().items():
            target = df - dg
            if target < 0:
                continue
            # candidate ν must sit inside some λ in the support of f
            cands = set()
            for lam in fcomp.terms:
                cands.update(_subdiagrams_with_size(lam, target))
            for nu in cands:
                val = inner(fcomp, multiply(gcomp, schur(nu)))
                if val:
                    _acc(out, nu, val)
    return SymFunc(out)


# -- Heisenberg-type operators ---------------------------------------------------


def heis_p(n, f, degree_cap=None):
    """Row-symmetric raising operator: multiplication by h_n."""
    assert n >= 0
    _check_cap(None if f.is_zero() else f.degree() + n, degree_cap)
    return _mult_h(n, f)


def heis_q(n, f):
    """Row-symmetric lowering operator: h_n^⊥."""
    assert n >= 0
    return _skew_h(n, f)


def heis_p_col(n, f, degree_cap=None):
    """Column (antisymmetric) raising operator: multiplication by e_n."""
    assert n >= 0
    _check_cap(None if f.is_zero() else f.degree() + n, degree_cap)
    return _mult_e(n, f)


def heis_q_col(n, f):
    """Column lowering operator: e_n^⊥."""
    assert n >= 0
    return _skew_e(n, f)


def heis_alpha(k, f, degree_cap=None):
    """Oscillator operators: k<0 acts by |k|·p_{|k|}·(−), k>0 by p_k^⊥."""
    assert k != 0
    if k < 0:
        n = -k
        _check_cap(None if f.is_zero() else f.degree() + n, degree_cap)
        return multiply(f, _power_sum_schur(n)).scale(n)
    return skew(_power_sum_schur(k), f)


def gamma_half(sign, k, f, inverse=False, degree_cap=None):
    """Coefficient of z^k of a half vertex operator.

    sign "-" raises degree: h_k·f, or (−1)^k e_k·f for the inverse half.
    sign "+" lowers degree: h_k^⊥f, or (−1)^k e_k^⊥f for the inverse half.
    """
    assert sign in ("+", "-")
    assert k >= 0
    if sign == "-":
        _check_cap(None if f.is_zero() else f.degree() + k, degree_cap)
        if inverse:
            return _mult_e(k, f).scale((-1) ** k)
        return _mult_h(k, f)
    if inverse:
        return _skew_e(k, f).scale((-1) ** k)
    return _skew_h(k, f)


# -- Bernstein operators ---------------------------------------------------------


def bernstein(a, f, degree_cap=None):
    """The Schur-function creation operator:
    B_a f = Σ_{m ≥ max(0,−a)} (−1)^m h_{a+m} · (e_m^⊥ f)."""
    if f.is_zero():
        return SymFunc.zero()
    _check_cap(f.degree() + a if f.degree() + a >= 0 else None, degree_cap)
    max_m = max((len(l.parts) for l in f.terms), default=0)
    out = SymFunc.zero()
    for m in range(max(0, -a), max_m + 1):
        sk = _skew_e(m, f)
        if sk.is_zero():
            continue
        term = _mult_h(a + m, sk)
        out = out + (term if m % 2 == 0 else -term)
    return out


def bernstein_star(a, f, degree_cap=None):
    """The adjoint (annihilation) operator:
    B*_a f = Σ_{n ≥ max(0,−a)} (−1)^n e_n · (h_{n+a}^⊥ f)."""
    if f.is_zero():
        return SymFunc.zero()
    max_row = max((l.row(1) for l in f.terms), default=0)
    out = SymFunc.zero()
    for n in range(max(0, -a), max_row - a + 1):
        sk = _skew_h(n + a, f)
        if sk.is_zero():
            continue
        term = _mult_e(n, sk)
        out = out + (term if n % 2 == 0 else -term)
    return out


# -- serialization ----------------------------------------------------------------


def to_json_records(f, basis="schur"):
    """JSON-ready list of {basis, partition, numerator, denominator} records,
    in canonical partition order."""
    basis = _basis_name(basis)
    coeffs = to_basis(f, basis)
    records = []
    for lam in sorted(coeffs, key=Partition.sort_key):
        c = coeffs[lam]
        records.append(
            {
                "basis": basis,
                "partition": format_partition(lam),
                "numerator": c.numerator,
                "denominator": c.denominator,
            }
        )
    return records


def from_json_records(records):
    total = SymFunc.zero()
    by_basis = {}
    for rec in records:
        b = _basis_name(rec["basis"])
        lam = parse_partition(rec["partition"])
        c = Fraction(rec["numerator"], rec["denominator"])
        by_basis.setdefault(b, {})
        by_basis[b][lam] = by_basis[b].get(lam, ZERO) + c
    for b, coeffs in by_basis.items():
        total = total + from_basis(b, coeffs)
    return total


def warm_up(max_degree):
    """Single-writer warm-up of the partition-level memo tables, so that
    subsequent concurrent reads never write."""
    for n in range(max_degree + 1):
        for lam in enumerate_partitions(n):
            _h_to_schur(lam)
            _schur_to_h(lam)
            _p_to_schur(lam)
            _m_to_schur(lam)
            for k in range(0, max_degree - n + 1):
                _pieri_h(k, lam)
                _pieri_e(k, lam)
            for k in range(0, n + 1):
                _copieri_h(k, lam)
                _copieri_e(k, lam)
