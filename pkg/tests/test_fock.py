from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bosonfermion.fock import (
    BosonState,
    FermionBasisVector,
    FermionState,
    alpha_window_sum,
    boson_psi,
    boson_psi_star,
    boson_state_from_json,
    boson_state_to_json,
    charge_of,
    clifford_relation_report,
    fermion_state_from_json,
    fermion_state_to_json,
    principal_degree,
    psi,
    psi_star,
    sigma_inv,
    sigma_iso,
    vacuum,
    verify_correspondence,
)
from bosonfermion.partition_core import Partition, partitions_up_to
from bosonfermion.symfunc import SymFunc, multiply, powersum, schur


def basis(c, parts):
    return FermionBasisVector(c, parts)


small_partitions = st.sampled_from(partitions_up_to(4))
small_charges = st.integers(min_value=-2, max_value=2)


class TestModesOnVacuum:
    def test_create_just_above_vacuum(self):
        for c in range(-3, 4):
            assert psi(c + 1, vacuum(c)) == FermionState.of(vacuum(c + 1))

    def test_create_on_occupied_slot_vanishes(self):
        for c in range(-2, 3):
            for j in range(c - 3, c + 1):
                assert psi(j, vacuum(c)).is_zero()

    def test_annihilate_absent_slot_vanishes(self):
        for c in range(-2, 3):
            for j in range(c + 1, c + 4):
                assert psi_star(j, vacuum(c)).is_zero()

    def test_annihilate_top_of_vacuum(self):
        for c in range(-3, 4):
            assert psi_star(c, vacuum(c)) == FermionState.of(vacuum(c - 1))

    def test_deep_annihilation_sign_alternates(self):
        # removing the s-th occupied slot of the vacuum carries sign (-1)^{s+1}
        for s in range(1, 5):
            got = psi_star(0 - s + 1, vacuum(0))
            assert len(got.terms) == 1
            ((vec, coeff),) = got.terms.items()
            assert coeff == Fraction((-1) ** (s + 1))
            assert vec.charge == -1
            # the gap left at depth s shows up as a width-(s-1) column
            assert vec.shape == Partition([1] * (s - 1))

    def test_create_above_everything(self):
        # inserting k slots above the top of the charge-0 vacuum makes a row
        got = psi(3, vacuum(0))
        assert got == FermionState.of(basis(1, [2]))


class TestCliffordRelations:
    def test_relation_battery(self):
        rep = clifford_relation_report(3, (-1, 1), (-3, 3))
        assert rep.passed, rep.render_text()

    @given(small_charges, small_partitions,
           st.integers(-3, 3), st.integers(-3, 3))
    @settings(max_examples=60, deadline=None)
    def test_mixed_anticommutator(self, c, lam, i, j):
        state = FermionState.of(basis(c, lam))
        acc = psi(i, psi_star(j, state)) + psi_star(j, psi(i, state))
        expect = state if i == j else FermionState.zero()
        assert acc == expect

    @given(small_charges, small_partitions, st.integers(-3, 3))
    @settings(max_examples=40, deadline=None)
    def test_square_zero(self, c, lam, i):
        state = FermionState.of(basis(c, lam))
        assert psi(i, psi(i, state)).is_zero()
        assert psi_star(i, psi_star(i, state)).is_zero()


class TestChargeAndDegree:
    @given(small_charges, small_partitions, st.integers(-3, 3))
    @settings(max_examples=40, deadline=None)
    def test_modes_shift_charge_by_one(self, c, lam, i):
        vec = basis(c, lam)
        for new_vec in psi(i, vec).terms:
            assert charge_of(new_vec) == c + 1
        for new_vec in psi_star(i, vec).terms:
            assert charge_of(new_vec) == c - 1

    def test_principal_degree(self):
        assert principal_degree(vacuum(5)) == 0
        assert principal_degree(basis(-2, [3, 1])) == 4


class TestSigma:
    def test_vacuum_goes_to_unit(self):
        assert sigma_iso(vacuum(2)) == BosonState.of(2, SymFunc.one())

    def test_basis_vector_goes_to_schur(self):
        vec = basis(-1, [2, 1])
        assert sigma_iso(vec) == BosonState.of(-1, schur([2, 1]))

    @given(st.lists(
        st.tuples(small_charges, small_partitions,
                  st.fractions(min_value=-3, max_value=3)),
        min_size=0, max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, spec_list):
        state = FermionState.zero()
        for c, lam, coeff in spec_list:
            state = state + FermionState.of(basis(c, lam), coeff)
        assert sigma_inv(sigma_iso(state)) == state

    def test_boson_creation_examples(self):
        one = BosonState.of(0, SymFunc.one())
        # psi(1) on the charge-0 vacuum: index matches the new top slot
        assert boson_psi(1, one) == BosonState.of(1, SymFunc.one())
        # psi(2) adds one unit of energy
        assert boson_psi(2, one) == BosonState.of(1, schur([1]))
        assert boson_psi_star(0, one) == BosonState.of(-1, SymFunc.one())
        # index 0 is vacant on the single-box vector, so annihilation vanishes
        assert boson_psi_star(0, BosonState.of(0, schur([1]))).is_zero()
        # index 1 is its top occupied slot
        assert boson_psi_star(1, BosonState.of(0, schur([1]))) == BosonState.of(
            -1, SymFunc.one())


class TestCorrespondence:
    def test_window_passes(self):
        rep = verify_correspondence(3, (-2, 2), (-3, 3))
        assert rep.passed, rep.render_text()

    def test_empty_window_passes(self):
        rep = verify_correspondence(2, (1, 0), (-2, 2))
        assert rep.passed
        rep = verify_correspondence(2, (-1, 1), (2, -2))
        assert rep.passed

    def test_sign_mutation_is_detected(self):
        rep = verify_correspondence(2, (-1, 1), (-2, 2), inject_sign_flip=True)
        assert not rep.passed
        assert rep.failures()


class TestOscillatorMode:
    @given(small_charges, small_partitions)
    @settings(max_examples=30, deadline=None)
    def test_window_sum_matches_first_power_sum(self, c, lam):
        vec = basis(c, lam)
        got = sigma_iso(alpha_window_sum(vec))
        want = BosonState.of(c, multiply(powersum([1]), schur(lam)))
        assert got == want


class TestSerialization:
    def test_fermion_round_trip(self):
        state = (FermionState.of(basis(0, [2, 1]), Fraction(3, 2))
                 + FermionState.of(basis(-1, []), Fraction(-1)))
        recs = fermion_state_to_json(state)
        assert recs == [
            {"charge": -1, "partition": "0", "coefficient": "-1"},
            {"charge": 0, "partition": "2,1", "coefficient": "3/2"},
        ]
        assert fermion_state_from_json(recs) == state

    def test_boson_round_trip(self):
        state = (BosonState.of(1, schur([3]).scale(Fraction(1, 3)))
                 + BosonState.of(-2, schur([1, 1]) + schur([2])))
        recs = boson_state_to_json(state)
        assert boson_state_from_json(recs) == state
        charges = [r["charge"] for r in recs]
        assert charges == sorted(charges)
