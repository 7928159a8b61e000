from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bosonfermion.catbernstein import (
    ChargedComplexVector,
    annihilation_word,
    apply_bernstein,
    apply_sigma,
    bernstein_complex,
    bernstein_star_complex,
    compose_bernstein,
    creation_word,
    decategorify,
    fermionic_apply,
    fermionic_relation_check,
    fermionic_star_apply,
    relation_suite_bb,
    relation_suite_bbstar,
    restricted_complex,
    sigma_cell_dims,
    sigma_character,
    sigma_complex,
    sigma_idempotence_check,
    sigma_vanishing_check,
    specht_annihilation_check,
    specht_creation_check,
    vacuum_vector,
    word_character,
)
from bosonfermion.fock import BosonState, boson_psi, boson_psi_star
from bosonfermion.homalg import single_module_complex
from bosonfermion.partition_core import enumerate_partitions, syt_count
from bosonfermion.symfunc import SymFunc, bernstein, bernstein_star, schur
from bosonfermion.symrep import (
    frobenius_char,
    induce,
    regular_module,
    specht_module,
    trivial_module,
)


@pytest.fixture(scope="module")
def pool():
    return {
        "triv0": trivial_module(0),
        "S1": trivial_module(1),
        "S2": specht_module([2]),
        "S21": specht_module([2, 1]),
        "reg2": regular_module(2),
    }


class TestCreationComplexes:
    def test_charge_two_on_row_pair(self, pool):
        cx = bernstein_complex(2, pool["S2"])
        assert cx.group_degree == 4
        assert cx.dims() == {0: 6, 1: 4}
        assert cx.betti() == {0: 2}
        assert cx.euler_frobenius() == schur((2, 2))

    def test_charge_zero_on_one_letter_is_acyclic(self, pool):
        cx = bernstein_complex(0, pool["S1"])
        assert cx.dims() == {0: 1, 1: 1}
        assert cx.betti() == {}

    def test_charge_zero_on_regular_has_sign_class(self, pool):
        cx = bernstein_complex(0, pool["reg2"])
        assert cx.dims() == {0: 2, 1: 4, 2: 1}
        assert cx.betti() == {1: 1}
        assert cx.euler_frobenius() == schur((1, 1)).scale(-1)

    def test_charge_one_on_regular_three_columns(self, pool):
        cx = bernstein_complex(1, pool["reg2"])
        assert cx.dims() == {0: 6, 1: 6, 2: 1}
        assert cx.betti() == {0: 1}
        assert (cx.d(1) @ cx.d(2)).is_zero()

    def test_out_of_range_charge_gives_zero_complex(self, pool):
        cx = bernstein_complex(-1, pool["triv0"])
        assert cx.dims() == {}
        assert cx.betti() == {}

    def test_differentials_are_equivariant(self, pool):
        bernstein_complex(1, pool["S2"]).validate()

    @settings(max_examples=6, deadline=None)
    @given(a=st.integers(min_value=-1, max_value=3))
    def test_euler_matches_operator_shadow(self, a):
        m = specht_module([2])
        cx = bernstein_complex(a, m, check=False)
        assert cx.euler_frobenius() == bernstein(a, frobenius_char(m))


class TestAnnihilationComplexes:
    def test_charge_zero_on_one_letter_is_acyclic(self, pool):
        cx = bernstein_star_complex(0, pool["S1"])
        assert cx.dims() == {-1: 1, 0: 1}
        assert cx.betti() == {}

    def test_charge_one_on_one_letter_is_vacuum(self, pool):
        cx = bernstein_star_complex(1, pool["S1"])
        assert cx.dims() == {0: 1}
        assert cx.betti() == {0: 1}

    def test_charge_two_on_hook_peels_a_row(self, pool):
        cx = bernstein_star_complex(2, pool["S21"])
        assert cx.betti() == {0: 1}
        assert frobenius_char(cx.homology_module(0)) == schur((1,))

    @settings(max_examples=6, deadline=None)
    @given(a=st.integers(min_value=0, max_value=3))
    def test_euler_matches_operator_shadow(self, a):
        m = specht_module([2, 1])
        cx = bernstein_star_complex(a, m, check=False)
        assert cx.euler_frobenius() == bernstein_star(a, frobenius_char(m))


class TestSigmaComplexes:
    def test_binomial_dimension_ladders(self, pool):
        assert sigma_complex(-1, pool["triv0"]).dims() == {0: 1}
        assert sigma_complex(-1, pool["S1"]).dims() == {0: 1, 1: 1}
        assert sigma_complex(-1, pool["S2"]).dims() == {0: 1, 1: 2, 2: 1}
        assert sigma_complex(-1, pool["reg2"]).dims() == {0: 2, 1: 4, 2: 2}
        assert sigma_complex(-1, trivial_module(3)).dims() == \
            {0: 1, 1: 3, 2: 3, 3: 1}
        assert sigma_complex(-1, pool["S21"]).dims() == {0: 2, 1: 6, 2: 6, 3: 2}

    def test_acyclic_in_positive_degree(self, pool):
        assert sigma_complex(-1, pool["triv0"]).betti() == {0: 1}
        for key in ("S1", "S2", "reg2", "S21"):
            assert sigma_complex(-1, pool[key]).betti() == {}

    def test_mirror_lives_in_nonpositive_degrees(self, pool):
        plus = sigma_complex(1, pool["S2"])
        assert plus.dims() == {-2: 1, -1: 2, 0: 1}
        assert plus.betti() == {}

    def test_chain_groups_split_by_partition_cells(self, pool):
        m = pool["S21"]
        cells = sigma_cell_dims(m)
        assert cells == {0: {"0": 2}, 1: {"1": 6},
                         2: {"2": 3, "1,1": 3}, 3: {"2,1": 2}}
        cx = sigma_complex(-1, m)
        for k in range(m.degree + 1):
            assert cx.dim(k) == sum(cells.get(k, {}).values())

    def test_euler_matches_projector_shadow(self, pool):
        for key in ("S1", "S2", "S21"):
            m = pool[key]
            cx = sigma_complex(-1, m)
            assert cx.euler_frobenius() == \
                sigma_character(frobenius_char(m), m.degree)

    def test_differentials_are_equivariant(self, pool):
        sigma_complex(-1, pool["S2"]).validate()

    def test_vanishes_on_induced_modules(self, pool):
        ind = sigma_complex(-1, induce(pool["S1"]))
        assert ind.betti() == {}
        assert restricted_complex(ind).betti() == {}


class TestComposites:
    def test_single_column_five(self, pool):
        cx = compose_bernstein(creation_word((1, 1, 1, 1, 1)), pool["triv0"])
        assert cx.dims() == {0: 5, 1: 10, 2: 10, 3: 5, 4: 1}
        assert cx.betti() == {0: 1}
        assert frobenius_char(cx.homology_module(0)) == schur((1, 1, 1, 1, 1))

    def test_hook_creation(self, pool):
        cx = compose_bernstein(creation_word((2, 1)), pool["triv0"])
        assert cx.betti() == {0: 2}
        assert cx.betti()[0] == syt_count((2, 1))
        assert frobenius_char(cx.homology_module(0)) == schur((2, 1))

    def test_reduction_does_not_change_homology(self, pool):
        word = creation_word((2, 1))
        fast = compose_bernstein(word, pool["triv0"])
        slow = compose_bernstein(word, pool["triv0"],
                                 reduce_intermediate=False)
        assert fast.betti() == slow.betti()
        assert fast.euler_frobenius() == slow.euler_frobenius()

    def test_hook_annihilation_reaches_vacuum(self, pool):
        cx = compose_bernstein(annihilation_word((2, 1)), pool["S21"])
        assert cx.betti() == {0: 1}
        assert frobenius_char(cx.homology_module(0)) == schur(())

    def test_word_character_composes_the_operators(self):
        f = schur((1,))
        word = [(2, False), (0, True), (1, False)]
        assert word_character(word, f) == \
            bernstein(2, bernstein_star(0, bernstein(1, f)))

    def test_apply_to_two_term_complex(self, pool):
        base = bernstein_complex(0, pool["S1"])
        out = apply_bernstein(1, base)
        assert out.euler_frobenius() == bernstein(1, base.euler_frobenius())
        assert out.betti() == {}

    @settings(max_examples=8, deadline=None)
    @given(lam=st.sampled_from([lam for k in range(1, 4)
                                for lam in enumerate_partitions(k)]))
    def test_creation_words_build_irreducibles(self, lam):
        cx = compose_bernstein(creation_word(lam), trivial_module(0))
        assert cx.betti() == {0: syt_count(lam)}
        assert cx.euler_frobenius() == schur(lam)


class TestPairRelations:
    def test_equal_charge_creation_pairs_are_acyclic(self, pool):
        c = compose_bernstein([(1, False), (1, False)], pool["triv0"])
        assert c.betti() == {0: 1}  # word (1,1) builds a column, not a pair
        for a in (0, 1, 2):
            word = [(a - 1, False), (a, False)]
            assert compose_bernstein(word, pool["S1"]).betti() == {}

    def test_creation_swap_shifts_by_one_degree(self, pool):
        c1 = compose_bernstein([(1, False), (1, False)], pool["triv0"])
        c2 = compose_bernstein([(0, False), (2, False)], pool["triv0"])
        assert c1.betti() == {0: 1} and c2.betti() == {1: 1}
        c3 = compose_bernstein([(-1, False), (1, False)], pool["triv0"])
        c4 = compose_bernstein([(0, False), (0, False)], pool["triv0"])
        assert c3.betti() == {1: 1} and c4.betti() == {0: 1}

    def test_bb_suite_instances(self, pool):
        for a, b, m in [(1, 1, pool["S1"]), (2, 1, pool["triv0"]),
                        (0, 1, pool["triv0"]), (0, 0, pool["S2"])]:
            rep = relation_suite_bb(a, b, m)
            assert rep.passed, rep.render_text()

    def test_bb_star_suite_instances(self, pool):
        for a, b, m in [(1, 1, pool["S1"]), (2, 1, pool["S1"]),
                        (0, 1, pool["S2"])]:
            rep = relation_suite_bb(a, b, m, star=True)
            assert rep.passed, rep.render_text()

    def test_mixed_suite_distinct_charges(self, pool):
        for a, b, m in [(1, 0, pool["S1"]), (0, 1, pool["S1"]),
                        (2, 0, pool["S2"])]:
            rep = relation_suite_bbstar(a, b, m)
            assert rep.passed, rep.render_text()

    def test_mixed_suite_triangle(self, pool):
        for a, m in [(0, pool["S1"]), (0, pool["S2"]), (1, pool["S2"])]:
            rep = relation_suite_bbstar(a, a, m)
            assert rep.passed, rep.render_text()


class TestVerificationReports:
    def test_specht_creation_report(self):
        rep = specht_creation_check((2, 1))
        assert rep.passed, rep.render_text()
        assert len(rep.checks) == 4

    def test_specht_annihilation_report(self):
        rep = specht_annihilation_check((2, 1))
        assert rep.passed, rep.render_text()

    def test_sigma_idempotence_report(self, pool):
        rep = sigma_idempotence_check(pool["S2"])
        assert rep.passed, rep.render_text()

    def test_sigma_vanishing_report(self, pool):
        rep = sigma_vanishing_check(pool["S1"])
        assert rep.passed, rep.render_text()

    def test_reports_are_deterministic(self):
        a = specht_creation_check((2,)).to_json()
        b = specht_creation_check((2,)).to_json()
        assert a == b


class TestChargedLayer:
    def test_vacuum_vector_shape(self):
        v = vacuum_vector()
        assert v.charges() == [0]
        assert v.betti() == {0: {0: 1}}

    def test_two_generators_raise_charge(self):
        v = fermionic_apply(2, fermionic_apply(1, vacuum_vector()))
        assert v.betti() == {2: {0: 1}}

    def test_star_lowers_charge_back(self):
        v = fermionic_apply(2, fermionic_apply(1, vacuum_vector()))
        down = fermionic_star_apply(2, v)
        assert down.betti() == {1: {0: 1}}

    def test_double_application_vanishes(self):
        v = vacuum_vector()
        assert fermionic_apply(1, fermionic_apply(1, v)).is_zero()
        w = fermionic_apply(3, fermionic_apply(1, v))
        assert fermionic_star_apply(2, fermionic_star_apply(2, w)).is_zero()

    def test_decategorified_shadow_matches_charged_operators(self):
        v = fermionic_apply(1, vacuum_vector())
        b = decategorify(v)
        assert b == boson_psi(1, BosonState({0: schur(())}))
        vs = fermionic_star_apply(1, v)
        assert decategorify(vs) == boson_psi_star(1, b)

    def test_relation_report(self):
        rep = fermionic_relation_check(2, vacuum_vector())
        assert rep.passed, rep.render_text()

    def test_unreduced_application_same_homology(self):
        v = vacuum_vector()
        fast = fermionic_apply(1, v)
        slow = fermionic_apply(1, v, reduce=False)
        assert fast.betti() == slow.betti()
