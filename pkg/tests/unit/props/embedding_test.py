# ruff: noqa: N802
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import subgroups_of

from embedcheck.corpus import alternating, parse_group, symmetric
from embedcheck.lattice import maximal_g_invariant_in, normal_closure, normal_subgroups, quotient_group
from embedcheck.perm import Group, Perm, conjugate_subgroup, join, normalizer_index, subgroup, trivial_subgroup
from embedcheck.props import (
    PropertyVerdict,
    Witness,
    check_property,
    explain,
    pi_number,
    satisfies_l_pi,
    satisfies_pi,
)
from embedcheck.structure import PrimeSet


SL2_3 = """
name: SL2_3
degree: 8
gen: (3,4,5)(6,8,7)
gen: (1,3,2,6)(4,5,8,7)
"""

S4 = symmetric(4)
S4_SUBGROUPS = subgroups_of(S4)


def cyc(degree: int, *cycles: tuple[int, ...]) -> Perm:
    return Perm.from_cycles(degree, cycles)


def lpi_through_quotients(g: Group, h: Group) -> bool:
    """The ``ℒ-Π`` condition evaluated in the quotient groups ``G/K`` themselves."""
    for k in maximal_g_invariant_in(g, normal_closure(g, h)):
        target, f = quotient_group(g, k)
        image = f.image(join(h, k))
        if not pi_number(normalizer_index(target, image), PrimeSet.of(image.order)):
            return False
    return True


class PiNumberTest(TestCase):
    def test_pi_numbers(self):
        self.assertTrue(pi_number(1, PrimeSet(())))
        self.assertTrue(pi_number(12, PrimeSet((2, 3))))
        self.assertFalse(pi_number(12, PrimeSet((2,))))
        self.assertTrue(pi_number(8, PrimeSet((2, 5))))
        self.assertFalse(pi_number(5, PrimeSet(())))


class LPiTest(TestCase):
    def test_every_order_4_subgroup_of_S4(self):
        fours = subgroups_of(S4, 4)
        self.assertEqual(len(fours), 7)
        for h in fours:
            self.assertTrue(satisfies_l_pi(S4, h).holds, str(h))

    def test_cyclic_of_order_4(self):
        verdict = satisfies_l_pi(S4, subgroup(S4, [cyc(4, (1, 2, 3, 4))]))
        self.assertTrue(verdict)
        self.assertEqual(verdict.checked, 1)
        self.assertEqual(explain(verdict), "PASS (1 conditions checked)")

    def test_double_transposition_fails(self):
        verdict = satisfies_l_pi(S4, subgroup(S4, [cyc(4, (1, 2), (3, 4))]))
        self.assertFalse(verdict)
        (witness,) = verdict.witnesses
        self.assertTrue(witness.lower.is_trivial())
        self.assertIsNone(witness.upper)
        self.assertEqual(witness.index, 3)
        self.assertEqual(witness.offending_prime, 3)
        self.assertEqual(witness.pi_set, PrimeSet((2,)))

    def test_trivial_subgroup_is_vacuous(self):
        verdict = satisfies_l_pi(S4, trivial_subgroup(S4))
        self.assertTrue(verdict)
        self.assertEqual(verdict.checked, 0)
        self.assertEqual(explain(verdict), "PASS (vacuous)")

    def test_normal_subgroups_satisfy_it(self):
        for g in (S4, parse_group(SL2_3), alternating(5)):
            for n in normal_subgroups(g).nodes:
                self.assertTrue(satisfies_l_pi(g, n))

    def test_matches_the_quotient_computation(self):
        sl = parse_group(SL2_3)
        for g, subgroups in ((S4, S4_SUBGROUPS), (sl, subgroups_of(sl))):
            for h in subgroups:
                self.assertEqual(satisfies_l_pi(g, h).holds, lpi_through_quotients(g, h), str(h))

    def test_rejects_foreign_subgroups(self):
        with self.assertRaises(ValueError):
            satisfies_l_pi(alternating(4), Group(4, (cyc(4, (1, 2)),)))

    @settings(max_examples=40)
    @given(st.sampled_from(S4_SUBGROUPS), st.sampled_from(S4.elements))
    def test_conjugation_invariance(self, h: Group, x: Perm):
        conjugate = conjugate_subgroup(h, x)
        self.assertEqual(satisfies_l_pi(S4, h).holds, satisfies_l_pi(S4, conjugate).holds)
        self.assertEqual(satisfies_pi(S4, h).holds, satisfies_pi(S4, conjugate).holds)


class PiTest(TestCase):
    def test_cyclic_of_order_4_fails(self):
        verdict = satisfies_pi(S4, subgroup(S4, [cyc(4, (1, 2, 3, 4))]))
        self.assertFalse(verdict)
        self.assertEqual(verdict.checked, 3)
        (witness,) = verdict.witnesses
        assert witness.upper is not None
        self.assertEqual(witness.lower.order, 1)
        self.assertEqual(witness.upper.order, 4)
        self.assertEqual(witness.subject.order, 2)
        self.assertEqual(witness.index, 3)
        self.assertEqual(witness.offending_prime, 3)
        text = explain(verdict)
        self.assertTrue(text.startswith("FAIL (1 of 3 conditions failed)"))
        self.assertIn("offending prime 3", text)
        self.assertIn("|K| = 1, |L| = 4", text)

    def test_trivial_and_normal_subgroups(self):
        self.assertEqual(explain(satisfies_pi(S4, trivial_subgroup(S4))), "PASS (3 conditions checked)")
        v4 = normal_subgroups(S4).nodes[1]
        self.assertTrue(satisfies_pi(S4, v4))
        self.assertTrue(satisfies_l_pi(S4, v4))

    def test_pi_implies_lpi(self):
        for h in S4_SUBGROUPS:
            if satisfies_pi(S4, h):
                self.assertTrue(satisfies_l_pi(S4, h), str(h))

    def test_rejects_foreign_subgroups(self):
        with self.assertRaises(ValueError):
            satisfies_pi(alternating(4), Group(4, (cyc(4, (1, 2)),)))

    def test_check_property_dispatch(self):
        h = subgroup(S4, [cyc(4, (1, 2, 3, 4))])
        self.assertEqual(check_property(S4, h, "lpi").name, "lpi")
        self.assertTrue(check_property(S4, h, "lpi"))
        self.assertEqual(check_property(S4, h, "pi").name, "pi")
        self.assertFalse(check_property(S4, h, "pi"))


class VerdictTest(TestCase):
    def test_witness_validation(self):
        s4 = S4
        one = trivial_subgroup(s4)
        h = subgroup(s4, [cyc(4, (1, 2), (3, 4))])
        Witness(one, h, None, 3, PrimeSet((2,)), 3)
        with self.assertRaises(ValueError):
            Witness(one, h, None, 3, PrimeSet((2,)), 2)
        with self.assertRaises(ValueError):
            Witness(one, h, None, 6, PrimeSet((2,)), 2)

    def test_verdict_validation(self):
        one = trivial_subgroup(S4)
        h = subgroup(S4, [cyc(4, (1, 2), (3, 4))])
        witness = Witness(one, h, None, 3, PrimeSet((2,)), 3)
        with self.assertRaises(ValueError):
            PropertyVerdict("lpi", (witness,), 0)
        self.assertFalse(PropertyVerdict("lpi", (witness,), 1).holds)
        self.assertTrue(PropertyVerdict("pi").holds)
