# ruff: noqa: N802
from unittest import TestCase

from oracles import corpus_groups

from embedcheck.corpus import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    parse_group,
    symmetric,
)
from embedcheck.lattice import normal_subgroups
from embedcheck.structure import (
    PrimeStructure,
    hypercenter,
    hypercenter_by_definition,
    is_p_soluble,
    is_p_supersoluble,
    is_p_supersoluble_over,
    o_p,
    o_p_prime,
    o_p_prime_p,
    offending_chief_factor,
    p_supersoluble_factor,
    prime_divisors,
    structure_report,
    supersoluble_factor,
    z_u,
    z_u_p,
)


SL2_3 = """
name: SL2_3
degree: 8
gen: (3,4,5)(6,8,7)
gen: (1,3,2,6)(4,5,8,7)
"""

GL2_3 = SL2_3 + "gen: (3,6)(4,7)(5,8)\n"


class RadicalsTest(TestCase):
    def test_radicals_of_S4(self):
        s4 = symmetric(4)
        v4 = normal_subgroups(s4).nodes[1]
        self.assertEqual(o_p(s4, 2), v4)
        self.assertTrue(o_p_prime(s4, 2).is_trivial())
        self.assertEqual(o_p_prime_p(s4, 2), v4)
        self.assertTrue(o_p(s4, 3).is_trivial())
        self.assertEqual(o_p_prime(s4, 3), v4)
        self.assertEqual(o_p_prime_p(s4, 3), alternating(4))

    def test_radicals_of_S3xC5(self):
        g = direct_product(symmetric(3), cyclic(5))
        self.assertEqual(o_p(g, 3).order, 3)
        self.assertEqual(o_p_prime(g, 2).order, 15)
        self.assertEqual(o_p_prime_p(g, 2).order, 30)
        self.assertEqual(o_p_prime_p(g, 5).order, 30)

    def test_non_prime(self):
        with self.assertRaises(ValueError):
            o_p(symmetric(4), 4)
        with self.assertRaises(ValueError):
            is_p_supersoluble(symmetric(4), 6)
        with self.assertRaises(ValueError):
            p_supersoluble_factor(1)


class SupersolubilityTest(TestCase):
    def test_S4(self):
        s4 = symmetric(4)
        self.assertFalse(is_p_supersoluble(s4, 2))
        self.assertTrue(is_p_supersoluble(s4, 3))
        self.assertTrue(is_p_soluble(s4, 2))
        factor = offending_chief_factor(s4, 2)
        self.assertIsNotNone(factor)
        assert factor is not None
        self.assertEqual(factor.factor_order, 4)
        self.assertIsNone(offending_chief_factor(s4, 3))

    def test_A4_and_A5(self):
        self.assertTrue(is_p_supersoluble(alternating(4), 3))
        self.assertFalse(is_p_supersoluble(alternating(4), 2))
        self.assertFalse(is_p_soluble(alternating(5), 2))
        self.assertFalse(is_p_supersoluble(alternating(5), 5))
        self.assertTrue(is_p_supersoluble(alternating(5), 7))

    def test_p_groups_and_p_prime_groups(self):
        self.assertTrue(is_p_supersoluble(generalized_quaternion(16), 2))
        self.assertTrue(is_p_supersoluble(dihedral(10), 3))

    def test_supersoluble_over(self):
        s4 = symmetric(4)
        lattice = normal_subgroups(s4)
        self.assertTrue(is_p_supersoluble_over(s4, lattice.nodes[1], 2))
        self.assertFalse(is_p_supersoluble_over(s4, lattice.nodes[0], 2))
        self.assertTrue(is_p_supersoluble_over(s4, s4, 2))


class HypercenterTest(TestCase):
    def test_landmarks(self):
        self.assertTrue(z_u(symmetric(4)).is_trivial())
        self.assertEqual(z_u_p(parse_group(SL2_3), 2).order, 2)
        self.assertEqual(z_u_p(symmetric(4), 3).order, 24)
        self.assertEqual(z_u(cyclic(6)).order, 6)
        self.assertEqual(z_u(dihedral(8)).order, 8)
        self.assertEqual(z_u(direct_product(symmetric(3), cyclic(5))).order, 30)
        self.assertEqual(z_u(alternating(4)).order, 1)

    def test_greedy_matches_definition_on_corpus(self):
        for name, g in corpus_groups(200):
            with self.subTest(group=name):
                self.assertEqual(z_u(g).element_set, hypercenter_by_definition(g, supersoluble_factor).element_set)
            for p in sorted({2, 3, *prime_divisors(g.order)}):
                with self.subTest(group=name, p=p):
                    central = p_supersoluble_factor(p)
                    greedy = hypercenter(g, central).element_set
                    self.assertEqual(greedy, hypercenter_by_definition(g, central).element_set)
                    self.assertEqual(z_u_p(g, p).element_set, greedy)

    def test_hypercenters_are_normal(self):
        g = parse_group(GL2_3)
        lattice = normal_subgroups(g)
        self.assertTrue(lattice.is_normal(z_u(g)))
        self.assertTrue(lattice.is_normal(z_u_p(g, 3)))


class StructureReportTest(TestCase):
    def test_S4(self):
        report = structure_report(symmetric(4), "S4")
        self.assertEqual(report.name, "S4")
        self.assertEqual(report.order, 24)
        self.assertEqual(report.chief_factor_orders, (4, 3, 2))
        two, three = report.primes
        self.assertEqual((two.p, two.sylow_order, two.o_p_order, two.o_p_prime_p_order), (2, 8, 4, 4))
        self.assertEqual((two.z_u_order, two.p_soluble, two.p_supersoluble), (1, True, False))
        self.assertEqual((three.p, three.o_p_prime_order, three.o_p_prime_p_order), (3, 4, 12))
        self.assertTrue(three.p_supersoluble)

    def test_validation(self):
        with self.assertRaises(ValueError):
            PrimeStructure(2, 8, 4, 1, 4, 1, 1, False, True)
        with self.assertRaises(ValueError):
            PrimeStructure(2, 8, 4, 3, 4, 1, 1, True, True)
        with self.assertRaises(ValueError):
            PrimeStructure(2, 8, 4, 1, 4, 2, 1, True, True)
