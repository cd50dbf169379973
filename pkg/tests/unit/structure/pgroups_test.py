# ruff: noqa: N802
from unittest import TestCase

from oracles import subgroups_of

from embedcheck.config import Caps, use_caps
from embedcheck.corpus import (
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    parse_group,
    symmetric,
)
from embedcheck.errors import CapExceededError
from embedcheck.lattice import normal_subgroups
from embedcheck.perm import trivial_subgroup
from embedcheck.structure import (
    PPower,
    all_subgroups,
    cyclic_subgroups_of_order4,
    group_prime,
    is_p_group,
    is_quaternion_free,
    subgroups_of_order,
    sylow_subgroup,
)


GL2_3 = """
name: GL2_3
degree: 8
gen: (3,4,5)(6,8,7)
gen: (1,3,2,6)(4,5,8,7)
gen: (3,6)(4,7)(5,8)
"""


class SylowTest(TestCase):
    def test_orders(self):
        s4 = symmetric(4)
        self.assertEqual(sylow_subgroup(s4, 2).order, 8)
        self.assertEqual(sylow_subgroup(s4, 3).order, 3)
        self.assertEqual(sylow_subgroup(s4, 5).order, 1)
        self.assertEqual(sylow_subgroup(symmetric(5), 5).order, 5)
        self.assertEqual(sylow_subgroup(symmetric(6), 2).order, 16)
        self.assertEqual(sylow_subgroup(parse_group(GL2_3), 2).order, 16)

    def test_sylow_is_a_p_subgroup(self):
        s4 = symmetric(4)
        p = sylow_subgroup(s4, 2)
        self.assertTrue(p.is_subgroup_of(s4))
        self.assertTrue(is_p_group(p, 2))

    def test_seed(self):
        s4 = symmetric(4)
        v4 = normal_subgroups(s4).nodes[1]
        grown = sylow_subgroup(s4, 2, seed=v4)
        self.assertTrue(v4.is_subgroup_of(grown))
        self.assertEqual(grown.order, 8)
        with self.assertRaises(ValueError):
            sylow_subgroup(s4, 3, seed=v4)

    def test_non_prime(self):
        with self.assertRaises(ValueError):
            sylow_subgroup(symmetric(4), 4)

    def test_deterministic(self):
        self.assertEqual(sylow_subgroup(symmetric(5), 2).elements, sylow_subgroup(symmetric(5), 2).elements)


class SubgroupEnumerationTest(TestCase):
    def test_group_prime(self):
        self.assertEqual(group_prime(cyclic(9)), 3)
        self.assertIsNone(group_prime(symmetric(3)))
        self.assertIsNone(group_prime(trivial_subgroup(symmetric(3))))

    def test_subgroups_of_D8(self):
        d8 = dihedral(8)
        self.assertEqual(len(subgroups_of_order(d8, PPower(2, 2))), 3)
        self.assertEqual(len(subgroups_of_order(d8, PPower(2, 1))), 5)
        self.assertEqual(len(all_subgroups(d8)), 10)

    def test_subgroups_of_Q8(self):
        self.assertEqual([h.order for h in all_subgroups(generalized_quaternion(8))], [1, 2, 4, 4, 4, 8])

    def test_enumeration_matches_closure_oracle(self):
        for p_group in (
            dihedral(8),
            generalized_quaternion(16),
            direct_product(cyclic(2), dihedral(8)),
            direct_product(cyclic(3), cyclic(3)),
            cyclic(16),
        ):
            expected = {h.element_set for h in subgroups_of(p_group)}
            self.assertEqual({h.element_set for h in all_subgroups(p_group)}, expected)
            self.assertEqual(len(all_subgroups(p_group)), len(expected))

    def test_subgroups_of_order_preconditions(self):
        with self.assertRaises(ValueError):
            subgroups_of_order(dihedral(8), PPower(2, 3))
        with self.assertRaises(ValueError):
            subgroups_of_order(symmetric(3), PPower(2, 1))
        with self.assertRaises(ValueError):
            subgroups_of_order(dihedral(8), PPower(3, 1))

    def test_cyclic_subgroups_of_order4(self):
        self.assertEqual(len(cyclic_subgroups_of_order4(generalized_quaternion(8))), 3)
        self.assertEqual(len(cyclic_subgroups_of_order4(cyclic(8))), 1)
        self.assertEqual(len(cyclic_subgroups_of_order4(dihedral(8))), 1)
        self.assertEqual(cyclic_subgroups_of_order4(dihedral(4)), [])
        with self.assertRaises(ValueError):
            cyclic_subgroups_of_order4(cyclic(9))


class QuaternionFreeTest(TestCase):
    def test_landmarks(self):
        self.assertTrue(is_quaternion_free(dihedral(8)))
        self.assertFalse(is_quaternion_free(generalized_quaternion(8)))
        self.assertFalse(is_quaternion_free(generalized_quaternion(16)))
        self.assertTrue(is_quaternion_free(cyclic(8)))
        self.assertTrue(is_quaternion_free(dihedral(16)))
        self.assertTrue(is_quaternion_free(direct_product(cyclic(2), dihedral(8))))
        self.assertFalse(is_quaternion_free(direct_product(cyclic(2), generalized_quaternion(8))))

    def test_semidihedral_Sylow_of_GL2_3(self):
        self.assertFalse(is_quaternion_free(sylow_subgroup(parse_group(GL2_3), 2)))

    def test_preconditions(self):
        with self.assertRaises(ValueError):
            is_quaternion_free(symmetric(3))
        with use_caps(Caps(quaternion_free_cap=8)), self.assertRaises(CapExceededError):
            is_quaternion_free(generalized_quaternion(16))
