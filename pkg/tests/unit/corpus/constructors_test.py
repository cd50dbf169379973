from unittest import TestCase

from embedcheck.corpus import alternating, cyclic, dihedral, direct_product, generalized_quaternion, symmetric
from embedcheck.perm import Group


def involutions(g: Group) -> int:
    return sum(1 for x in g.elements if x.order == 2)


class ConstructorsTest(TestCase):
    def test_orders(self):
        self.assertEqual(cyclic(1).order, 1)
        self.assertEqual(cyclic(12).order, 12)
        self.assertEqual(symmetric(1).order, 1)
        self.assertEqual(symmetric(5).order, 120)
        self.assertEqual(alternating(3).order, 3)
        self.assertEqual(alternating(5).order, 60)
        self.assertEqual(dihedral(10).order, 10)
        self.assertEqual(generalized_quaternion(32).order, 32)

    def test_shapes(self):
        self.assertTrue(cyclic(9).is_abelian())
        self.assertFalse(symmetric(3).is_abelian())
        self.assertTrue(dihedral(4).is_abelian())
        self.assertEqual(involutions(dihedral(4)), 3)
        self.assertFalse(dihedral(6).is_abelian())
        self.assertEqual(involutions(dihedral(8)), 5)
        for order in (8, 16, 32):
            q = generalized_quaternion(order)
            self.assertFalse(q.is_abelian())
            self.assertEqual(involutions(q), 1)
            self.assertEqual(q.degree, order)

    def test_direct_product(self):
        g = direct_product(symmetric(3), cyclic(2))
        self.assertEqual((g.degree, g.order), (5, 12))
        self.assertEqual(direct_product(cyclic(2), cyclic(3)).order, 6)
        self.assertTrue(direct_product(cyclic(2), cyclic(3)).is_abelian())

    def test_invalid_arguments(self):
        for build, argument in (
            (cyclic, 0),
            (symmetric, 0),
            (alternating, 0),
            (dihedral, 2),
            (dihedral, 7),
            (generalized_quaternion, 4),
            (generalized_quaternion, 12),
        ):
            with self.assertRaises(ValueError):
                build(argument)
