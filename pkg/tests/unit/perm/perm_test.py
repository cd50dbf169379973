from unittest import TestCase

from hypothesis import given
from hypothesis import strategies as st

from embedcheck.perm import Perm, compose, element_order


def perms(degree: int) -> st.SearchStrategy[Perm]:
    return st.permutations(list(range(1, degree + 1))).map(lambda images: Perm(tuple(images)))


class PermTest(TestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            Perm((1, 1))
        with self.assertRaises(ValueError):
            Perm((2, 3))
        with self.assertRaises(ValueError):
            Perm.from_cycles(3, [(1, 4)])
        with self.assertRaises(ValueError):
            Perm.from_cycles(3, [(1, 2, 1)])
        with self.assertRaises(ValueError):
            Perm.identity(2) * Perm.identity(3)

    def test_left_to_right_composition(self):
        a = Perm.from_cycles(3, [(1, 2)])
        b = Perm.from_cycles(3, [(2, 3)])
        self.assertEqual(str(a * b), "(1,3,2)")
        self.assertEqual(str(b * a), "(1,2,3)")
        self.assertEqual((a * b)(1), b(a(1)))
        self.assertEqual(compose(a, b), a * b)

    def test_from_cycles_multiplies_left_to_right(self):
        x = Perm.from_cycles(4, [(1, 2), (2, 3)])
        self.assertEqual(x, Perm.from_cycles(4, [(1, 2)]) * Perm.from_cycles(4, [(2, 3)]))
        self.assertEqual(Perm.from_cycles(4, []), Perm.identity(4))

    def test_powers_and_inverse(self):
        x = Perm.from_cycles(4, [(1, 2, 3, 4)])
        self.assertEqual(str(x**2), "(1,3)(2,4)")
        self.assertEqual(str(x**-1), "(1,4,3,2)")
        self.assertEqual(x**4, Perm.identity(4))
        self.assertEqual(x**0, Perm.identity(4))
        self.assertEqual(x.inverse(), x**3)

    def test_conjugate(self):
        x = Perm.from_cycles(3, [(1, 2)])
        y = Perm.from_cycles(3, [(1, 3)])
        self.assertEqual(str(x.conjugate(y)), "(2,3)")

    def test_cycle_rendering_and_order(self):
        x = Perm.from_cycles(5, [(3, 4, 5), (1, 2)])
        self.assertEqual(str(x), "(1,2)(3,4,5)")
        self.assertEqual(x.cycles, ((1, 2), (3, 4, 5)))
        self.assertEqual(x.order, 6)
        self.assertEqual(element_order(x), 6)
        self.assertEqual(str(Perm.identity(3)), "()")
        self.assertEqual(Perm.identity(3).order, 1)
        self.assertEqual(x.moved_points(), (1, 2, 3, 4, 5))
        self.assertEqual(Perm.from_cycles(4, [(2, 4)]).moved_points(), (2, 4))

    def test_canonical_order_is_lexicographic(self):
        items = [Perm.from_cycles(3, [(1, 2)]), Perm.identity(3), Perm.from_cycles(3, [(2, 3)])]
        self.assertEqual([x.images for x in sorted(items)], [(1, 2, 3), (1, 3, 2), (2, 1, 3)])

    @given(perms(6), perms(6), perms(6))
    def test_composition_laws(self, a: Perm, b: Perm, c: Perm):
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertTrue((a * a.inverse()).is_identity())
        self.assertEqual((a * b).inverse(), b.inverse() * a.inverse())
        self.assertEqual(a * Perm.identity(6), a)

    @given(perms(7), st.integers(min_value=-10, max_value=10))
    def test_power_agrees_with_repeated_product(self, a: Perm, k: int):
        expected = Perm.identity(7)
        step = a if k >= 0 else a.inverse()
        for _ in range(abs(k)):
            expected = expected * step
        self.assertEqual(a**k, expected)
        self.assertTrue((a**a.order).is_identity())
