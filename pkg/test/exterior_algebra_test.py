import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from algebra.exterior import (AlgebraElement, AlgebraSignature, ExteriorMonomial, basis_monomials,
                              degree_basis, multiply_elements, multiply_monomials, poincare_polynomial)
from algebra.tensor import (TensorElement, apply_multiplication_map, multiply_tensor, zero_divisor)
from utils.exceptions import InvalidGenerator, InvalidSignature

SIGNATURES = [AlgebraSignature(3, 2), AlgebraSignature(4, 3), AlgebraSignature(5, 3), AlgebraSignature(4, 4)]


def mono(*indices):
    return ExteriorMonomial.from_indices(indices)


def gen(i, sig):
    return AlgebraElement.generator(i, sig)


@st.composite
def algebra_elements(draw, sig, degree=None):
    basis = basis_monomials(sig) if degree is None else degree_basis(sig, degree)
    if not basis:
        return AlgebraElement.zero(sig)
    chosen = draw(st.lists(st.sampled_from(basis), max_size=4, unique=True))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(chosen), max_size=len(chosen)))
    return AlgebraElement(sig, dict(zip(chosen, coeffs)))


@st.composite
def tensor_elements(draw, sig, degree=None):
    # Elemento omogeneo di grado totale dato (oppure qualsiasi se degree è None)
    basis = basis_monomials(sig)
    pairs = [(u, v) for u in basis for v in basis if degree is None or u.degree + v.degree == degree]
    if not pairs:
        return TensorElement.zero(sig)
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=4, unique=True))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(chosen), max_size=len(chosen)))
    return TensorElement(sig, dict(zip(chosen, coeffs)))


class TestSignature(unittest.TestCase):

    def test_invalid_signatures(self):
        for n, r in [(2, 3), (3, 0), (0, 1)]:
            with self.assertRaises(InvalidSignature):
                AlgebraSignature(n, r)

    def test_r_exceeds_n_message(self):
        with self.assertRaisesRegex(InvalidSignature, "r exceeds n"):
            AlgebraSignature(2, 3)

    def test_truncation(self):
        sig = AlgebraSignature(4, 2)
        self.assertTrue(sig.admits(mono(0, 1).mask))
        self.assertFalse(sig.admits(mono(1, 2).mask))


class TestMonomials(unittest.TestCase):

    def test_sorted_product(self):
        sig = AlgebraSignature(3, 3)
        self.assertEqual(multiply_monomials(mono(1), mono(2), sig), (1, mono(1, 2)))

    def test_one_inversion(self):
        sig = AlgebraSignature(3, 3)
        self.assertEqual(multiply_monomials(mono(2), mono(1), sig), (-1, mono(1, 2)))

    def test_repeated_generator(self):
        sig = AlgebraSignature(3, 3)
        self.assertEqual(multiply_monomials(mono(1), mono(1), sig), (0, None))

    def test_truncated_product(self):
        sig = AlgebraSignature(4, 2)
        self.assertEqual(multiply_monomials(mono(1), mono(2), sig), (0, None))

    def test_e0_is_not_truncated(self):
        sig = AlgebraSignature(4, 2)
        self.assertEqual(multiply_monomials(mono(1), mono(0), sig), (-1, mono(0, 1)))

    def test_non_canonical_operand(self):
        with self.assertRaises(InvalidGenerator):
            multiply_monomials(mono(1, 2), mono(0), AlgebraSignature(4, 2))

    def test_repeated_index(self):
        with self.assertRaises(InvalidGenerator):
            ExteriorMonomial.from_indices([1, 1])

    def test_rendering(self):
        self.assertEqual(str(mono(0, 2)), "e0e2")
        self.assertEqual(str(ExteriorMonomial.one()), "1")


class TestElements(unittest.TestCase):

    def test_distributivity_example(self):
        sig = AlgebraSignature(4, 4)
        product = (gen(1, sig) + gen(2, sig)) * gen(3, sig)
        self.assertEqual(product, AlgebraElement(sig, {mono(1, 3): 1, mono(2, 3): 1}))

    def test_identity(self):
        sig = AlgebraSignature(4, 3)
        x = AlgebraElement(sig, {mono(0, 1): 2, mono(2): -1})
        self.assertEqual(AlgebraElement.one(sig) * x, x)
        self.assertEqual(x * AlgebraElement.one(sig), x)

    def test_odd_square_vanishes(self):
        sig = AlgebraSignature(4, 4)
        x = gen(1, sig) + gen(2, sig)
        self.assertTrue(multiply_elements(x, x, sig).is_zero)

    def test_truncated_generators_are_zero(self):
        sig = AlgebraSignature(3, 1)
        self.assertTrue(gen(1, sig).is_zero)
        self.assertFalse(gen(0, sig).is_zero)

    def test_rejects_truncated_monomial(self):
        with self.assertRaises(InvalidGenerator):
            AlgebraElement(AlgebraSignature(4, 2), {mono(1, 2): 1})

    def test_rendering(self):
        sig = AlgebraSignature(3, 3)
        x = AlgebraElement(sig, {mono(1, 2): 2, mono(0): -1})
        self.assertEqual(str(x), "-e0 + 2·e1e2")
        self.assertEqual(str(AlgebraElement.zero(sig)), "0")

    def test_degree(self):
        sig = AlgebraSignature(4, 3)
        self.assertEqual(AlgebraElement(sig, {mono(0, 1): 1, mono(2, 3): 5}).degree, 2)
        self.assertIsNone(AlgebraElement(sig, {mono(0): 1, mono(2, 3): 5}).degree)

    def test_random_monomial_associativity(self):
        # 10^4 terne di monomi casuali, generatore con seme fisso
        rng = np.random.default_rng(2024)
        for _ in range(10_000):
            sig = SIGNATURES[int(rng.integers(0, len(SIGNATURES)))]
            basis = basis_monomials(sig)
            a, b, c = (AlgebraElement(sig, {basis[int(rng.integers(0, len(basis)))]: 1}) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))


class TestBasis(unittest.TestCase):

    def test_poincare_polynomial(self):
        self.assertEqual(poincare_polynomial(AlgebraSignature(3, 2)), [1, 3, 2])
        self.assertEqual(poincare_polynomial(AlgebraSignature(1, 1)), [1, 1])
        self.assertEqual(poincare_polynomial(AlgebraSignature(4, 4)), [1, 4, 6, 4, 1])

    def test_basis_matches_poincare_polynomial(self):
        for n in range(1, 7):
            for r in range(1, n + 1):
                sig = AlgebraSignature(n, r)
                counts = [len(degree_basis(sig, d)) for d in range(r + 1)]
                self.assertEqual(counts, poincare_polynomial(sig))
                self.assertEqual(len(basis_monomials(sig)), sum(counts))

    def test_top_degree_monomials_contain_e0(self):
        sig = AlgebraSignature(5, 3)
        self.assertTrue(all(0 in m.indices for m in degree_basis(sig, 3)))


class TestTensorSquare(unittest.TestCase):

    def test_koszul_sign(self):
        sig = AlgebraSignature(4, 3)
        left = TensorElement(sig, {(ExteriorMonomial.one(), mono(1)): 1})
        right = TensorElement(sig, {(mono(2), ExteriorMonomial.one()): 1})
        self.assertEqual(multiply_tensor(left, right, sig), TensorElement(sig, {(mono(2), mono(1)): -1}))

    def test_no_sign_without_crossing(self):
        sig = AlgebraSignature(4, 3)
        left = TensorElement(sig, {(mono(1), ExteriorMonomial.one()): 1})
        right = TensorElement(sig, {(ExteriorMonomial.one(), mono(2)): 1})
        self.assertEqual(left * right, TensorElement(sig, {(mono(1), mono(2)): 1}))

    def test_zero_divisor_square_vanishes(self):
        sig = AlgebraSignature(4, 3)
        e1 = zero_divisor(1, sig)
        self.assertTrue((e1 * e1).is_zero)

    def test_zero_divisor_definition(self):
        sig = AlgebraSignature(3, 2)
        self.assertEqual(zero_divisor(0, sig).raw_terms, {(0, 1): 1, (1, 0): -1})

    def test_zero_divisor_range(self):
        sig = AlgebraSignature(3, 2)
        for i in (-1, 3):
            with self.assertRaises(InvalidGenerator):
                zero_divisor(i, sig)

    def test_truncated_zero_divisor(self):
        self.assertTrue(zero_divisor(2, AlgebraSignature(3, 1)).is_zero)

    def test_product_of_two_zero_divisors(self):
        sig = AlgebraSignature(2, 2)
        product = zero_divisor(0, sig) * zero_divisor(1, sig)
        expected = TensorElement(sig, {
            (ExteriorMonomial.one(), mono(0, 1)): 1,
            (mono(1), mono(0)): 1,
            (mono(0), mono(1)): -1,
            (mono(0, 1), ExteriorMonomial.one()): 1,
        })
        self.assertEqual(product, expected)
        self.assertEqual(len(product), 4)
        self.assertTrue(product.coefficients() <= {1, -1})

    def test_multiplication_map_kills_zero_divisors(self):
        for sig in SIGNATURES:
            for i in range(sig.n):
                self.assertTrue(apply_multiplication_map(zero_divisor(i, sig), sig).is_zero)

    def test_multiplication_map_examples(self):
        sig = AlgebraSignature(4, 3)
        pure = TensorElement(sig, {(mono(1), mono(2)): 1})
        self.assertEqual(apply_multiplication_map(pure, sig), AlgebraElement(sig, {mono(1, 2): 1}))
        mixed = TensorElement(sig, {(ExteriorMonomial.one(), mono(1, 2)): 1, (mono(1), mono(2)): 1})
        self.assertEqual(apply_multiplication_map(mixed, sig), AlgebraElement(sig, {mono(1, 2): 2}))

    def test_products_beyond_top_degree_vanish(self):
        # Grado totale massimo del quadrato tensoriale: 2r
        sig = AlgebraSignature(5, 2)
        product = TensorElement.one(sig)
        for i in range(sig.n):
            product = product * zero_divisor(i, sig)
        self.assertTrue(product.is_zero)

    def test_component(self):
        sig = AlgebraSignature(2, 2)
        product = zero_divisor(0, sig) * zero_divisor(1, sig)
        self.assertEqual(product.component(1, 1).raw_terms, {(2, 1): 1, (1, 2): -1})
        self.assertEqual(product.bidegrees, {(0, 2), (1, 1), (2, 0)})
        self.assertEqual(product.degree, 2)


class TestRingLaws(unittest.TestCase):

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(SIGNATURES).flatmap(
        lambda sig: st.tuples(algebra_elements(sig), algebra_elements(sig), algebra_elements(sig))))
    def test_algebra_associativity_and_distributivity(self, elements):
        x, y, z = elements
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(SIGNATURES).flatmap(
        lambda sig: st.tuples(tensor_elements(sig), tensor_elements(sig), tensor_elements(sig))))
    def test_tensor_associativity_and_distributivity(self, elements):
        x, y, z = elements
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual((x + y) * z, x * z + y * z)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(SIGNATURES).flatmap(
        lambda sig: st.tuples(st.integers(0, 2 * sig.r), st.integers(0, 2 * sig.r)).flatmap(
            lambda degrees: st.tuples(st.just(degrees), tensor_elements(sig, degrees[0]),
                                      tensor_elements(sig, degrees[1])))))
    def test_tensor_graded_commutativity(self, drawn):
        (p, q), x, y = drawn
        sign = -1 if p * q % 2 else 1
        self.assertEqual(x * y, sign * (y * x))

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(SIGNATURES).flatmap(
        lambda sig: st.tuples(tensor_elements(sig), tensor_elements(sig))))
    def test_multiplication_map_is_a_ring_homomorphism(self, elements):
        x, y = elements
        sig = x.sig
        self.assertEqual(apply_multiplication_map(x * y, sig),
                         apply_multiplication_map(x, sig) * apply_multiplication_map(y, sig))


ALL_SIGNATURES = [AlgebraSignature(n, r) for n in range(1, 9) for r in range(1, n + 1)]


def random_element(sig, rng, size=3):
    basis = basis_monomials(sig)
    picks = rng.choice(len(basis), size=min(size, len(basis)), replace=False)
    return AlgebraElement(sig, {basis[int(i)]: int(rng.integers(-3, 4)) for i in picks})


def random_tensor(sig, rng, pairs, size=3):
    picks = rng.choice(len(pairs), size=min(size, len(pairs)), replace=False)
    return TensorElement(sig, {pairs[int(i)]: int(rng.integers(-3, 4)) for i in picks})


class TestSeededRingLaws(unittest.TestCase):
    # 10^4 verifiche casuali per ciascuna legge, generatore con seme fisso

    ITERATIONS = 10_000

    def setUp(self):
        self.pairs = {}
        self.graded_pairs = {}
        for sig in SIGNATURES:
            basis = basis_monomials(sig)
            self.pairs[sig] = [(u, v) for u in basis for v in basis]
            for degree in range(2 * sig.r + 1):
                self.graded_pairs[sig, degree] = [(u, v) for u, v in self.pairs[sig]
                                                  if u.degree + v.degree == degree]

    def pick_signature(self, rng):
        return SIGNATURES[int(rng.integers(0, len(SIGNATURES)))]

    def test_algebra_associativity(self):
        rng = np.random.default_rng(1)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            x, y, z = (random_element(sig, rng) for _ in range(3))
            self.assertEqual((x * y) * z, x * (y * z))

    def test_algebra_distributivity(self):
        rng = np.random.default_rng(2)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            x, y, z = (random_element(sig, rng) for _ in range(3))
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual((x + y) * z, x * z + y * z)

    def test_algebra_graded_commutativity(self):
        rng = np.random.default_rng(3)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            p, q = (int(rng.integers(0, sig.r + 1)) for _ in range(2))
            x = AlgebraElement(sig, {m: int(rng.integers(-3, 4)) for m in degree_basis(sig, p)[:3]})
            y = AlgebraElement(sig, {m: int(rng.integers(-3, 4)) for m in degree_basis(sig, q)[-3:]})
            self.assertEqual(x * y, (-1) ** (p * q) * (y * x))

    def test_tensor_associativity(self):
        rng = np.random.default_rng(4)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            x, y, z = (random_tensor(sig, rng, self.pairs[sig]) for _ in range(3))
            self.assertEqual((x * y) * z, x * (y * z))

    def test_tensor_distributivity(self):
        rng = np.random.default_rng(5)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            x, y, z = (random_tensor(sig, rng, self.pairs[sig]) for _ in range(3))
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual((x + y) * z, x * z + y * z)

    def test_tensor_graded_commutativity(self):
        rng = np.random.default_rng(6)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            p, q = (int(rng.integers(0, 2 * sig.r + 1)) for _ in range(2))
            x = random_tensor(sig, rng, self.graded_pairs[sig, p])
            y = random_tensor(sig, rng, self.graded_pairs[sig, q])
            self.assertEqual(x * y, (-1) ** (p * q) * (y * x))

    def test_multiplication_map_is_a_ring_homomorphism(self):
        rng = np.random.default_rng(7)
        for _ in range(self.ITERATIONS):
            sig = self.pick_signature(rng)
            x, y = (random_tensor(sig, rng, self.pairs[sig]) for _ in range(2))
            self.assertEqual(apply_multiplication_map(x * y, sig),
                             apply_multiplication_map(x, sig) * apply_multiplication_map(y, sig))


class TestZeroDivisorRelations(unittest.TestCase):

    def test_anticommutation(self):
        for sig in ALL_SIGNATURES:
            bars = [zero_divisor(i, sig) for i in range(sig.n)]
            for i in range(sig.n):
                for j in range(sig.n):
                    if i != j:
                        self.assertEqual(bars[i] * bars[j], -(bars[j] * bars[i]), (sig.n, sig.r, i, j))

    def test_squares_vanish(self):
        for sig in ALL_SIGNATURES:
            for i in range(sig.n):
                bar = zero_divisor(i, sig)
                self.assertTrue((bar * bar).is_zero, (sig.n, sig.r, i))

    def test_products_of_n_plus_one_generators_vanish(self):
        # Con n zero-divisori di grado uno, n+1 fattori ne ripetono almeno uno
        rng = np.random.default_rng(8)
        for sig in ALL_SIGNATURES:
            bars = [zero_divisor(i, sig) for i in range(sig.n)]
            full = TensorElement.one(sig)
            for bar in bars:
                full = full * bar
            self.assertEqual(full.is_zero, sig.n > 2 * sig.r - 1, (sig.n, sig.r))
            for _ in range(20):
                product = TensorElement.one(sig)
                for i in rng.integers(0, sig.n, size=sig.n + 1):
                    product = product * bars[int(i)]
                self.assertTrue(product.is_zero, (sig.n, sig.r))

    def test_products_beyond_twice_r_vanish(self):
        # 2r+1 elementi di grado uno: grado totale oltre 2r, quindi prodotto nullo
        rng = np.random.default_rng(9)
        for sig in ALL_SIGNATURES:
            generators = degree_basis(sig, 1)
            one = ExteriorMonomial.one()
            pairs = [(m, one) for m in generators] + [(one, m) for m in generators]
            for _ in range(10):
                product = TensorElement.one(sig)
                for _ in range(2 * sig.r + 1):
                    product = product * random_tensor(sig, rng, pairs, size=2)
                self.assertTrue(product.is_zero, (sig.n, sig.r))


if __name__ == '__main__':
    unittest.main()
