
import pytest
import numpy as np
from numpy.testing import assert_allclose

from partialspec.neumann import MatrixOperator, identity, operator_norm, \
	neumann_bounds, invert_near_identity, invert_perturbed, invert_element, \
	inverse_differential
from partialspec.errors import ContractionError, UnsupportedNormError, \
	SingularOperatorError, PartialSpecError

np.random.seed(0)
A4 = np.random.randn(4, 4) + 1j * np.random.randn(4, 4)

"""
TESTS
"""

class TestMatrixOperator:

	def test_entries (self):
		M = MatrixOperator([[1, 2], [3, 4]])
		assert M.shape == (2, 2)
		assert M.is_square
		assert M.entries.dtype == complex

	def test_scalar_entries (self):
		assert MatrixOperator(2.).shape == (1, 1)

	def test_read_only (self):
		M = MatrixOperator(np.eye(2))
		with pytest.raises(ValueError):
			M.entries[0, 0] = 5.

	def test_invalid_entries (self):
		for r in [np.zeros((2, 2, 2)), [[np.nan, 1.]], [[np.inf]], np.zeros((0, 2))]:
			with pytest.raises(AssertionError):
				MatrixOperator(r)

	def test_invalid_exponent (self):
		for p in [0, 3, 'hej']:
			with pytest.raises(AssertionError):
				MatrixOperator(np.eye(2), p)

	def test_with_entries (self):
		M = MatrixOperator(np.eye(2), 1)
		N = M.with_entries(np.zeros((2, 2)))
		assert N.domain_norm_exponent == 1 and N.codomain_norm_exponent == 1


class TestOperatorNorm:

	def test_identity (self):
		assert operator_norm( identity(3) ) == 1.

	def test_column_sum (self):
		assert operator_norm( MatrixOperator([[0, 2], [0, 0]], 1) ) == 2.

	def test_row_sum (self):
		M = MatrixOperator([[1, -2], [3j, 0]], np.inf)
		assert operator_norm(M) == 3.

	def test_spectral_norm (self):
		s = np.linalg.svd(A4, compute_uv=False)[0]
		assert_allclose(operator_norm( MatrixOperator(A4, 2) ), s, rtol=1e-8)

	def test_spectral_norm_rectangular (self):
		B = np.random.randn(3, 5)
		s = np.linalg.svd(B, compute_uv=False)[0]
		assert_allclose(operator_norm( MatrixOperator(B, 2) ), s, rtol=1e-8)

	def test_spectral_norm_null_start (self):
		# All-ones start vector lies in the kernel
		B = np.array([[1., -1.], [1., -1.]])
		assert_allclose(operator_norm( MatrixOperator(B, 2) ), 2., rtol=1e-8)

	def test_spectral_norm_equal_row_sums (self):
		# All-ones start is an eigenvector for the smaller singular value 1
		B = np.array([[2., -1.], [-1., 2.]])
		assert_allclose(operator_norm( MatrixOperator(B, 2) ), 3., rtol=1e-8)

	def test_spectral_norm_circulant (self):
		c = np.array([0.4, -0.3, 0.2, 0.1, -0.5])
		C = np.array([ np.roll(c, k) for k in range(5) ])
		s = np.linalg.svd(C, compute_uv=False)[0]
		assert_allclose(operator_norm( MatrixOperator(C, 2) ), s, rtol=1e-8)

	def test_zero (self):
		for p in [1, 2, np.inf]:
			assert operator_norm( MatrixOperator(np.zeros((2, 3)), p) ) == 0.

	def test_mixed_exponents (self):
		with pytest.raises(UnsupportedNormError):
			operator_norm( MatrixOperator(np.eye(2), 1, 2) )


class TestNeumannBounds:

	def test_values (self):
		assert_allclose(neumann_bounds(1, 0.5), (2, 1, 0.5))
		assert_allclose(neumann_bounds(1, 0), (1, 0, 0))
		assert_allclose(neumann_bounds(2, 0.25), (4, 2, 1))

	def test_contraction (self):
		for nx in [1., 2.]:
			with pytest.raises(ContractionError):
				neumann_bounds(1., nx)

	def test_error_hierarchy (self):
		with pytest.raises(ValueError):
			neumann_bounds(1., 1.)
		with pytest.raises(PartialSpecError):
			neumann_bounds(1., 1.)

	def test_monotone (self):
		B = np.array([ neumann_bounds(1.5, v) for v in np.linspace(0.01, 0.6, 50) ])
		assert np.all( np.diff(B, axis=0) > 0 )


class TestInvertNearIdentity:

	def test_zero (self):
		res = invert_near_identity( MatrixOperator(np.zeros((3, 3))) )
		assert np.all( res.inverse_approx.entries == np.eye(3) )
		assert_allclose(res[1:4], (1, 0, 0))
		assert res.terms_used <= 1

	def test_geometric (self):
		res = invert_near_identity( MatrixOperator([[0.5]]), tol=1e-12 )
		assert abs( res.inverse_approx.entries[0, 0] - 2. ) <= 1e-12
		assert res.truncation_tail_bound <= 1e-12

	def test_nilpotent (self):
		x   = np.array([[0, 0.9], [0, 0]])
		res = invert_near_identity( MatrixOperator(x) )
		assert np.all( res.inverse_approx.entries == np.eye(2) + x )

	def test_oracle (self):
		for p in [1, 2, np.inf]:
			x = MatrixOperator(A4, p)
			x = x.with_entries( 0.7 * A4 / operator_norm(x) )
			res = invert_near_identity(x, tol=1e-12)
			I   = np.linalg.solve(np.eye(4) - x.entries, np.eye(4))
			err = np.max(np.abs( res.inverse_approx.entries - I ))
			assert err <= 1e-12 / 0.3 * 4

	def test_contraction (self):
		with pytest.raises(ContractionError):
			invert_near_identity( MatrixOperator([[0, 1], [1, 0]]) )

	def test_circulant (self):
		x   = np.array([[0.3, -0.5], [-0.5, 0.3]])
		res = invert_near_identity( MatrixOperator(x, 2), tol=1e-12 )
		I   = np.linalg.inv( np.eye(2) - x )
		assert_allclose(res.bound_inverse_norm, 5.)
		assert_allclose(res.inverse_approx.entries, I, atol=1e-10)
		assert np.linalg.norm(I, 2) <= res.bound_inverse_norm * (1 + 1e-8)

	def test_circulant_contraction (self):
		# ||x||_2 = 1.1 although x maps the all-ones vector to 0.1 times itself
		x = np.array([[-0.5, 0.6], [0.6, -0.5]])
		with pytest.raises(ContractionError):
			invert_near_identity( MatrixOperator(x, 2) )

	def test_not_square (self):
		with pytest.raises(AssertionError):
			invert_near_identity( MatrixOperator(np.zeros((2, 3))) )


class TestInvertPerturbed:

	def test_scalar (self):
		res = invert_perturbed(identity(2), MatrixOperator(0.5 * np.eye(2)))
		assert_allclose(res.inverse_approx.entries, 2 * np.eye(2), atol=1e-11)

	def test_diagonal (self):
		S   = MatrixOperator(np.diag([2., 4.]))
		res = invert_perturbed(S, identity(2))
		assert_allclose(res.inverse_approx.entries, np.diag([1., 1/3.]), atol=1e-11)

	def test_residual (self):
		S   = MatrixOperator(3 * np.eye(4) + A4 / 4.)
		T   = S.with_entries(A4 / (4 * operator_norm(MatrixOperator(A4))))
		res = invert_perturbed(S, T, tol=1e-12)
		D   = S.entries - T.entries
		R   = np.matmul(D, res.inverse_approx.entries) - np.eye(4)
		assert operator_norm(S.with_entries(R)) <= 10 * 1e-12 * operator_norm(S.with_entries(D))

	def test_bounds (self):
		S     = MatrixOperator(3 * np.eye(4) + A4 / 4.)
		S_inv = np.linalg.inv(S.entries)
		T     = S.with_entries(0.2 * A4 / operator_norm(MatrixOperator(A4)))
		res   = invert_perturbed(S, T)
		I     = np.linalg.inv(S.entries - T.entries)
		first = S_inv + np.matmul(S_inv, np.matmul(T.entries, S_inv))
		assert operator_norm(S.with_entries(I)) <= res.bound_inverse_norm + 1e-11
		assert operator_norm(S.with_entries(I - S_inv)) <= res.bound_first_order + 1e-11
		assert operator_norm(S.with_entries(I - first)) <= res.bound_second_order + 1e-11

	def test_contraction (self):
		with pytest.raises(ContractionError):
			invert_perturbed(identity(2), MatrixOperator(1.5 * np.eye(2)))

	def test_singular (self):
		with pytest.raises(SingularOperatorError):
			invert_perturbed(MatrixOperator([[1, 1], [1, 1]]), MatrixOperator(np.zeros((2, 2))))
		with pytest.raises(ArithmeticError):
			invert_perturbed(MatrixOperator(np.diag([1., 1e-14])), MatrixOperator(np.zeros((2, 2))))

	def test_invert_element (self):
		a   = MatrixOperator(np.diag([2., 4.]))
		res = invert_element(a, MatrixOperator(np.diag([1., 1.])))
		assert_allclose(res.inverse_approx.entries, np.diag([1., 1/3.]), atol=1e-11)

	def test_inverse_differential (self):
		# (S - eps T)^-1 = S^-1 + eps S^-1 T S^-1 + O(eps^2)
		S     = MatrixOperator(3 * np.eye(4) + A4 / 4.)
		S_inv = S.with_entries(np.linalg.inv(S.entries))
		T     = S.with_entries(A4)
		eps   = 1e-6
		I     = np.linalg.inv(S.entries - eps * T.entries)
		D     = inverse_differential(S_inv, T).entries
		assert_allclose((S_inv.entries - I) / eps, D, atol=1e-4)
