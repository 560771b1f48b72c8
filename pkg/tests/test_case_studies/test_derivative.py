
import pytest
import numpy as np
from numpy.testing import assert_allclose

from partialspec.case_studies.derivative import get, Example1, Example2, \
	Example3, CustomDirac
from partialspec.cfunc import apply_functional, project_kernel
from partialspec.spaces import GridFunction
from partialspec.utils import RESOLVED, SPECTRAL, INDETERMINATE

n = 1001

"""
TESTS
"""

class TestCaseStudy:

	def test_get (self):
		Ms = get()
		assert [ M.name for M in Ms ] == ['example1', 'example2', 'example3']
		for M in Ms:
			assert isinstance(M.name, str)
			for zeta in [2., 1 + 1j]:
				for f in M.witnesses(zeta, n):
					assert abs( apply_functional(M.functional, f) ) <= 1e-12 * f.sup_norm()

	def test_example1 (self):
		M = Example1()
		assert M.functional.is_null
		assert M.is_spectral(3 - 2j)
		cell = M.cell(1., n)
		assert cell.status == SPECTRAL and cell.abs_A == 0.
		assert cell.norm_lower is None

	def test_example2 (self):
		M = Example2()
		assert not M.is_spectral(0.)
		cell = M.cell(2., n)
		assert cell.status == RESOLVED
		lo, up = cell.bound_lower, cell.bound_upper
		assert lo - 0.05 <= cell.norm_lower <= up + 0.05
		assert M.closed_form_bounds(1j) is None

	def test_example2_resolve (self):
		f   = GridFunction.from_callable(lambda x: np.sin(x), n)
		rec = Example2().resolve(1., f)
		assert rec.gamma == 0.

	def test_exponent_range (self):
		M    = Example2()
		cell = M.cell(700., 101)
		assert cell.status == RESOLVED
		assert np.isfinite(cell.norm_lower) and np.isfinite(cell.bound_upper)
		cell = M.cell(800., 101)
		assert cell.status == RESOLVED and cell.abs_A == 1.
		assert cell.norm_lower is None
		assert cell.bound_lower is None and cell.bound_upper is None
		cell = CustomDirac([(1., 1.), (0.9, -1.)]).cell(1000., 101)
		assert cell.status == INDETERMINATE and cell.abs_A is None

	def test_example3 (self):
		M = Example3()
		assert M.is_spectral(4j * np.pi)
		assert M.cell(8j * np.pi, n).status == SPECTRAL
		cell = M.cell(8., n)
		assert cell.status == RESOLVED
		assert cell.bound_upper is None
		assert cell.norm_lower >= cell.bound_lower - 0.05
		assert len(M.witnesses(8., n)) == 2
		assert len(M.witnesses(8. + 1j, n)) == 1

	def test_indeterminate (self):
		M    = Example3()
		cell = M.cell(1e-7, n)
		assert cell.status == INDETERMINATE
		assert cell.norm_lower is None
		assert M.cell(1e-7, n, band=1e-8).status == RESOLVED

	def test_custom (self):
		M = CustomDirac([(0.5, 1.), (0., -1.)])
		assert M.name == 'custom-dirac'
		assert M.is_spectral(4j * np.pi)
		cell = M.cell(1., n)
		assert_allclose(cell.abs_A, abs(np.exp(0.5) - 1.))
		assert cell.norm_lower > 0.
		assert CustomDirac([]).witnesses(1., n) == []

	def test_invalid_custom (self):
		with pytest.raises(AssertionError):
			CustomDirac([(2., 1.)])
