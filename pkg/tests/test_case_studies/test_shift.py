
import pytest
import numpy as np
from numpy.testing import assert_allclose

from partialspec.case_studies.shift import get, FullShift, RestrictedShift
from partialspec.spaces import SeqVector
from partialspec.errors import SpectralPointError
from partialspec.utils import RESOLVED, SPECTRAL, INDETERMINATE

N = 257

"""
TESTS
"""

class TestCaseStudy:

	def test_get (self):
		assert [ M.name for M in get() ] == ['shift_full', 'shift_restricted']

	def test_full_resolved (self):
		M    = FullShift()
		cell = M.cell(2., 2001)
		assert cell.status == RESOLVED
		assert cell.abs_A is None
		assert_allclose(cell.bound_upper, 1.)
		# Geometric witness gives 1 / |zeta - 0.99 zeta/|zeta||
		assert_allclose(cell.norm_lower, 1. / 1.01, rtol=1e-6)
		assert cell.norm_lower <= cell.bound_upper

	def test_full_spectral (self):
		M = FullShift()
		for zeta in [0., 0.5, -0.3j]:
			cell = M.cell(zeta, N)
			assert cell.status == SPECTRAL
			assert cell.abs_A <= 1e-12
		cell = M.cell(1j, N)
		assert cell.status == SPECTRAL and cell.abs_A is None

	def test_restricted (self):
		M    = RestrictedShift()
		cell = M.cell(0., N)
		assert cell.status == RESOLVED
		assert cell.norm_lower == 1.
		assert cell.bound_lower == cell.bound_upper == 1.
		assert M.cell(2., N).status == SPECTRAL
		assert M.cell(2., N).abs_A is None
		assert M.cell(0.5, N).status == INDETERMINATE

	def test_restricted_resolve (self):
		M = RestrictedShift()
		assert_allclose(M.resolve(0., SeqVector([1., 2.])).values, [0., -1., -2.])
		with pytest.raises(SpectralPointError):
			M.resolve(2., SeqVector([1.]))
