"""
MIT License

Copyright (c) 2018 Simon Olofsson

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""

import logging

import numpy as np

from ..cfunc import DEFAULT_N, SPECTRAL_TOL, abs_A, spectrum_member, \
	resolve_derivative, resolvent_norm_lower, project_kernel, \
	closed_form_bounds, example2_witness, example3_witness
from ..errors import ExponentRangeError
from ..spaces import DiracFunctional
from ..utils import ScanCell, RESOLVED, SPECTRAL, INDETERMINATE

logger = logging.getLogger(__name__)

"""
Derivation operator super class

	T u = u'  with  E = ker(Lambda),  F = { u in D : u, u' in ker(Lambda) }
"""
class DerivativeCaseStudy:
	@property
	def functional (self):
		raise NotImplementedError

	def abs_A (self, zeta):
		return abs_A(self.functional, zeta)

	def is_spectral (self, zeta, tol=SPECTRAL_TOL):
		return spectrum_member(self.functional, zeta, tol)

	def resolve (self, zeta, f, tol=SPECTRAL_TOL):
		return resolve_derivative(self.functional, zeta, f, tol)

	def witnesses (self, zeta, n=DEFAULT_N):
		return [ project_kernel(self.functional, example2_witness(n)) ]

	def closed_form_bounds (self, zeta):
		return None

	def cell (self, zeta, n=DEFAULT_N, tol=SPECTRAL_TOL, band=1e-6):
		try:
			A = self.abs_A(zeta)
		except ExponentRangeError as e:
			logger.info('%s: %s', self.name, e)
			return ScanCell(zeta, INDETERMINATE, None, None, None, None)
		if A <= tol:
			return ScanCell(zeta, SPECTRAL, A, None, None, None)
		if A <= band:
			return ScanCell(zeta, INDETERMINATE, A, None, None, None)
		# A(zeta) alone certifies the cell; norms past the float range stay empty
		try:
			lower = resolvent_norm_lower(self.functional, zeta,
			                             self.witnesses(zeta, n), tol)
		except ExponentRangeError as e:
			logger.info('%s: %s', self.name, e)
			lower = None
		try:
			bounds = self.closed_form_bounds(zeta) or (None, None)
		except ExponentRangeError:
			bounds = (None, None)
		return ScanCell(zeta, RESOLVED, A, lower, *bounds)


def _positive_real (zeta):
	return np.imag(zeta) == 0 and np.real(zeta) > 0


"""
Examples
"""
class Example1 (DerivativeCaseStudy):
	# Lambda = 0: T is onto but not one-one, every zeta is spectral
	@property
	def name (self):
		return 'example1'
	@property
	def functional (self):
		return DiracFunctional.null()
	def witnesses (self, zeta, n=DEFAULT_N):
		return []

class Example2 (DerivativeCaseStudy):
	# Lambda = delta_0: A(zeta) = 1, empty spectrum
	@property
	def name (self):
		return 'example2'
	@property
	def functional (self):
		return DiracFunctional.delta(0.)
	def witnesses (self, zeta, n=DEFAULT_N):
		return [ example2_witness(n) ]
	def closed_form_bounds (self, zeta):
		return closed_form_bounds(2, zeta) if _positive_real(zeta) else None

class Example3 (DerivativeCaseStudy):
	# Lambda = delta_1/2 - delta_0: spectrum 4 i pi Z
	@property
	def name (self):
		return 'example3'
	@property
	def functional (self):
		return DiracFunctional([(0.5, 1.), (0., -1.)])
	def witnesses (self, zeta, n=DEFAULT_N):
		W = DerivativeCaseStudy.witnesses(self, zeta, n)
		if _positive_real(zeta):
			W.append( example3_witness(zeta, n) )
		return W
	def closed_form_bounds (self, zeta):
		return closed_form_bounds(3, zeta) if _positive_real(zeta) else None

class CustomDirac (DerivativeCaseStudy):
	def __init__ (self, atoms):
		self._functional = DiracFunctional(atoms)
	@property
	def name (self):
		return 'custom-dirac'
	@property
	def functional (self):
		return self._functional
	def witnesses (self, zeta, n=DEFAULT_N):
		if self.functional.is_null:
			return []
		return DerivativeCaseStudy.witnesses(self, zeta, n)


"""
Get case studies
"""
def get ():
	return [Example1(), Example2(), Example3()]
