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

from ..errors import SpectralPointError
from ..shift import classify_shift, classify_restricted, eigen_residual, \
	lp_norm, resolvent_shift, restricted_resolvent_zero, \
	shift_resolvent_norm_bound
from ..spaces import SeqVector
from ..utils import ScanCell, RESOLVED, SPECTRAL

WITNESS_RADIUS = 0.99

"""
Shift operators on l^2, truncated to N terms
"""
class ShiftCaseStudy:
	@property
	def p (self):
		return 2

	def classify (self, zeta, N=64):
		raise NotImplementedError

	def witnesses (self, zeta, N=64):
		raise NotImplementedError

	def bounds (self, zeta):
		return None, None

	def norm_lower (self, zeta, N=64):
		lower = 0.
		for x in self.witnesses(zeta, N):
			lower = max(lower, lp_norm(self.resolve(zeta, x)) / lp_norm(x))
		return lower

	def cell (self, zeta, n=64, tol=None, band=None):
		c = self.classify(zeta, n)
		if c.status == RESOLVED:
			return ScanCell(zeta, RESOLVED, None, self.norm_lower(zeta, n),
			                *self.bounds(zeta))
		residual = None
		if c.status == SPECTRAL and self.eigen_witness(c):
			residual = eigen_residual(zeta, c.witness)
		return ScanCell(zeta, c.status, residual, None, None, None)

	def eigen_witness (self, classification):
		return classification.witness is not None


class FullShift (ShiftCaseStudy):
	# sigma(S) = closed unit disk
	@property
	def name (self):
		return 'shift_full'

	def classify (self, zeta, N=64):
		return classify_shift(zeta, N, self.p)

	def resolve (self, zeta, x):
		return resolvent_shift(zeta, x)

	def witnesses (self, zeta, N=64):
		# e0 and x_n = w^n with w = 0.99 zeta/|zeta|, ||R x|| / ||x|| = 1/|zeta - w|
		w = WITNESS_RADIUS * complex(zeta) / abs(zeta)
		return [ SeqVector.unit(0, N, self.p), SeqVector.geometric(w, N, self.p) ]

	def bounds (self, zeta):
		return None, shift_resolvent_norm_bound(zeta)


class RestrictedShift (ShiftCaseStudy):
	# T = S on {x_0 = 0}, an onto isometry
	@property
	def name (self):
		return 'shift_restricted'

	def classify (self, zeta, N=64):
		return classify_restricted(zeta, N, self.p)

	def resolve (self, zeta, y):
		if complex(zeta) != 0:
			raise SpectralPointError('Resolvent of the restricted shift is known at 0 only')
		return restricted_resolvent_zero(y)

	def witnesses (self, zeta, N=64):
		return [ SeqVector.unit(0, N, self.p) ]

	def bounds (self, zeta):
		# ||R(0)|| = ||T^-1|| = 1
		return 1., 1.

	def eigen_witness (self, classification):
		# e0 shows ontoness fails, it is no eigenvector
		return False


"""
Get case studies
"""
def get ():
	return [FullShift(), RestrictedShift()]
