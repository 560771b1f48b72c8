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
from collections import namedtuple

import numpy as np
from scipy.linalg import solve_banded

from .errors import SpectralPointError
from .neumann import neumann_bounds
from .spaces import SeqVector
from .utils import RESOLVED, SPECTRAL, INDETERMINATE

logger = logging.getLogger(__name__)

"""
The left shift S on l^p,  (Sx)_n = x_{n+1},  and its restriction T to
F = {x : x_0 = 0}.

A SeqVector represents a finitely supported sequence exactly, so every
resolvent series below is a finite sum.
"""

SpectralClassification = namedtuple('SpectralClassification',
                                    ['status', 'witness', 'note'])


def lp_norm (x):
	if x.p == np.inf:
		return float( np.max( np.abs(x.values) ) )
	return float( np.linalg.norm(x.values, ord=x.p) )


def shift_apply (x):
	if x.N == 1:
		return SeqVector([0.], x.p)
	return SeqVector(x.values[1:], x.p)


def shift_section (y, k=0.):
	"""
	Right inverse of S: x_0 = k, x_n = y_{n-1}
	"""
	return SeqVector( np.r_[complex(k), y.values], y.p )


def restricted_apply (x):
	assert x.values[0] == 0, 'Restricted shift acts on x_0 = 0 only'
	return shift_apply(x)


def restricted_resolvent_zero (y):
	# R(0) = (0 J - T)^-1 = -T^-1
	return -shift_section(y, 0.)


def eigen_residual (zeta, x):
	return lp_norm( shift_apply(x) - zeta * x )


def resolvent_shift (zeta, x, tol=1e-12):
	"""
	y = (zeta I - S)^-1 x,  y_n = sum_k zeta^(-k-1) x_{n+k}

	Solved as the upper-bidiagonal system (zeta I - S_N) y = x, which is
	the finite series exactly.
	"""
	zeta = complex(zeta)
	if not abs(zeta) > 1:
		raise SpectralPointError('|zeta| = %g lies in the closed unit disk' % abs(zeta))
	N        = x.N
	ab       = np.zeros((2, N), dtype=complex)
	ab[0,1:] = -1.
	ab[1]    = zeta
	y        = SeqVector( solve_banded((0, 1), ab, x.values), x.p )
	res      = lp_norm( zeta * y - shift_apply(y) - x )
	if res > tol * max(lp_norm(x), 1e-300):
		logger.warning('Shift resolvent residual %.3e above tolerance', res)
	return y


def shift_resolvent_norm_bound (zeta):
	"""
	||R(zeta)|| <= 1/(|zeta| - 1): the Neumann bound with a = zeta I,
	||a^-1|| = 1/|zeta| and ||x|| = ||S|| = 1
	"""
	if not abs(zeta) > 1:
		raise SpectralPointError('|zeta| = %g lies in the closed unit disk' % abs(zeta))
	return neumann_bounds(1. / abs(zeta), 1.)[0]


def shift_norm_lower (alphas=(0.9, 0.99, 0.999), N=20000, p=2):
	"""
	sup ||Sx|| / ||x|| over the eigenvectors x_n = alpha^n
	"""
	ratios = []
	for a in alphas:
		x = SeqVector.geometric(a, N, p)
		ratios.append( lp_norm(shift_apply(x)) / lp_norm(x) )
	return max(ratios)


def first_resolvent_defect_shift (zeta, eta, x):
	"""
	|| R(zeta)x - R(eta)x - (eta - zeta) R(zeta)R(eta)x ||
	"""
	Rz  = resolvent_shift(zeta, x)
	Re  = resolvent_shift(eta, x)
	RzRe = resolvent_shift(zeta, Re)
	return lp_norm( Rz - Re - (eta - zeta) * RzRe )


"""
Classification
"""
def classify_shift (zeta, N=64, p=2):
	"""
	sigma(S) is the closed unit disk
	"""
	zeta = complex(zeta)
	r    = abs(zeta)
	if r > 1:
		return SpectralClassification(RESOLVED, None,
			'|zeta| > ||S|| = 1, Neumann series converges')
	if r == 1:
		return SpectralClassification(SPECTRAL, None,
			'boundary, spectrum closed (closure argument)')
	if r == 0:
		return SpectralClassification(SPECTRAL, SeqVector.unit(0, N, p),
			'not one-one, S e0 = 0')
	return SpectralClassification(SPECTRAL, SeqVector.geometric(zeta, N, p),
		'eigenvalue, eigenvector x_n = zeta^n')


def classify_restricted (zeta, N=64, p=2):
	"""
	T = S restricted to x_0 = 0: 0 is resolved, |zeta| > 1 is spectral
	"""
	zeta = complex(zeta)
	r    = abs(zeta)
	if r == 0:
		return SpectralClassification(RESOLVED, None,
			'-T^-1 = R(0), T an onto isometry')
	if r > 1:
		return SpectralClassification(SPECTRAL, SeqVector.unit(0, N, p),
			'unique candidate has x0 = %s' % _fmt(1. / zeta))
	return SpectralClassification(INDETERMINATE, None,
		'0 < |zeta| <= 1 not settled for the restricted shift')


def _fmt (z):
	return '%g' % z.real if z.imag == 0 else '%s' % z
