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

from .errors import ContractionError, UnsupportedNormError, SingularOperatorError

logger = logging.getLogger(__name__)

NORM_EXPONENTS   = (1, 2, np.inf)
POWER_ITER_RTOL  = 1e-10
POWER_ITER_MAX   = 10000
MAX_CONDITION    = 1e12
NEAR_CONTRACTION = 0.999


class MatrixOperator:
	"""
	Dense complex matrix acting between finite-dimensional l^p spaces
	"""
	def __init__ (self, entries, p=np.inf, q=None):
		self.entries = entries
		self.domain_norm_exponent   = p
		self.codomain_norm_exponent = p if q is None else q

	"""
	Properties
	"""
	@property
	def entries (self):
		return self._entries
	@entries.setter
	def entries (self, value):
		value = np.array(value, dtype=complex)
		if value.ndim == 0:
			value = value.reshape((1, 1))
		assert value.ndim == 2, 'Entries must form a matrix'
		assert value.shape[0] >= 1 and value.shape[1] >= 1, 'Empty matrix'
		assert np.all( np.isfinite(value) ), 'Entries must be finite'
		value.setflags(write=False)
		self._entries = value

	@property
	def domain_norm_exponent (self):
		return self._p
	@domain_norm_exponent.setter
	def domain_norm_exponent (self, value):
		assert value in NORM_EXPONENTS, 'Exponent must be 1, 2 or inf'
		self._p = value

	@property
	def codomain_norm_exponent (self):
		return self._q
	@codomain_norm_exponent.setter
	def codomain_norm_exponent (self, value):
		assert value in NORM_EXPONENTS, 'Exponent must be 1, 2 or inf'
		self._q = value

	@property
	def shape (self):
		return self.entries.shape

	@property
	def is_square (self):
		return self.shape[0] == self.shape[1]

	def with_entries (self, entries):
		return MatrixOperator(entries, self.domain_norm_exponent,
		                      self.codomain_norm_exponent)

	def __repr__ (self):
		return 'MatrixOperator(shape=%s, p=%s)' % (self.shape, self._p)


def identity (n, p=np.inf):
	return MatrixOperator(np.eye(n), p)


NeumannResult = namedtuple('NeumannResult', ['inverse_approx',
	'bound_inverse_norm', 'bound_first_order', 'bound_second_order',
	'terms_used', 'truncation_tail_bound'])


"""
Operator norms
"""
def operator_norm (M):
	"""
	Induced norm sup{ ||Mx||_q : ||x||_p <= 1 } for (p, q) = (p, p)
	"""
	p, q = M.domain_norm_exponent, M.codomain_norm_exponent
	if p != q:
		raise UnsupportedNormError('Mixed exponent pair (%s, %s)' % (p, q))
	A = np.abs( M.entries )
	if p == 1:
		return float( np.max( np.sum(A, axis=0) ) )
	if p == np.inf:
		return float( np.max( np.sum(A, axis=1) ) )
	return _spectral_norm( M.entries )


def _power_iteration (A, M, x):
	# Power iteration on the Hermitian PSD matrix M, measured through ||A x||
	if not np.any(M):
		return 0., x
	if np.linalg.norm( np.matmul(M, x) ) == 0.:
		# Start vector in the null space; restart on the dominant column
		x = M[:, np.argmax( np.linalg.norm(M, axis=0) )]
	x   = x / np.linalg.norm(x)
	sig = np.linalg.norm( np.matmul(A, x) )
	for it in range( POWER_ITER_MAX ):
		y   = np.matmul(M, x)
		ny  = np.linalg.norm(y)
		if ny == 0.:
			return float(sig), x
		x   = y / ny
		new = np.linalg.norm( np.matmul(A, x) )
		if abs(new - sig) <= POWER_ITER_RTOL * new:
			return float(new), x
		sig = new
	logger.info('Power iteration stopped at the cap of %d iterations',
	            POWER_ITER_MAX)
	return float(sig), x


def _spectral_norm (A):
	"""
	Power iteration on A^H A from the all-ones start vector, then once more
	on A^H A with the converged direction deflated, from a ramp start.
	An all-ones vector that is itself an eigenvector for a smaller singular
	value (equal row sums, circulants) is caught by the second pass.
	"""
	if not np.any(A):
		return 0.
	AhA    = np.matmul(A.conj().T, A)
	n      = A.shape[1]
	sig, v = _power_iteration(A, AhA, np.ones(n, dtype=complex))
	D      = AhA - sig**2 * np.outer(v, v.conj())
	ramp   = ( 1. + np.arange(n) / n ).astype(complex)
	ramp  -= np.vdot(v, ramp) * v
	if np.linalg.norm(ramp) == 0.:
		return sig
	other, _ = _power_iteration(A, D, ramp)
	return max(sig, other)


"""
Neumann series inversion
"""
def neumann_bounds (norm_a_inv, norm_x):
	"""
	Right-hand sides of the perturbed inversion inequalities
		||(a-x)^-1||                      <= b1
		||(a-x)^-1 - a^-1||               <= b2
		||(a-x)^-1 - a^-1 - a^-1 x a^-1|| <= b3
	"""
	assert norm_a_inv > 0, 'norm_a_inv must be positive'
	assert norm_x >= 0, 'norm_x must be nonnegative'
	q = norm_x * norm_a_inv
	if not q < 1:
		raise ContractionError('||x|| ||a^-1|| = %g is not below 1' % q)
	d  = 1. - q
	b1 = norm_a_inv / d
	b2 = norm_a_inv**2 * norm_x / d
	b3 = norm_a_inv**3 * norm_x**2 / d
	return b1, b2, b3


def _partial_sums (Y, q, tol, scale=1.):
	"""
	Sum_{k<=n} Y^k with n the smallest index such that
	scale * q^(n+1) / (1-q) <= tol
	"""
	n    = Y.shape[0]
	P    = np.eye(n, dtype=complex)
	S    = P.copy()
	tail = scale * q / (1. - q)
	k    = 0
	while tail > tol:
		P     = np.matmul(P, Y)
		S    += P
		tail *= q
		k    += 1
	if q > NEAR_CONTRACTION:
		logger.warning('Near-contraction factor %.6f needed %d terms', q, k+1)
	logger.debug('Neumann series: %d terms, tail bound %.3e', k+1, tail)
	return S, k+1, tail


def invert_near_identity (x, tol=1e-12):
	"""
	(I - x)^-1 via the Neumann series, for ||x|| < 1
	"""
	assert x.is_square, 'Operator must be square'
	assert tol > 0, 'Tolerance must be positive'
	nx = operator_norm(x)
	if not nx < 1:
		raise ContractionError('||x|| = %g is not below 1' % nx)
	S, terms, tail = _partial_sums(x.entries, nx, tol)
	b1, b2, b3 = neumann_bounds(1., nx)
	return NeumannResult(x.with_entries(S), b1, b2, b3, terms, tail)


def _inverse (S):
	assert S.is_square, 'Operator must be square'
	try:
		cond = np.linalg.cond( S.entries )
		if not cond < MAX_CONDITION:
			raise SingularOperatorError('Condition estimate %g' % cond)
		S_inv = np.linalg.inv( S.entries )
	except np.linalg.LinAlgError as e:
		raise SingularOperatorError(str(e))
	return S.with_entries(S_inv)


def invert_perturbed (S, T, tol=1e-12):
	"""
	(S - T)^-1 = ( sum_k (S^-1 T)^k ) S^-1,  for ||T|| < ||S^-1||^-1
	"""
	assert tol > 0, 'Tolerance must be positive'
	assert S.shape == T.shape, 'S and T must have the same shape'
	S_inv  = _inverse(S)
	n_Sinv = operator_norm(S_inv)
	n_T    = operator_norm(T)
	b1, b2, b3 = neumann_bounds(n_Sinv, n_T)
	# ||S^-1 T|| <= q certifies the series; the tail is scaled by ||S^-1||
	q = n_Sinv * n_T
	Y = np.matmul(S_inv.entries, T.entries)
	P, terms, tail = _partial_sums(Y, q, tol, scale=n_Sinv)
	R = np.matmul(P, S_inv.entries)
	return NeumannResult(S.with_entries(R), b1, b2, b3, terms, tail)


def invert_element (a, x, tol=1e-12):
	"""
	(a - x)^-1 in the algebra of square matrices
	"""
	assert a.is_square, 'Operator must be square'
	return invert_perturbed(a, x, tol)


def inverse_differential (S_inv, T):
	"""
	Differential of S -> S^-1, evaluated at T: -S^-1 T S^-1
	"""
	D = -np.matmul(S_inv.entries, np.matmul(T.entries, S_inv.entries))
	return S_inv.with_entries(D)
