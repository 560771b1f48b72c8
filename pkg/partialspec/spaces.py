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

import numbers

import numpy as np

from .errors import GridMismatchError
from .utils import check_exponent

"""
Desk-scale stand-ins for the function and sequence spaces:
	GridFunction     element of C([0,1]) sampled on x_j = j/(n-1)
	DiracFunctional  finite weighted combination of point evaluations
	SeqVector        finitely supported element of l^p
"""

class GridFunction:
	# Defer numpy scalar arithmetic to the reflected operators below
	__array_ufunc__ = None

	def __init__ (self, samples):
		self.samples = samples

	@classmethod
	def from_callable (cls, func, n):
		assert isinstance(n, (int, np.integer)) and n >= 2, 'Grid needs n >= 2'
		return cls( func( np.linspace(0., 1., n) ) )

	@classmethod
	def zeros (cls, n):
		return cls( np.zeros(n) )

	"""
	Properties
	"""
	@property
	def samples (self):
		return self._samples
	@samples.setter
	def samples (self, value):
		value = np.array(value, dtype=complex)
		assert value.ndim == 1, 'Samples must be a vector'
		assert len(value) >= 2, 'Grid needs n >= 2'
		assert np.all( np.isfinite(value) ), 'Samples must be finite'
		value.setflags(write=False)
		self._samples = value

	@property
	def n (self):
		return len(self.samples)

	@property
	def nodes (self):
		return np.linspace(0., 1., self.n)

	@property
	def step (self):
		return 1. / (self.n - 1)

	def sup_norm (self):
		return float( np.max( np.abs(self.samples) ) )

	def node_index (self, t, max_offset=0.5):
		"""
		Index of the node nearest to t; max_offset is in units of grid cells
		"""
		j = int( np.rint( t * (self.n - 1) ) )
		if abs(j * self.step - t) > max_offset * self.step:
			raise GridMismatchError('Point %g is off the %d-node grid' % (t, self.n))
		return j

	def value_at (self, t, max_offset=0.5):
		return self.samples[ self.node_index(t, max_offset) ]

	"""
	Vector space operations
	"""
	def _other_samples (self, other):
		if isinstance(other, GridFunction):
			if other.n != self.n:
				raise GridMismatchError('Grid sizes %d and %d differ' % (self.n, other.n))
			return other.samples
		if isinstance(other, numbers.Number):
			return other
		return NotImplemented

	def __add__ (self, other):
		o = self._other_samples(other)
		return NotImplemented if o is NotImplemented else GridFunction(self.samples + o)
	__radd__ = __add__

	def __sub__ (self, other):
		o = self._other_samples(other)
		return NotImplemented if o is NotImplemented else GridFunction(self.samples - o)

	def __rsub__ (self, other):
		o = self._other_samples(other)
		return NotImplemented if o is NotImplemented else GridFunction(o - self.samples)

	def __mul__ (self, other):
		o = self._other_samples(other)
		return NotImplemented if o is NotImplemented else GridFunction(self.samples * o)
	__rmul__ = __mul__

	def __truediv__ (self, other):
		assert isinstance(other, numbers.Number), 'Division by scalars only'
		return GridFunction(self.samples / other)

	def __neg__ (self):
		return GridFunction(-self.samples)

	def __repr__ (self):
		return 'GridFunction(n=%d, sup=%.6g)' % (self.n, self.sup_norm())


class DiracFunctional:
	def __init__ (self, atoms=()):
		self.atoms = atoms

	@classmethod
	def null (cls):
		return cls([])

	@classmethod
	def delta (cls, t, weight=1.):
		return cls([(t, weight)])

	@property
	def atoms (self):
		return self._atoms
	@atoms.setter
	def atoms (self, value):
		atoms = []
		for t, w in value:
			t, w = float(t), complex(w)
			assert 0. <= t <= 1., 'Atom points must lie in [0, 1]'
			assert np.isfinite(w), 'Atom weights must be finite'
			atoms.append( (t, w) )
		self._atoms = tuple(atoms)

	@property
	def points (self):
		return np.array([ t for t, _ in self.atoms ])

	@property
	def weights (self):
		return np.array([ w for _, w in self.atoms ], dtype=complex)

	@property
	def is_null (self):
		return len(self.atoms) == 0

	def evaluate (self, func):
		"""
		Lambda applied to a callable, sum_k w_k func(t_k)
		"""
		if self.is_null:
			return 0j
		return complex( np.sum( self.weights * func(self.points) ) )

	def __add__ (self, other):
		return DiracFunctional( self.atoms + other.atoms )

	def __neg__ (self):
		return DiracFunctional([ (t, -w) for t, w in self.atoms ])

	def __sub__ (self, other):
		return self + (-other)

	def __repr__ (self):
		terms = ['%s*delta_%g' % (w, t) for t, w in self.atoms]
		return 'DiracFunctional(%s)' % (' + '.join(terms) or '0')


class SeqVector:
	__array_ufunc__ = None

	def __init__ (self, values, p=2):
		self.values = values
		self.p      = p

	@classmethod
	def unit (cls, k, N, p=2):
		v    = np.zeros(N, dtype=complex)
		v[k] = 1.
		return cls(v, p)

	@classmethod
	def geometric (cls, alpha, N, p=2):
		return cls( alpha ** np.arange(N), p )

	@property
	def values (self):
		return self._values
	@values.setter
	def values (self, value):
		value = np.array(value, dtype=complex)
		if value.ndim == 0:
			value = value.reshape(1)
		assert value.ndim == 1, 'Values must be a vector'
		assert len(value) >= 1, 'Sequence needs N >= 1'
		assert np.all( np.isfinite(value) ), 'Values must be finite'
		value.setflags(write=False)
		self._values = value

	@property
	def p (self):
		return self._p
	@p.setter
	def p (self, value):
		self._p = check_exponent(value)

	@property
	def N (self):
		return len(self.values)

	def padded (self, N):
		# Tail beyond N is identically zero
		v = np.zeros(max(N, self.N), dtype=complex)
		v[:self.N] = self.values
		return v

	def _binary (self, other, op):
		if isinstance(other, SeqVector):
			N = max(self.N, other.N)
			return SeqVector( op(self.padded(N), other.padded(N)), self.p )
		return NotImplemented

	def __add__ (self, other):
		return self._binary(other, np.add)

	def __sub__ (self, other):
		return self._binary(other, np.subtract)

	def __mul__ (self, other):
		assert isinstance(other, numbers.Number), 'Scaling by scalars only'
		return SeqVector(self.values * other, self.p)
	__rmul__ = __mul__

	def __neg__ (self):
		return SeqVector(-self.values, self.p)

	def __repr__ (self):
		return 'SeqVector(N=%d, p=%s)' % (self.N, self.p)
