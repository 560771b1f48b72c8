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

from collections import namedtuple

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.signal import lfilter

from .errors import ConfigError, DomainError, ExponentRangeError, \
	GridMismatchError, SpectralPointError
from .spaces import GridFunction

"""
The derivation operator T u = u' on C([0,1]), restricted to

	E = ker(Lambda),   F = { u in D : Lambda u = 0, Lambda u' = 0 }

for a finite Dirac combination Lambda. zeta is spectral iff
Lambda(h_zeta) = 0, and otherwise

	R(zeta) f = gamma h_zeta - K_zeta f,   gamma = Lambda(K_zeta f) / Lambda(h_zeta)
"""

DEFAULT_N    = 2001
SPECTRAL_TOL = 1e-9

ResolveRecord = namedtuple('ResolveRecord', ['zeta', 'A', 'B', 'gamma', 'solution'])


def _check_same_grid (u, f):
	if u.n != f.n:
		raise GridMismatchError('Grid sizes %d and %d differ' % (u.n, f.n))


"""
Building blocks h_zeta, K_zeta
"""
def _finite (samples, zeta):
	if not np.all( np.isfinite(samples) ):
		raise ExponentRangeError('e^(zeta x) overflows for zeta = %s' % (zeta,))
	return samples


def h_zeta (zeta, n=DEFAULT_N):
	assert isinstance(n, (int, np.integer)) and n >= 2, 'Grid needs n >= 2'
	x = np.linspace(0., 1., n)
	with np.errstate(over='ignore', invalid='ignore'):
		h = np.exp(zeta * x)
	return GridFunction( _finite(h, zeta) )


def k_zeta (zeta, f):
	"""
	K_zeta f (x) = int_0^x e^(zeta (x-t)) f(t) dt

	Composite trapezoid rule on the transformed integrand e^(-zeta t) f(t),
	rescaled by e^(zeta x). On the uniform grid this is the recurrence

		K_{j+1} = r K_j + h/2 (r f_j + f_{j+1}),   r = e^(zeta h)

	which only grows as fast as K itself.
	"""
	h = f.step
	s = f.samples
	with np.errstate(over='ignore', invalid='ignore'):
		r = np.exp(zeta * h)
		u = np.zeros_like(s)
		u[1:] = 0.5 * h * (r * s[:-1] + s[1:])
		K = lfilter([1.], [1., -r], u)
	return GridFunction( _finite(K, zeta) )


def k_zeta_norm_exact (zeta):
	"""
	||K_zeta|| = (e^a - 1)/a with a = Re(zeta), and 1 for a = 0
	"""
	a = float( np.real(zeta) )
	if a == 0.:
		return 1.
	return float( np.expm1(a) / a )


def k_zeta_witness_ratio (zeta, n=DEFAULT_N):
	# Extremal witness f(x) = e^(i Im(zeta) x), ||f|| = 1
	b = float( np.imag(zeta) )
	f = GridFunction.from_callable(lambda x: np.exp(1j * b * x), n)
	return k_zeta(zeta, f).sup_norm() / f.sup_norm()


def antiderivative (f):
	"""
	u(x) = int_0^x f(t) dt, so that T u = f (T is onto when Lambda = 0)
	"""
	return GridFunction( cumulative_trapezoid(f.samples, f.nodes, initial=0) )


def derivative (u):
	"""
	Grid derivation operator: central differences inside,
	one-sided second order at 0 and 1
	"""
	return GridFunction( np.gradient(u.samples, u.nodes, edge_order=2) )


"""
Functionals and the spectrum
"""
def apply_functional (L, f, max_offset=0.5):
	if L.is_null:
		return 0j
	return complex( sum( w * f.value_at(t, max_offset) for t, w in L.atoms ) )


def abs_A (L, zeta):
	# |Lambda(h_zeta)|, evaluated at the atoms directly; inf past the float range
	with np.errstate(over='ignore', invalid='ignore'):
		A = abs( L.evaluate(lambda t: np.exp(zeta * t)) )
	if np.isnan(A):
		raise ExponentRangeError('Lambda(h_zeta) is not representable at zeta = %s' % (zeta,))
	return A


def spectrum_member (L, zeta, tol=SPECTRAL_TOL):
	assert tol > 0, 'Tolerance must be positive'
	return abs_A(L, zeta) <= tol


def project_kernel (L, f):
	"""
	f - Lambda(f) g / Lambda(g), with g = h_1 (or 1 + x if Lambda(h_1) = 0)
	"""
	if L.is_null:
		return f
	g  = h_zeta(1., f.n)
	Lg = apply_functional(L, g)
	if abs(Lg) == 0.:
		g  = GridFunction(1. + f.nodes)
		Lg = apply_functional(L, g)
	assert abs(Lg) > 0., 'No projection direction for this functional'
	return f - (apply_functional(L, f) / Lg) * g


"""
Resolvent
"""
def resolve_derivative (L, zeta, f, tol=SPECTRAL_TOL):
	if abs( apply_functional(L, f) ) > tol * f.sup_norm():
		raise DomainError('Right-hand side is not in ker(Lambda)')
	if spectrum_member(L, zeta, tol):
		raise SpectralPointError('zeta = %s is spectral' % (zeta,))
	h     = h_zeta(zeta, f.n)
	K     = k_zeta(zeta, f)
	A     = apply_functional(L, h)
	B     = apply_functional(L, K)
	gamma = B / A
	with np.errstate(over='ignore', invalid='ignore'):
		u = gamma * h.samples - K.samples
	return ResolveRecord(zeta, A, B, gamma, GridFunction( _finite(u, zeta) ))


def residual_ode (zeta, u, f):
	"""
	max_j | zeta u(x_j) - u'(x_j) - f(x_j) |
	"""
	_check_same_grid(u, f)
	assert u.n >= 3, 'Residual needs n >= 3'
	r = zeta * u.samples - derivative(u).samples - f.samples
	return float( np.max( np.abs(r) ) )


def resolvent_norm_lower (L, zeta, witnesses, tol=SPECTRAL_TOL):
	"""
	max_f ||R(zeta) f|| / ||f|| over witnesses f in ker(Lambda)
	"""
	lower = 0.
	for f in witnesses:
		nf = f.sup_norm()
		if nf == 0.:
			continue
		u     = resolve_derivative(L, zeta, f, tol).solution
		lower = max(lower, u.sup_norm() / nf)
	return lower


def first_resolvent_defect (L, zeta, eta, f, tol=SPECTRAL_TOL):
	"""
	sup || R(zeta)f - R(eta)f - (eta - zeta) R(zeta)R(eta)f ||
	"""
	Rz   = resolve_derivative(L, zeta, f, tol).solution
	Re   = resolve_derivative(L, eta, f, tol).solution
	RzRe = resolve_derivative(L, zeta, Re, tol).solution
	return (Rz - Re - (eta - zeta) * RzRe).sup_norm()


"""
Closed forms and witnesses of the worked examples
"""
def _positive_real (zeta):
	z = complex(zeta)
	if z.imag != 0. or not z.real > 0.:
		raise DomainError('Closed forms need a positive real zeta, got %s' % (zeta,))
	return z.real


def closed_form_bounds (example_id, zeta):
	"""
	Example 2 (Lambda = delta_0):
		(e^z - 1 - z)/z^2 <= ||R(z)|| <= (e^z - 1)/z
	Example 3 (Lambda = delta_1/2 - delta_0):
		||R(z)|| >= 2 e^(z/2)/z^2 - 1/z - 2/z^2
	"""
	if example_id not in (2, 3):
		raise ConfigError('No closed-form bounds for example %r' % (example_id,))
	z = _positive_real(zeta)
	with np.errstate(over='ignore', invalid='ignore'):
		if example_id == 2:
			bounds = (np.expm1(z) - z) / z**2, np.expm1(z) / z
		else:
			bounds = 2. * np.exp(z / 2.) / z**2 - 1. / z - 2. / z**2, None
	if not all( b is None or np.isfinite(b) for b in bounds ):
		raise ExponentRangeError('Closed-form bounds overflow at zeta = %s' % (zeta,))
	return bounds


def example2_kf_exact (zeta, x):
	# K_zeta f for f(x) = x
	return (np.expm1(zeta * x) - zeta * x) / zeta**2


def example3_resolvent_at_one (zeta):
	z = _positive_real(zeta)
	return np.exp(z / 2.) * (1. / z + 2. / z**2) - 2. * np.exp(z) / z**2


def example2_witness (n=DEFAULT_N):
	return GridFunction.from_callable(lambda x: x, n)


def example3_witness (zeta, n=DEFAULT_N):
	"""
	f(x) = e^(zeta x) sin(4 pi x)  on [0, 1/2]
	f(x) = e^(zeta/2) (2x - 1)     on (1/2, 1]
	"""
	z = _positive_real(zeta)
	if n % 2 == 0:
		raise GridMismatchError('x = 1/2 must be a node: n has to be odd')
	x = np.linspace(0., 1., n)
	with np.errstate(over='ignore', invalid='ignore'):
		f = np.where(x <= 0.5, np.exp(z * x) * np.sin(4. * np.pi * x),
		             np.exp(z / 2.) * (2. * x - 1.))
	return GridFunction( _finite(f, zeta) )
